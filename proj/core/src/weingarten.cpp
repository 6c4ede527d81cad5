// Copyright 2026 The povmrand authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "povmrand/weingarten.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Dense>

namespace povmrand {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int p = static_cast<int>(images_.size());
  if (p == 0) throw std::invalid_argument("Permutation: empty image list");
  std::vector<bool> seen(p, false);
  for (int v : images_) {
    if (v < 0 || v >= p || seen[v]) {
      throw std::invalid_argument("Permutation: images are not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int p) {
  std::vector<int> im(p);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::reverse_full_cycle(int p) {
  std::vector<int> im(p);
  for (int i = 0; i < p; ++i) im[i] = (i == 0) ? p - 1 : i - 1;
  return Permutation(std::move(im));
}

std::vector<Permutation> Permutation::all(int p) {
  std::vector<int> im(p);
  std::iota(im.begin(), im.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(im));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(size());
  for (int i = 0; i < size(); ++i) im[images_[i]] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::after(const Permutation& inner) const {
  if (inner.size() != size()) {
    throw std::invalid_argument("Permutation: size mismatch in product");
  }
  std::vector<int> im(size());
  for (int i = 0; i < size(); ++i) im[i] = images_[inner.images_[i]];
  return Permutation(std::move(im));
}

int Permutation::cycle_count() const {
  int count = 0;
  std::vector<bool> seen(size(), false);
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (int j = i; !seen[j]; j = images_[j]) seen[j] = true;
  }
  return count;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(size(), false);
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<int>());
  return lengths;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::int64_t catalan(int n) {
  if (n < 0 || n > 30) throw std::invalid_argument("catalan: n out of range");
  std::int64_t value = 1;
  for (int i = 0; i < n; ++i) {
    value = value * 2 * (2 * i + 1) / (i + 2);
  }
  return value;
}

std::int64_t moebius(const Permutation& sigma) {
  std::int64_t value = 1;
  for (int len : sigma.cycle_type()) {
    const std::int64_t cat = catalan(len - 1);
    value *= ((len - 1) % 2 == 0) ? cat : -cat;
  }
  return value;
}

namespace {

void partitions_of(int n, int max_part, std::vector<int>& current,
                   std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_of(n - part, part, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  partitions_of(n, n, current, out);
  return out;
}

/// A permutation with the given cycle type, cycles laid out consecutively.
Permutation representative(const std::vector<int>& type, int p) {
  std::vector<int> im(p);
  int start = 0;
  for (int len : type) {
    for (int j = 0; j < len; ++j) {
      im[start + j] = start + (j + 1) % len;
    }
    start += len;
  }
  return Permutation(std::move(im));
}

}  // namespace

WgTable WgTable::build(int N, int p) {
  if (p < 1 || p > kMaxOrder) {
    throw std::invalid_argument("WgTable: order p must lie in [1, 7]");
  }
  if (N < p) {
    throw std::invalid_argument(
        "WgTable: need N >= p for an invertible Gram system");
  }
  WgTable table(N, p);
  table.types_ = partitions(p);
  const int num_classes = static_cast<int>(table.types_.size());

  // One defining equation per class representative π_b:
  //   Σ_ρ Wg(type(ρ)) N^{#(ρ^{-1} π_b)} = [π_b == id].
  const std::vector<Permutation> group = Permutation::all(p);
  Eigen::MatrixXd system = Eigen::MatrixXd::Zero(num_classes, num_classes);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(num_classes);
  for (int b = 0; b < num_classes; ++b) {
    const Permutation rep = representative(table.types_[b], p);
    if (rep.is_identity()) rhs(b) = 1.0;
    for (const Permutation& rho : group) {
      const Permutation prod = rho.inverse().after(rep);
      const int a = table.type_index(rho.cycle_type());
      system(b, a) += std::pow(static_cast<double>(N), prod.cycle_count());
    }
  }
  Eigen::VectorXd solved = system.fullPivLu().solve(rhs);
  table.values_.assign(solved.data(), solved.data() + num_classes);
  return table;
}

int WgTable::type_index(const std::vector<int>& cycle_type) const {
  for (std::size_t i = 0; i < types_.size(); ++i) {
    if (types_[i] == cycle_type) return static_cast<int>(i);
  }
  throw std::invalid_argument("WgTable: cycle type does not partition p");
}

double WgTable::at_type(const std::vector<int>& cycle_type) const {
  return values_[type_index(cycle_type)];
}

double wg_asymptotic(int N, const Permutation& sigma) {
  const int p = sigma.size();
  return std::pow(static_cast<double>(N), -(p + sigma.length())) *
         static_cast<double>(moebius(sigma));
}

namespace {

struct NeumaierSum {
  double sum = 0.0;
  double compensation = 0.0;

  void add(double value) {
    const double t = sum + value;
    if (std::abs(sum) >= std::abs(value)) {
      compensation += (sum - t) + value;
    } else {
      compensation += (value - t) + sum;
    }
    sum = t;
  }

  double total() const { return sum + compensation; }
};

}  // namespace

double moment_exact(int d, int k, int n, int p) {
  if (d < 1 || k < 1 || n < 1) {
    throw std::invalid_argument("moment_exact: parameters must be positive");
  }
  const int N = k * n;
  const WgTable wg = WgTable::build(N, p);  // enforces N >= p, p <= 7

  const std::vector<Permutation> group = Permutation::all(p);
  const Permutation gamma_inv = Permutation::reverse_full_cycle(p).inverse();

  const int m = static_cast<int>(group.size());
  std::vector<double> n_pow(m), d_pow(m);
  std::vector<Permutation> inverses;
  inverses.reserve(m);
  for (int a = 0; a < m; ++a) {
    n_pow[a] = std::pow(static_cast<double>(n), group[a].cycle_count());
    d_pow[a] = std::pow(static_cast<double>(d),
                        group[a].after(gamma_inv).cycle_count());
    inverses.push_back(group[a].inverse());
  }

  NeumaierSum total;
  for (int a = 0; a < m; ++a) {
    NeumaierSum row;
    for (int b = 0; b < m; ++b) {
      const Permutation prod = inverses[a].after(group[b]);
      row.add(d_pow[b] * wg.at_index(wg.type_index(prod.cycle_type())));
    }
    total.add(n_pow[a] * row.total());
  }
  return total.total();
}

double covariance_exact(int d, int k, int n) {
  if (k < 2) {
    throw std::invalid_argument("covariance_exact: needs at least 2 outcomes");
  }
  const WgTable wg = WgTable::build(k * n, 2);
  const double nn = static_cast<double>(n), dd = static_cast<double>(d);
  return nn * nn * dd * wg.at_type({1, 1}) +
         nn * nn * dd * dd * wg.at_type({2});
}

}  // namespace povmrand
