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

#include "povmrand/sampling.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace povmrand {

void validate_params(const EnsembleParams& params) {
  std::visit(
      [](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, HaarParams>) {
          if (p.d < 1 || p.k < 1 || p.n < 1) {
            throw std::invalid_argument("haar params: d, k, n must be >= 1");
          }
          if (p.d > p.k * p.n) {
            throw std::invalid_argument(
                "haar params: need d <= k*n for an isometry");
          }
        } else if constexpr (std::is_same_v<T, WishartParams>) {
          if (p.d < 1 || p.s.empty()) {
            throw std::invalid_argument("wishart params: d >= 1, k >= 1");
          }
          int total = 0;
          for (int si : p.s) {
            if (si < 1) {
              throw std::invalid_argument("wishart params: s_i must be >= 1");
            }
            total += si;
          }
          if (total < p.d) {
            throw std::invalid_argument(
                "wishart params: need sum s_i >= d, otherwise S is singular");
          }
        } else if constexpr (std::is_same_v<T, LebesgueParams>) {
          if (p.d < 1 || p.k < 1) {
            throw std::invalid_argument("lebesgue params: d, k must be >= 1");
          }
        } else {
          if (p.d < 1 || p.t < 0.0 || p.t > 1.0) {
            throw std::invalid_argument(
                "basis mixture params: d >= 1 and t in [0, 1]");
          }
        }
      },
      params);
}

std::string describe(const EnsembleParams& params) {
  std::ostringstream os;
  std::visit(
      [&os](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, HaarParams>) {
          os << "haar(d=" << p.d << ",k=" << p.k << ",n=" << p.n << ")";
        } else if constexpr (std::is_same_v<T, WishartParams>) {
          os << "wishart(d=" << p.d << ",s=";
          for (std::size_t i = 0; i < p.s.size(); ++i) {
            os << (i ? "," : "") << p.s[i];
          }
          os << ")";
        } else if constexpr (std::is_same_v<T, LebesgueParams>) {
          os << "lebesgue(d=" << p.d << ",k=" << p.k << ")";
        } else {
          os << "basis-mixture(d=" << p.d << ",t=" << p.t << ")";
        }
      },
      params);
  return os.str();
}

HermitianMatrix wishart(int d, int s, RandomStream& stream) {
  if (d < 1 || s < 1) {
    throw std::invalid_argument("wishart: d and s must be >= 1");
  }
  ComplexMatrix g = ginibre(s, d, stream);
  ComplexMatrix w = ComplexMatrix::Zero(d, d);
  w.selfadjointView<Eigen::Lower>().rankUpdate(g.adjoint());
  return HermitianMatrix::trusted(ComplexMatrix(w.selfadjointView<Eigen::Lower>()));
}

ComplexMatrix haar_isometry(int d, int D, RandomStream& stream) {
  if (d < 1 || d > D) {
    throw std::invalid_argument("haar_isometry: need 1 <= d <= D");
  }
  ComplexMatrix g = ginibre(D, d, stream);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(D, d);
  // Normalize the R diagonal phases to be real positive; this makes Q exactly
  // Haar distributed rather than merely orthonormal.
  for (int j = 0; j < d; ++j) {
    const Complex r = qr.matrixQR()(j, j);
    const double mag = std::abs(r);
    if (mag > 0.0) q.col(j) *= r / mag;
  }
  return q;
}

namespace {

Povm sample_haar(const HaarParams& p, RandomStream& stream) {
  ComplexMatrix v = haar_isometry(p.d, p.k * p.n, stream);
  std::vector<Effect> effects;
  effects.reserve(p.k);
  for (int i = 0; i < p.k; ++i) {
    ComplexMatrix block = v.middleRows(static_cast<Eigen::Index>(i) * p.n, p.n);
    ComplexMatrix m = ComplexMatrix::Zero(p.d, p.d);
    m.selfadjointView<Eigen::Lower>().rankUpdate(block.adjoint());
    effects.emplace_back(
        HermitianMatrix::trusted(ComplexMatrix(m.selfadjointView<Eigen::Lower>())));
  }
  return Povm(std::move(effects));
}

Povm sample_wishart(const WishartParams& p, RandomStream& stream) {
  const int k = static_cast<int>(p.s.size());
  std::vector<HermitianMatrix> w;
  w.reserve(k);
  ComplexMatrix total = ComplexMatrix::Zero(p.d, p.d);
  for (int i = 0; i < k; ++i) {
    w.push_back(wishart(p.d, p.s[i], stream));
    total += w.back().matrix();
  }
  const HermitianMatrix root =
      inv_sqrt(HermitianMatrix::trusted(std::move(total)), 1e-12);
  std::vector<Effect> effects;
  effects.reserve(k);
  for (int i = 0; i < k; ++i) {
    ComplexMatrix m = root.matrix() * w[i].matrix() * root.matrix();
    effects.emplace_back(HermitianMatrix::trusted(0.5 * (m + m.adjoint())));
  }
  return Povm(std::move(effects));
}

Povm sample_basis_mixture(const BasisMixtureParams& p, RandomStream& stream) {
  ComplexMatrix u = haar_isometry(p.d, p.d, stream);
  std::vector<Effect> effects;
  effects.reserve(p.d);
  for (int i = 0; i < p.d; ++i) {
    ComplexMatrix e = p.t * (u.col(i) * u.col(i).adjoint()) +
                      (1.0 - p.t) / p.d * ComplexMatrix::Identity(p.d, p.d);
    effects.emplace_back(HermitianMatrix::trusted(std::move(e)));
  }
  return Povm(std::move(effects));
}

}  // namespace

Povm sample_povm(const EnsembleParams& params, RandomStream& stream) {
  validate_params(params);
  return std::visit(
      [&stream](const auto& p) -> Povm {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, HaarParams>) {
          return sample_haar(p, stream);
        } else if constexpr (std::is_same_v<T, WishartParams>) {
          return sample_wishart(p, stream);
        } else if constexpr (std::is_same_v<T, LebesgueParams>) {
          return sample_haar(HaarParams{p.d, p.k, p.d}, stream);
        } else {
          return sample_basis_mixture(p, stream);
        }
      },
      params);
}

ComplexMatrix haar_effect_factor(int d, int k, int n, RandomStream& stream) {
  validate_params(EnsembleParams(HaarParams{d, k, n}));
  const Eigen::Index rows = static_cast<Eigen::Index>(k) * n;
  ComplexMatrix g = ginibre(static_cast<int>(rows), d, stream);
  ComplexMatrix s = ComplexMatrix::Zero(d, d);
  s.selfadjointView<Eigen::Lower>().rankUpdate(g.adjoint());
  Eigen::LLT<ComplexMatrix> llt(
      ComplexMatrix(s.selfadjointView<Eigen::Lower>()));
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error("haar_effect_factor: Cholesky failed (degenerate draw)");
  }
  // V = G L^{-†} is a Haar isometry: the whitening unitary S^{1/2} L^{-†}
  // depends on G only through S, which is independent of the polar angle.
  ComplexMatrix v1 = g.topRows(n);
  llt.matrixU().solveInPlace<Eigen::OnTheRight>(v1);
  return v1;
}

double wishart_povm_log_density(const Povm& m, const std::vector<double>& s) {
  if (static_cast<int>(s.size()) != m.outcomes()) {
    throw std::invalid_argument(
        "wishart_povm_log_density: one s_i per outcome required");
  }
  const double d = m.dim();
  bool flat = true;
  for (double si : s) flat = flat && si == d;
  if (flat) return 0.0;

  double total = 0.0;
  for (int i = 0; i < m.outcomes(); ++i) {
    const double exponent = s[i] - d;
    if (exponent == 0.0) continue;
    const Spectrum spec = eig_hermitian(m.effect(i).hermitian(), false);
    double log_det = 0.0;
    for (int j = 0; j < spec.eigenvalues.size(); ++j) {
      const double lambda = spec.eigenvalues(j);
      if (lambda <= 0.0) {
        log_det = -std::numeric_limits<double>::infinity();
        break;
      }
      log_det += std::log(lambda);
    }
    total += exponent * log_det;
  }
  return total;
}

}  // namespace povmrand
