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

#include "povmrand/povm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace povmrand {

namespace {

double sum_minus_identity_defect(const std::vector<Effect>& effects, int dim) {
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  for (const Effect& e : effects) sum += e.matrix();
  sum -= ComplexMatrix::Identity(dim, dim);
  return sum.cwiseAbs().maxCoeff();
}

}  // namespace

Povm::Povm(std::vector<Effect> effects, double norm_tol)
    : dim_(0), effects_(std::move(effects)) {
  if (effects_.empty()) {
    throw std::invalid_argument("Povm: needs at least one outcome");
  }
  dim_ = effects_.front().dim();
  for (const Effect& e : effects_) {
    if (e.dim() != dim_) {
      throw std::invalid_argument("Povm: effects have mixed dimensions");
    }
  }
  const double defect = sum_minus_identity_defect(effects_, dim_);
  if (defect > norm_tol) {
    throw std::invalid_argument("Povm: normalization defect " +
                                std::to_string(defect) + " exceeds " +
                                std::to_string(norm_tol));
  }
}

JointPovm::JointPovm(int rows, int cols, std::vector<Effect> effects,
                     double norm_tol)
    : dim_(0), rows_(rows), cols_(cols), effects_(std::move(effects)) {
  if (rows_ < 1 || cols_ < 1 ||
      effects_.size() != static_cast<std::size_t>(rows_) * cols_) {
    throw std::invalid_argument("JointPovm: outcome grid mismatch");
  }
  dim_ = effects_.front().dim();
  for (const Effect& e : effects_) {
    if (e.dim() != dim_) {
      throw std::invalid_argument("JointPovm: effects have mixed dimensions");
    }
  }
  const double defect = sum_minus_identity_defect(effects_, dim_);
  if (defect > norm_tol) {
    throw std::invalid_argument("JointPovm: normalization defect " +
                                std::to_string(defect));
  }
}

ValidationReport validate(const Povm& p, const PovmTolerances& tol) {
  ValidationReport report;
  for (const Effect& e : p.effects()) {
    const Spectrum s = eig_hermitian(e.hermitian(), false);
    report.psd_defect = std::max(report.psd_defect, std::max(0.0, -s.min()));
    report.upper_defect =
        std::max(report.upper_defect, std::max(0.0, s.max() - 1.0));
  }
  report.normalization_defect = [&] {
    ComplexMatrix sum = ComplexMatrix::Zero(p.dim(), p.dim());
    for (const Effect& e : p.effects()) sum += e.matrix();
    sum -= ComplexMatrix::Identity(p.dim(), p.dim());
    return sum.cwiseAbs().maxCoeff();
  }();
  report.psd_ok =
      report.psd_defect <= tol.psd_tol && report.upper_defect <= tol.psd_tol;
  report.normalization_ok = report.normalization_defect <= tol.norm_tol;
  return report;
}

Effect subset_sum(const Povm& p, const std::vector<int>& outcomes) {
  ComplexMatrix sum = ComplexMatrix::Zero(p.dim(), p.dim());
  for (int i : outcomes) {
    if (i < 0 || i >= p.outcomes()) {
      throw std::out_of_range("subset_sum: outcome index out of range");
    }
    sum += p.effect(i).matrix();
  }
  return Effect(HermitianMatrix::trusted(std::move(sum)));
}

HermitianMatrix jordan_product(const Effect& e, const Effect& f) {
  if (e.dim() != f.dim()) {
    throw std::invalid_argument("jordan_product: dimension mismatch");
  }
  ComplexMatrix ef = e.matrix() * f.matrix();
  ComplexMatrix out = ef + ef.adjoint();
  return HermitianMatrix::trusted(std::move(out));
}

double commutator_norm(const Effect& e, const Effect& f) {
  if (e.dim() != f.dim()) {
    throw std::invalid_argument("commutator_norm: dimension mismatch");
  }
  ComplexMatrix ef = e.matrix() * f.matrix();
  return operator_norm(ef - ef.adjoint());
}

Povm post_process(const Povm& p, const RealMatrix& mu) {
  if (mu.cols() != p.outcomes()) {
    throw std::invalid_argument("post_process: μ must have one column per outcome");
  }
  if ((mu.array() < -1e-12).any()) {
    throw std::invalid_argument("post_process: μ has negative entries");
  }
  for (int j = 0; j < mu.cols(); ++j) {
    if (std::abs(mu.col(j).sum() - 1.0) > 1e-10) {
      throw std::invalid_argument("post_process: column " + std::to_string(j) +
                                  " of μ does not sum to 1");
    }
  }
  std::vector<Effect> out;
  out.reserve(mu.rows());
  for (int x = 0; x < mu.rows(); ++x) {
    ComplexMatrix b = ComplexMatrix::Zero(p.dim(), p.dim());
    for (int y = 0; y < mu.cols(); ++y) {
      if (mu(x, y) != 0.0) b += mu(x, y) * p.effect(y).matrix();
    }
    out.emplace_back(HermitianMatrix::trusted(std::move(b)));
  }
  return Povm(std::move(out));
}

std::pair<Povm, Povm> marginals(const JointPovm& g) {
  std::vector<Effect> rows, cols;
  rows.reserve(g.rows());
  cols.reserve(g.cols());
  for (int i = 0; i < g.rows(); ++i) {
    ComplexMatrix sum = ComplexMatrix::Zero(g.dim(), g.dim());
    for (int j = 0; j < g.cols(); ++j) sum += g.effect(i, j).matrix();
    rows.emplace_back(HermitianMatrix::trusted(std::move(sum)));
  }
  for (int j = 0; j < g.cols(); ++j) {
    ComplexMatrix sum = ComplexMatrix::Zero(g.dim(), g.dim());
    for (int i = 0; i < g.rows(); ++i) sum += g.effect(i, j).matrix();
    cols.emplace_back(HermitianMatrix::trusted(std::move(sum)));
  }
  return {Povm(std::move(rows)), Povm(std::move(cols))};
}

ComplexVector vectorize(const ComplexMatrix& x) {
  ComplexVector v(x.rows() * x.cols());
  for (int i = 0; i < x.rows(); ++i) {
    for (int j = 0; j < x.cols(); ++j) {
      v(i * x.cols() + j) = x(i, j);
    }
  }
  return v;
}

ComplexVector vectorize(const Effect& e) { return vectorize(e.matrix()); }

double marginal_defect(const JointPovm& g, const Povm& a, const Povm& b) {
  if (g.rows() != a.outcomes() || g.cols() != b.outcomes() ||
      g.dim() != a.dim() || g.dim() != b.dim()) {
    throw std::invalid_argument("marginal_defect: shape mismatch");
  }
  auto [ma, mb] = marginals(g);
  double defect = 0.0;
  for (int i = 0; i < a.outcomes(); ++i) {
    defect = std::max(defect, (ma.effect(i).matrix() - a.effect(i).matrix())
                                  .cwiseAbs()
                                  .maxCoeff());
  }
  for (int j = 0; j < b.outcomes(); ++j) {
    defect = std::max(defect, (mb.effect(j).matrix() - b.effect(j).matrix())
                                  .cwiseAbs()
                                  .maxCoeff());
  }
  return defect;
}

}  // namespace povmrand
