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

#ifndef POVMRAND_POVM_HPP
#define POVMRAND_POVM_HPP

#include <utility>
#include <vector>

#include "povmrand/matrix.hpp"

namespace povmrand {

struct PovmTolerances {
  double herm_tol = 1e-10;  // relative Hermiticity defect at construction
  double psd_tol = 1e-9;    // absolute slack on λ_min and λ_max - 1
  double norm_tol = 1e-8;   // max-abs entry of ΣA_i - I
};

/// One POVM element: a Hermitian operator expected to satisfy 0 ⪯ E ⪯ I.
/// The spectral bounds are not checked at construction (they require an
/// eigendecomposition); run validate() on the POVM for the full report.
class Effect {
 public:
  explicit Effect(HermitianMatrix m) : mat_(std::move(m)) {}

  int dim() const { return mat_.dim(); }
  const ComplexMatrix& matrix() const { return mat_.matrix(); }
  const HermitianMatrix& hermitian() const { return mat_; }
  double trace() const { return mat_.trace(); }

 private:
  HermitianMatrix mat_;
};

/// An ordered tuple of effects summing to the identity. The constructor
/// checks dimensions and the normalization defect; PSD-ness of the effects
/// is checked by validate().
class Povm {
 public:
  explicit Povm(std::vector<Effect> effects, double norm_tol = 1e-8);

  int dim() const { return dim_; }
  int outcomes() const { return static_cast<int>(effects_.size()); }
  const Effect& effect(int i) const { return effects_.at(i); }
  const std::vector<Effect>& effects() const { return effects_; }

 private:
  int dim_;
  std::vector<Effect> effects_;
};

/// A POVM on a product outcome grid (x, y); effect(i, j) is stored row-major.
class JointPovm {
 public:
  JointPovm(int rows, int cols, std::vector<Effect> effects,
            double norm_tol = 1e-8);

  int dim() const { return dim_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Effect& effect(int i, int j) const { return effects_.at(i * cols_ + j); }
  const std::vector<Effect>& effects() const { return effects_; }

 private:
  int dim_;
  int rows_, cols_;
  std::vector<Effect> effects_;
};

struct ValidationReport {
  double psd_defect = 0.0;            // max over effects of max(0, -λ_min)
  double upper_defect = 0.0;          // max over effects of max(0, λ_max - 1)
  double normalization_defect = 0.0;  // ||ΣA_i - I||_max
  bool psd_ok = false;
  bool normalization_ok = false;

  bool ok() const { return psd_ok && normalization_ok; }
};

/// Full invariant check: per-effect spectral bounds and normalization.
ValidationReport validate(const Povm& p, const PovmTolerances& tol = {});

/// A_X = Σ_{i∈X} A_i; the empty set gives 0 and the full set gives I.
Effect subset_sum(const Povm& p, const std::vector<int>& outcomes);

/// E∘F = EF + FE. Hermitian, not necessarily positive semidefinite.
HermitianMatrix jordan_product(const Effect& e, const Effect& f);

/// ||EF - FE|| (operator norm).
double commutator_norm(const Effect& e, const Effect& f);

/// B(x) = Σ_y μ_xy A(y) for a column-stochastic μ (rows: new outcomes).
Povm post_process(const Povm& p, const RealMatrix& mu);

/// Row and column marginals of a joint POVM.
std::pair<Povm, Povm> marginals(const JointPovm& g);

/// Row-major flattening, vec(X)[i*d+j] = X(i,j), so that
/// <vec(X), vec(Y)> = Tr(X^† Y).
ComplexVector vectorize(const ComplexMatrix& x);
ComplexVector vectorize(const Effect& e);

/// Max-abs deviation of the joint's marginals from the given pair.
double marginal_defect(const JointPovm& g, const Povm& a, const Povm& b);

}  // namespace povmrand

#endif  // POVMRAND_POVM_HPP
