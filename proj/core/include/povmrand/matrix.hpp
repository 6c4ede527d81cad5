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

#ifndef POVMRAND_MATRIX_HPP
#define POVMRAND_MATRIX_HPP

#include <complex>
#include <optional>
#include <stdexcept>

#include <Eigen/Dense>

namespace povmrand {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

/// A square matrix that is Hermitian by construction: the input must satisfy
/// ||M - M^†||_max <= herm_tol * scale and is stored symmetrized as (M+M^†)/2.
/// Instances are immutable and safe to share across threads.
class HermitianMatrix {
 public:
  static constexpr double kDefaultHermTol = 1e-10;

  explicit HermitianMatrix(const ComplexMatrix& m,
                           double herm_tol = kDefaultHermTol);

  /// Skips the Hermiticity check; the argument must already be symmetrized.
  /// Intended for internal hot paths that construct V^† D V products.
  static HermitianMatrix trusted(ComplexMatrix m);

  static HermitianMatrix identity(int dim);
  static HermitianMatrix zero(int dim);
  static HermitianMatrix diagonal(const RealVector& diag);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const ComplexMatrix& matrix() const { return mat_; }
  double trace() const { return mat_.trace().real(); }

 private:
  struct TrustedTag {};
  HermitianMatrix(ComplexMatrix m, TrustedTag) : mat_(std::move(m)) {}

  ComplexMatrix mat_;
};

/// Eigenvalues in non-decreasing order; eigenvectors (when requested) are the
/// matching orthonormal columns.
struct Spectrum {
  RealVector eigenvalues;
  std::optional<ComplexMatrix> eigenvectors;

  double min() const { return eigenvalues(0); }
  double max() const { return eigenvalues(eigenvalues.size() - 1); }
};

/// Full spectral decomposition. Reconstruction satisfies
/// ||V Λ V^† - M|| <= 1e-8 ||M||. Throws std::runtime_error when the
/// underlying iteration fails to converge.
Spectrum eig_hermitian(const HermitianMatrix& m, bool with_vectors = true);

/// Largest and smallest eigenvalue without keeping the full decomposition.
double lambda_min(const HermitianMatrix& m);
double lambda_max(const HermitianMatrix& m);

/// Largest singular value.
double operator_norm(const ComplexMatrix& m);

/// Sum of absolute eigenvalues, ||M||_1 for Hermitian M.
double trace_norm(const HermitianMatrix& m);

/// Spectral projection onto max(λ, 0): M_+ with M_+ ⪰ 0 and M_+ ⪰ M.
HermitianMatrix positive_part(const HermitianMatrix& m);

/// M^{-1/2} through the functional calculus. Eigenvalues λ > tol·λ_max map to
/// λ^{-1/2}, smaller ones to 0 (pseudo-inverse convention). Throws
/// std::invalid_argument when every eigenvalue falls below the cutoff.
HermitianMatrix inv_sqrt(const HermitianMatrix& m, double tol = 1e-12);

}  // namespace povmrand

#endif  // POVMRAND_MATRIX_HPP
