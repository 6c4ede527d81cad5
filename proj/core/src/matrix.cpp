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

#include "povmrand/matrix.hpp"

#include <algorithm>
#include <cmath>

#ifdef POVMRAND_HAVE_LAPACKE
#include <lapacke.h>
#endif

namespace povmrand {

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m, double herm_tol)
    : mat_() {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("HermitianMatrix: matrix must be square");
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (defect > herm_tol * scale) {
    throw std::invalid_argument(
        "HermitianMatrix: Hermiticity defect " + std::to_string(defect) +
        " exceeds tolerance " + std::to_string(herm_tol * scale));
  }
  mat_ = 0.5 * (m + m.adjoint());
}

HermitianMatrix HermitianMatrix::trusted(ComplexMatrix m) {
  return HermitianMatrix(std::move(m), TrustedTag{});
}

HermitianMatrix HermitianMatrix::identity(int dim) {
  return trusted(ComplexMatrix::Identity(dim, dim));
}

HermitianMatrix HermitianMatrix::zero(int dim) {
  return trusted(ComplexMatrix::Zero(dim, dim));
}

HermitianMatrix HermitianMatrix::diagonal(const RealVector& diag) {
  ComplexMatrix m = ComplexMatrix::Zero(diag.size(), diag.size());
  for (int i = 0; i < diag.size(); ++i) m(i, i) = diag(i);
  return trusted(std::move(m));
}

namespace {

Spectrum eig_eigen_fallback(const HermitianMatrix& m, bool with_vectors) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
      m.matrix(), with_vectors ? Eigen::ComputeEigenvectors
                               : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eig_hermitian: iteration did not converge");
  }
  Spectrum out;
  out.eigenvalues = solver.eigenvalues();
  if (with_vectors) out.eigenvectors = solver.eigenvectors();
  return out;
}

}  // namespace

Spectrum eig_hermitian(const HermitianMatrix& m, bool with_vectors) {
#ifdef POVMRAND_HAVE_LAPACKE
  // zheevd (divide and conquer) is considerably faster than the QR-iteration
  // binding Eigen uses for large dimensions.
  const int d = m.dim();
  if (d > 0) {
    ComplexMatrix work = m.matrix();
    RealVector w(d);
    int info = LAPACKE_zheevd(
        LAPACK_COL_MAJOR, with_vectors ? 'V' : 'N', 'L', d,
        reinterpret_cast<lapack_complex_double*>(work.data()), d, w.data());
    if (info == 0) {
      Spectrum out;
      out.eigenvalues = std::move(w);
      if (with_vectors) out.eigenvectors = std::move(work);
      return out;
    }
  }
#endif
  return eig_eigen_fallback(m, with_vectors);
}

double lambda_min(const HermitianMatrix& m) {
  return eig_hermitian(m, false).min();
}

double lambda_max(const HermitianMatrix& m) {
  return eig_hermitian(m, false).max();
}

double operator_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  // Largest singular value via the Gram matrix of the thinner side.
  if (m.rows() >= m.cols()) {
    HermitianMatrix gram = HermitianMatrix::trusted(m.adjoint() * m);
    return std::sqrt(std::max(0.0, lambda_max(gram)));
  }
  HermitianMatrix gram = HermitianMatrix::trusted(m * m.adjoint());
  return std::sqrt(std::max(0.0, lambda_max(gram)));
}

double trace_norm(const HermitianMatrix& m) {
  return eig_hermitian(m, false).eigenvalues.cwiseAbs().sum();
}

HermitianMatrix positive_part(const HermitianMatrix& m) {
  Spectrum s = eig_hermitian(m, true);
  RealVector clamped = s.eigenvalues.cwiseMax(0.0);
  const ComplexMatrix& v = *s.eigenvectors;
  ComplexMatrix out = v * clamped.asDiagonal() * v.adjoint();
  return HermitianMatrix::trusted(0.5 * (out + out.adjoint()));
}

HermitianMatrix inv_sqrt(const HermitianMatrix& m, double tol) {
  Spectrum s = eig_hermitian(m, true);
  const double cutoff = tol * std::max(0.0, s.max());
  RealVector mapped(s.eigenvalues.size());
  bool any_kept = false;
  for (int i = 0; i < s.eigenvalues.size(); ++i) {
    if (s.eigenvalues(i) > cutoff && s.eigenvalues(i) > 0.0) {
      mapped(i) = 1.0 / std::sqrt(s.eigenvalues(i));
      any_kept = true;
    } else {
      mapped(i) = 0.0;
    }
  }
  if (!any_kept) {
    throw std::invalid_argument(
        "inv_sqrt: all eigenvalues below cutoff, input is degenerate");
  }
  const ComplexMatrix& v = *s.eigenvectors;
  ComplexMatrix out = v * mapped.asDiagonal() * v.adjoint();
  return HermitianMatrix::trusted(0.5 * (out + out.adjoint()));
}

}  // namespace povmrand
