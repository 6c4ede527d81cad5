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

#include <doctest.h>

#include "povmrand/matrix.hpp"
#include "povmrand/random.hpp"

using namespace povmrand;

namespace {

HermitianMatrix random_hermitian(int d, RandomStream& stream) {
  ComplexMatrix g = ginibre(d, d, stream);
  return HermitianMatrix::trusted(0.5 * (g + g.adjoint()));
}

}  // namespace

TEST_CASE("eig_hermitian on fixed inputs") {
  RealVector diag(2);
  diag << 1.0, 0.0;
  Spectrum s = eig_hermitian(HermitianMatrix::diagonal(diag));
  CHECK(s.eigenvalues(0) == doctest::Approx(0.0));
  CHECK(s.eigenvalues(1) == doctest::Approx(1.0));

  s = eig_hermitian(HermitianMatrix::identity(5));
  for (int i = 0; i < 5; ++i) CHECK(s.eigenvalues(i) == doctest::Approx(1.0));

  ComplexMatrix off(2, 2);
  off << 0.0, 1.0, 1.0, 0.0;
  s = eig_hermitian(HermitianMatrix(off));
  CHECK(s.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(s.eigenvalues(1) == doctest::Approx(1.0));
}

TEST_CASE("eig_hermitian reconstruction and orthonormality") {
  RandomStream stream(101);
  const HermitianMatrix m = random_hermitian(25, stream);
  const Spectrum s = eig_hermitian(m);
  REQUIRE(s.eigenvectors.has_value());
  const ComplexMatrix& v = *s.eigenvectors;
  const ComplexMatrix recon =
      v * s.eigenvalues.asDiagonal() * v.adjoint();
  CHECK((recon - m.matrix()).norm() <= 1e-8 * m.matrix().norm());
  CHECK((v.adjoint() * v - ComplexMatrix::Identity(25, 25)).cwiseAbs().maxCoeff()
        <= 1e-8);
  // Eigenvalue sum equals the trace.
  CHECK(s.eigenvalues.sum() ==
        doctest::Approx(m.trace()).epsilon(1e-8));
}

TEST_CASE("hermitian construction rejects non-hermitian input") {
  ComplexMatrix bad(2, 2);
  bad << 1.0, Complex(0.0, 1.0), Complex(0.0, 1.0), 1.0;  // symmetric, not Hermitian
  CHECK_THROWS_AS(HermitianMatrix{bad}, std::invalid_argument);
  ComplexMatrix rect(2, 3);
  CHECK_THROWS_AS(HermitianMatrix{rect}, std::invalid_argument);
}

TEST_CASE("operator_norm") {
  CHECK(operator_norm(ComplexMatrix::Zero(3, 3)) == doctest::Approx(0.0));
  // Unitary: all singular values 1.
  ComplexMatrix u(3, 3);
  u.setZero();
  u(0, 1) = 1.0;
  u(1, 2) = 1.0;
  u(2, 0) = 1.0;
  CHECK(operator_norm(u) == doctest::Approx(1.0));
  ComplexMatrix nilpotent(2, 2);
  nilpotent << 0.0, 2.0, 0.0, 0.0;
  CHECK(operator_norm(nilpotent) == doctest::Approx(2.0));
}

TEST_CASE("trace_norm") {
  RealVector d1(2);
  d1 << 1.0, -1.0;
  CHECK(trace_norm(HermitianMatrix::diagonal(d1)) == doctest::Approx(2.0));

  RealVector d2(3);
  d2 << 3.0, -1.0, 0.0;
  CHECK(trace_norm(HermitianMatrix::diagonal(d2)) == doctest::Approx(4.0));

  // PSD matrix: trace norm equals the trace.
  RandomStream stream(7);
  ComplexMatrix g = ginibre(6, 6, stream);
  HermitianMatrix psd = HermitianMatrix::trusted(g.adjoint() * g);
  CHECK(trace_norm(psd) == doctest::Approx(psd.trace()).epsilon(1e-10));
}

TEST_CASE("trace_norm identity Tr M + 2 Tr(-M)_+") {
  RandomStream stream(11);
  for (int rep = 0; rep < 5; ++rep) {
    const HermitianMatrix m = random_hermitian(12, stream);
    const HermitianMatrix neg =
        HermitianMatrix::trusted(-m.matrix());
    const double rhs = m.trace() + 2.0 * positive_part(neg).trace();
    CHECK(trace_norm(m) == doctest::Approx(rhs).epsilon(1e-8));
  }
}

TEST_CASE("positive_part") {
  RealVector diag(2);
  diag << 2.0, -3.0;
  HermitianMatrix pp = positive_part(HermitianMatrix::diagonal(diag));
  CHECK(pp.matrix()(0, 0).real() == doctest::Approx(2.0));
  CHECK(pp.matrix()(1, 1).real() == doctest::Approx(0.0));

  RealVector diag2(2);
  diag2 << 1.0, -1.0;
  CHECK(positive_part(HermitianMatrix::diagonal(diag2)).trace() ==
        doctest::Approx(1.0));

  // M_+ - M is PSD and M_+ equals M for PSD M.
  RandomStream stream(13);
  for (int rep = 0; rep < 5; ++rep) {
    const HermitianMatrix m = random_hermitian(10, stream);
    const HermitianMatrix plus = positive_part(m);
    CHECK(lambda_min(HermitianMatrix::trusted(plus.matrix() - m.matrix())) >=
          -1e-10);
    CHECK(lambda_min(plus) >= -1e-10);
  }
}

TEST_CASE("inv_sqrt") {
  CHECK((inv_sqrt(HermitianMatrix::identity(4)).matrix() -
         ComplexMatrix::Identity(4, 4))
            .cwiseAbs()
            .maxCoeff() <= 1e-12);

  RealVector diag(2);
  diag << 4.0, 9.0;
  HermitianMatrix r = inv_sqrt(HermitianMatrix::diagonal(diag));
  CHECK(r.matrix()(0, 0).real() == doctest::Approx(0.5));
  CHECK(r.matrix()(1, 1).real() == doctest::Approx(1.0 / 3.0));

  // Pseudo-inverse branch.
  RealVector diag2(2);
  diag2 << 1.0, 0.0;
  HermitianMatrix p = inv_sqrt(HermitianMatrix::diagonal(diag2), 1e-12);
  CHECK(p.matrix()(0, 0).real() == doctest::Approx(1.0));
  CHECK(p.matrix()(1, 1).real() == doctest::Approx(0.0));

  CHECK_THROWS_AS(inv_sqrt(HermitianMatrix::zero(3)), std::invalid_argument);

  // W^{-1/2} W W^{-1/2} is the projection onto the retained eigenspace.
  RandomStream stream(17);
  ComplexMatrix g = ginibre(14, 9, stream);
  HermitianMatrix w = HermitianMatrix::trusted(g.adjoint() * g);
  HermitianMatrix root = inv_sqrt(w);
  ComplexMatrix probe = root.matrix() * w.matrix() * root.matrix();
  CHECK((probe - ComplexMatrix::Identity(9, 9)).cwiseAbs().maxCoeff() <= 1e-8);
}
