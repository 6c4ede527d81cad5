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

#include "povmrand/standard_povms.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace povmrand {

Povm trivial_povm(int dim, const std::vector<double>& probs) {
  const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("trivial_povm: probabilities must sum to 1");
  }
  std::vector<Effect> effects;
  effects.reserve(probs.size());
  for (double p : probs) {
    if (p < 0.0) throw std::invalid_argument("trivial_povm: negative weight");
    effects.emplace_back(
        HermitianMatrix::trusted(p * ComplexMatrix::Identity(dim, dim)));
  }
  return Povm(std::move(effects));
}

Povm basis_povm(int dim) { return basis_povm(ComplexMatrix::Identity(dim, dim)); }

Povm basis_povm(const ComplexMatrix& basis) {
  const int d = static_cast<int>(basis.rows());
  if (basis.cols() != d) {
    throw std::invalid_argument("basis_povm: basis must be square");
  }
  std::vector<Effect> effects;
  effects.reserve(d);
  for (int i = 0; i < d; ++i) {
    ComplexMatrix proj = basis.col(i) * basis.col(i).adjoint();
    effects.emplace_back(HermitianMatrix::trusted(std::move(proj)));
  }
  return Povm(std::move(effects));
}

Povm noisy_basis_povm(const ComplexMatrix& basis, double t) {
  const int d = static_cast<int>(basis.rows());
  if (t < 0.0 || t > 1.0) {
    throw std::invalid_argument("noisy_basis_povm: t must lie in [0, 1]");
  }
  std::vector<Effect> effects;
  effects.reserve(d);
  for (int i = 0; i < d; ++i) {
    ComplexMatrix e = t * (basis.col(i) * basis.col(i).adjoint()) +
                      (1.0 - t) / d * ComplexMatrix::Identity(d, d);
    effects.emplace_back(HermitianMatrix::trusted(std::move(e)));
  }
  return Povm(std::move(effects));
}

Povm mix_with_trivial(const Povm& a, double t,
                      const std::vector<double>& probs) {
  if (static_cast<int>(probs.size()) != a.outcomes()) {
    throw std::invalid_argument("mix_with_trivial: outcome count mismatch");
  }
  std::vector<Effect> effects;
  effects.reserve(a.outcomes());
  for (int i = 0; i < a.outcomes(); ++i) {
    ComplexMatrix e =
        t * a.effect(i).matrix() +
        (1.0 - t) * probs[i] * ComplexMatrix::Identity(a.dim(), a.dim());
    effects.emplace_back(HermitianMatrix::trusted(std::move(e)));
  }
  return Povm(std::move(effects));
}

Povm circle_povm() {
  const double s = std::sqrt(3.0) / 2.0;
  ComplexMatrix vecs(2, 3);
  vecs << 1.0, -0.5, -0.5,
          0.0,  s,   -s;
  std::vector<Effect> effects;
  for (int i = 0; i < 3; ++i) {
    ComplexMatrix e = (2.0 / 3.0) * (vecs.col(i) * vecs.col(i).adjoint());
    effects.emplace_back(HermitianMatrix::trusted(std::move(e)));
  }
  return Povm(std::move(effects));
}

Povm hexagon_diagonal_povm() {
  const double a = 1.0 / 2.0, b = 1.0 / 3.0, c = 1.0 / 6.0;
  RealVector d1(6), d2(6), d3(6);
  d1 << a, b, c, c, b, a;
  d2 << b, a, a, b, c, c;
  d3 << c, c, b, a, a, b;
  std::vector<Effect> effects;
  effects.emplace_back(HermitianMatrix::diagonal(d1));
  effects.emplace_back(HermitianMatrix::diagonal(d2));
  effects.emplace_back(HermitianMatrix::diagonal(d3));
  return Povm(std::move(effects));
}

std::pair<Povm, Povm> mub_qubit_pair() {
  ComplexMatrix hadamard(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  hadamard << r, r, r, -r;
  return {basis_povm(2), basis_povm(hadamard)};
}

}  // namespace povmrand
