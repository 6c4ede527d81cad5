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

#ifndef POVMRAND_PROBRANGE_HPP
#define POVMRAND_PROBRANGE_HPP

#include <vector>

#include "povmrand/povm.hpp"
#include "povmrand/random.hpp"

namespace povmrand {

/// A point of the outcome simplex Δ_k.
using ProbPoint = Eigen::VectorXd;

/// (Tr(ρ A_1), ..., Tr(ρ A_k)) for a density matrix ρ (PSD, unit trace).
ProbPoint prob_point(const Povm& p, const HermitianMatrix& rho);

/// Haar-random pure state as a rank-1 density matrix.
HermitianMatrix random_pure_state(int dim, RandomStream& stream);

/// Probability range of a diagonal POVM: the convex hull of the vertices
/// α_j(i) = A_i(j, j).
struct DiagPolytope {
  std::vector<ProbPoint> vertices;  // one per dimension, each in Δ_k
};

DiagPolytope diag_polytope(const Povm& p, double offdiag_tol = 1e-10);

/// Point-in-polytope test for k = 3, after projecting the simplex to the
/// plane of its first two coordinates; the hull is built by monotone chain.
bool contains(const DiagPolytope& poly, const ProbPoint& q, double tol);

/// Largest Euclidean distance from prob_point to the equiprobability vector
/// (1/3, 1/3, 1/3) over sampled pure states; k = 3, d = 2 only.
double circle_range_radius(const Povm& p, RandomStream& stream,
                           int num_states = 10000);

}  // namespace povmrand

#endif  // POVMRAND_PROBRANGE_HPP
