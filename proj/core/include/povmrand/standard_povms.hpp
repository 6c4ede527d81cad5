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

#ifndef POVMRAND_STANDARD_POVMS_HPP
#define POVMRAND_STANDARD_POVMS_HPP

#include <vector>

#include "povmrand/povm.hpp"

namespace povmrand {

/// Trivial POVM T_i = p_i I for a probability vector p.
Povm trivial_povm(int dim, const std::vector<double>& probs);

/// Rank-1 projections onto the columns of basis (defaults to the standard
/// basis when basis is empty): the sharp POVM of an orthonormal basis.
Povm basis_povm(int dim);
Povm basis_povm(const ComplexMatrix& basis);

/// Depolarized basis measurement t |e_i><e_i| + (1-t) I/d.
Povm noisy_basis_povm(const ComplexMatrix& basis, double t);

/// Convex mixture t A + (1-t) T of a POVM with a trivial POVM.
Povm mix_with_trivial(const Povm& a, double t, const std::vector<double>& probs);

/// Three-outcome qubit POVM with effects (2/3)|a_i><a_i| on the unit vectors
/// (1,0), (-1/2, √3/2), (-1/2, -√3/2); its probability range is the disk of
/// radius 1/√6 around (1/3, 1/3, 1/3).
Povm circle_povm();

/// Three-outcome diagonal POVM on C^6 whose diagonals run through the six
/// permutations of (1/2, 1/3, 1/6); its probability range is a hexagon.
Povm hexagon_diagonal_povm();

/// Pair of sharp qubit POVMs from two mutually unbiased bases.
std::pair<Povm, Povm> mub_qubit_pair();

}  // namespace povmrand

#endif  // POVMRAND_STANDARD_POVMS_HPP
