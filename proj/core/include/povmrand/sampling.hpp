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

#ifndef POVMRAND_SAMPLING_HPP
#define POVMRAND_SAMPLING_HPP

#include <string>
#include <variant>
#include <vector>

#include "povmrand/povm.hpp"
#include "povmrand/random.hpp"

namespace povmrand {

/// Haar-random POVM of parameters (d, k; n): effects M_i = V_i^† V_i for the
/// n x d blocks V_i of a Haar isometry V : C^d -> C^k ⊗ C^n, d <= kn.
struct HaarParams {
  int d, k, n;
};

/// Wishart-random POVM of parameters (d, k; s_1..s_k):
/// M_i = S^{-1/2} W_i S^{-1/2} with independent Wisharts W_i and S = Σ W_j.
/// The sampler takes integer s_i >= 1 with Σ s_i >= d; real s is reachable
/// only through the density evaluator.
struct WishartParams {
  int d;
  std::vector<int> s;
};

/// The flat (Lebesgue) measure on POVMs, the n = d special case of the Haar
/// family.
struct LebesgueParams {
  int d, k;
};

/// Mixed random-basis model t |e_i><e_i| + (1-t) I/d over a Haar-random
/// orthonormal basis; k = d outcomes.
struct BasisMixtureParams {
  int d;
  double t;
};

using EnsembleParams =
    std::variant<HaarParams, WishartParams, LebesgueParams, BasisMixtureParams>;

/// Throws std::invalid_argument when parameters violate their constraints.
void validate_params(const EnsembleParams& params);

std::string describe(const EnsembleParams& params);

/// Wishart matrix W = G^† G for an s x d Ginibre G. PSD of rank min(d, s).
HermitianMatrix wishart(int d, int s, RandomStream& stream);

/// Haar-distributed isometry V : C^d -> C^D (D x d, V^† V = I_d), generated
/// as the Q factor of a Ginibre matrix with the R diagonal phases normalized
/// to be real positive.
ComplexMatrix haar_isometry(int d, int D, RandomStream& stream);

/// Draws one POVM from the requested ensemble. The output satisfies the POVM
/// invariants up to rounding; run validate() for a certified report.
Povm sample_povm(const EnsembleParams& params, RandomStream& stream);

/// The n x d factor V_1 of the first effect M_1 = V_1^† V_1 of a Haar-random
/// POVM, sampled through Wishart whitening (G_1 L^{-†} for the Cholesky
/// factor L of G^† G). Same distribution as taking rows 1..n of
/// haar_isometry, at a fraction of the cost; meant for large-d Monte Carlo
/// over single effects.
ComplexMatrix haar_effect_factor(int d, int k, int n, RandomStream& stream);

/// Log density (up to the normalization constant) of the Wishart-POVM law at
/// m: Σ_i (s_i - d) log det(m_i). Real parameters s_i are accepted. Returns
/// exactly 0 when every s_i equals d (the flat case), -infinity when some
/// m_i is singular with s_i > d.
double wishart_povm_log_density(const Povm& m, const std::vector<double>& s);

}  // namespace povmrand

#endif  // POVMRAND_SAMPLING_HPP
