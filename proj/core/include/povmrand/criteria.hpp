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

#ifndef POVMRAND_CRITERIA_HPP
#define POVMRAND_CRITERIA_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "povmrand/povm.hpp"

namespace povmrand {

enum class Verdict {
  kCompatibleCertified,
  kIncompatibleCertified,
  kInconclusive,
};

std::string to_string(Verdict v);

/// Outcome of one (in)compatibility check. Compatibility certificates carry
/// an explicit joint POVM whose marginals reproduce the inputs to 1e-8 and
/// whose effects have λ_min >= -1e-9; the Zhu check carries the optimal
/// operator H* instead. Sufficient conditions certify with a 1e-9 slack on
/// their defining inequality, strict (incompatibility) conditions require a
/// 1e-9 margin beyond the threshold; anything at the boundary reports
/// Inconclusive with a note.
struct CriterionReport {
  std::string criterion;
  Verdict verdict = Verdict::kInconclusive;
  std::map<std::string, double> margins;
  std::optional<JointPovm> witness;
  std::optional<HermitianMatrix> zhu_certificate;
  std::optional<std::pair<int, int>> worst_pair;
  std::optional<double> tau;
  std::string note;
};

/// Numerical slack used by every certify decision.
inline constexpr double kCertifyTol = 1e-9;

/// Unsharpness σ(E) = 4 ||E - E^2||; zero exactly for projections, one when
/// 1/2 lies in the spectrum.
double sharpness(const Effect& e);
double povm_unsharpness(const Povm& p);

/// Noise content w(A) = Σ_i λ_min(A_i) and its uniform variant min_i λ_min.
double noise_content(const Povm& p);
double uniform_noise_content(const Povm& p);

/// A POVM is regular when every nontrivial range element A_X has spectrum on
/// both sides of 1/2 (strictly, via tol). Sweeps all 2^k subsets; k <= 20.
bool is_regular(const Povm& p, double tol = 1e-9);

/// Every effect reaches operator norm 1 (λ_max >= 1 - tol).
bool has_norm1(const Povm& p, double tol = 1e-9);

/// Noise content criterion: w(A) + w(B) >= 1 certifies compatibility, with
/// the joint M_ij = t q_j A'_i + s p_i B'_j built from the trivial parts.
CriterionReport check_noise_content(const Povm& a, const Povm& b);

/// Jordan product criterion: A_i ∘ B_j ⪰ 0 for all pairs certifies
/// compatibility with the joint M_ij = (A_i B_j + B_j A_i)/2.
CriterionReport check_jordan(const Povm& a, const Povm& b);

/// Condition-number sufficient condition for the Jordan criterion:
/// (sqrt(R(A_i)) - 1)(sqrt(R(B_j)) - 1) < 2 for all pairs, R = λ_max/λ_min.
/// Requires positive definite effects; singular effects give Inconclusive.
CriterionReport check_jordan_lemma(const Povm& a, const Povm& b);

/// Optimal cloning criterion: λ_min(A_i) >= Tr(A_i)/(2(1+d)) on both POVMs;
/// the witness joint comes from measuring the reduced clones.
CriterionReport check_cloning(const Povm& a, const Povm& b);

/// Miyadera-Imai incompatibility criterion: 4||[A_i,B_j]||^2 > σ(A_i)σ(B_j)
/// for every pair certifies incompatibility.
CriterionReport check_miyadera_imai(const Povm& a, const Povm& b);

/// G_A = Σ_i |vec A_i><vec A_i| / Tr A_i on C^{d^2}. Outcomes with zero
/// trace are skipped (they contribute a vanishing summand).
HermitianMatrix zhu_superoperator(const Povm& p);

/// Zhu incompatibility criterion: τ = Tr(G_A - G_B)_+ + Tr G_B > d. Reports
/// τ and the primal optimizer H* = G_B + (G_A - G_B)_+.
CriterionReport check_zhu(const Povm& a, const Povm& b);

/// All checks in a fixed order: noise-content, jordan, jordan-lemma,
/// cloning, miyadera-imai, zhu.
std::vector<CriterionReport> run_all_criteria(const Povm& a, const Povm& b);

/// "incompatible" if any incompatibility certificate, else "compatible" if
/// any compatibility certificate, else "unknown". Throws std::logic_error if
/// both kinds of certificate occur (a soundness bug by construction).
std::string summary_verdict(const std::vector<CriterionReport>& reports);

/// {criterion, verdict, tau?, margins, witness_path?}.
nlohmann::json report_to_json(
    const CriterionReport& report,
    const std::optional<std::string>& witness_path = std::nullopt);

}  // namespace povmrand

#endif  // POVMRAND_CRITERIA_HPP
