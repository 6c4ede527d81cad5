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

#include "povmrand/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace povmrand {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kCompatibleCertified:
      return "compatible-certified";
    case Verdict::kIncompatibleCertified:
      return "incompatible-certified";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

double sharpness(const Effect& e) {
  const Spectrum s = eig_hermitian(e.hermitian(), false);
  double worst = 0.0;
  for (int i = 0; i < s.eigenvalues.size(); ++i) {
    const double lambda = s.eigenvalues(i);
    worst = std::max(worst, std::abs(lambda - lambda * lambda));
  }
  return 4.0 * worst;
}

double povm_unsharpness(const Povm& p) {
  double worst = 0.0;
  for (const Effect& e : p.effects()) worst = std::max(worst, sharpness(e));
  return worst;
}

double noise_content(const Povm& p) {
  double total = 0.0;
  for (const Effect& e : p.effects()) total += lambda_min(e.hermitian());
  return total;
}

double uniform_noise_content(const Povm& p) {
  double worst = std::numeric_limits<double>::infinity();
  for (const Effect& e : p.effects()) {
    worst = std::min(worst, lambda_min(e.hermitian()));
  }
  return worst;
}

bool is_regular(const Povm& p, double tol) {
  const int k = p.outcomes();
  if (k > 20) {
    throw std::invalid_argument(
        "is_regular: range sweep limited to k <= 20 outcomes");
  }
  // A_X and its complement I - A_X satisfy the same predicate, so subsets
  // containing outcome 0 cover everything.
  const unsigned full = (1u << k) - 1u;
  for (unsigned mask = 1; mask < full; mask += 2) {
    ComplexMatrix sum = ComplexMatrix::Zero(p.dim(), p.dim());
    for (int i = 0; i < k; ++i) {
      if (mask & (1u << i)) sum += p.effect(i).matrix();
    }
    const Spectrum s =
        eig_hermitian(HermitianMatrix::trusted(std::move(sum)), false);
    const bool above = s.max() > 0.5 + tol;
    const bool below = s.min() < 0.5 - tol;
    if (!above || !below) return false;
  }
  return true;
}

bool has_norm1(const Povm& p, double tol) {
  for (const Effect& e : p.effects()) {
    if (lambda_max(e.hermitian()) < 1.0 - tol) return false;
  }
  return true;
}

CriterionReport check_noise_content(const Povm& a, const Povm& b) {
  CriterionReport report;
  report.criterion = "noise-content";
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("check_noise_content: dimension mismatch");
  }
  const int d = a.dim();
  std::vector<double> la(a.outcomes()), lb(b.outcomes());
  for (int i = 0; i < a.outcomes(); ++i) la[i] = lambda_min(a.effect(i).hermitian());
  for (int j = 0; j < b.outcomes(); ++j) lb[j] = lambda_min(b.effect(j).hermitian());
  const double wa = std::accumulate(la.begin(), la.end(), 0.0);
  const double wb = std::accumulate(lb.begin(), lb.end(), 0.0);
  report.margins["noise_content_a"] = wa;
  report.margins["noise_content_b"] = wb;
  report.margins["margin"] = wa + wb - 1.0;
  if (wa + wb < 1.0 - kCertifyTol) {
    return report;
  }
  if (std::abs(wa + wb - 1.0) <= kCertifyTol) {
    report.note = "noise content sits at the criterion boundary";
  }

  // Joint M_ij = t q_j A'_i + s p_i B'_j for the splits s + t = 1,
  // s <= w(A), t <= w(B); s = w(A)/(w(A)+w(B)) always satisfies both under
  // the criterion. Trivial parts p_i = λ_min(A_i)/w(A).
  const double s = wa / (wa + wb);
  const double t = 1.0 - s;
  std::vector<double> pa(a.outcomes()), qb(b.outcomes());
  for (int i = 0; i < a.outcomes(); ++i) {
    pa[i] = wa > 0.0 ? la[i] / wa : 1.0 / a.outcomes();
  }
  for (int j = 0; j < b.outcomes(); ++j) {
    qb[j] = wb > 0.0 ? lb[j] / wb : 1.0 / b.outcomes();
  }
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  std::vector<ComplexMatrix> ap(a.outcomes()), bp(b.outcomes());
  const double residual_a = 1.0 - s, residual_b = 1.0 - t;
  for (int i = 0; i < a.outcomes(); ++i) {
    ap[i] = residual_a > kCertifyTol
                ? ComplexMatrix((a.effect(i).matrix() - s * pa[i] * id) / residual_a)
                : ComplexMatrix::Zero(d, d);
  }
  for (int j = 0; j < b.outcomes(); ++j) {
    bp[j] = residual_b > kCertifyTol
                ? ComplexMatrix((b.effect(j).matrix() - t * qb[j] * id) / residual_b)
                : ComplexMatrix::Zero(d, d);
  }
  std::vector<Effect> joint;
  joint.reserve(static_cast<std::size_t>(a.outcomes()) * b.outcomes());
  for (int i = 0; i < a.outcomes(); ++i) {
    for (int j = 0; j < b.outcomes(); ++j) {
      ComplexMatrix m = t * qb[j] * ap[i] + s * pa[i] * bp[j];
      if (residual_a <= kCertifyTol) m = pa[i] * b.effect(j).matrix();
      if (residual_b <= kCertifyTol) m = qb[j] * a.effect(i).matrix();
      joint.emplace_back(HermitianMatrix::trusted(std::move(m)));
    }
  }
  report.witness = JointPovm(a.outcomes(), b.outcomes(), std::move(joint), 1e-7);
  report.verdict = Verdict::kCompatibleCertified;
  return report;
}

CriterionReport check_jordan(const Povm& a, const Povm& b) {
  CriterionReport report;
  report.criterion = "jordan";
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("check_jordan: dimension mismatch");
  }
  double worst = std::numeric_limits<double>::infinity();
  std::pair<int, int> worst_pair{0, 0};
  std::vector<Effect> joint;
  joint.reserve(static_cast<std::size_t>(a.outcomes()) * b.outcomes());
  for (int i = 0; i < a.outcomes(); ++i) {
    for (int j = 0; j < b.outcomes(); ++j) {
      HermitianMatrix prod = jordan_product(a.effect(i), b.effect(j));
      const double lmin = lambda_min(prod);
      if (lmin < worst) {
        worst = lmin;
        worst_pair = {i, j};
      }
      joint.emplace_back(HermitianMatrix::trusted(0.5 * prod.matrix()));
    }
  }
  report.margins["min_jordan_eigenvalue"] = worst;
  report.worst_pair = worst_pair;
  if (worst >= -kCertifyTol) {
    report.verdict = Verdict::kCompatibleCertified;
    report.witness = JointPovm(a.outcomes(), b.outcomes(), std::move(joint));
  }
  return report;
}

CriterionReport check_jordan_lemma(const Povm& a, const Povm& b) {
  CriterionReport report;
  report.criterion = "jordan-lemma";
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("check_jordan_lemma: dimension mismatch");
  }
  auto ratios = [&report](const Povm& p, const char* tag) {
    std::vector<double> r(p.outcomes());
    for (int i = 0; i < p.outcomes(); ++i) {
      const Spectrum s = eig_hermitian(p.effect(i).hermitian(), false);
      if (s.min() <= 0.0) {
        report.note = std::string(tag) +
                      " has a singular effect; condition-number bound does "
                      "not apply";
        r[i] = std::numeric_limits<double>::infinity();
      } else {
        r[i] = s.max() / s.min();
      }
    }
    return r;
  };
  const std::vector<double> ra = ratios(a, "first POVM");
  const std::vector<double> rb = ratios(b, "second POVM");
  double worst = 0.0;
  std::pair<int, int> worst_pair{0, 0};
  for (int i = 0; i < a.outcomes(); ++i) {
    for (int j = 0; j < b.outcomes(); ++j) {
      const double value = (std::sqrt(ra[i]) - 1.0) * (std::sqrt(rb[j]) - 1.0);
      if (value > worst) {
        worst = value;
        worst_pair = {i, j};
      }
    }
  }
  report.margins["max_condition_product"] = worst;
  report.margins["margin"] = 2.0 - worst;
  report.worst_pair = worst_pair;
  if (std::isfinite(worst) && worst < 2.0 - kCertifyTol) {
    report.verdict = Verdict::kCompatibleCertified;
    // The lemma guarantees every Jordan product is positive definite, so the
    // Jordan joint is a valid witness.
    std::vector<Effect> joint;
    joint.reserve(static_cast<std::size_t>(a.outcomes()) * b.outcomes());
    for (int i = 0; i < a.outcomes(); ++i) {
      for (int j = 0; j < b.outcomes(); ++j) {
        joint.emplace_back(HermitianMatrix::trusted(
            0.5 * jordan_product(a.effect(i), b.effect(j)).matrix()));
      }
    }
    report.witness = JointPovm(a.outcomes(), b.outcomes(), std::move(joint));
  }
  return report;
}

CriterionReport check_cloning(const Povm& a, const Povm& b) {
  CriterionReport report;
  report.criterion = "cloning";
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("check_cloning: dimension mismatch");
  }
  const int d = a.dim();
  const double threshold_scale = 1.0 / (2.0 * (1.0 + d));
  double margin = std::numeric_limits<double>::infinity();
  for (const Povm* p : {&a, &b}) {
    for (const Effect& e : p->effects()) {
      margin = std::min(margin, lambda_min(e.hermitian()) -
                                    threshold_scale * e.trace());
    }
  }
  report.margins["margin"] = margin;
  if (margin < -kCertifyTol) {
    return report;
  }
  if (margin <= kCertifyTol) {
    report.note = "cloning condition sits at the criterion boundary";
  }

  // Joint from measuring the two reduced clones: with the shifted POVMs
  // X_i = [A_i - Tr(A_i)/(2(1+d)) I] / c_d and c_d = (d+2)/(2d+2),
  //   G_ij = (X_i Tr Y_j + Y_j Tr X_i + X_i Y_j + Y_j X_i) / (2(d+1)),
  // the partial trace of the symmetrized product written out in d x d form.
  const double c = (d + 2.0) / (2.0 * d + 2.0);
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  auto shifted = [&](const Povm& p) {
    std::vector<ComplexMatrix> out(p.outcomes());
    for (int i = 0; i < p.outcomes(); ++i) {
      out[i] = (p.effect(i).matrix() -
                threshold_scale * p.effect(i).trace() * id) /
               c;
    }
    return out;
  };
  const std::vector<ComplexMatrix> xa = shifted(a);
  const std::vector<ComplexMatrix> yb = shifted(b);
  std::vector<Effect> joint;
  joint.reserve(static_cast<std::size_t>(a.outcomes()) * b.outcomes());
  const double norm = 1.0 / (2.0 * (d + 1.0));
  for (int i = 0; i < a.outcomes(); ++i) {
    const double tx = xa[i].trace().real();
    for (int j = 0; j < b.outcomes(); ++j) {
      const double ty = yb[j].trace().real();
      ComplexMatrix cross = xa[i] * yb[j];
      ComplexMatrix g =
          norm * (ty * xa[i] + tx * yb[j] + cross + cross.adjoint());
      joint.emplace_back(HermitianMatrix::trusted(std::move(g)));
    }
  }
  report.witness = JointPovm(a.outcomes(), b.outcomes(), std::move(joint), 1e-7);
  report.verdict = Verdict::kCompatibleCertified;
  return report;
}

CriterionReport check_miyadera_imai(const Povm& a, const Povm& b) {
  CriterionReport report;
  report.criterion = "miyadera-imai";
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("check_miyadera_imai: dimension mismatch");
  }
  std::vector<double> sa(a.outcomes()), sb(b.outcomes());
  for (int i = 0; i < a.outcomes(); ++i) sa[i] = sharpness(a.effect(i));
  for (int j = 0; j < b.outcomes(); ++j) sb[j] = sharpness(b.effect(j));
  double worst = std::numeric_limits<double>::infinity();
  std::pair<int, int> worst_pair{0, 0};
  int violating = 0;
  for (int i = 0; i < a.outcomes(); ++i) {
    for (int j = 0; j < b.outcomes(); ++j) {
      const double comm = commutator_norm(a.effect(i), b.effect(j));
      const double value = 4.0 * comm * comm - sa[i] * sb[j];
      if (value > kCertifyTol) ++violating;
      if (value < worst) {
        worst = value;
        worst_pair = {i, j};
      }
    }
  }
  report.margins["min_violation"] = worst;
  report.margins["violating_pairs"] = violating;
  report.margins["total_pairs"] =
      static_cast<double>(a.outcomes()) * b.outcomes();
  report.worst_pair = worst_pair;
  // Incompatibility needs the strict inequality on every pair.
  if (worst > kCertifyTol) {
    report.verdict = Verdict::kIncompatibleCertified;
  }
  return report;
}

HermitianMatrix zhu_superoperator(const Povm& p) {
  const int d = p.dim();
  ComplexMatrix g = ComplexMatrix::Zero(d * d, d * d);
  for (const Effect& e : p.effects()) {
    const double tr = e.trace();
    if (tr <= 1e-12 * d) continue;  // zero-trace outcomes contribute nothing
    const ComplexVector v = vectorize(e);
    g.selfadjointView<Eigen::Lower>().rankUpdate(v, 1.0 / tr);
  }
  return HermitianMatrix::trusted(ComplexMatrix(g.selfadjointView<Eigen::Lower>()));
}

CriterionReport check_zhu(const Povm& a, const Povm& b) {
  CriterionReport report;
  report.criterion = "zhu";
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("check_zhu: dimension mismatch");
  }
  const int d = a.dim();
  const HermitianMatrix ga = zhu_superoperator(a);
  const HermitianMatrix gb = zhu_superoperator(b);
  const HermitianMatrix delta =
      HermitianMatrix::trusted(ga.matrix() - gb.matrix());
  const HermitianMatrix delta_plus = positive_part(delta);
  const double tau = delta_plus.trace() + gb.trace();
  report.tau = tau;
  report.margins["tau_minus_d"] = tau - d;
  report.zhu_certificate =
      HermitianMatrix::trusted(gb.matrix() + delta_plus.matrix());
  if (tau > d + kCertifyTol) {
    report.verdict = Verdict::kIncompatibleCertified;
  }
  return report;
}

std::vector<CriterionReport> run_all_criteria(const Povm& a, const Povm& b) {
  std::vector<CriterionReport> reports;
  reports.push_back(check_noise_content(a, b));
  reports.push_back(check_jordan(a, b));
  reports.push_back(check_jordan_lemma(a, b));
  reports.push_back(check_cloning(a, b));
  reports.push_back(check_miyadera_imai(a, b));
  reports.push_back(check_zhu(a, b));
  return reports;
}

std::string summary_verdict(const std::vector<CriterionReport>& reports) {
  bool compatible = false, incompatible = false;
  for (const CriterionReport& r : reports) {
    compatible |= r.verdict == Verdict::kCompatibleCertified;
    incompatible |= r.verdict == Verdict::kIncompatibleCertified;
  }
  if (compatible && incompatible) {
    throw std::logic_error(
        "summary_verdict: conflicting certificates, this indicates a bug in "
        "a criterion implementation");
  }
  if (incompatible) return "incompatible";
  if (compatible) return "compatible";
  return "unknown";
}

nlohmann::json report_to_json(const CriterionReport& report,
                              const std::optional<std::string>& witness_path) {
  nlohmann::json j;
  j["criterion"] = report.criterion;
  j["verdict"] = to_string(report.verdict);
  if (report.tau) j["tau"] = *report.tau;
  j["margins"] = report.margins;
  if (report.worst_pair) {
    j["worst_pair"] = {report.worst_pair->first, report.worst_pair->second};
  }
  if (!report.note.empty()) j["note"] = report.note;
  if (witness_path) j["witness_path"] = *witness_path;
  return j;
}

}  // namespace povmrand
