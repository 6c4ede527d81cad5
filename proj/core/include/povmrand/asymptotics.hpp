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

#ifndef POVMRAND_ASYMPTOTICS_HPP
#define POVMRAND_ASYMPTOTICS_HPP

#include <functional>
#include <utility>
#include <vector>

namespace povmrand {

struct Atom {
  double location;
  double weight;
};

/// A probability measure made of point masses plus a continuous part of the
/// dilated free-Bernoulli-power family,
///
///   density(x) = scale * sqrt((x - lo)(hi - x)) / (x (cap - x)),  x in [lo, hi].
///
/// This family is closed under dilation and covers every limiting law in this
/// library. Quadrature substitutes x = lo + (hi - lo) sin^2 θ, which removes
/// the edge singularities the density develops when lo = 0 or hi = cap.
class SpectralMeasure {
 public:
  static SpectralMeasure atomic(std::vector<Atom> atoms);
  static SpectralMeasure with_continuous(std::vector<Atom> atoms, double lo,
                                         double hi, double scale, double cap);

  const std::vector<Atom>& atoms() const { return atoms_; }
  bool has_continuous_part() const { return has_continuous_; }
  double support_lo() const { return lo_; }
  double support_hi() const { return hi_; }
  double continuous_scale() const { return scale_; }
  double continuous_cap() const { return cap_; }

  /// Continuous density at x (0 outside [lo, hi] and for atomic measures).
  double density(double x) const;

  /// ∫ h(x) density(x) dx over the continuous part, adaptive Simpson in θ.
  double integrate(const std::function<double(double)>& h,
                   double tol = 1e-10) const;

 private:
  std::vector<Atom> atoms_;
  bool has_continuous_ = false;
  double lo_ = 0.0, hi_ = 0.0, scale_ = 0.0, cap_ = 0.0;
};

double measure_total_mass(const SpectralMeasure& mu);
/// Right-continuous CDF (atoms at x included).
double measure_cdf(const SpectralMeasure& mu, double x);
double measure_moment(const SpectralMeasure& mu, int p);

/// Free additive power b_s^{⊞T} of the Bernoulli measure
/// b_s = (1-s) δ_0 + s δ_1, for s in (0,1) and T >= 1: atoms
/// max(0, 1-Ts) δ_0 and max(0, 1-T(1-s)) δ_T plus the arcsine-like density
/// T sqrt((γ+ - x)(x - γ-)) / (2π x (T - x)) on [γ-, γ+],
/// γ± = (T-2)s + 1 ± 2 sqrt((T-1)s(1-s)).
SpectralMeasure bernoulli_free_power(double s, double T);

/// Push-forward under x -> a x for a > 0.
SpectralMeasure dilate(double a, const SpectralMeasure& mu);

/// Parameters of the scaling limit d ~ t k n: k outcomes, t = lim d/(kn).
struct ScalingParams {
  int k;
  double t;
};

/// Edges of the continuous support of the limiting effect law,
/// φ± = t + 1/k - 2t/k ± 2 sqrt(t(1-t)(1/k)(1-1/k)), evaluated in the exact
/// square form (sqrt(t(1-1/k)) ∓ sqrt((1-t)/k))^2 so that 0 <= φ- <= φ+ <= 1.
std::pair<double, double> phi_pm(ScalingParams p);

/// Limiting law of one effect of a Haar-random POVM: atoms
/// max(0, 1 - 1/(tk)) δ_0 and max(0, 1 - 1/t + 1/(tk)) δ_1 plus density
/// sqrt((x - φ-)(φ+ - x)) / (2π t x (1 - x)) on [φ-, φ+]. Coincides with
/// dilate(t, bernoulli_free_power(1/k, 1/t)).
SpectralMeasure limit_effect_measure(ScalingParams p);

/// Almost-sure limit of λ_min of one effect: φ- for t < 1/k, else 0
/// (the law acquires an atom at 0 once t >= 1/k).
double limit_min_eigenvalue(ScalingParams p);

/// Limit of the noise content w = Σ_i λ_min(M_i): k · limit_min_eigenvalue.
double asymptotic_noise_content(ScalingParams p);

/// Limiting unsharpness σ(k, s), piecewise in s with
/// s0 = 1/2 - sqrt(k-1)/k: 4 φ+(1-φ+) on [0, s0), 1 on [s0, 1-s0],
/// 4 φ-(1-φ-) on (1-s0, 1), and 0 at s = 1.
double limit_unsharpness(ScalingParams p);

/// The t-interval on which the random POVM is asymptotically regular,
/// (1/2 - 2 sqrt(k-1)/k, 1/2 + 2 sqrt(k-1)/k). Returned unclipped; the
/// parameter domain is t in (0, 1].
std::pair<double, double> regularity_interval(int k);

/// Asymptotic norm-1 property holds iff t > 1 - 1/k.
double norm1_threshold(int k);

/// Condition-number limit R(k, s) = φ+/φ- for s < 1/k, +∞ otherwise.
double big_R(ScalingParams p);

/// Asymptotic noise-content compatibility region:
/// k φ-(s,k) + l φ-(t,l) > 1 (strict; boundary reports false).
bool criterion_region_noise(int k, double s, int l, double t);

/// Asymptotic Jordan-product compatibility region:
/// (sqrt(R(k,s)) - 1)(sqrt(R(l,t)) - 1) < 2; false whenever either R = +∞.
bool criterion_region_jordan(int k, double s, int l, double t);

/// Closed-form boundary of the noise-content region at k = l, s = t:
/// s* = 1 / (6k - 4 + 4 sqrt((k-1)(2k-1))).
double noise_boundary_symmetric(int k);

/// Closed-form boundary of the Jordan region at k = l, s = t:
/// s* = (k(3 - 2√2) + 2(√2 - 1)) / (k^2 + 4k - 4).
double jordan_boundary_symmetric(int k);

/// Noise-content boundary for k = l = 2 as a curve t*(s), s < 1/2:
/// t* = 1/2 - sqrt(sqrt(s(1-s)) - s(1-s)).
double noise_boundary_dichotomic(double s);

/// Jordan boundary for k = l = 2 solved from the region predicate.
double jordan_boundary_dichotomic(double s);

/// The k = l = 2 Jordan bound in its published corollary form,
/// sqrt(s(1-s)) + sqrt(t(1-t)) < 1/4, solved for t. This curve does not
/// agree with jordan_boundary_dichotomic (the predicate-level flip sits at
/// sqrt(s(1-s)) = √2/4 on the diagonal, this one at 1/8); it is kept for
/// comparison and is reported, never asserted.
double jordan_boundary_dichotomic_quarter_rule(double s);

/// Largest s in (lo, hi) at which `inside` flips from true to false,
/// located by bisection to within tol. `inside(lo)` must hold.
double region_flip(const std::function<bool(double)>& inside, double lo,
                   double hi, double tol);

/// Bi-valued (t)-norm: || (1^j, 0^{k-j}) ||_(t) with u = j/k, equal to
/// t + u - 2tu + 2 sqrt(tu(1-t)(1-u)) for t + u < 1 and to 1 otherwise.
/// j = 0 gives 0.
double bivalued_t_norm(double t, int j, int k);

/// Half-width of the limiting dichotomic probability range K_{2,t}:
/// sqrt(t(1-t)) for t <= 1/2, else 1/2.
double k2_range_halfwidth(double t);

}  // namespace povmrand

#endif  // POVMRAND_ASYMPTOTICS_HPP
