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

#include "povmrand/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace povmrand {

namespace {

constexpr double kPi = std::numbers::pi;

void check_scaling(const ScalingParams& p) {
  if (p.k < 2) {
    throw std::invalid_argument("ScalingParams: k must be >= 2");
  }
  if (!(p.t > 0.0) || p.t > 1.0) {
    throw std::invalid_argument("ScalingParams: t must lie in (0, 1]");
  }
}

double simpson(const std::function<double(double)>& f, double a, double fa,
               double b, double fb, double m, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double fa, double b, double fb, double m, double fm,
                        double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(f, a, fa, m, fm, lm, flm);
  const double right = simpson(f, m, fm, b, fb, rm, frm);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(f, a, fa, m, fm, lm, flm, left, 0.5 * tol,
                          depth - 1) +
         adaptive_simpson(f, m, fm, b, fb, rm, frm, right, 0.5 * tol,
                          depth - 1);
}

double integrate_theta(const std::function<double(double)>& g, double lo,
                       double hi, double tol) {
  const double m = 0.5 * (lo + hi);
  const double flo = g(lo), fhi = g(hi), fm = g(m);
  const double whole = simpson(g, lo, flo, hi, fhi, m, fm);
  return adaptive_simpson(g, lo, flo, hi, fhi, m, fm, whole, tol, 28);
}

}  // namespace

SpectralMeasure SpectralMeasure::atomic(std::vector<Atom> atoms) {
  SpectralMeasure mu;
  mu.atoms_ = std::move(atoms);
  return mu;
}

SpectralMeasure SpectralMeasure::with_continuous(std::vector<Atom> atoms,
                                                 double lo, double hi,
                                                 double scale, double cap) {
  if (hi <= lo) return atomic(std::move(atoms));
  SpectralMeasure mu;
  mu.atoms_ = std::move(atoms);
  mu.has_continuous_ = true;
  mu.lo_ = lo;
  mu.hi_ = hi;
  mu.scale_ = scale;
  mu.cap_ = cap;
  return mu;
}

double SpectralMeasure::density(double x) const {
  if (!has_continuous_ || x < lo_ || x > hi_) return 0.0;
  const double num = (x - lo_) * (hi_ - x);
  const double den = x * (cap_ - x);
  if (den <= 0.0) return 0.0;
  return scale_ * std::sqrt(std::max(0.0, num)) / den;
}

double SpectralMeasure::integrate(const std::function<double(double)>& h,
                                  double tol) const {
  if (!has_continuous_) return 0.0;
  const double width = hi_ - lo_;
  const double lo = lo_, hi = hi_, cap = cap_, scale = scale_;
  // x = lo + width sin^2 θ; density dx = scale width^2 sin^2(2θ)/(2 x (cap-x)) dθ.
  auto g = [&, lo, hi, cap, scale, width](double theta) -> double {
    const double st = std::sin(theta), ct = std::cos(theta);
    const double x = lo + width * st * st;
    const double s2 = 2.0 * st * ct;  // sin(2θ)
    double ratio;
    if (x <= 0.0) {
      // lo == 0 edge: sin^2(2θ)/x -> 4 cos^2(θ)/width as θ -> 0.
      ratio = 4.0 * ct * ct / (width * (cap - x));
    } else if (x >= cap) {
      // hi == cap edge: mirror expansion at θ = π/2.
      ratio = 4.0 * st * st / (width * x);
    } else {
      ratio = s2 * s2 / (x * (cap - x));
    }
    return h(x) * scale * 0.5 * width * width * ratio;
  };
  return integrate_theta(g, 0.0, 0.5 * kPi, tol);
}

double measure_total_mass(const SpectralMeasure& mu) {
  double mass = 0.0;
  for (const Atom& a : mu.atoms()) mass += a.weight;
  mass += mu.integrate([](double) { return 1.0; });
  return mass;
}

double measure_cdf(const SpectralMeasure& mu, double x) {
  double value = 0.0;
  for (const Atom& a : mu.atoms()) {
    if (a.location <= x) value += a.weight;
  }
  if (!mu.has_continuous_part() || x <= mu.support_lo()) return value;
  if (x >= mu.support_hi()) {
    return value + mu.integrate([](double) { return 1.0; });
  }
  // Integrate θ from 0 to the preimage of x.
  const double width = mu.support_hi() - mu.support_lo();
  const double frac =
      std::clamp((x - mu.support_lo()) / width, 0.0, 1.0);
  const double theta_x = std::asin(std::sqrt(frac));
  const double lo = mu.support_lo(), cap = mu.continuous_cap(),
               scale = mu.continuous_scale();
  auto g = [&, lo, cap, scale, width](double theta) -> double {
    const double st = std::sin(theta), ct = std::cos(theta);
    const double xx = lo + width * st * st;
    const double s2 = 2.0 * st * ct;
    double ratio;
    if (xx <= 0.0) {
      ratio = 4.0 * ct * ct / (width * (cap - xx));
    } else if (xx >= cap) {
      ratio = 4.0 * st * st / (width * xx);
    } else {
      ratio = s2 * s2 / (xx * (cap - xx));
    }
    return scale * 0.5 * width * width * ratio;
  };
  return value + integrate_theta(g, 0.0, theta_x, 1e-10);
}

double measure_moment(const SpectralMeasure& mu, int p) {
  if (p < 0) throw std::invalid_argument("measure_moment: p must be >= 0");
  double value = 0.0;
  for (const Atom& a : mu.atoms()) {
    value += a.weight * std::pow(a.location, p);
  }
  value += mu.integrate([p](double x) { return std::pow(x, p); });
  return value;
}

SpectralMeasure bernoulli_free_power(double s, double T) {
  if (!(s > 0.0) || !(s < 1.0)) {
    throw std::invalid_argument("bernoulli_free_power: s must lie in (0, 1)");
  }
  if (T < 1.0) {
    throw std::invalid_argument("bernoulli_free_power: T must be >= 1");
  }
  std::vector<Atom> atoms;
  const double w0 = 1.0 - T * s;
  const double w1 = 1.0 - T * (1.0 - s);
  if (w0 > 0.0) atoms.push_back({0.0, w0});
  if (w1 > 0.0) atoms.push_back({T, w1});
  const double root = 2.0 * std::sqrt((T - 1.0) * s * (1.0 - s));
  const double center = (T - 2.0) * s + 1.0;
  const double lo = std::max(0.0, center - root);
  const double hi = std::min(T, center + root);
  return SpectralMeasure::with_continuous(std::move(atoms), lo, hi,
                                          T / (2.0 * kPi), T);
}

SpectralMeasure dilate(double a, const SpectralMeasure& mu) {
  if (!(a > 0.0)) throw std::invalid_argument("dilate: factor must be > 0");
  std::vector<Atom> atoms;
  atoms.reserve(mu.atoms().size());
  for (const Atom& at : mu.atoms()) atoms.push_back({a * at.location, at.weight});
  if (!mu.has_continuous_part()) return SpectralMeasure::atomic(std::move(atoms));
  // The density family is closed under dilation with unchanged scale factor.
  return SpectralMeasure::with_continuous(
      std::move(atoms), a * mu.support_lo(), a * mu.support_hi(),
      mu.continuous_scale(), a * mu.continuous_cap());
}

std::pair<double, double> phi_pm(ScalingParams p) {
  check_scaling(p);
  const double u = 1.0 / p.k;
  const double a = std::sqrt(p.t * (1.0 - u));
  const double b = std::sqrt(u * (1.0 - p.t));
  const double lo = (a - b) * (a - b);
  const double hi = std::min(1.0, (a + b) * (a + b));
  return {lo, hi};
}

SpectralMeasure limit_effect_measure(ScalingParams p) {
  check_scaling(p);
  const auto [lo, hi] = phi_pm(p);
  std::vector<Atom> atoms;
  const double w0 = 1.0 - 1.0 / (p.t * p.k);
  const double w1 = 1.0 - 1.0 / p.t + 1.0 / (p.t * p.k);
  if (w0 > 0.0) atoms.push_back({0.0, w0});
  if (w1 > 0.0) atoms.push_back({1.0, w1});
  return SpectralMeasure::with_continuous(std::move(atoms), lo, hi,
                                          1.0 / (2.0 * kPi * p.t), 1.0);
}

double limit_min_eigenvalue(ScalingParams p) {
  check_scaling(p);
  if (p.t >= 1.0 / p.k) return 0.0;
  return phi_pm(p).first;
}

double asymptotic_noise_content(ScalingParams p) {
  return p.k * limit_min_eigenvalue(p);
}

double limit_unsharpness(ScalingParams p) {
  check_scaling(p);
  const double s0 = 0.5 - std::sqrt(static_cast<double>(p.k) - 1.0) / p.k;
  if (p.t == 1.0) return 0.0;
  if (p.t < s0) {
    const double hi = phi_pm(p).second;
    return 4.0 * hi * (1.0 - hi);
  }
  if (p.t <= 1.0 - s0) return 1.0;
  const double lo = phi_pm(p).first;
  return 4.0 * lo * (1.0 - lo);
}

std::pair<double, double> regularity_interval(int k) {
  if (k < 2) throw std::invalid_argument("regularity_interval: k must be >= 2");
  const double half_width = 2.0 * std::sqrt(static_cast<double>(k) - 1.0) / k;
  return {0.5 - half_width, 0.5 + half_width};
}

double norm1_threshold(int k) {
  if (k < 2) throw std::invalid_argument("norm1_threshold: k must be >= 2");
  return 1.0 - 1.0 / static_cast<double>(k);
}

double big_R(ScalingParams p) {
  check_scaling(p);
  if (p.t >= 1.0 / p.k) return std::numeric_limits<double>::infinity();
  const auto [lo, hi] = phi_pm(p);
  return hi / lo;
}

bool criterion_region_noise(int k, double s, int l, double t) {
  return k * limit_min_eigenvalue({k, s}) + l * limit_min_eigenvalue({l, t}) >
         1.0;
}

bool criterion_region_jordan(int k, double s, int l, double t) {
  const double r1 = big_R({k, s});
  const double r2 = big_R({l, t});
  if (std::isinf(r1) || std::isinf(r2)) return false;
  return (std::sqrt(r1) - 1.0) * (std::sqrt(r2) - 1.0) < 2.0;
}

double noise_boundary_symmetric(int k) {
  if (k < 2) throw std::invalid_argument("noise_boundary_symmetric: k >= 2");
  const double kk = k;
  return 1.0 / (6.0 * kk - 4.0 + 4.0 * std::sqrt((kk - 1.0) * (2.0 * kk - 1.0)));
}

double jordan_boundary_symmetric(int k) {
  if (k < 2) throw std::invalid_argument("jordan_boundary_symmetric: k >= 2");
  const double kk = k;
  const double r2 = std::sqrt(2.0);
  return (kk * (3.0 - 2.0 * r2) + 2.0 * (r2 - 1.0)) / (kk * kk + 4.0 * kk - 4.0);
}

double noise_boundary_dichotomic(double s) {
  if (!(s > 0.0) || s >= 0.5) return 0.0;
  const double x = std::sqrt(s * (1.0 - s));
  return 0.5 - std::sqrt(x - x * x);
}

double jordan_boundary_dichotomic(double s) {
  if (!(s > 0.0) || s >= 0.5) return 0.0;
  // Solve (sqrt(R(2,s)) - 1)(sqrt(R(2,t)) - 1) = 2 for t in closed form:
  // R(2,·) = (1/2 + x)/(1/2 - x) with x = sqrt(·(1-·)).
  const double xs = std::sqrt(s * (1.0 - s));
  const double rs = (0.5 + xs) / (0.5 - xs);
  const double q = 1.0 + 2.0 / (std::sqrt(rs) - 1.0);
  const double rt = q * q;
  const double xt = (rt - 1.0) / (2.0 * (rt + 1.0));
  return 0.5 - std::sqrt(std::max(0.0, 0.25 - xt * xt));
}

double jordan_boundary_dichotomic_quarter_rule(double s) {
  const double xs = std::sqrt(s * (1.0 - s));
  if (xs >= 0.25) return 0.0;
  const double xt = 0.25 - xs;
  return 0.5 - std::sqrt(std::max(0.0, 0.25 - xt * xt));
}

double region_flip(const std::function<bool(double)>& inside, double lo,
                   double hi, double tol) {
  if (!inside(lo)) {
    throw std::invalid_argument("region_flip: predicate must hold at lo");
  }
  double in = lo, out = hi;
  while (out - in > tol) {
    const double mid = 0.5 * (in + out);
    (inside(mid) ? in : out) = mid;
  }
  return 0.5 * (in + out);
}

double bivalued_t_norm(double t, int j, int k) {
  if (!(t > 0.0) || !(t < 1.0)) {
    throw std::invalid_argument("bivalued_t_norm: t must lie in (0, 1)");
  }
  if (k < 1 || j < 0 || j > k) {
    throw std::invalid_argument("bivalued_t_norm: need 0 <= j <= k");
  }
  if (j == 0) return 0.0;
  const double u = static_cast<double>(j) / k;
  if (t + u >= 1.0) return 1.0;
  return t + u - 2.0 * t * u + 2.0 * std::sqrt(t * u * (1.0 - t) * (1.0 - u));
}

double k2_range_halfwidth(double t) {
  if (!(t > 0.0) || !(t < 1.0)) {
    throw std::invalid_argument("k2_range_halfwidth: t must lie in (0, 1)");
  }
  if (t > 0.5) return 0.5;
  return std::sqrt(t * (1.0 - t));
}

}  // namespace povmrand
