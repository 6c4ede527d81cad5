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

#include <cmath>
#include <stdexcept>

#include "povmrand/asymptotics.hpp"

using namespace povmrand;

TEST_CASE("bernoulli free power endpoints") {
  // T = 1 is the Bernoulli measure itself.
  const SpectralMeasure b = bernoulli_free_power(0.3, 1.0);
  CHECK_FALSE(b.has_continuous_part());
  REQUIRE(b.atoms().size() == 2);
  CHECK(b.atoms()[0].location == doctest::Approx(0.0));
  CHECK(b.atoms()[0].weight == doctest::Approx(0.7));
  CHECK(b.atoms()[1].location == doctest::Approx(1.0));
  CHECK(b.atoms()[1].weight == doctest::Approx(0.3));

  // s = 1/2, T = 2: no atoms, support [0, 2].
  const SpectralMeasure half = bernoulli_free_power(0.5, 2.0);
  CHECK(half.atoms().empty());
  CHECK(half.support_lo() == doctest::Approx(0.0));
  CHECK(half.support_hi() == doctest::Approx(2.0));
  CHECK(measure_total_mass(half) == doctest::Approx(1.0).epsilon(1e-8));

  CHECK_THROWS_AS(bernoulli_free_power(0.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(bernoulli_free_power(0.5, 0.5), std::invalid_argument);
}

TEST_CASE("bernoulli free power has unit mass on a parameter grid") {
  for (double s = 0.1; s < 0.95; s += 0.2) {
    for (double T = 1.0; T <= 5.0; T += 1.0) {
      const SpectralMeasure mu = bernoulli_free_power(s, T);
      CHECK(measure_total_mass(mu) == doctest::Approx(1.0).epsilon(1e-8));
    }
  }
}

TEST_CASE("dilate") {
  const SpectralMeasure mu = bernoulli_free_power(0.25, 3.0);
  const SpectralMeasure same = dilate(1.0, mu);
  CHECK(same.support_lo() == doctest::Approx(mu.support_lo()));
  CHECK(same.support_hi() == doctest::Approx(mu.support_hi()));

  // Dirac comb scales.
  const SpectralMeasure b = bernoulli_free_power(0.4, 1.0);
  const SpectralMeasure scaled = dilate(0.5, b);
  CHECK(scaled.atoms()[1].location == doctest::Approx(0.5));

  // Mean scales linearly; mass is preserved.
  const SpectralMeasure d2 = dilate(0.7, mu);
  CHECK(measure_total_mass(d2) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(measure_moment(d2, 1) ==
        doctest::Approx(0.7 * measure_moment(mu, 1)).epsilon(1e-8));

  CHECK_THROWS_AS(dilate(0.0, mu), std::invalid_argument);
}

TEST_CASE("phi_pm") {
  // k = 2, t = 1: both edges collapse at 1/2.
  const auto [lo1, hi1] = phi_pm({2, 1.0});
  CHECK(lo1 == doctest::Approx(0.5));
  CHECK(hi1 == doctest::Approx(0.5));

  // k = 4, t = 1/2.
  const auto [lo2, hi2] = phi_pm({4, 0.5});
  CHECK(lo2 == doctest::Approx(0.5 - std::sqrt(3.0) / 4.0));
  CHECK(hi2 == doctest::Approx(0.5 + std::sqrt(3.0) / 4.0));

  // The λ_min limit switches to the zero branch at t >= 1/k.
  CHECK(limit_min_eigenvalue({4, 0.25}) == doctest::Approx(0.0));
  CHECK(limit_min_eigenvalue({4, 0.6}) == 0.0);
  CHECK(limit_min_eigenvalue({4, 0.1}) > 0.0);
}

TEST_CASE("limit_effect_measure") {
  // t = 1: Bernoulli b_{1/k}.
  const SpectralMeasure b = limit_effect_measure({3, 1.0});
  CHECK_FALSE(b.has_continuous_part());
  REQUIRE(b.atoms().size() == 2);
  CHECK(b.atoms()[0].weight == doctest::Approx(2.0 / 3.0));
  CHECK(b.atoms()[1].weight == doctest::Approx(1.0 / 3.0));

  // k = 2, t = 1/2: support [0, 1], no atoms (the arcsine law).
  const SpectralMeasure arcsine = limit_effect_measure({2, 0.5});
  CHECK(arcsine.atoms().empty());
  CHECK(arcsine.support_lo() == doctest::Approx(0.0));
  CHECK(arcsine.support_hi() == doctest::Approx(1.0));
  CHECK(measure_total_mass(arcsine) == doctest::Approx(1.0).epsilon(1e-8));

  // First two moments, m1 = 1/k and m2 = (tk + 1 - t)/k^2.
  for (int k : {2, 3, 5}) {
    for (double t : {0.2, 0.5, 0.8}) {
      const SpectralMeasure mu = limit_effect_measure({k, t});
      CHECK(measure_moment(mu, 1) ==
            doctest::Approx(1.0 / k).epsilon(1e-6));
      CHECK(measure_moment(mu, 2) ==
            doctest::Approx((t * k + 1.0 - t) / (k * k)).epsilon(1e-6));
    }
  }
}

TEST_CASE("factorization through the free Bernoulli power") {
  for (int k : {2, 4}) {
    for (double t : {0.3, 0.6, 0.9}) {
      const SpectralMeasure direct = limit_effect_measure({k, t});
      const SpectralMeasure via =
          dilate(t, bernoulli_free_power(1.0 / k, 1.0 / t));
      REQUIRE(direct.atoms().size() == via.atoms().size());
      for (std::size_t i = 0; i < direct.atoms().size(); ++i) {
        CHECK(std::abs(direct.atoms()[i].location - via.atoms()[i].location) <=
              1e-10);
        CHECK(std::abs(direct.atoms()[i].weight - via.atoms()[i].weight) <=
              1e-10);
      }
      REQUIRE(direct.has_continuous_part() == via.has_continuous_part());
      for (int g = 0; g <= 200; ++g) {
        const double x = direct.support_lo() +
                         (direct.support_hi() - direct.support_lo()) * g / 200.0;
        CHECK(std::abs(direct.density(x) - via.density(x)) <= 1e-8);
      }
    }
  }
}

TEST_CASE("dichotomic density is symmetric about 1/2") {
  const SpectralMeasure mu = limit_effect_measure({2, 0.25});
  for (int g = 0; g <= 100; ++g) {
    const double x = mu.support_lo() +
                     (mu.support_hi() - mu.support_lo()) * g / 100.0;
    CHECK(std::abs(mu.density(x) - mu.density(1.0 - x)) <= 1e-8);
  }
}

TEST_CASE("measure_cdf") {
  const SpectralMeasure mu = limit_effect_measure({2, 0.7});
  // t = 0.7 > 1/2: atoms at both 0 and 1.
  REQUIRE(mu.atoms().size() == 2);
  const double w0 = mu.atoms()[0].weight;
  CHECK(measure_cdf(mu, mu.support_lo() - 1e-9) == doctest::Approx(w0));
  CHECK(measure_cdf(mu, 1.0) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(measure_cdf(mu, -0.1) == doctest::Approx(0.0));
  // Monotone.
  double prev = -1.0;
  for (double x = -0.05; x <= 1.05; x += 0.01) {
    const double f = measure_cdf(mu, x);
    CHECK(f >= prev - 1e-12);
    prev = f;
  }
}

TEST_CASE("limit_unsharpness branches") {
  // k = 2: identically 1 on (0, 1), 0 at s = 1.
  for (double s : {0.05, 0.3, 0.5, 0.8, 0.99}) {
    CHECK(limit_unsharpness({2, s}) == doctest::Approx(1.0));
  }
  CHECK(limit_unsharpness({2, 1.0}) == 0.0);

  // k = 5, s = 0.05 < s0 = 0.1: 4 φ+(1 - φ+) ≈ 0.9635.
  CHECK(limit_unsharpness({5, 0.05}) == doctest::Approx(0.9635).epsilon(1e-3));

  // Plateau inside [s0, 1 - s0].
  CHECK(limit_unsharpness({5, 0.4}) == doctest::Approx(1.0));

  // Symmetry under s <-> 1-s away from the endpoints.
  for (double s : {0.03, 0.07, 0.2, 0.45}) {
    CHECK(limit_unsharpness({5, s}) ==
          doctest::Approx(limit_unsharpness({5, 1.0 - s})).epsilon(1e-10));
  }

  // Lower bound 4(1/k - 1/k^2) on (0, 1).
  for (double s = 0.02; s < 1.0; s += 0.02) {
    CHECK(limit_unsharpness({5, s}) >= 4.0 * (0.2 - 0.04) - 1e-12);
  }
}

TEST_CASE("regularity interval and norm-1 threshold") {
  const auto [lo, hi] = regularity_interval(2);
  CHECK(lo == doctest::Approx(-0.5));
  CHECK(hi == doctest::Approx(1.5));
  CHECK(norm1_threshold(4) == doctest::Approx(0.75));
  CHECK(norm1_threshold(2) == doctest::Approx(0.5));
}

TEST_CASE("noise-content region") {
  CHECK(criterion_region_noise(2, 0.01, 2, 0.01));
  // s >= 1/k kills one side; the other cannot exceed 1 on its own.
  CHECK_FALSE(criterion_region_noise(2, 0.6, 2, 0.01));
  CHECK_FALSE(criterion_region_noise(3, 0.4, 5, 0.5));

  // Flip point on the diagonal matches the closed form.
  for (int k : {2, 3, 5}) {
    const double closed = noise_boundary_symmetric(k);
    const double flip = region_flip(
        [k](double s) { return criterion_region_noise(k, s, k, s); }, 1e-12,
        1.0 / k, 1e-12);
    CHECK(std::abs(closed - flip) <= 1e-9);
  }
  // k = 2 closed form: 1/(8 + 4 sqrt 3) = 1/2 - sqrt(3)/4.
  CHECK(noise_boundary_symmetric(2) ==
        doctest::Approx(0.5 - std::sqrt(3.0) / 4.0).epsilon(1e-12));
}

TEST_CASE("jordan region") {
  CHECK(criterion_region_jordan(2, 0.1, 2, 0.1));
  CHECK_FALSE(criterion_region_jordan(2, 0.5, 2, 0.01));  // R = +inf side
  CHECK_FALSE(criterion_region_jordan(2, 0.2, 2, 0.2));

  // R(2, s) = (1/2 + sqrt(s(1-s)))/(1/2 - sqrt(s(1-s))).
  const double s = 0.08;
  const double x = std::sqrt(s * (1 - s));
  CHECK(big_R({2, s}) == doctest::Approx((0.5 + x) / (0.5 - x)).epsilon(1e-12));
  CHECK(std::isinf(big_R({2, 0.6})));

  for (int k : {2, 3, 5}) {
    const double closed = jordan_boundary_symmetric(k);
    const double flip = region_flip(
        [k](double s) { return criterion_region_jordan(k, s, k, s); }, 1e-12,
        1.0 / k, 1e-12);
    CHECK(std::abs(closed - flip) <= 1e-9);
  }
  CHECK(jordan_boundary_symmetric(2) ==
        doctest::Approx((2.0 - std::sqrt(2.0)) / 4.0).epsilon(1e-12));
}

TEST_CASE("dichotomic boundaries") {
  // The noise curve matches its closed corollary form.
  for (double s : {0.05, 0.15, 0.3, 0.45}) {
    const double closed = noise_boundary_dichotomic(s);
    const double flip = region_flip(
        [s](double t) { return criterion_region_noise(2, s, 2, t); }, 1e-12,
        0.5, 1e-12);
    CHECK(std::abs(closed - flip) <= 1e-9);
  }
  // The Jordan curve dominates the noise curve pointwise.
  for (double s = 0.005; s < 0.5; s += 0.005) {
    CHECK(jordan_boundary_dichotomic(s) >= noise_boundary_dichotomic(s) - 1e-12);
  }
  // The published quarter-rule curve does NOT match the predicate-level one
  // (flip at sqrt(s(1-s)) = 1/8 vs sqrt(2)/4 on the diagonal); both exist so
  // the discrepancy can be reported.
  const double diag_quarter = region_flip(
      [](double s) {
        return std::sqrt(s * (1 - s)) + std::sqrt(s * (1 - s)) < 0.25;
      },
      1e-12, 0.5, 1e-12);
  const double diag_thm = jordan_boundary_symmetric(2);
  CHECK(diag_quarter < diag_thm);  // strictly smaller region
}

TEST_CASE("jordan region contains noise region on a grid") {
  for (int k = 2; k <= 6; ++k) {
    for (double s = 0.002; s < 1.0 / k; s += 0.002) {
      if (criterion_region_noise(k, s, k, s)) {
        CHECK(criterion_region_jordan(k, s, k, s));
      }
    }
  }
}

TEST_CASE("cloning region is weaker than noise content") {
  // Asymptotic cloning needs φ-(s, k) > 1/(2k) on both sides; summing gives
  // the noise-content gate, so the containment holds pointwise.
  for (int k : {2, 3, 5}) {
    for (double s = 0.002; s < 1.0 / k; s += 0.002) {
      const bool cloning = limit_min_eigenvalue({k, s}) > 1.0 / (2.0 * k);
      if (cloning) CHECK(criterion_region_noise(k, s, k, s));
    }
  }
}

TEST_CASE("bivalued t-norm") {
  CHECK(bivalued_t_norm(0.6, 3, 5) == doctest::Approx(1.0));  // t + u >= 1
  CHECK(bivalued_t_norm(0.3, 2, 4) ==
        doctest::Approx(0.5 + 2.0 * std::sqrt(0.0525)).epsilon(1e-12));
  CHECK(bivalued_t_norm(0.3, 0, 4) == doctest::Approx(0.0));
  CHECK(bivalued_t_norm(0.3, 4, 4) == doctest::Approx(1.0));
  // Value lies in [u, 1].
  for (int j = 1; j <= 4; ++j) {
    const double v = bivalued_t_norm(0.2, j, 4);
    CHECK(v >= j / 4.0 - 1e-12);
    CHECK(v <= 1.0 + 1e-12);
  }
}

TEST_CASE("k2 range halfwidth") {
  CHECK(k2_range_halfwidth(0.09) == doctest::Approx(0.2862).epsilon(1e-3));
  CHECK(k2_range_halfwidth(0.7) == doctest::Approx(0.5));
  CHECK(k2_range_halfwidth(0.5) == doctest::Approx(0.5));
}
