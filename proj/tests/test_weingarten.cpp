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
#include <map>
#include <stdexcept>

#include "povmrand/weingarten.hpp"

using namespace povmrand;

TEST_CASE("permutation cycle statistics") {
  const Permutation id = Permutation::identity(5);
  CHECK(id.cycle_count() == 5);
  CHECK(id.length() == 0);
  CHECK(moebius(id) == 1);

  const Permutation swap2(std::vector<int>{1, 0});
  CHECK(swap2.cycle_count() == 1);
  CHECK(swap2.length() == 1);
  CHECK(moebius(swap2) == -1);

  const Permutation cycle3(std::vector<int>{1, 2, 0});
  CHECK(cycle3.cycle_count() == 1);
  CHECK(cycle3.length() == 2);
  // (-1)^2 Cat_2 = 2.
  CHECK(moebius(cycle3) == 2);

  // #σ + |σ| = p for every permutation of S_4.
  for (const Permutation& sigma : Permutation::all(4)) {
    CHECK(sigma.cycle_count() + sigma.length() == 4);
  }

  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0}), std::invalid_argument);
}

TEST_CASE("reverse full cycle") {
  const Permutation gamma = Permutation::reverse_full_cycle(4);
  CHECK(gamma.cycle_count() == 1);
  // 1-based: 1 -> 4, j -> j-1.
  CHECK(gamma.image(0) == 3);
  CHECK(gamma.image(3) == 2);
}

TEST_CASE("catalan numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(1) == 1);
  CHECK(catalan(2) == 2);
  CHECK(catalan(3) == 5);
  CHECK(catalan(4) == 14);
  CHECK(catalan(6) == 132);
}

TEST_CASE("weingarten closed forms") {
  const WgTable t1 = WgTable::build(7, 1);
  CHECK(t1.at_type({1}) == doctest::Approx(1.0 / 7.0).epsilon(1e-12));

  const int N = 6;
  const WgTable t2 = WgTable::build(N, 2);
  CHECK(t2.at_type({1, 1}) ==
        doctest::Approx(1.0 / (N * N - 1.0)).epsilon(1e-12));
  CHECK(t2.at_type({2}) ==
        doctest::Approx(-1.0 / (N * (N * N - 1.0))).epsilon(1e-12));

  for (int NN : {5, 10}) {
    const WgTable t3 = WgTable::build(NN, 3);
    const double expected =
        -1.0 / ((static_cast<double>(NN) * NN - 1.0) *
                (static_cast<double>(NN) * NN - 4.0));
    CHECK(t3.at_type({2, 1}) == doctest::Approx(expected).epsilon(1e-12));
  }

  CHECK_THROWS_AS(WgTable::build(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(WgTable::build(30, 8), std::invalid_argument);
}

TEST_CASE("weingarten convolution identity") {
  for (int N : {4, 7}) {
    for (int p : {2, 3, 4}) {
      const WgTable wg = WgTable::build(N, p);
      const std::vector<Permutation> group = Permutation::all(p);
      for (const Permutation& sigma : group) {
        for (const Permutation& pi : group) {
          double sum = 0.0;
          for (const Permutation& tau : group) {
            sum += wg(sigma.inverse().after(tau)) *
                   std::pow(static_cast<double>(N),
                            tau.inverse().after(pi).cycle_count());
          }
          const double expected =
              sigma.images() == pi.images() ? 1.0 : 0.0;
          CHECK(std::abs(sum - expected) <= 1e-9);
        }
      }
    }
  }
}

TEST_CASE("weingarten is a class function") {
  const WgTable wg = WgTable::build(6, 5);
  std::map<std::vector<int>, double> seen;
  for (const Permutation& sigma : Permutation::all(5)) {
    const auto type = sigma.cycle_type();
    const double value = wg(sigma);
    auto [it, inserted] = seen.emplace(type, value);
    if (!inserted) CHECK(it->second == value);
  }
}

TEST_CASE("asymptotic weingarten") {
  const Permutation id3 = Permutation::identity(3);
  CHECK(wg_asymptotic(10, id3) == doctest::Approx(1e-3).epsilon(1e-12));

  std::vector<int> im{1, 0, 2};
  const Permutation transposition(im);
  CHECK(wg_asymptotic(100, transposition) ==
        doctest::Approx(-1e-8).epsilon(1e-12));

  // Ratio exact/asymptotic approaches 1 at rate N^{-2}: the defect at
  // N = 100 is about 4x smaller than at N = 50.
  const double defect50 =
      std::abs(WgTable::build(50, 3).at_type({2, 1}) /
                   wg_asymptotic(50, transposition) -
               1.0);
  const double defect100 =
      std::abs(WgTable::build(100, 3).at_type({2, 1}) /
                   wg_asymptotic(100, transposition) -
               1.0);
  CHECK(defect100 <= 0.3 * defect50);
}

TEST_CASE("first moments against closed forms") {
  // p = 1: d/k exactly.
  CHECK(moment_exact(3, 2, 5, 1) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(moment_exact(7, 3, 4, 1) == doctest::Approx(7.0 / 3.0).epsilon(1e-14));

  // p = 2 closed form at (2, 2, 2): 11/15.
  CHECK(moment_exact(2, 2, 2, 2) ==
        doctest::Approx(11.0 / 15.0).epsilon(1e-12));

  // d = kn makes the effects projections: E Tr M_1^2 = E Tr M_1 = 1.
  CHECK(moment_exact(2, 2, 1, 2) == doctest::Approx(1.0).epsilon(1e-12));

  // Covariance: orthogonal projections at d = kn, and 4/15 at (2, 2, 2).
  CHECK(covariance_exact(2, 2, 1) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(covariance_exact(2, 2, 2) ==
        doctest::Approx(4.0 / 15.0).epsilon(1e-12));
}

TEST_CASE("covariance scaling limit (1-t)/k^2") {
  // At d = t k n with large n, covariance/d approaches (1-t)/k^2.
  const int k = 2, n = 600;
  const double t = 0.5;
  const int d = static_cast<int>(t * k * n);
  const double value = covariance_exact(d, k, n) / d;
  CHECK(value == doctest::Approx((1.0 - t) / (k * k)).epsilon(5e-3));
}

TEST_CASE("moment_exact rejects unsupported regimes") {
  CHECK_THROWS_AS(moment_exact(2, 1, 2, 3), std::invalid_argument);  // kn < p
  CHECK_THROWS_AS(moment_exact(2, 2, 2, 8), std::invalid_argument);  // p > 7
}
