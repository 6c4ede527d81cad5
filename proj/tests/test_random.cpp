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

#include "povmrand/random.hpp"
#include "povmrand/stats.hpp"

using namespace povmrand;

TEST_CASE("fixed (seed, index) reproduces the same draws") {
  RandomStream a(12345, 3);
  RandomStream b(12345, 3);
  for (int i = 0; i < 100; ++i) {
    CHECK(a.next_u64() == b.next_u64());
  }
  ComplexMatrix ga = ginibre(7, 5, a);
  ComplexMatrix gb = ginibre(7, 5, b);
  CHECK((ga.array() == gb.array()).all());
}

TEST_CASE("distinct stream indices decorrelate") {
  RandomStream a(12345, 0);
  RandomStream b(12345, 1);
  int equal = 0;
  for (int i = 0; i < 64; ++i) {
    equal += a.next_u64() == b.next_u64();
  }
  CHECK(equal == 0);
}

TEST_CASE("complex gaussian moments") {
  RandomStream stream(2024);
  RunningStats re, im, abs2;
  const int trials = 100000;
  for (int i = 0; i < trials; ++i) {
    const Complex g = stream.complex_gaussian();
    re.push(g.real());
    im.push(g.imag());
    abs2.push(std::norm(g));
  }
  // E[g] = 0 within 3 standard errors, E[|g|^2] = 1 within 2%.
  CHECK(std::abs(re.mean()) <= 3.0 * re.sem());
  CHECK(std::abs(im.mean()) <= 3.0 * im.sem());
  CHECK(abs2.mean() == doctest::Approx(1.0).epsilon(0.02));
  // Re and Im each carry variance 1/2.
  CHECK(re.variance() == doctest::Approx(0.5).epsilon(0.05));
  CHECK(im.variance() == doctest::Approx(0.5).epsilon(0.05));
}

TEST_CASE("ginibre validates dimensions") {
  RandomStream stream(1);
  CHECK_THROWS_AS(ginibre(0, 3, stream), std::invalid_argument);
  CHECK_THROWS_AS(ginibre(3, -1, stream), std::invalid_argument);
}
