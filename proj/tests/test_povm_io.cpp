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

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "povmrand/povm_io.hpp"
#include "povmrand/random.hpp"
#include "povmrand/sampling.hpp"

using namespace povmrand;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("povmrand_test_" + std::to_string(std::rand()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("write then read reproduces the entries bit for bit") {
  TempDir tmp;
  RandomStream stream(59);
  const Povm p = sample_povm(HaarParams{5, 3, 4}, stream);
  const auto file = tmp.path / "draw.json";
  write_povm(p, file);
  const Povm q = read_povm(file);
  REQUIRE(q.dim() == p.dim());
  REQUIRE(q.outcomes() == p.outcomes());
  for (int i = 0; i < p.outcomes(); ++i) {
    // HermitianMatrix symmetrizes on both sides, so bitwise equality of the
    // stored matrices follows from a round-trippable decimal encoding.
    CHECK((q.effect(i).matrix().array() == p.effect(i).matrix().array()).all());
  }
}

TEST_CASE("k = 0 is a parse error") {
  TempDir tmp;
  const auto file = tmp.path / "bad.json";
  std::ofstream(file) << R"({"d": 2, "k": 0, "effects": []})";
  CHECK_THROWS_AS(read_povm(file), std::runtime_error);
}

TEST_CASE("malformed JSON is reported") {
  TempDir tmp;
  const auto file = tmp.path / "mangled.json";
  std::ofstream(file) << "{ not json";
  CHECK_THROWS_WITH_AS(read_povm(file),
                       doctest::Contains("malformed"), std::runtime_error);
}

TEST_CASE("non-normalized effects fail validation with a defect magnitude") {
  TempDir tmp;
  nlohmann::json j;
  j["d"] = 2;
  j["k"] = 2;
  // Two copies of 0.6 I: the sum is 1.2 I, defect 0.2.
  nlohmann::json half = {{{0.6, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {0.6, 0.0}}};
  j["effects"] = {half, half};
  const auto file = tmp.path / "denorm.json";
  std::ofstream(file) << j.dump();
  CHECK_THROWS_WITH_AS(read_povm(file), doctest::Contains("0.2"),
                       std::runtime_error);
}

TEST_CASE("effects violating PSD bounds are rejected on read") {
  TempDir tmp;
  nlohmann::json j;
  j["d"] = 1;
  j["k"] = 2;
  j["effects"] = {{{{1.5, 0.0}}}, {{{-0.5, 0.0}}}};
  const auto file = tmp.path / "nonpsd.json";
  std::ofstream(file) << j.dump();
  CHECK_THROWS_WITH_AS(read_povm(file), doctest::Contains("invariant"),
                       std::runtime_error);
}

TEST_CASE("joint POVM serialization carries the grid shape") {
  std::vector<Effect> effects;
  for (int i = 0; i < 4; ++i) {
    effects.emplace_back(HermitianMatrix::trusted(
        0.25 * ComplexMatrix::Identity(2, 2)));
  }
  const JointPovm g(2, 2, std::move(effects));
  const nlohmann::json j = joint_povm_to_json(g);
  CHECK(j.at("d") == 2);
  CHECK(j.at("k") == 2);
  CHECK(j.at("l") == 2);
  CHECK(j.at("effects").size() == 4);
}
