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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "povmrand/asymptotics.hpp"
#include "povmrand/experiments.hpp"
#include "povmrand/standard_povms.hpp"
#include "povmrand/stats.hpp"

using namespace povmrand;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("povmrand_exp_" + std::to_string(std::rand()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("format_double round-trips") {
  for (double x : {1.0 / 3.0, 0.1, 1e-300, -2.5e17, 0.0}) {
    const std::string s = format_double(x);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
  }
}

TEST_CASE("commutator_operator_norm matches the dense norm") {
  RandomStream stream(301);
  for (int rep = 0; rep < 5; ++rep) {
    const ComplexMatrix va = haar_effect_factor(12, 2, 6, stream);
    const ComplexMatrix vb = haar_effect_factor(12, 2, 6, stream);
    const ComplexMatrix a = va.adjoint() * va;
    const ComplexMatrix b = vb.adjoint() * vb;
    const double dense = operator_norm(a * b - b * a);
    RandomStream probe(302, rep);
    const double lanczos = commutator_operator_norm(va, vb, probe);
    CHECK(lanczos == doctest::Approx(dense).epsilon(1e-7));
  }
  // Commuting factors: zero commutator.
  RandomStream probe(303);
  const ComplexMatrix v = haar_effect_factor(8, 2, 4, stream);
  CHECK(commutator_operator_norm(v, v, probe) <= 1e-10);
}

TEST_CASE("fig5 output shape and determinism") {
  TempDir tmp;
  const auto csv = tmp.path / "fig5.csv";
  const SpectrumComparison r1 = run_fig5(40, 2, 40, 9, csv);
  CHECK(r1.bin_centers.size() == 50);
  CHECK(r1.ks < 0.3);  // d = 40 is small; just a sanity band
  const std::string first = read_file(csv);
  run_fig5(40, 2, 40, 9, csv);
  CHECK(read_file(csv) == first);  // byte-identical rerun
  // Hist mass + atom mass accounts for every eigenvalue.
  double mass = r1.atom0_empirical + r1.atom1_empirical;
  for (double rho : r1.empirical_density) mass += rho * (1.0 / 50.0);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("fig6 curve hits the reference levels") {
  const auto curve = run_fig6(5, 200, std::nullopt);
  double min_interior = 2.0;
  for (const auto& [s, sigma] : curve) {
    if (s < 1.0) min_interior = std::min(min_interior, sigma);
  }
  CHECK(min_interior == doctest::Approx(4.0 * (0.2 - 0.04)).epsilon(1e-9));
  // Plateau at 1 on [s0, 1-s0] and symmetry on the interior grid.
  const double s0 = 0.5 - std::sqrt(4.0) / 5.0;
  for (const auto& [s, sigma] : curve) {
    if (s >= s0 && s <= 1.0 - s0) CHECK(sigma == doctest::Approx(1.0));
  }
  const std::size_t m = curve.size();
  for (std::size_t i = 1; i + 1 < m; ++i) {
    const auto& [s, sigma] = curve[i];
    const auto& [s_mirror, sigma_mirror] = curve[m - 1 - i];
    CHECK(s_mirror == doctest::Approx(1.0 - s));
    CHECK(sigma == doctest::Approx(sigma_mirror).epsilon(1e-10));
  }
}

TEST_CASE("fig7 boundary curves") {
  const auto sym = run_fig7(BoundaryMode::kSymmetric, 5, std::nullopt);
  REQUIRE(sym.size() == 5);
  CHECK(sym[0].abscissa == doctest::Approx(2.0));
  CHECK(sym[0].noise == doctest::Approx(noise_boundary_symmetric(2)).epsilon(1e-8));
  CHECK(sym[0].jordan ==
        doctest::Approx(jordan_boundary_symmetric(2)).epsilon(1e-8));
  for (const BoundaryRow& row : sym) CHECK(row.jordan >= row.noise);

  const auto dich = run_fig7(BoundaryMode::kDichotomic, 40, std::nullopt);
  for (const BoundaryRow& row : dich) {
    CHECK(row.jordan >= row.noise - 1e-12);
    CHECK(row.noise ==
          doctest::Approx(noise_boundary_dichotomic(row.abscissa)).epsilon(1e-8));
  }
}

TEST_CASE("moments harness cross-checks exact against Monte Carlo") {
  const auto rows = run_moments(4, 2, 4, 3, 400, 31, std::nullopt, 2);
  for (const MomentRow& row : rows) {
    if (!row.mc_mean) continue;
    CHECK(std::abs(*row.mc_mean - row.exact) <= 4.0 * *row.mc_sem);
  }
}

TEST_CASE("trace power sampler is worker-count independent") {
  const auto one = sample_trace_powers(4, 2, 3, 2, 50, 77, 1);
  const auto two = sample_trace_powers(4, 2, 3, 2, 50, 77, 2);
  REQUIRE(one.size() == two.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i] == two[i]);  // bitwise: per-trial streams
  }
}

TEST_CASE("probrange harness writes csv files") {
  TempDir tmp;
  const ProbRangeResult r =
      run_probrange(hexagon_diagonal_povm(), 50, 3, tmp.path);
  CHECK(r.vertices.size() == 6);
  CHECK(std::filesystem::exists(tmp.path / "points.csv"));
  CHECK(std::filesystem::exists(tmp.path / "vertices.csv"));
  const std::string points = read_file(tmp.path / "points.csv");
  CHECK(points.rfind("q1,q2,q3\n", 0) == 0);  // header row
}

TEST_CASE("table1 smoke cell is deterministic") {
  const double a = table1_cell(2, 0.5, 20, 2, 5);
  const double b = table1_cell(2, 0.5, 20, 2, 5);
  CHECK(a == b);
  CHECK(a > 0.0);
  CHECK(a < 4.0);
}
