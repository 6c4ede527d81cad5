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

#ifndef POVMRAND_EXPERIMENTS_HPP
#define POVMRAND_EXPERIMENTS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "povmrand/povm.hpp"
#include "povmrand/random.hpp"
#include "povmrand/sampling.hpp"

namespace povmrand {

/// Round-trippable decimal representation of a double (shortest %.17g form
/// that parses back to the same bits).
std::string format_double(double x);

/// Single-sample eigenvalue histogram of M_1 against the limiting law.
struct SpectrumComparison {
  int d, k, n;
  std::vector<double> bin_centers;        // 50 uniform bins on [0, 1]
  std::vector<double> empirical_density;  // normalized so total mass is 1
  double atom0_empirical = 0.0, atom0_theory = 0.0;
  double atom1_empirical = 0.0, atom1_theory = 0.0;
  std::vector<double> curve_x;        // theory curve abscissae
  std::vector<double> curve_density;  // limiting density
  double ks = 0.0;                    // empirical CDF vs limiting CDF
};

/// One Haar draw at (d, k; n), eigenvalues of M_1 binned against the
/// limiting measure; eigenvalues within 1e-6 of 0 or 1 count as atom mass.
SpectrumComparison run_fig5(int d, int k, int n, std::uint64_t seed,
                            const std::optional<std::filesystem::path>& out);

struct CommutatorCell {
  int k;
  double s;
  int n, d, pairs;
  double mean;  // average of 4 ||[A_1, B_1]||^2
  double sem;
};

/// Monte Carlo averages of 4||[A_1, B_1]||^2 over independent Haar-POVM
/// pairs at d = floor(s k n), one row per (k, s) cell.
std::vector<CommutatorCell> run_table1(
    const std::vector<int>& ks, const std::vector<double>& ss, int n,
    int pairs, std::uint64_t seed,
    const std::optional<std::filesystem::path>& out);

double table1_cell(int k, double s, int n, int pairs, std::uint64_t seed,
                   std::uint64_t stream_offset = 0);

/// ||[A, B]|| for A = VA^† VA, B = VB^† VB without forming the d x d
/// effects: Lanczos on the commutator with factor-level matvecs.
double commutator_operator_norm(const ComplexMatrix& va,
                                const ComplexMatrix& vb, RandomStream& stream);

/// Limiting unsharpness curve s -> σ(k, s) on a uniform grid over [0, 1],
/// with the reference levels 4(1/k - 1/k^2) and 1.
std::vector<std::pair<double, double>> run_fig6(
    int k, int grid_points, const std::optional<std::filesystem::path>& out);

enum class BoundaryMode { kSymmetric, kDichotomic };

struct BoundaryRow {
  double abscissa;   // k (symmetric mode) or s (dichotomic mode)
  double noise;      // noise-content boundary ordinate
  double jordan;     // Jordan boundary ordinate (theorem-level predicate)
  double jordan_corollary_form;  // dichotomic mode only: the published
                                 // quarter-rule curve, kept for comparison
};

/// Criterion-region boundary curves, located by bisection on the
/// theorem-level predicates. Symmetric mode: abscissa k = 2..grid+1,
/// boundary in s = t. Dichotomic mode: k = l = 2, abscissa s on (0, 1/2).
std::vector<BoundaryRow> run_fig7(
    BoundaryMode mode, int grid_points,
    const std::optional<std::filesystem::path>& out);

struct ProbRangeResult {
  std::vector<Eigen::VectorXd> sampled_points;
  std::vector<Eigen::VectorXd> vertices;  // diagonal POVMs only
  std::optional<double> radius;           // 3-outcome qubit POVMs only
};

/// Probability-range data: prob_point over Haar pure states, polytope
/// vertices when the POVM is diagonal, max distance from the equiprobability
/// vector when (k, d) = (3, 2). Writes points.csv and vertices.csv.
ProbRangeResult run_probrange(const Povm& p, int states, std::uint64_t seed,
                              const std::optional<std::filesystem::path>& out_dir);

struct MomentRow {
  std::string statistic;
  double exact;
  std::optional<double> mc_mean;
  std::optional<double> mc_sem;
};

/// Exact moments E Tr M_1^p for p = 1..pmax and the covariance E Tr M_1 M_2,
/// with optional Monte Carlo cross-checks over `trials` Haar draws.
std::vector<MomentRow> run_moments(int d, int k, int n, int pmax, int trials,
                                   std::uint64_t seed,
                                   const std::optional<std::filesystem::path>& out,
                                   unsigned threads = 0);

/// Deterministic Monte Carlo samples of Tr M_1^p (per-trial streams).
std::vector<double> sample_trace_powers(int d, int k, int n, int p, int trials,
                                        std::uint64_t seed, unsigned threads = 0);

/// λ_min(M_1) samples from a Haar or Wishart ensemble (per-trial streams).
std::vector<double> sample_min_eigenvalues(const HaarParams& params,
                                           int trials, std::uint64_t seed,
                                           unsigned threads = 0);
std::vector<double> sample_min_eigenvalues(const WishartParams& params,
                                           int trials, std::uint64_t seed,
                                           unsigned threads = 0);

/// Metadata line "# povmrand <version> <name> <params> seed=<seed>" written
/// to stdout by the CLI and prepended nowhere (CSV files stay RFC-4180).
std::string experiment_header(const std::string& name,
                              const std::string& params, std::uint64_t seed);

}  // namespace povmrand

#endif  // POVMRAND_EXPERIMENTS_HPP
