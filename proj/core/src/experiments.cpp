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

#include "povmrand/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "povmrand/asymptotics.hpp"
#include "povmrand/probrange.hpp"
#include "povmrand/sampling.hpp"
#include "povmrand/stats.hpp"
#include "povmrand/version.hpp"
#include "povmrand/weingarten.hpp"

namespace povmrand {

namespace {

constexpr double kAtomSnapTol = 1e-6;

std::ofstream open_csv(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open output file " + path.string());
  }
  return out;
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  // Shortest representation that round-trips to the same binary64 value.
  for (int precision = 15; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

std::string experiment_header(const std::string& name,
                              const std::string& params, std::uint64_t seed) {
  std::ostringstream os;
  os << "# povmrand " << kVersion << " " << name << " " << params
     << " seed=" << seed;
  return os.str();
}

SpectrumComparison run_fig5(int d, int k, int n, std::uint64_t seed,
                            const std::optional<std::filesystem::path>& out) {
  SpectrumComparison result;
  result.d = d;
  result.k = k;
  result.n = n;

  RandomStream stream(seed, 0);
  const Povm povm = sample_povm(HaarParams{d, k, n}, stream);
  Spectrum spec = eig_hermitian(povm.effect(0).hermitian(), false);

  // Eigenvalues within kAtomSnapTol of 0 or 1 count as atom mass; the
  // limiting measure mixes atoms with a continuous density.
  std::vector<double> eigs;
  eigs.reserve(d);
  int atom0 = 0, atom1 = 0;
  for (int i = 0; i < d; ++i) {
    double lambda = spec.eigenvalues(i);
    if (std::abs(lambda) <= kAtomSnapTol) {
      lambda = 0.0;
      ++atom0;
    } else if (std::abs(lambda - 1.0) <= kAtomSnapTol) {
      lambda = 1.0;
      ++atom1;
    }
    eigs.push_back(lambda);
  }

  const ScalingParams scaling{k, static_cast<double>(d) / (k * n)};
  const SpectralMeasure limit = limit_effect_measure(scaling);
  for (const Atom& a : limit.atoms()) {
    (a.location < 0.5 ? result.atom0_theory : result.atom1_theory) = a.weight;
  }
  result.atom0_empirical = static_cast<double>(atom0) / d;
  result.atom1_empirical = static_cast<double>(atom1) / d;

  constexpr int kBins = 50;
  const double bin_width = 1.0 / kBins;
  std::vector<int> counts(kBins, 0);
  for (double lambda : eigs) {
    if (lambda == 0.0 || lambda == 1.0) continue;  // atom mass
    int bin = static_cast<int>(std::floor(lambda / bin_width));
    bin = std::clamp(bin, 0, kBins - 1);
    ++counts[bin];
  }
  for (int b = 0; b < kBins; ++b) {
    result.bin_centers.push_back((b + 0.5) * bin_width);
    result.empirical_density.push_back(counts[b] / (d * bin_width));
  }

  if (limit.has_continuous_part()) {
    constexpr int kCurvePoints = 400;
    const double lo = limit.support_lo(), hi = limit.support_hi();
    for (int i = 0; i <= kCurvePoints; ++i) {
      const double x = lo + (hi - lo) * i / kCurvePoints;
      result.curve_x.push_back(x);
      result.curve_density.push_back(limit.density(x));
    }
  }

  result.ks = ks_distance(
      eigs, [&limit](double x) { return measure_cdf(limit, x); });

  if (out) {
    std::ofstream file = open_csv(*out);
    file << "kind,bin_center,empirical_density,x,limit_density\n";
    file << "atom0," << format_double(0.0) << ","
         << format_double(result.atom0_empirical) << "," << format_double(0.0)
         << "," << format_double(result.atom0_theory) << "\n";
    file << "atom1," << format_double(1.0) << ","
         << format_double(result.atom1_empirical) << "," << format_double(1.0)
         << "," << format_double(result.atom1_theory) << "\n";
    for (std::size_t i = 0; i < result.bin_centers.size(); ++i) {
      file << "bin," << format_double(result.bin_centers[i]) << ","
           << format_double(result.empirical_density[i]) << ",,\n";
    }
    for (std::size_t i = 0; i < result.curve_x.size(); ++i) {
      file << "curve,,," << format_double(result.curve_x[i]) << ","
           << format_double(result.curve_density[i]) << "\n";
    }
  }
  return result;
}

double commutator_operator_norm(const ComplexMatrix& va,
                                const ComplexMatrix& vb,
                                RandomStream& stream) {
  const int d = static_cast<int>(va.cols());
  if (vb.cols() != d) {
    throw std::invalid_argument("commutator_operator_norm: dimension mismatch");
  }
  // C = i[A, B] is Hermitian; extreme eigenvalues via Lanczos with full
  // reorthogonalization, applying A and B through their factors.
  auto apply_c = [&](const ComplexVector& x) -> ComplexVector {
    const ComplexVector ax = va.adjoint() * (va * x);
    const ComplexVector bx = vb.adjoint() * (vb * x);
    const ComplexVector abx = va.adjoint() * (va * bx);
    const ComplexVector bax = vb.adjoint() * (vb * ax);
    return Complex(0.0, 1.0) * (abx - bax);
  };

  ComplexVector v(d);
  for (int i = 0; i < d; ++i) v(i) = stream.complex_gaussian();
  v.normalize();

  const int max_steps = std::min(d, 220);
  std::vector<ComplexVector> basis;
  basis.reserve(max_steps);
  std::vector<double> alpha, beta;  // T diagonal and off-diagonal
  basis.push_back(v);
  double extreme = 0.0, prev_extreme = -1.0;
  for (int j = 0; j < max_steps; ++j) {
    ComplexVector w = apply_c(basis[j]);
    if (j > 0) w -= beta[j - 1] * basis[j - 1];
    const double a = std::real(basis[j].dot(w));
    alpha.push_back(a);
    w -= a * basis[j];
    for (const ComplexVector& u : basis) w -= u.dot(w) * u;
    const double b = w.norm();

    if ((j + 1) % 10 == 0 || b < 1e-13 || j + 1 == max_steps) {
      const int m = static_cast<int>(alpha.size());
      Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m, m);
      for (int i = 0; i < m; ++i) {
        tri(i, i) = alpha[i];
        if (i + 1 < m) tri(i, i + 1) = tri(i + 1, i) = beta[i];
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tri,
                                                        Eigen::EigenvaluesOnly);
      extreme = std::max(std::abs(es.eigenvalues()(0)),
                         std::abs(es.eigenvalues()(m - 1)));
      if (b < 1e-13) break;  // exact invariant subspace
      if (prev_extreme >= 0.0 &&
          std::abs(extreme - prev_extreme) <= 1e-10 * std::max(1e-30, extreme)) {
        break;
      }
      prev_extreme = extreme;
    }
    if (b < 1e-13) break;
    beta.push_back(b);
    basis.push_back(w / b);
  }
  return extreme;
}

double table1_cell(int k, double s, int n, int pairs, std::uint64_t seed,
                   std::uint64_t stream_offset) {
  const int d = static_cast<int>(std::floor(s * k * n));
  RunningStats stats;
  for (int pair = 0; pair < pairs; ++pair) {
    RandomStream sa(seed, stream_offset + 2 * pair);
    RandomStream sb(seed, stream_offset + 2 * pair + 1);
    const ComplexMatrix va = haar_effect_factor(d, k, n, sa);
    const ComplexMatrix vb = haar_effect_factor(d, k, n, sb);
    const double norm = commutator_operator_norm(va, vb, sa);
    stats.push(4.0 * norm * norm);
  }
  return stats.mean();
}

std::vector<CommutatorCell> run_table1(
    const std::vector<int>& ks, const std::vector<double>& ss, int n,
    int pairs, std::uint64_t seed,
    const std::optional<std::filesystem::path>& out) {
  std::vector<CommutatorCell> cells;
  std::uint64_t offset = 0;
  for (int k : ks) {
    for (double s : ss) {
      const int d = static_cast<int>(std::floor(s * k * n));
      CommutatorCell cell{k, s, n, d, pairs, 0.0, 0.0};
      RunningStats stats;
      for (int pair = 0; pair < pairs; ++pair) {
        RandomStream sa(seed, offset + 2 * pair);
        RandomStream sb(seed, offset + 2 * pair + 1);
        const ComplexMatrix va = haar_effect_factor(d, k, n, sa);
        const ComplexMatrix vb = haar_effect_factor(d, k, n, sb);
        const double norm = commutator_operator_norm(va, vb, sa);
        stats.push(4.0 * norm * norm);
      }
      cell.mean = stats.mean();
      cell.sem = stats.sem();
      cells.push_back(cell);
      offset += 2ull * pairs;
    }
  }
  if (out) {
    std::ofstream file = open_csv(*out);
    file << "k,s,n,d,pairs,mean_comm_sq,sem\n";
    for (const CommutatorCell& c : cells) {
      file << c.k << "," << format_double(c.s) << "," << c.n << "," << c.d
           << "," << c.pairs << "," << format_double(c.mean) << ","
           << format_double(c.sem) << "\n";
    }
  }
  return cells;
}

std::vector<std::pair<double, double>> run_fig6(
    int k, int grid_points, const std::optional<std::filesystem::path>& out) {
  if (grid_points < 2) {
    throw std::invalid_argument("run_fig6: need at least 2 grid points");
  }
  std::vector<std::pair<double, double>> curve;
  curve.reserve(grid_points + 1);
  for (int i = 0; i <= grid_points; ++i) {
    const double s = static_cast<double>(i) / grid_points;
    // σ(k, ·) is defined on (0, 1]; extend continuously to s = 0.
    const double value = limit_unsharpness({k, s == 0.0 ? 1e-15 : s});
    curve.emplace_back(s, value);
  }
  if (out) {
    const double ref_min = 4.0 * (1.0 / k - 1.0 / (static_cast<double>(k) * k));
    std::ofstream file = open_csv(*out);
    file << "s,sigma,ref_min,ref_max\n";
    for (const auto& [s, sigma] : curve) {
      file << format_double(s) << "," << format_double(sigma) << ","
           << format_double(ref_min) << ",1\n";
    }
  }
  return curve;
}

std::vector<BoundaryRow> run_fig7(
    BoundaryMode mode, int grid_points,
    const std::optional<std::filesystem::path>& out) {
  std::vector<BoundaryRow> rows;
  if (mode == BoundaryMode::kSymmetric) {
    for (int k = 2; k < 2 + grid_points; ++k) {
      BoundaryRow row{};
      row.abscissa = k;
      row.noise = region_flip(
          [k](double s) { return criterion_region_noise(k, s, k, s); }, 1e-12,
          1.0 / k, 1e-12);
      row.jordan = region_flip(
          [k](double s) { return criterion_region_jordan(k, s, k, s); }, 1e-12,
          1.0 / k, 1e-12);
      row.jordan_corollary_form = row.jordan;
      rows.push_back(row);
    }
  } else {
    for (int i = 1; i < grid_points; ++i) {
      const double s = 0.5 * i / grid_points;
      BoundaryRow row{};
      row.abscissa = s;
      row.noise = region_flip(
          [s](double t) { return criterion_region_noise(2, s, 2, t); }, 1e-12,
          0.5, 1e-12);
      row.jordan = region_flip(
          [s](double t) { return criterion_region_jordan(2, s, 2, t); }, 1e-12,
          0.5, 1e-12);
      row.jordan_corollary_form = jordan_boundary_dichotomic_quarter_rule(s);
      rows.push_back(row);
    }
  }
  if (out) {
    std::ofstream file = open_csv(*out);
    if (mode == BoundaryMode::kSymmetric) {
      file << "k,noise_s,jordan_s\n";
      for (const BoundaryRow& r : rows) {
        file << static_cast<int>(r.abscissa) << "," << format_double(r.noise)
             << "," << format_double(r.jordan) << "\n";
      }
    } else {
      file << "s,noise_t,jordan_t,jordan_t_corollary_form\n";
      for (const BoundaryRow& r : rows) {
        file << format_double(r.abscissa) << "," << format_double(r.noise)
             << "," << format_double(r.jordan) << ","
             << format_double(r.jordan_corollary_form) << "\n";
      }
    }
  }
  return rows;
}

ProbRangeResult run_probrange(
    const Povm& p, int states, std::uint64_t seed,
    const std::optional<std::filesystem::path>& out_dir) {
  ProbRangeResult result;
  result.sampled_points.reserve(states);
  for (int trial = 0; trial < states; ++trial) {
    RandomStream stream(seed, trial);
    result.sampled_points.push_back(
        prob_point(p, random_pure_state(p.dim(), stream)));
  }
  bool diagonal = true;
  for (const Effect& e : p.effects()) {
    ComplexMatrix off = e.matrix();
    off.diagonal().setZero();
    diagonal = diagonal && off.cwiseAbs().maxCoeff() <= 1e-10;
  }
  if (diagonal) {
    result.vertices = diag_polytope(p).vertices;
  }
  if (p.outcomes() == 3 && p.dim() == 2) {
    const Eigen::VectorXd center = Eigen::VectorXd::Constant(3, 1.0 / 3.0);
    double radius = 0.0;
    for (const auto& q : result.sampled_points) {
      radius = std::max(radius, (q - center).norm());
    }
    result.radius = radius;
  }
  if (out_dir) {
    std::filesystem::create_directories(*out_dir);
    {
      std::ofstream file = open_csv(*out_dir / "points.csv");
      for (int i = 0; i < p.outcomes(); ++i) file << (i ? "," : "") << "q" << (i + 1);
      file << "\n";
      for (const auto& q : result.sampled_points) {
        for (int i = 0; i < q.size(); ++i) {
          file << (i ? "," : "") << format_double(q(i));
        }
        file << "\n";
      }
    }
    if (!result.vertices.empty()) {
      std::ofstream file = open_csv(*out_dir / "vertices.csv");
      for (int i = 0; i < p.outcomes(); ++i) file << (i ? "," : "") << "v" << (i + 1);
      file << "\n";
      for (const auto& v : result.vertices) {
        for (int i = 0; i < v.size(); ++i) {
          file << (i ? "," : "") << format_double(v(i));
        }
        file << "\n";
      }
    }
  }
  return result;
}

std::vector<double> sample_trace_powers(int d, int k, int n, int p, int trials,
                                        std::uint64_t seed, unsigned threads) {
  std::vector<double> values(trials);
  parallel_for(trials, threads, [&](std::size_t trial) {
    RandomStream stream(seed, trial);
    const Povm povm = sample_povm(HaarParams{d, k, n}, stream);
    const ComplexMatrix& m = povm.effect(0).matrix();
    ComplexMatrix power = m;
    for (int q = 1; q < p; ++q) power = power * m;
    values[trial] = power.trace().real();
  });
  return values;
}

std::vector<double> sample_min_eigenvalues(const HaarParams& params,
                                           int trials, std::uint64_t seed,
                                           unsigned threads) {
  std::vector<double> values(trials);
  parallel_for(trials, threads, [&](std::size_t trial) {
    RandomStream stream(seed, trial);
    const Povm povm = sample_povm(params, stream);
    values[trial] = lambda_min(povm.effect(0).hermitian());
  });
  return values;
}

std::vector<double> sample_min_eigenvalues(const WishartParams& params,
                                           int trials, std::uint64_t seed,
                                           unsigned threads) {
  std::vector<double> values(trials);
  parallel_for(trials, threads, [&](std::size_t trial) {
    RandomStream stream(seed, trial);
    const Povm povm = sample_povm(params, stream);
    values[trial] = lambda_min(povm.effect(0).hermitian());
  });
  return values;
}

std::vector<MomentRow> run_moments(
    int d, int k, int n, int pmax, int trials, std::uint64_t seed,
    const std::optional<std::filesystem::path>& out, unsigned threads) {
  std::vector<MomentRow> rows;
  for (int p = 1; p <= pmax; ++p) {
    MomentRow row;
    row.statistic = "tr_m1_pow_" + std::to_string(p);
    row.exact = moment_exact(d, k, n, p);
    if (trials > 0) {
      const std::vector<double> samples =
          sample_trace_powers(d, k, n, p, trials, seed + p, threads);
      RunningStats stats;
      for (double v : samples) stats.push(v);
      row.mc_mean = stats.mean();
      row.mc_sem = stats.sem();
    }
    rows.push_back(std::move(row));
  }
  if (k >= 2) {
    MomentRow row;
    row.statistic = "tr_m1_m2";
    row.exact = covariance_exact(d, k, n);
    rows.push_back(std::move(row));
  }
  if (out) {
    std::ofstream file = open_csv(*out);
    file << "statistic,exact,mc_mean,mc_sem\n";
    for (const MomentRow& r : rows) {
      file << r.statistic << "," << format_double(r.exact) << ",";
      if (r.mc_mean) file << format_double(*r.mc_mean);
      file << ",";
      if (r.mc_sem) file << format_double(*r.mc_sem);
      file << "\n";
    }
  }
  return rows;
}

}  // namespace povmrand
