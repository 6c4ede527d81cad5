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

// Command-line front end:
//   povmrand sample     draw POVMs from the random ensembles
//   povmrand moments    exact moments with optional Monte Carlo cross-check
//   povmrand limit      limiting spectral measure as CSV
//   povmrand criteria   all (in)compatibility checks on a pair of POVM files
//   povmrand probrange  probability-range data for a POVM file
//   povmrand experiment reproduction harness (fig5, table1, fig6, fig7,
//                       fig1, moments)

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "povmrand/asymptotics.hpp"
#include "povmrand/criteria.hpp"
#include "povmrand/experiments.hpp"
#include "povmrand/povm_io.hpp"
#include "povmrand/sampling.hpp"
#include "povmrand/standard_povms.hpp"
#include "povmrand/version.hpp"

namespace {

using namespace povmrand;

struct SampleOptions {
  std::string model = "haar";
  int d = 2, k = 2, n = 1;
  double t = 1.0;
  std::vector<int> s_list;
  int count = 1;
  std::uint64_t seed = 0;
  std::string out = "povm_out";
};

EnsembleParams build_params(const SampleOptions& opt) {
  if (opt.model == "haar") return HaarParams{opt.d, opt.k, opt.n};
  if (opt.model == "wishart") {
    std::vector<int> s = opt.s_list;
    if (s.empty()) s.assign(opt.k, opt.n);
    return WishartParams{opt.d, std::move(s)};
  }
  if (opt.model == "lebesgue") return LebesgueParams{opt.d, opt.k};
  if (opt.model == "basis-mixture") return BasisMixtureParams{opt.d, opt.t};
  throw CLI::ValidationError("--model",
                             "expected haar|wishart|lebesgue|basis-mixture");
}

int cmd_sample(const SampleOptions& opt) {
  const EnsembleParams params = build_params(opt);
  validate_params(params);
  std::ostringstream desc;
  desc << describe(params) << " count=" << opt.count;
  std::cout << experiment_header("sample", desc.str(), opt.seed) << "\n";
  const std::filesystem::path out(opt.out);
  std::filesystem::create_directories(out);
  for (int trial = 0; trial < opt.count; ++trial) {
    RandomStream stream(opt.seed, trial);
    const Povm povm = sample_povm(params, stream);
    std::ostringstream name;
    name << "povm_" << std::setw(4) << std::setfill('0') << trial << ".json";
    write_povm(povm, out / name.str());
  }
  std::cout << "wrote " << opt.count << " file(s) under " << out.string()
            << "\n";
  return 0;
}

int cmd_criteria(const std::string& path_a, const std::string& path_b,
                 const std::string& out_dir) {
  const Povm a = read_povm(path_a);
  const Povm b = read_povm(path_b);
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("criteria: POVMs act on different dimensions");
  }
  const std::vector<CriterionReport> reports = run_all_criteria(a, b);

  nlohmann::json bundle;
  bundle["d"] = a.dim();
  bundle["k"] = a.outcomes();
  bundle["l"] = b.outcomes();
  bundle["reports"] = nlohmann::json::array();
  std::optional<std::filesystem::path> dir;
  if (!out_dir.empty()) {
    dir = std::filesystem::path(out_dir);
    std::filesystem::create_directories(*dir);
  }
  for (const CriterionReport& report : reports) {
    std::optional<std::string> witness_path;
    if (report.witness && dir) {
      const std::string name = "witness_" + report.criterion + ".json";
      write_joint_povm(*report.witness, *dir / name);
      witness_path = name;
    }
    bundle["reports"].push_back(report_to_json(report, witness_path));
  }
  bundle["summary"] = summary_verdict(reports);
  if (dir) {
    std::ofstream file(*dir / "report.json");
    file << bundle.dump(1) << "\n";
  }
  std::cout << bundle.dump(1) << "\n";
  return 0;
}

int cmd_limit(int k, double t, int grid, const std::string& out) {
  const SpectralMeasure mu = limit_effect_measure({k, t});
  std::cout << experiment_header(
                   "limit", "k=" + std::to_string(k) + " t=" + format_double(t),
                   0)
            << "\n";
  std::ofstream file(out);
  if (!file) throw std::runtime_error("cannot open " + out);
  file << "kind,x,value\n";
  for (const Atom& a : mu.atoms()) {
    file << "atom," << format_double(a.location) << ","
         << format_double(a.weight) << "\n";
  }
  if (mu.has_continuous_part()) {
    for (int i = 0; i <= grid; ++i) {
      const double x = mu.support_lo() +
                       (mu.support_hi() - mu.support_lo()) * i / grid;
      file << "density," << format_double(x) << ","
           << format_double(mu.density(x)) << "\n";
    }
  }
  std::cout << "mass=" << format_double(measure_total_mass(mu))
            << " m1=" << format_double(measure_moment(mu, 1))
            << " m2=" << format_double(measure_moment(mu, 2)) << "\n";
  return 0;
}

int cmd_probrange(const std::string& path, int states, std::uint64_t seed,
                  const std::string& out_dir) {
  const Povm p = read_povm(path);
  std::cout << experiment_header("probrange",
                                 "file=" + path + " states=" +
                                     std::to_string(states),
                                 seed)
            << "\n";
  const ProbRangeResult result =
      run_probrange(p, states, seed, std::filesystem::path(out_dir));
  std::cout << "points=" << result.sampled_points.size();
  if (!result.vertices.empty()) {
    std::cout << " vertices=" << result.vertices.size();
  }
  if (result.radius) std::cout << " radius=" << format_double(*result.radius);
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random POVM ensembles, spectral statistics and "
               "(in)compatibility criteria"};
  app.set_version_flag("--version", std::string(povmrand::kVersion));
  app.require_subcommand(1);

  // --- sample ---------------------------------------------------------
  SampleOptions sopt;
  CLI::App* sample = app.add_subcommand("sample", "draw random POVMs");
  sample->add_option("--model", sopt.model,
                     "haar|wishart|lebesgue|basis-mixture");
  sample->add_option("-d", sopt.d, "Hilbert space dimension");
  sample->add_option("-k", sopt.k, "number of outcomes");
  sample->add_option("-n", sopt.n, "environment parameter (haar), s_i (wishart)");
  sample->add_option("-t", sopt.t, "mixing parameter (basis-mixture)");
  sample->add_option("--s-list", sopt.s_list, "wishart parameters s_1..s_k");
  sample->add_option("--count", sopt.count, "number of draws");
  sample->add_option("--seed", sopt.seed, "master seed");
  sample->add_option("--out", sopt.out, "output directory");

  // --- moments --------------------------------------------------------
  int md = 4, mk = 2, mn = 2, mpmax = 3, mtrials = 0, mthreads = 0;
  std::uint64_t mseed = 0;
  std::string mout;
  CLI::App* moments =
      app.add_subcommand("moments", "exact moments of a random effect");
  moments->add_option("-d", md, "dimension");
  moments->add_option("-k", mk, "outcomes");
  moments->add_option("-n", mn, "environment parameter");
  moments->add_option("--pmax", mpmax, "largest moment order (<= 7)");
  moments->add_option("--trials", mtrials, "Monte Carlo cross-check draws");
  moments->add_option("--threads", mthreads, "worker threads (0 = auto)");
  moments->add_option("--seed", mseed, "master seed");
  moments->add_option("--out", mout, "CSV output path");

  // --- limit ----------------------------------------------------------
  int lk = 2, lgrid = 200;
  double lt = 0.5;
  std::string lout = "limit.csv";
  CLI::App* limit =
      app.add_subcommand("limit", "limiting effect measure as CSV");
  limit->add_option("-k", lk, "outcomes");
  limit->add_option("-t", lt, "scaling parameter d/(kn)");
  limit->add_option("--grid", lgrid, "density grid points");
  limit->add_option("--out", lout, "CSV output path");

  // --- criteria -------------------------------------------------------
  std::string ca, cb, cout_dir;
  CLI::App* criteria = app.add_subcommand(
      "criteria", "run all (in)compatibility checks on two POVM files");
  criteria->add_option("povm_a", ca, "first POVM file")->required();
  criteria->add_option("povm_b", cb, "second POVM file")->required();
  criteria->add_option("--out", cout_dir, "directory for report + witnesses");

  // --- probrange ------------------------------------------------------
  std::string ppath, pout = "probrange_out";
  int pstates = 10000;
  std::uint64_t pseed = 0;
  CLI::App* probrange = app.add_subcommand(
      "probrange", "probability-range data for a POVM file");
  probrange->add_option("povm", ppath, "POVM file")->required();
  probrange->add_option("--states", pstates, "sampled pure states");
  probrange->add_option("--seed", pseed, "master seed");
  probrange->add_option("--out", pout, "output directory");

  // --- experiment -----------------------------------------------------
  std::string eid;
  int ed = 200, ek = 2, en = 400, epairs = 10, egrid = 100, estates = 10000;
  std::vector<int> ek_list;
  std::vector<double> es_list;
  std::string emode = "ks", ewhich = "circle", eout;
  std::uint64_t eseed = 0;
  CLI::App* experiment =
      app.add_subcommand("experiment", "reproduction harness");
  experiment->add_option("--id", eid, "fig5|table1|fig6|fig7|fig1|moments")
      ->required();
  experiment->add_option("-d", ed, "dimension (fig5, moments)");
  experiment->add_option("-k", ek, "outcomes (fig5, fig6, moments)");
  experiment->add_option("-n", en, "environment parameter");
  experiment->add_option("--k-list", ek_list, "outcome counts (table1)");
  experiment->add_option("--s-list", es_list, "scaling parameters (table1)");
  experiment->add_option("--pairs", epairs, "POVM pairs per cell (table1)");
  experiment->add_option("--grid", egrid, "grid points (fig6, fig7)");
  experiment->add_option("--mode", emode, "ks|st (fig7)");
  experiment->add_option("--which", ewhich, "circle|hexagon (fig1)");
  experiment->add_option("--states", estates, "pure states (fig1)");
  experiment->add_option("--seed", eseed, "master seed");
  experiment->add_option("--out", eout, "output CSV path or directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sample) return cmd_sample(sopt);
    if (*moments) {
      std::ostringstream desc;
      desc << "d=" << md << " k=" << mk << " n=" << mn << " pmax=" << mpmax
           << " trials=" << mtrials;
      std::cout << experiment_header("moments", desc.str(), mseed) << "\n";
      const auto rows = run_moments(
          md, mk, mn, mpmax, mtrials, mseed,
          mout.empty() ? std::nullopt
                       : std::optional<std::filesystem::path>(mout),
          mthreads);
      for (const MomentRow& row : rows) {
        std::cout << row.statistic << " exact=" << format_double(row.exact);
        if (row.mc_mean) {
          std::cout << " mc=" << format_double(*row.mc_mean) << " sem="
                    << format_double(*row.mc_sem);
        }
        std::cout << "\n";
      }
      return 0;
    }
    if (*limit) return cmd_limit(lk, lt, lgrid, lout);
    if (*criteria) return cmd_criteria(ca, cb, cout_dir);
    if (*probrange) return cmd_probrange(ppath, pstates, pseed, pout);
    if (*experiment) {
      const auto out_path =
          eout.empty() ? std::nullopt
                       : std::optional<std::filesystem::path>(eout);
      if (eid == "fig5") {
        std::ostringstream desc;
        desc << "d=" << ed << " k=" << ek << " n=" << en;
        std::cout << experiment_header("fig5", desc.str(), eseed) << "\n";
        const SpectrumComparison r = run_fig5(ed, ek, en, eseed, out_path);
        std::cout << "ks=" << format_double(r.ks) << "\n";
        return 0;
      }
      if (eid == "table1") {
        if (ek_list.empty()) ek_list = {2, 3, 5};
        if (es_list.empty()) es_list = {0.1, 0.3, 0.5, 0.7, 0.9};
        std::ostringstream desc;
        desc << "n=" << en << " pairs=" << epairs;
        std::cout << experiment_header("table1", desc.str(), eseed) << "\n";
        const auto cells = run_table1(ek_list, es_list, en, epairs, eseed,
                                      out_path);
        for (const CommutatorCell& c : cells) {
          std::cout << "k=" << c.k << " s=" << format_double(c.s)
                    << " mean=" << format_double(c.mean) << "\n";
        }
        return 0;
      }
      if (eid == "fig6") {
        std::cout << experiment_header("fig6", "k=" + std::to_string(ek), 0)
                  << "\n";
        run_fig6(ek, egrid, out_path);
        return 0;
      }
      if (eid == "fig7") {
        std::cout << experiment_header("fig7", "mode=" + emode, 0) << "\n";
        run_fig7(emode == "st" ? BoundaryMode::kDichotomic
                               : BoundaryMode::kSymmetric,
                 egrid, out_path);
        return 0;
      }
      if (eid == "fig1") {
        std::cout << experiment_header("fig1", "which=" + ewhich, eseed)
                  << "\n";
        const Povm p =
            ewhich == "hexagon" ? hexagon_diagonal_povm() : circle_povm();
        const ProbRangeResult r = run_probrange(p, estates, eseed, out_path);
        if (r.radius) std::cout << "radius=" << format_double(*r.radius) << "\n";
        return 0;
      }
      if (eid == "moments") {
        std::ostringstream desc;
        desc << "d=" << ed << " k=" << ek << " n=" << en;
        std::cout << experiment_header("moments", desc.str(), eseed) << "\n";
        run_moments(ed, ek, en, 4, 1000, eseed, out_path);
        return 0;
      }
      throw CLI::ValidationError("--id",
                                 "expected fig5|table1|fig6|fig7|fig1|moments");
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 0;
}
