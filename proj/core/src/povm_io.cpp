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

#include "povmrand/povm_io.hpp"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace povmrand {

namespace {

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) {
      row.push_back({m(i, j).real(), m(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const nlohmann::json& j, int d) {
  if (!j.is_array() || static_cast<int>(j.size()) != d) {
    throw std::runtime_error("povm file: effect is not a d x d matrix");
  }
  ComplexMatrix m(d, d);
  for (int i = 0; i < d; ++i) {
    const auto& row = j.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != d) {
      throw std::runtime_error("povm file: effect row has wrong length");
    }
    for (int k = 0; k < d; ++k) {
      const auto& entry = row.at(k);
      if (!entry.is_array() || entry.size() != 2) {
        throw std::runtime_error("povm file: entry is not a [re, im] pair");
      }
      m(i, k) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
  }
  return m;
}

}  // namespace

nlohmann::json povm_to_json(const Povm& p) {
  nlohmann::json j;
  j["d"] = p.dim();
  j["k"] = p.outcomes();
  nlohmann::json effects = nlohmann::json::array();
  for (const Effect& e : p.effects()) effects.push_back(matrix_to_json(e.matrix()));
  j["effects"] = std::move(effects);
  return j;
}

Povm povm_from_json(const nlohmann::json& j, const PovmTolerances& tol) {
  if (!j.contains("d") || !j.contains("k") || !j.contains("effects")) {
    throw std::runtime_error("povm file: missing d, k or effects");
  }
  const int d = j.at("d").get<int>();
  const int k = j.at("k").get<int>();
  if (d < 1) throw std::runtime_error("povm file: d must be >= 1");
  if (k < 1) throw std::runtime_error("povm file: k must be >= 1");
  const auto& effects_json = j.at("effects");
  if (!effects_json.is_array() || static_cast<int>(effects_json.size()) != k) {
    throw std::runtime_error("povm file: expected k effects");
  }
  std::vector<Effect> effects;
  effects.reserve(k);
  for (int i = 0; i < k; ++i) {
    effects.emplace_back(HermitianMatrix(matrix_from_json(effects_json.at(i), d),
                                         tol.herm_tol));
  }
  Povm p = [&] {
    try {
      return Povm(std::move(effects), tol.norm_tol);
    } catch (const std::invalid_argument& err) {
      throw std::runtime_error(std::string("povm file: ") + err.what());
    }
  }();
  const ValidationReport report = validate(p, tol);
  if (!report.ok()) {
    throw std::runtime_error(
        "povm file: invariant violation (psd defect " +
        std::to_string(report.psd_defect) + ", upper defect " +
        std::to_string(report.upper_defect) + ", normalization defect " +
        std::to_string(report.normalization_defect) + ")");
  }
  return p;
}

nlohmann::json joint_povm_to_json(const JointPovm& g) {
  nlohmann::json j;
  j["d"] = g.dim();
  j["k"] = g.rows();
  j["l"] = g.cols();
  nlohmann::json effects = nlohmann::json::array();
  for (const Effect& e : g.effects()) effects.push_back(matrix_to_json(e.matrix()));
  j["effects"] = std::move(effects);
  return j;
}

void write_povm(const Povm& p, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("write_povm: cannot open " + path.string());
  }
  out << povm_to_json(p).dump(1) << "\n";
  if (!out) {
    throw std::runtime_error("write_povm: write failed for " + path.string());
  }
}

Povm read_povm(const std::filesystem::path& path, const PovmTolerances& tol) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("read_povm: cannot open " + path.string());
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& err) {
    throw std::runtime_error("read_povm: malformed JSON in " + path.string() +
                             ": " + err.what());
  }
  return povm_from_json(j, tol);
}

void write_joint_povm(const JointPovm& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("write_joint_povm: cannot open " + path.string());
  }
  out << joint_povm_to_json(g).dump(1) << "\n";
}

}  // namespace povmrand
