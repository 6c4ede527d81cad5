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

#ifndef POVMRAND_POVM_IO_HPP
#define POVMRAND_POVM_IO_HPP

#include <filesystem>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "povmrand/povm.hpp"

namespace povmrand {

// On-disk POVM format, UTF-8 JSON:
//   { "d": int, "k": int,
//     "effects": [ k matrices, each a d x d array of [re, im] pairs,
//                  row-major ] }
// Doubles are written with a round-trippable decimal representation, so a
// write/read cycle reproduces the entries bit for bit.

nlohmann::json povm_to_json(const Povm& p);
Povm povm_from_json(const nlohmann::json& j, const PovmTolerances& tol = {});

/// Joint POVMs use the same matrix encoding with keys
/// { "d", "k", "l", "effects": [ k*l matrices, outcome (i,j) at i*l+j ] }.
nlohmann::json joint_povm_to_json(const JointPovm& g);

void write_povm(const Povm& p, const std::filesystem::path& path);

/// Parses and validates; throws std::runtime_error with the defect magnitude
/// when the file violates a POVM invariant.
Povm read_povm(const std::filesystem::path& path,
               const PovmTolerances& tol = {});

void write_joint_povm(const JointPovm& g, const std::filesystem::path& path);

}  // namespace povmrand

#endif  // POVMRAND_POVM_IO_HPP
