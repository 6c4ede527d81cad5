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

#include "povmrand/random.hpp"

#include <cmath>
#include <stdexcept>

namespace povmrand {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t master_seed,
                           std::uint64_t stream_index)
    : master_seed_(master_seed), stream_index_(stream_index) {
  // Fixed hash mixing the stream index into the seed; indices map to
  // well-separated engine seeds.
  const std::uint64_t mixed =
      splitmix64(splitmix64(master_seed) ^
                 (0xA0761D6478BD642FULL * (stream_index + 1)));
  engine_.seed(mixed);
}

double RandomStream::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  has_spare_ = true;
  return u * f;
}

ComplexMatrix ginibre(int rows, int cols, RandomStream& stream) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("ginibre: dimensions must be positive");
  }
  ComplexMatrix g(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      g(i, j) = stream.complex_gaussian();
    }
  }
  return g;
}

}  // namespace povmrand
