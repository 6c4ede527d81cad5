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

#ifndef POVMRAND_RANDOM_HPP
#define POVMRAND_RANDOM_HPP

#include <cstdint>
#include <random>

#include "povmrand/matrix.hpp"

namespace povmrand {

/// Counter-based random stream: a (master seed, stream index) pair fully
/// determines the draw sequence, so Monte Carlo trials can run on any number
/// of workers and still be bit-reproducible. Distinct indices give
/// statistically independent streams.
///
/// Gaussians use the Marsaglia polar method on top of std::mt19937_64, which
/// keeps the sequence identical across standard library implementations
/// (std::normal_distribution is not pinned down by the standard).
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t master_seed,
                        std::uint64_t stream_index = 0);

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

  /// A fresh stream with the same master seed and the given index.
  RandomStream substream(std::uint64_t stream_index) const {
    return RandomStream(master_seed_, stream_index);
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard real Gaussian N(0, 1).
  double gaussian();

  /// Standard complex Gaussian: E[g] = 0, E[|g|^2] = 1.
  Complex complex_gaussian() {
    const double x = gaussian();
    const double y = gaussian();
    return Complex(x, y) * 0.7071067811865475244;  // 1/sqrt(2)
  }

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_index_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// rows x cols matrix with i.i.d. standard complex Gaussian entries,
/// filled in row-major order.
ComplexMatrix ginibre(int rows, int cols, RandomStream& stream);

}  // namespace povmrand

#endif  // POVMRAND_RANDOM_HPP
