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

#ifndef POVMRAND_WEINGARTEN_HPP
#define POVMRAND_WEINGARTEN_HPP

#include <cstdint>
#include <vector>

namespace povmrand {

/// Element of the symmetric group S_p, stored as 0-based images.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int p);
  /// The full cycle mapping p -> p-1 -> ... -> 2 -> 1 -> p (1-based reading).
  static Permutation reverse_full_cycle(int p);
  /// All of S_p in lexicographic order (p! elements).
  static std::vector<Permutation> all(int p);

  int size() const { return static_cast<int>(images_.size()); }
  int image(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  /// Group product (σ τ)(i) = σ(τ(i)).
  Permutation after(const Permutation& inner) const;

  int cycle_count() const;
  /// Minimal number of transpositions, |σ| = p - #σ.
  int length() const { return size() - cycle_count(); }
  /// Cycle lengths in non-increasing order.
  std::vector<int> cycle_type() const;
  bool is_identity() const;

 private:
  std::vector<int> images_;
};

/// Catalan number C_n (n <= 30).
std::int64_t catalan(int n);

/// Möbius function of S_p: multiplicative over cycles with factor
/// (-1)^{len-1} Cat_{len-1}.
std::int64_t moebius(const Permutation& sigma);

/// Weingarten function table for S_p at dimension N: the convolution inverse
/// of σ -> N^{#σ}. Values depend only on the cycle type, so the table is
/// solved over conjugacy classes (a #partitions(p) sized linear system).
/// Requires N >= p and p <= kMaxOrder.
class WgTable {
 public:
  static constexpr int kMaxOrder = 7;

  static WgTable build(int N, int p);

  int order() const { return p_; }
  int dimension() const { return N_; }

  double at_type(const std::vector<int>& cycle_type) const;
  double operator()(const Permutation& sigma) const {
    return at_type(sigma.cycle_type());
  }

  /// Index of a cycle type in the canonical partition ordering.
  int type_index(const std::vector<int>& cycle_type) const;
  double at_index(int idx) const { return values_[idx]; }
  const std::vector<std::vector<int>>& types() const { return types_; }

 private:
  WgTable(int N, int p) : p_(p), N_(N) {}

  int p_, N_;
  std::vector<std::vector<int>> types_;
  std::vector<double> values_;
};

/// Leading-order asymptotics N^{-(p+|σ|)} Möb(σ).
double wg_asymptotic(int N, const Permutation& sigma);

/// E Tr M_1^p for a Haar-random POVM of parameters (d, k; n):
/// the double sum over S_p of n^{#α} d^{#(βγ^{-1})} Wg(kn, α^{-1}β),
/// evaluated with compensated summation. Requires kn >= p and p <= 7;
/// p = 7 enumerates 7!^2 ≈ 2.5e7 pairs and takes a few seconds.
double moment_exact(int d, int k, int n, int p);

/// E Tr M_1 M_2 via the two surviving Weingarten terms,
/// n^2 d Wg(kn, id) + n^2 d^2 Wg(kn, (1 2)).
double covariance_exact(int d, int k, int n);

}  // namespace povmrand

#endif  // POVMRAND_WEINGARTEN_HPP
