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

#ifndef POVMRAND_STATS_HPP
#define POVMRAND_STATS_HPP

#include <cstddef>
#include <functional>
#include <vector>

namespace povmrand {

/// Welford running mean/variance.
class RunningStats {
 public:
  void push(double x);
  std::size_t count() const { return n_; }
  double mean() const { return mean_; }
  double variance() const;  // sample variance (n - 1)
  double stddev() const;
  /// Standard error of the mean.
  double sem() const;

 private:
  std::size_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// One-sample Kolmogorov-Smirnov distance between the empirical CDF of the
/// sample and a reference CDF.
double ks_distance(std::vector<double> sample,
                   const std::function<double(double)>& cdf);

/// Two-sample Kolmogorov-Smirnov statistic sup |F_a - F_b|.
double two_sample_ks(std::vector<double> a, std::vector<double> b);

/// Critical value c(α) sqrt((n+m)/(nm)) of the two-sample KS test;
/// supported significance levels: 0.05 and 0.01.
double two_sample_ks_critical(std::size_t n, std::size_t m, double alpha);

/// Runs fn(i) for i in [0, n) on `threads` workers. Work items must be
/// independent; with per-index random streams the results are identical for
/// every thread count. threads = 0 picks the hardware concurrency.
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace povmrand

#endif  // POVMRAND_STATS_HPP
