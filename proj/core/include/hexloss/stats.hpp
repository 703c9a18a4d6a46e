// Copyright 2026 The hexloss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HEXLOSS_STATS_HPP
#define HEXLOSS_STATS_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hexloss/sampler.hpp"

namespace hexloss::stats {

/// Asymptotic one-sample Kolmogorov-Smirnov coefficient at significance 0.01.
inline constexpr double kKsCoefficient01 = 1.628;

struct KsResult {
  double statistic = 0.0;
  double critical = 0.0;
  bool pass = false;
};

double ks_critical_value(std::size_t n, double coefficient = kKsCoefficient01);

/// sup |F_n - F| over the sorted samples; pass iff statistic < critical.
/// Throws std::invalid_argument on empty or unsorted input.
KsResult ks_test(std::span<const double> sorted_samples,
                 const std::function<double(double)>& cdf,
                 double coefficient = kKsCoefficient01);

struct ChiSquareResult {
  double statistic = 0.0;
  std::size_t bins = 0;
  double p_value = 0.0;
  double significance = 0.0;
  bool pass = false;  ///< p_value >= significance
};

/// Pearson chi-square of counts against equal expected counts.
ChiSquareResult chi_square_uniform(std::span<const std::size_t> counts,
                                   double significance);

/// Uniformity test of points over the cell on EqualAreaBinning bins.
ChiSquareResult spatial_chi_square(const CellGeometry& geom,
                                   std::span<const Point2D> points,
                                   double significance = 0.001,
                                   std::size_t min_bins = 96);

struct HistogramBin {
  double lo = 0.0;
  double hi = 0.0;
  double expected = 0.0;
  std::size_t observed = 0;
  bool flagged = false;  ///< |observed - expected| > 3 sqrt(expected)
};

struct HistogramReport {
  std::vector<HistogramBin> bins;
  std::size_t flagged = 0;
  bool pass = false;  ///< at most 1% of bins flagged
};

/// Bins samples on [lo, hi] and compares each count with n times the
/// integral of pdf over the bin. Requires bins >= 10.
HistogramReport histogram_compare(std::span<const double> samples,
                                  const std::function<double(double)>& pdf,
                                  double lo, double hi, std::size_t bins);

}  // namespace hexloss::stats

#endif  // HEXLOSS_STATS_HPP
