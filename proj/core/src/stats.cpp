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

#include "hexloss/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

#include "hexloss/numerics.hpp"

namespace hexloss::stats {

double ks_critical_value(std::size_t n, double coefficient) {
  if (n == 0) throw std::invalid_argument("ks_critical_value: n must be > 0");
  return coefficient / std::sqrt(static_cast<double>(n));
}

KsResult ks_test(std::span<const double> sorted_samples,
                 const std::function<double(double)>& cdf, double coefficient) {
  if (sorted_samples.empty()) {
    throw std::invalid_argument("ks_test: no samples");
  }
  if (!std::is_sorted(sorted_samples.begin(), sorted_samples.end())) {
    throw std::invalid_argument("ks_test: samples must be sorted");
  }
  const auto n = static_cast<double>(sorted_samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted_samples.size(); ++i) {
    const double f = cdf(sorted_samples[i]);
    const double above = static_cast<double>(i + 1) / n - f;
    const double below = f - static_cast<double>(i) / n;
    d = std::max({d, above, below});
  }
  KsResult r;
  r.statistic = d;
  r.critical = ks_critical_value(sorted_samples.size(), coefficient);
  r.pass = r.statistic < r.critical;
  return r;
}

ChiSquareResult chi_square_uniform(std::span<const std::size_t> counts,
                                   double significance) {
  if (counts.size() < 2) {
    throw std::invalid_argument("chi_square_uniform: need at least 2 bins");
  }
  std::size_t total = 0;
  for (auto c : counts) total += c;
  if (total == 0) throw std::invalid_argument("chi_square_uniform: no data");
  const double expected =
      static_cast<double>(total) / static_cast<double>(counts.size());
  double stat = 0.0;
  for (auto c : counts) {
    const double d = static_cast<double>(c) - expected;
    stat += d * d / expected;
  }
  const boost::math::chi_squared dist(static_cast<double>(counts.size() - 1));
  ChiSquareResult r;
  r.statistic = stat;
  r.bins = counts.size();
  r.p_value = boost::math::cdf(boost::math::complement(dist, stat));
  r.significance = significance;
  r.pass = r.p_value >= significance;
  return r;
}

ChiSquareResult spatial_chi_square(const CellGeometry& geom,
                                   std::span<const Point2D> points,
                                   double significance, std::size_t min_bins) {
  const EqualAreaBinning binning(geom, min_bins);
  std::vector<std::size_t> counts(binning.bin_count(), 0);
  for (const auto& p : points) ++counts[binning.bin_of(p)];
  return chi_square_uniform(counts, significance);
}

HistogramReport histogram_compare(std::span<const double> samples,
                                  const std::function<double(double)>& pdf,
                                  double lo, double hi, std::size_t bins) {
  if (bins < 10) throw std::invalid_argument("histogram_compare: bins < 10");
  if (!(hi > lo)) throw std::invalid_argument("histogram_compare: hi <= lo");
  HistogramReport report;
  report.bins.resize(bins);
  const double width = (hi - lo) / static_cast<double>(bins);
  const auto n = static_cast<double>(samples.size());
  for (std::size_t i = 0; i < bins; ++i) {
    auto& b = report.bins[i];
    b.lo = lo + width * static_cast<double>(i);
    b.hi = (i + 1 == bins) ? hi : b.lo + width;
    b.expected = n * numerics::integrate_adaptive(pdf, b.lo, b.hi, 1e-10);
  }
  for (double s : samples) {
    if (s < lo || s > hi) continue;
    auto i = static_cast<std::size_t>((s - lo) / width);
    ++report.bins[std::min(i, bins - 1)].observed;
  }
  for (auto& b : report.bins) {
    const double dev = std::abs(static_cast<double>(b.observed) - b.expected);
    b.flagged = b.expected > 0.0 ? dev > 3.0 * std::sqrt(b.expected)
                                 : b.observed > 0;
    if (b.flagged) ++report.flagged;
  }
  report.pass = report.flagged * 100 <= bins;
  return report;
}

}  // namespace hexloss::stats
