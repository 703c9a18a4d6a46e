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

#ifndef HEXLOSS_HARNESS_HPP
#define HEXLOSS_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hexloss/pathloss.hpp"
#include "hexloss/pathloss_density.hpp"
#include "hexloss/presets.hpp"
#include "hexloss/sampler.hpp"
#include "hexloss/stats.hpp"

namespace hexloss {

/// One dropped terminal.
struct DropRow {
  double x_m = 0.0;
  double y_m = 0.0;
  double r_m = 0.0;
  double w_db = 0.0;
  double psi_db = 0.0;
  double lp_db = 0.0;
};

/// Drops n terminals uniformly in the cell and draws their path loss.
///
/// Worker w handles rows [w n / W, (w + 1) n / W) with its own stream seeded
/// by VariateStream::seed_for_worker(seed, w); rows are concatenated in
/// worker order, so the table depends only on (n, seed, workers).
std::vector<DropRow> run_drop(const CellGeometry& geom,
                              const PathLossParams& pl, std::size_t n,
                              std::uint64_t seed, std::size_t workers = 1);

/// Tabulated density carried to CSV output.
struct DensityCurve {
  std::vector<double> abscissa;
  std::vector<double> closed;
  std::optional<std::vector<double>> oracle;
  std::string label;
  std::string fingerprint;
};

/// Samples eval_f_lp_closed (and optionally the oracle) on from, from+step,
/// ..., up to `to` inclusive (within half a step).
DensityCurve make_density_curve(const DensityModel& model, double from,
                                double to, double step, bool with_oracle,
                                const ClosedFormOptions& options = {});

/// Trapezoidal integral of a tabulated curve.
double trapezoid_mass(const std::vector<double>& x, const std::vector<double>& y);

/// Identifies the model parameters behind a curve or report.
std::string model_fingerprint(const DensityModel& model);

struct VerifyReport {
  std::string preset;
  std::string shape;
  double side_m = 0.0;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  double ks_statistic = 0.0;
  double ks_critical = 0.0;
  bool ks_pass = false;
  double chi2_statistic = 0.0;
  std::size_t chi2_bins = 0;
  double chi2_p_value = 0.0;
  double chi2_significance = 0.0;
  bool chi2_pass = false;
  bool pass = false;
  std::string generator;
  std::string fingerprint;
};

/// Significance of the spatial chi-square test in verify.
inline constexpr double kSpatialSignificance = 0.001;

/// KS of the drop's L_p column against `cdf` plus the spatial chi-square of
/// its positions. The report's identity fields are left for the caller.
VerifyReport evaluate_drop(const std::vector<DropRow>& rows,
                           const CellGeometry& geom,
                           const std::function<double(double)>& cdf);

struct VerifyConfig {
  ChannelPreset preset;
  Shape shape = Shape::hexagon;
  double side_m = 0.0;  ///< 0 selects default_side(preset)
  std::size_t count = 10000;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
};

/// run_drop + evaluate_drop with the closed-form CDF of the preset's model.
/// `cdf` may be supplied to reuse a CdfTable across runs of the same model.
VerifyReport verify(const VerifyConfig& config,
                    const CdfTable* cdf = nullptr);

// --- output ---------------------------------------------------------------

/// Shortest round-trip decimal form.
std::string format_double(double v);

/// Header x_m,y_m,r_m,w_db,psi_db,lp_db.
void write_samples_csv(std::ostream& out, const std::vector<DropRow>& rows);

/// Header l_db,f_closed[,f_oracle].
void write_density_csv(std::ostream& out, const DensityCurve& curve);

std::string report_to_json(const VerifyReport& report);

std::string density_metadata_json(const DensityCurve& curve,
                                  const DensityModel& model,
                                  const std::string& preset, double side_m);

/// Gnuplot script plotting a density CSV.
std::string gnuplot_density_script(const std::string& csv_path,
                                   const std::string& title, bool with_oracle);

/// Gnuplot script histogramming the lp_db column of a samples CSV.
std::string gnuplot_samples_script(const std::string& csv_path,
                                   const std::string& title, double bin_db);

}  // namespace hexloss

#endif  // HEXLOSS_HARNESS_HPP
