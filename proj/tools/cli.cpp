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

#include "cli.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hexloss/harness.hpp"
#include "hexloss/pathloss_density.hpp"
#include "hexloss/presets.hpp"
#include "hexloss/sampler.hpp"

namespace hexloss::cli {

namespace {

// Parameter problems detected after parsing; reported with exit code 2.
class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string presets_file;
};

struct SampleOptions {
  std::string shape = "hexagon";
  double side = 1000.0;
  std::size_t count = 10000;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  std::string preset = "urban-macro";
  std::string out;
  bool any_radius = false;
};

struct PdfOptions {
  std::string preset;
  double side = 0.0;
  std::optional<double> from;
  std::optional<double> to;
  double step = 0.1;
  std::string out;
  std::string meta;
  std::string gnuplot;
  std::string method = "quadrature";
  bool with_oracle = false;
  bool any_radius = false;
};

struct VerifyOptions {
  std::string preset;
  std::string shape = "hexagon";
  double side = 0.0;
  std::size_t count = 10000;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  std::string report;
  std::string out;
  std::string gnuplot;
  bool any_radius = false;
};

struct PresetsOptions {
  bool json = false;
};

std::vector<ChannelPreset> catalogue(const CommonOptions& common) {
  if (common.presets_file.empty()) return builtin_presets();
  return read_preset_file(common.presets_file);
}

double resolve_side(const ChannelPreset& preset, double requested,
                    bool any_radius, std::ostream& err) {
  const double side = requested > 0.0 ? requested : default_side(preset);
  if (!validate_cell_radius(preset, side)) {
    std::ostringstream msg;
    msg << "cell side " << side << " m is outside the " << preset.name
        << " range [" << preset.cell_radius_min_m << ", "
        << preset.cell_radius_max_m << "] m";
    if (!any_radius) {
      throw usage_error(msg.str() + " (pass --any-radius to override)");
    }
    err << "warning: " << msg.str() << "\n";
  }
  return side;
}

// Writes to `path`, or to `out` when path is empty or "-".
template <class Writer>
void emit(const std::string& path, std::ostream& out, Writer&& write) {
  if (path.empty() || path == "-") {
    write(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw usage_error("cannot open " + path + " for writing");
  write(file);
  if (!file) throw usage_error("failed writing " + path);
}

int run_sample(const CommonOptions& common, const SampleOptions& o,
               std::ostream& out, std::ostream& err) {
  const ChannelPreset preset = load_preset(o.preset, catalogue(common));
  const double side = resolve_side(preset, o.side, o.any_radius, err);
  const CellGeometry geom(parse_shape(o.shape), side);
  const auto rows =
      run_drop(geom, to_pathloss_params(preset), o.count, o.seed, o.workers);
  emit(o.out, out, [&](std::ostream& s) { write_samples_csv(s, rows); });
  return kExitOk;
}

numerics::IntegrationMethod parse_method(const std::string& name) {
  if (name == "quadrature") return numerics::IntegrationMethod::quadrature;
  if (name == "series") return numerics::IntegrationMethod::series;
  throw usage_error("unknown method '" + name + "'");
}

int run_pdf(const CommonOptions& common, const PdfOptions& o,
            std::ostream& out, std::ostream& err) {
  const ChannelPreset preset = load_preset(o.preset, catalogue(common));
  const double side = resolve_side(preset, o.side, o.any_radius, err);
  const PathLossParams pl = to_pathloss_params(preset);
  if (!(pl.sigma_psi() > 0.0)) {
    throw usage_error("preset '" + preset.name + "' has no shadowing");
  }
  const DensityModel model(side, pl);
  const double from = o.from.value_or(model.support_a() -
                                      6.0 * model.sigma() - 4.0 * pl.beta());
  const double to = o.to.value_or(model.support_b() + 6.0 * model.sigma());
  ClosedFormOptions options;
  options.method = parse_method(o.method);
  const DensityCurve curve =
      make_density_curve(model, from, to, o.step, o.with_oracle, options);
  emit(o.out, out, [&](std::ostream& s) { write_density_csv(s, curve); });
  if (!o.meta.empty()) {
    emit(o.meta, out, [&](std::ostream& s) {
      s << density_metadata_json(curve, model, preset.name, side);
    });
  }
  if (!o.gnuplot.empty()) {
    if (o.out.empty() || o.out == "-") {
      throw usage_error("--gnuplot needs --out to reference the CSV");
    }
    emit(o.gnuplot, out, [&](std::ostream& s) {
      s << gnuplot_density_script(o.out, preset.name + " (L = " +
                                             format_double(side) + " m)",
                                  o.with_oracle);
    });
  }
  return kExitOk;
}

int run_verify(const CommonOptions& common, const VerifyOptions& o,
               std::ostream& out, std::ostream& err) {
  VerifyConfig config;
  config.preset = load_preset(o.preset, catalogue(common));
  config.shape = parse_shape(o.shape);
  config.side_m = resolve_side(config.preset, o.side, o.any_radius, err);
  config.count = o.count;
  config.seed = o.seed;
  config.workers = o.workers;
  if (!(config.preset.sigma_psi_db > 0.0)) {
    throw usage_error("preset '" + config.preset.name + "' has no shadowing");
  }
  const VerifyReport report = verify(config);
  emit(o.report, out, [&](std::ostream& s) { s << report_to_json(report); });
  if (!o.out.empty()) {
    const auto rows =
        run_drop(CellGeometry(config.shape, config.side_m),
                 to_pathloss_params(config.preset), config.count, config.seed,
                 config.workers);
    emit(o.out, out, [&](std::ostream& s) { write_samples_csv(s, rows); });
  }
  if (!o.gnuplot.empty()) {
    if (o.out.empty() || o.out == "-") {
      throw usage_error("--gnuplot needs --out to reference the samples CSV");
    }
    emit(o.gnuplot, out, [&](std::ostream& s) {
      s << gnuplot_samples_script(o.out, config.preset.name, 1.0);
    });
  }
  err << "verify " << config.preset.name << " " << o.shape
      << ": ks=" << report.ks_statistic << " (critical " << report.ks_critical
      << "), chi2 p=" << report.chi2_p_value << " -> "
      << (report.pass ? "PASS" : "FAIL") << "\n";
  return report.pass ? kExitOk : kExitVerifyFailed;
}

int run_presets(const CommonOptions& common, const PresetsOptions& o,
                std::ostream& out) {
  const auto presets = catalogue(common);
  if (o.json) {
    out << presets_to_json(presets);
    return kExitOk;
  }
  out << std::left << std::setw(18) << "name" << std::setw(10) << "alpha'"
      << std::setw(8) << "beta" << std::setw(8) << "sigma" << std::setw(8)
      << "r0" << std::setw(16) << "L range [m]"
      << "model\n";
  for (const auto& p : presets) {
    std::ostringstream range;
    range << p.cell_radius_min_m << "-" << p.cell_radius_max_m;
    out << std::left << std::setw(18) << p.name << std::setw(10)
        << p.alpha_prime_db << std::setw(8) << p.beta_db_per_decade
        << std::setw(8) << p.sigma_psi_db << std::setw(8) << p.r0_m
        << std::setw(16) << range.str() << p.model_label << "\n";
  }
  return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"hexloss: cell drops and path-loss densities for hexagonal cells"};
  app.require_subcommand(1);

  CommonOptions common;
  app.add_option("--presets-file", common.presets_file,
                 "JSON preset catalogue replacing the built-in presets");

  const std::vector<std::string> shapes = {"triangle60", "rhombus120", "hexagon"};

  SampleOptions so;
  auto* sample = app.add_subcommand("sample", "drop terminals and write a CSV");
  sample->add_option("--shape", so.shape, "cell shape")
      ->check(CLI::IsMember(shapes));
  sample->add_option("--side", so.side, "cell side L [m]")
      ->check(CLI::PositiveNumber);
  sample->add_option("--count", so.count, "number of terminals")
      ->check(CLI::PositiveNumber);
  sample->add_option("--seed", so.seed, "generator seed");
  sample->add_option("--workers", so.workers, "worker threads")
      ->check(CLI::PositiveNumber);
  sample->add_option("--preset", so.preset, "channel preset for w_db/psi_db");
  sample->add_option("--out", so.out, "CSV path (stdout if omitted)");
  sample->add_flag("--any-radius", so.any_radius,
                   "allow a side outside the preset's range");

  PdfOptions po;
  auto* pdf = app.add_subcommand("pdf", "tabulate the path-loss density");
  pdf->add_option("--preset", po.preset, "channel preset")->required();
  pdf->add_option("--side", po.side, "cell side L [m]")
      ->check(CLI::PositiveNumber);
  pdf->add_option("--from", po.from, "first loss level [dB]");
  pdf->add_option("--to", po.to, "last loss level [dB]");
  pdf->add_option("--step", po.step, "grid step [dB]")
      ->check(CLI::PositiveNumber);
  pdf->add_option("--method", po.method, "quadrature or series")
      ->check(CLI::IsMember({"quadrature", "series"}));
  pdf->add_flag("--with-oracle", po.with_oracle,
                "add the brute-force convolution column");
  pdf->add_option("--out", po.out, "CSV path (stdout if omitted)");
  pdf->add_option("--meta", po.meta, "JSON metadata path");
  pdf->add_option("--gnuplot", po.gnuplot, "gnuplot script path");
  pdf->add_flag("--any-radius", po.any_radius,
                "allow a side outside the preset's range");

  VerifyOptions vo;
  auto* ver = app.add_subcommand("verify", "Monte Carlo check against the closed form");
  ver->add_option("--preset", vo.preset, "channel preset")->required();
  ver->add_option("--shape", vo.shape, "cell shape")
      ->check(CLI::IsMember(shapes));
  ver->add_option("--side", vo.side, "cell side L [m]")
      ->check(CLI::PositiveNumber);
  ver->add_option("--count", vo.count, "number of terminals")
      ->check(CLI::PositiveNumber);
  ver->add_option("--seed", vo.seed, "generator seed");
  ver->add_option("--workers", vo.workers, "worker threads")
      ->check(CLI::PositiveNumber);
  ver->add_option("--report", vo.report, "JSON report path (stdout if omitted)");
  ver->add_option("--out", vo.out, "samples CSV path");
  ver->add_option("--gnuplot", vo.gnuplot, "gnuplot script path");
  ver->add_flag("--any-radius", vo.any_radius,
                "allow a side outside the preset's range");

  PresetsOptions lo;
  auto* presets = app.add_subcommand("presets", "list channel presets");
  presets->add_flag("--json", lo.json, "print in preset-file format");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*sample) return run_sample(common, so, out, err);
    if (*pdf) return run_pdf(common, po, out, err);
    if (*ver) return run_verify(common, vo, out, err);
    if (*presets) return run_presets(common, lo, out);
  } catch (const std::exception& e) {
    // Parameter, domain and I/O problems alike.
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hexloss::cli
