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

#include "hexloss/harness.hpp"

#include <algorithm>
#include <charconv>
#include <exception>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace hexloss {

namespace {

void fill_rows(const CellGeometry& geom, const PathLossParams& pl,
               std::uint64_t seed, DropRow* first, DropRow* last) {
  VariateStream stream(seed);
  for (DropRow* row = first; row != last; ++row) {
    const Point2D p = sample_point(geom, stream);
    row->x_m = p.x;
    row->y_m = p.y;
    row->r_m = std::hypot(p.x, p.y);
    row->w_db = mean_pathloss(pl, row->r_m);
    row->psi_db = pl.sigma_psi() * stream.normal();
    row->lp_db = row->w_db + row->psi_db;
  }
}

}  // namespace

std::vector<DropRow> run_drop(const CellGeometry& geom,
                              const PathLossParams& pl, std::size_t n,
                              std::uint64_t seed, std::size_t workers) {
  if (n == 0) throw std::invalid_argument("run_drop: n must be >= 1");
  workers = std::clamp<std::size_t>(workers, 1, n);
  std::vector<DropRow> rows(n);
  auto bound = [&](std::size_t w) { return rows.data() + w * n / workers; };
  if (workers == 1) {
    fill_rows(geom, pl, seed, bound(0), bound(1));
    return rows;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          fill_rows(geom, pl, VariateStream::seed_for_worker(seed, w), bound(w),
                    bound(w + 1));
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

DensityCurve make_density_curve(const DensityModel& model, double from,
                                double to, double step, bool with_oracle,
                                const ClosedFormOptions& options) {
  if (!(step > 0.0)) throw std::invalid_argument("density curve: step must be > 0");
  if (!(to > from)) throw std::invalid_argument("density curve: need to > from");
  DensityCurve curve;
  const auto n = static_cast<std::size_t>(std::floor((to - from) / step + 0.5));
  curve.abscissa.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    curve.abscissa.push_back(from + step * static_cast<double>(i));
  }
  curve.closed.reserve(curve.abscissa.size());
  for (double l : curve.abscissa) {
    curve.closed.push_back(eval_f_lp_closed(model, l, options));
  }
  if (with_oracle) {
    std::vector<double> oracle;
    oracle.reserve(curve.abscissa.size());
    for (double l : curve.abscissa) oracle.push_back(eval_f_lp_oracle(model, l));
    curve.oracle = std::move(oracle);
  }
  curve.label = "f_Lp";
  curve.fingerprint = model_fingerprint(model);
  return curve;
}

double trapezoid_mass(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("trapezoid_mass: size mismatch");
  }
  double sum = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    sum += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
  }
  return sum;
}

std::string model_fingerprint(const DensityModel& model) {
  const auto& p = model.params();
  std::ostringstream s;
  s << "L=" << format_double(model.side()) << ";alpha=" << format_double(p.alpha())
    << ";beta=" << format_double(p.beta()) << ";r0=" << format_double(p.r0())
    << ";sigma=" << format_double(p.sigma_psi());
  return s.str();
}

VerifyReport evaluate_drop(const std::vector<DropRow>& rows,
                           const CellGeometry& geom,
                           const std::function<double(double)>& cdf) {
  std::vector<double> lp;
  std::vector<Point2D> points;
  lp.reserve(rows.size());
  points.reserve(rows.size());
  for (const auto& r : rows) {
    lp.push_back(r.lp_db);
    points.push_back({r.x_m, r.y_m});
  }
  std::sort(lp.begin(), lp.end());
  const auto ks = stats::ks_test(lp, cdf);
  const auto chi = stats::spatial_chi_square(geom, points, kSpatialSignificance);

  VerifyReport report;
  report.shape = std::string(to_string(geom.shape()));
  report.side_m = geom.side();
  report.count = rows.size();
  report.ks_statistic = ks.statistic;
  report.ks_critical = ks.critical;
  report.ks_pass = ks.pass;
  report.chi2_statistic = chi.statistic;
  report.chi2_bins = chi.bins;
  report.chi2_p_value = chi.p_value;
  report.chi2_significance = chi.significance;
  report.chi2_pass = chi.pass;
  report.pass = ks.pass && chi.pass;
  report.generator = std::string(VariateStream::generator_label());
  return report;
}

VerifyReport verify(const VerifyConfig& config, const CdfTable* cdf) {
  const double side =
      config.side_m > 0.0 ? config.side_m : default_side(config.preset);
  const CellGeometry geom(config.shape, side);
  const PathLossParams pl = to_pathloss_params(config.preset);
  const DensityModel model(side, pl);
  const auto rows = run_drop(geom, pl, config.count, config.seed, config.workers);

  std::optional<CdfTable> owned;
  if (cdf == nullptr) {
    owned.emplace(model);
    cdf = &*owned;
  }
  VerifyReport report =
      evaluate_drop(rows, geom, [cdf](double l) { return (*cdf)(l); });
  report.preset = config.preset.name;
  report.seed = config.seed;
  report.workers = config.workers;
  report.fingerprint = model_fingerprint(model);
  return report;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_samples_csv(std::ostream& out, const std::vector<DropRow>& rows) {
  out << "x_m,y_m,r_m,w_db,psi_db,lp_db\n";
  for (const auto& r : rows) {
    out << format_double(r.x_m) << ',' << format_double(r.y_m) << ','
        << format_double(r.r_m) << ',' << format_double(r.w_db) << ','
        << format_double(r.psi_db) << ',' << format_double(r.lp_db) << '\n';
  }
}

void write_density_csv(std::ostream& out, const DensityCurve& curve) {
  out << "l_db,f_closed";
  if (curve.oracle) out << ",f_oracle";
  out << '\n';
  for (std::size_t i = 0; i < curve.abscissa.size(); ++i) {
    out << format_double(curve.abscissa[i]) << ','
        << format_double(curve.closed[i]);
    if (curve.oracle) out << ',' << format_double((*curve.oracle)[i]);
    out << '\n';
  }
}

std::string report_to_json(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["preset"] = r.preset;
  j["shape"] = r.shape;
  j["side_m"] = r.side_m;
  j["count"] = r.count;
  j["seed"] = r.seed;
  j["workers"] = r.workers;
  j["ks_statistic"] = r.ks_statistic;
  j["ks_critical"] = r.ks_critical;
  j["ks_pass"] = r.ks_pass;
  j["chi2_statistic"] = r.chi2_statistic;
  j["chi2_bins"] = r.chi2_bins;
  j["chi2_p_value"] = r.chi2_p_value;
  j["chi2_significance"] = r.chi2_significance;
  j["chi2_pass"] = r.chi2_pass;
  j["pass"] = r.pass;
  j["generator"] = r.generator;
  j["fingerprint"] = r.fingerprint;
  return j.dump(2) + "\n";
}

std::string density_metadata_json(const DensityCurve& curve,
                                  const DensityModel& model,
                                  const std::string& preset, double side_m) {
  const auto& p = model.params();
  nlohmann::ordered_json j;
  j["label"] = curve.label;
  j["fingerprint"] = curve.fingerprint;
  j["preset"] = preset;
  j["side_m"] = side_m;
  j["alpha_db"] = p.alpha();
  j["alpha_prime_db"] = p.alpha_prime();
  j["beta_db_per_decade"] = p.beta();
  j["r0_m"] = p.r0();
  j["sigma_psi_db"] = p.sigma_psi();
  j["support_a_db"] = model.support_a();
  j["support_b_db"] = model.support_b();
  j["points"] = curve.abscissa.size();
  j["with_oracle"] = curve.oracle.has_value();
  j["trapezoid_mass"] = trapezoid_mass(curve.abscissa, curve.closed);
  return j.dump(2) + "\n";
}

std::string gnuplot_density_script(const std::string& csv_path,
                                   const std::string& title, bool with_oracle) {
  std::ostringstream s;
  s << "set datafile separator ','\n"
    << "set key autotitle columnhead\n"
    << "set title '" << title << "'\n"
    << "set xlabel 'path loss [dB]'\n"
    << "set ylabel 'density [1/dB]'\n"
    << "plot '" << csv_path << "' using 1:2 with lines lw 2";
  if (with_oracle) s << ", '' using 1:3 with points pt 7 ps 0.3";
  s << "\n";
  return s.str();
}

std::string gnuplot_samples_script(const std::string& csv_path,
                                   const std::string& title, double bin_db) {
  std::ostringstream s;
  s << "set datafile separator ','\n"
    << "set title '" << title << "'\n"
    << "set xlabel 'path loss [dB]'\n"
    << "set ylabel 'density [1/dB]'\n"
    << "binwidth = " << format_double(bin_db) << "\n"
    << "bin(x) = binwidth * floor(x / binwidth) + binwidth / 2.0\n"
    << "stats '" << csv_path << "' using 6 nooutput\n"
    << "plot '" << csv_path
    << "' using (bin($6)):(1.0 / (STATS_records * binwidth)) "
       "smooth frequency with boxes title 'L_p samples'\n";
  return s.str();
}

}  // namespace hexloss
