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

#include "hexloss/pathloss_density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hexloss {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn10 = std::numbers::ln10;
constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kSqrtPi = 1.7724538509055160273;

// Below a - kTailDecades * beta the mass of W is under 1e-17.
constexpr double kTailDecades = 8.5;

void require_shadowing(const DensityModel& model, const char* who) {
  if (!(model.sigma() > 0.0)) {
    throw std::invalid_argument(std::string(who) + ": sigma_psi must be > 0");
  }
}

// 4 r0^2 ln10 / (sqrt3 L^2 beta)
double density_prefactor(const DensityModel& model) {
  const auto& p = model.params();
  const double L = model.side();
  return 4.0 * p.r0() * p.r0() * kLn10 / (kSqrt3 * L * L * p.beta());
}

double gaussian(double x, double sigma) {
  const double z = x / sigma;
  return std::exp(-0.5 * z * z) / (std::sqrt(2.0 * kPi) * sigma);
}

std::size_t panels_for(double width, double scale, std::size_t at_least) {
  if (!(width > 0.0)) return 1;
  const double n = std::ceil(width / scale);
  return std::max(at_least, static_cast<std::size_t>(std::min(n, 4096.0)));
}

}  // namespace

DensityModel::DensityModel(double side, PathLossParams params)
    : side_(side), params_(params) {
  if (!(side > 0.0) || !std::isfinite(side)) {
    throw std::invalid_argument("DensityModel: side must be finite and > 0");
  }
  if (!(params_.r0() < kSqrt3 * side / 2.0)) {
    throw std::invalid_argument(
        "DensityModel: r0 must be below the inscribed radius sqrt3 L / 2");
  }
  a_ = params_.alpha() +
       params_.beta() * std::log10(kSqrt3 * side / (2.0 * params_.r0()));
  b_ = params_.alpha() + params_.beta() * std::log10(side / params_.r0());
}

double eval_f_w(const DensityModel& model, double w) {
  if (w > model.support_b()) return 0.0;
  const auto& p = model.params();
  const double e = (w - p.alpha()) / p.beta();
  const double growth = std::exp(2.0 * kLn10 * e);
  const double c = density_prefactor(model);
  if (w <= model.support_a()) return c * (kPi / 3.0) * growth;
  const double arg = std::min(
      1.0, kSqrt3 * model.side() / (2.0 * p.r0() * std::exp(kLn10 * e)));
  return 2.0 * c * growth * (std::asin(arg) - kPi / 3.0);
}

ClosedFormTerms closed_form_terms(const DensityModel& model, double l) {
  require_shadowing(model, "closed_form_terms");
  const auto& p = model.params();
  const double sigma = p.sigma_psi();
  ClosedFormTerms t;
  t.mu = l - p.alpha() + 2.0 * kLn10 * sigma * sigma / p.beta();
  t.kappa1 = (t.mu - p.beta() * std::log10(model.side() / p.r0())) / sigma;
  t.kappa2 = (t.mu - p.beta() * std::log10(kSqrt3 * model.side() /
                                            (2.0 * p.r0()))) /
             sigma;
  return t;
}

double eval_f_lp_closed(const DensityModel& model, double l,
                        const ClosedFormOptions& options) {
  require_shadowing(model, "eval_f_lp_closed");
  const auto& p = model.params();
  const double sigma = p.sigma_psi();
  const double beta = p.beta();
  const ClosedFormTerms t = closed_form_terms(model, l);

  numerics::SeriesParams sp;
  sp.k = kSqrt3 * model.side() / (2.0 * p.r0());
  sp.a_app = t.mu / beta;
  sp.b_app = -kSqrt2 * sigma / beta;
  sp.x1 = t.kappa1 / kSqrt2;
  sp.x2 = t.kappa2 / kSqrt2;

  const double q1 = numerics::q_function(t.kappa1);
  const double q2 = numerics::q_function(t.kappa2);
  const bool quadrature =
      options.method == numerics::IntegrationMethod::quadrature;
  double tol = options.rel_tol > 0.0 ? options.rel_tol
                                     : (quadrature ? 1e-13 : 1e-6);
  if (quadrature) {
    // asin <= pi/2 and int e^{-v^2} dv = sqrt(pi) (Q(k1) - Q(k2)).
    const double q_gap = (t.kappa2 <= 0.0)
                             ? numerics::q_function(-t.kappa2) -
                                   numerics::q_function(-t.kappa1)
                             : q1 - q2;
    const double scale = 0.5 * kPi * kSqrtPi * std::abs(q_gap);
    tol = std::max(tol * scale, 1e-300);
  }
  const double integral =
      numerics::integrate_arcsine_gauss(sp, options.method, tol);
  const double bracket =
      kPi * q2 - (2.0 * kPi / 3.0) * q1 + (2.0 / kSqrtPi) * integral;
  if (!(bracket > 0.0)) return 0.0;
  const double log_k = std::log(density_prefactor(model)) +
                       2.0 * kLn10 *
                           (kLn10 * sigma * sigma + beta * (l - p.alpha())) /
                           (beta * beta);
  return std::exp(log_k + std::log(bracket));
}

double eval_f_lp_oracle(const DensityModel& model, double l) {
  require_shadowing(model, "eval_f_lp_oracle");
  const double sigma = model.sigma();
  const double a = model.support_a();
  const double b = model.support_b();
  constexpr double kRel = 1e-13;

  // tau in [l - b, l - a]: w = l - tau in [a, b]; w = a + s^2 straightens the
  // asin kink at w = a.
  const double middle = numerics::integrate_relative(
      [&](double s) {
        const double w = a + s * s;
        return 2.0 * s * gaussian(l - w, sigma) * eval_f_w(model, w);
      },
      0.0, std::sqrt(b - a), kRel, 16);

  // tau in [l - a, inf): the Gaussian-times-exponential integrand peaks at
  // tau = -2 ln10 sigma^2 / beta; truncate 12 sigma past the peak.
  const double shift = 2.0 * kLn10 * sigma * sigma / model.params().beta();
  const double lo = l - a;
  const double hi = std::max(lo, -shift) + 12.0 * sigma;
  const double circular = numerics::integrate_relative(
      [&](double tau) { return gaussian(tau, sigma) * eval_f_w(model, l - tau); },
      lo, hi, kRel, panels_for(hi - lo, 0.5 * sigma, 16));
  return middle + circular;
}

std::pair<double, double> check_exponent_identity(const DensityModel& model,
                                                  double l, double tau) {
  require_shadowing(model, "check_exponent_identity");
  const auto& p = model.params();
  const double s2 = p.sigma_psi() * p.sigma_psi();
  const double beta = p.beta();
  const double lhs = std::pow(10.0, 2.0 * (l - tau - p.alpha()) / beta) *
                     std::exp(-tau * tau / (2.0 * s2));
  const double shifted = tau + 2.0 * kLn10 * s2 / beta;
  const double rhs =
      std::exp(2.0 * kLn10 * (kLn10 * s2 + beta * (l - p.alpha())) /
               (beta * beta)) *
      std::exp(-shifted * shifted / (2.0 * s2));
  return {lhs, rhs};
}

double cdf_f_lp(const DensityModel& model, double l) {
  const auto& p = model.params();
  const double sigma = p.sigma_psi();
  const double a = model.support_a();
  const double b = model.support_b();
  if (sigma == 0.0) {
    if (l >= b) return 1.0;
    auto integrand_w = [&](double s) {
      const double w = a + s * s;
      return 2.0 * s * eval_f_w(model, w);
    };
    const double circular_mass =
        (kPi / (2.0 * kSqrt3)) * std::exp(2.0 * kLn10 * (std::min(l, a) - a) /
                                          p.beta());
    if (l <= a) return circular_mass;
    return circular_mass +
           numerics::integrate_adaptive(integrand_w, 0.0, std::sqrt(l - a), 1e-14);
  }
  auto phi = [&](double w) { return numerics::normal_cdf((l - w) / sigma); };
  const double w_lo = a - kTailDecades * p.beta();
  const double circular = numerics::integrate_relative(
      [&](double w) { return eval_f_w(model, w) * phi(w); }, w_lo, a, 1e-13,
      panels_for(a - w_lo, sigma, 16), 1e-16);
  const double middle = numerics::integrate_relative(
      [&](double s) {
        const double w = a + s * s;
        return 2.0 * s * eval_f_w(model, w) * phi(w);
      },
      0.0, std::sqrt(b - a), 1e-13, 16, 1e-16);
  return std::clamp(circular + middle, 0.0, 1.0);
}

CdfTable::CdfTable(const DensityModel& model, double step)
    : model_(model), lo_(0.0), hi_(0.0), step_(step) {
  require_shadowing(model, "CdfTable");
  const double sigma = model.sigma();
  if (!(step_ > 0.0)) step_ = std::min(0.25, sigma / 32.0);
  lo_ = model.support_a() - kTailDecades * model.params().beta();
  hi_ = model.support_b() + 9.0 * sigma;
  const auto n = static_cast<std::size_t>(std::ceil((hi_ - lo_) / step_));
  hi_ = lo_ + step_ * static_cast<double>(n);
  cdf_.resize(n + 1);
  pdf_.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const double l = lo_ + step_ * static_cast<double>(i);
    // Running maximum so quadrature noise near 0 and 1 cannot break
    // monotonicity.
    cdf_[i] = std::max(cdf_f_lp(model, l), i > 0 ? cdf_[i - 1] : 0.0);
    pdf_[i] = eval_f_lp_closed(model, l);
  }
}

double CdfTable::operator()(double l) const {
  if (l < lo_) return std::min(cdf_f_lp(model_, l), cdf_.front());
  // Mass above b + 9 sigma is below Q(9) ~ 1e-19, under half an ulp of 1.
  if (!(l < hi_)) return 1.0;
  const double pos = (l - lo_) / step_;
  auto i = static_cast<std::size_t>(pos);
  if (i + 1 >= cdf_.size()) i = cdf_.size() - 2;
  const double t = pos - static_cast<double>(i);
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
  const double h10 = t3 - 2.0 * t2 + t;
  const double h01 = -2.0 * t3 + 3.0 * t2;
  const double h11 = t3 - t2;
  const double v = h00 * cdf_[i] + h10 * step_ * pdf_[i] +
                   h01 * cdf_[i + 1] + h11 * step_ * pdf_[i + 1];
  return std::clamp(v, cdf_[i], cdf_[i + 1]);
}

}  // namespace hexloss
