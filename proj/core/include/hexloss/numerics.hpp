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

#ifndef HEXLOSS_NUMERICS_HPP
#define HEXLOSS_NUMERICS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace hexloss::numerics {

/// Raised when an iterative routine exhausts its budget before reaching the
/// requested tolerance (quadrature depth cap, series term cap).
class nonconvergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Standard normal upper tail, Q(x) = erfc(x/sqrt(2))/2.
double q_function(double x);

/// Standard normal CDF, Phi(x) = Q(-x).
inline double normal_cdf(double x) { return q_function(-x); }

/// Scaled complementary error function exp(x^2) * erfc(x).
double erfcx(double x);

/// Recursion-depth cap for integrate_adaptive.
inline constexpr int kMaxSimpsonDepth = 60;

namespace detail {

template <class F>
double simpson_step(const F& f, double a, double b, double fa, double fm,
                    double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double sum = left + right;
  const double delta = sum - whole;
  // Below the rounding floor of the running sum further halving cannot help.
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() *
                       std::abs(sum);
  if (std::abs(delta) <= 15.0 * tol || std::abs(delta) <= floor) {
    return sum + delta / 15.0;
  }
  if (depth <= 0) {
    throw nonconvergence_error("integrate_adaptive: depth cap reached on [" +
                               std::to_string(a) + ", " + std::to_string(b) +
                               "]");
  }
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f over [lo, hi] to absolute error tol.
///
/// The local error estimate is the usual |S(a,m) + S(m,b) - S(a,b)| / 15 with
/// Richardson correction; each bisection halves the budget. Throws
/// nonconvergence_error if the recursion depth cap is hit first.
template <class F>
double integrate_adaptive(const F& f, double lo, double hi, double tol,
                          int max_depth = kMaxSimpsonDepth) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("integrate_adaptive: tol must be positive");
  }
  if (lo == hi) return 0.0;
  if (hi < lo) return -integrate_adaptive(f, hi, lo, tol, max_depth);
  const double fa = f(lo);
  const double fb = f(hi);
  const double fm = f(0.5 * (lo + hi));
  const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_step(f, lo, hi, fa, fm, fb, whole, tol, max_depth);
}

/// Adaptive Simpson on `panels` equal sub-intervals with a tolerance relative
/// to a coarse estimate of the integral magnitude. Splitting first keeps the
/// initial Simpson probe from stepping over narrow peaks.
template <class F>
double integrate_relative(const F& f, double lo, double hi, double rel_tol,
                          std::size_t panels = 32,
                          double abs_floor = 1e-300) {
  if (lo == hi) return 0.0;
  if (panels == 0) panels = 1;
  const double h = (hi - lo) / static_cast<double>(panels);
  // Composite Simpson with 2 sub-steps per panel for the magnitude estimate.
  double scale = 0.0;
  for (std::size_t i = 0; i < panels; ++i) {
    const double a = lo + h * static_cast<double>(i);
    const double b = a + h;
    scale += std::abs(h / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b)));
  }
  const double tol =
      std::max(rel_tol * scale, abs_floor) / static_cast<double>(panels);
  double sum = 0.0;
  for (std::size_t i = 0; i < panels; ++i) {
    const double a = lo + h * static_cast<double>(i);
    const double b = (i + 1 == panels) ? hi : a + h;
    sum += integrate_adaptive(f, a, b, tol);
  }
  return sum;
}

// --- Gaussian-weighted arcsine integral -----------------------------------

/// Parameters of I = integral_{x1}^{x2} exp(-x^2) asin(k 10^{-(a + b x)}) dx.
struct SeriesParams {
  double k = 0.0;      ///< arcsine scale
  double a_app = 0.0;  ///< exponent offset
  double b_app = 0.0;  ///< exponent slope
  double x1 = 0.0;
  double x2 = 0.0;
};

enum class IntegrationMethod { quadrature, series };

/// Hard cap on series terms.
inline constexpr int kMaxSeriesTerms = 500;

/// Arcsine argument k 10^{-(a + b x)}.
double arcsine_argument(const SeriesParams& p, double x);

/// Largest arcsine argument over [x1, x2] (the argument is monotone in x).
double max_arcsine_argument(const SeriesParams& p);

/// Coefficient C_n of the term-by-term integrated arcsine series,
///   C_0 = 1,
///   C_n = (2n-1)! (k 10^{-a})^{2n} / (2^{2n-1} (n-1)! n! (2n+1)^2),  n >= 1,
/// evaluated with log-gamma factorials.
double arcsin_series_coeff(int n, double k, double a_app);

/// I = integral_{x1}^{x2} exp(-x^2) asin(k 10^{-(a + b x)}) dx.
///
/// `quadrature` runs adaptive Simpson to absolute error tol. `series` sums the
/// closed-form expansion until the next term drops below tol * |partial sum|
/// (at least 4 terms, at most kMaxSeriesTerms). b_app == 0 is evaluated
/// analytically on both paths.
///
/// Throws std::domain_error if the arcsine argument exceeds 1 (beyond a
/// 1e-12 rounding allowance) or x1 > x2, and nonconvergence_error if the
/// series does not settle within the cap.
double integrate_arcsine_gauss(const SeriesParams& p, IntegrationMethod method,
                               double tol);

}  // namespace hexloss::numerics

#endif  // HEXLOSS_NUMERICS_HPP
