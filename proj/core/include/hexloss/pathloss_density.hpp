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

#ifndef HEXLOSS_PATHLOSS_DENSITY_HPP
#define HEXLOSS_PATHLOSS_DENSITY_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "hexloss/numerics.hpp"
#include "hexloss/pathloss.hpp"

namespace hexloss {

/// Path loss between a base station at the centre of a hexagon of side L and
/// a uniformly dropped mobile. The same law holds for drops confined to the
/// 60-degree triangle or 120-degree rhombus sectors.
///
/// The deterministic part W = alpha + beta log10(r / r0) is supported on
/// (-inf, b], with a breakpoint at a (the inscribed radius):
///   a = alpha + beta log10(sqrt3 L / (2 r0)),  b = alpha + beta log10(L / r0).
class DensityModel {
 public:
  /// Throws std::invalid_argument unless side > 0 and r0 < sqrt3 side / 2.
  DensityModel(double side, PathLossParams params);

  double side() const noexcept { return side_; }
  const PathLossParams& params() const noexcept { return params_; }
  double sigma() const noexcept { return params_.sigma_psi(); }

  double support_a() const noexcept { return a_; }
  double support_b() const noexcept { return b_; }

 private:
  double side_;
  PathLossParams params_;
  double a_;
  double b_;
};

/// Auxiliary quantities of the shadowed closed form at loss level l.
struct ClosedFormTerms {
  double mu = 0.0;      ///< l - alpha + 2 ln10 sigma^2 / beta
  double kappa1 = 0.0;  ///< (mu - beta log10(L / r0)) / sigma
  double kappa2 = 0.0;  ///< (mu - beta log10(sqrt3 L / (2 r0))) / sigma
};

struct ClosedFormOptions {
  numerics::IntegrationMethod method = numerics::IntegrationMethod::quadrature;
  /// Relative tolerance of the Gaussian-arcsine integral; 0 selects 1e-13 for
  /// quadrature and 1e-6 for the series, whose terms decay like n^{-5/2}
  /// because the arcsine argument reaches 1 at the upper limit.
  double rel_tol = 0.0;
};

/// Density of W (no shadowing).
double eval_f_w(const DensityModel& model, double w);

/// Throws std::invalid_argument if sigma_psi <= 0.
ClosedFormTerms closed_form_terms(const DensityModel& model, double l);

/// Density of L_p = W + Psi in closed form,
///   f(l) = K(l) { pi Q(k2) - (2 pi / 3) Q(k1)
///                 + (2 / sqrt(pi)) int_{k1/sqrt2}^{k2/sqrt2} e^{-v^2}
///                   asin(sqrt3 L / (2 r0 10^{(mu - sqrt2 sigma v)/beta})) dv },
///   K(l) = (4 r0^2 ln10 / (sqrt3 L^2 beta)) 10^{2 (ln10 sigma^2 + beta (l - alpha)) / beta^2}.
/// Throws std::invalid_argument if sigma_psi <= 0.
double eval_f_lp_closed(const DensityModel& model, double l,
                        const ClosedFormOptions& options = {});

/// Density of L_p by direct quadrature of the convolution
/// int f_Psi(tau) f_W(l - tau) dtau. Independent of the closed form.
/// Throws std::invalid_argument if sigma_psi <= 0.
double eval_f_lp_oracle(const DensityModel& model, double l);

/// Both sides of the completed-square identity
///   10^{2(l - tau - alpha)/beta} e^{-tau^2 / 2 sigma^2}
///     = e^{2 ln10 (ln10 sigma^2 + beta (l - alpha)) / beta^2}
///       e^{-(tau + 2 ln10 sigma^2 / beta)^2 / 2 sigma^2}.
std::pair<double, double> check_exponent_identity(const DensityModel& model,
                                                  double l, double tau);

/// CDF of L_p, computed as int f_W(w) Phi((l - w) / sigma) dw. With
/// sigma_psi == 0 this is the CDF of W.
double cdf_f_lp(const DensityModel& model, double l);

/// CDF of L_p tabulated on a uniform grid and interpolated by cubic Hermite
/// splines using the closed-form density as the slope. Queries outside the
/// grid fall back to cdf_f_lp. Requires sigma_psi > 0.
class CdfTable {
 public:
  explicit CdfTable(const DensityModel& model, double step = 0.0);

  double operator()(double l) const;

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  std::size_t size() const noexcept { return cdf_.size(); }

 private:
  DensityModel model_;
  double lo_;
  double hi_;
  double step_;
  std::vector<double> cdf_;
  std::vector<double> pdf_;
};

}  // namespace hexloss

#endif  // HEXLOSS_PATHLOSS_DENSITY_HPP
