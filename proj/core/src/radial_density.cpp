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

#include "hexloss/radial_density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hexloss/numerics.hpp"

namespace hexloss::radial {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;

void require_side(double side) {
  if (!(side > 0.0)) throw std::invalid_argument("radial: side must be > 0");
}

}  // namespace

double inscribed_radius(double side) { return kSqrt3 * side / 2.0; }

double boundary_radius(double side, double theta) {
  require_side(side);
  if (!(theta >= 0.0 && theta <= kPi / 3.0)) {
    throw std::domain_error("boundary_radius: theta outside [0, pi/3]");
  }
  return kSqrt3 * side / (2.0 * std::sin(2.0 * kPi / 3.0 - theta));
}

double eval_polar_joint(double side, double r, double theta) {
  // boundary_radius validates theta.
  const double edge = boundary_radius(side, theta);
  if (!(r >= 0.0 && r <= edge * (1.0 + 1e-14))) {
    throw std::domain_error("eval_polar_joint: r outside the sector");
  }
  return 4.0 * r / (kSqrt3 * side * side);
}

double eval_f_r(double side, double r) {
  require_side(side);
  if (r < 0.0) throw std::domain_error("eval_f_r: r must be >= 0");
  const double L2 = side * side;
  if (r <= inscribed_radius(side)) return 4.0 * kPi * r / (3.0 * kSqrt3 * L2);
  if (r > side) return 0.0;
  const double arg = std::min(1.0, kSqrt3 * side / (2.0 * r));
  return 8.0 * r / (kSqrt3 * L2) * (std::asin(arg) - kPi / 3.0);
}

double cdf_f_r(double side, double r) {
  require_side(side);
  if (r <= 0.0) return 0.0;
  if (r > side) return 1.0;
  const double r_in = inscribed_radius(side);
  const double L2 = side * side;
  const double inner_at = [&](double x) {
    return 2.0 * kPi * x * x / (3.0 * kSqrt3 * L2);
  }(std::min(r, r_in));
  if (r <= r_in) return inner_at;
  const double upper = std::min(r, side);
  // r = r_in + s^2 removes the square-root kink of asin at the breakpoint.
  const double outer = numerics::integrate_adaptive(
      [side, r_in](double s) { return 2.0 * s * eval_f_r(side, r_in + s * s); },
      0.0, std::sqrt(upper - r_in), 1e-12);
  return std::min(1.0, inner_at + outer);
}

}  // namespace hexloss::radial
