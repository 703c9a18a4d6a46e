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

#include "hexloss/pathloss.hpp"

#include <cmath>
#include <stdexcept>

namespace hexloss {

PathLossParams::PathLossParams(double alpha_db, double beta_db_per_decade,
                               double r0_m, double sigma_psi_db)
    : alpha_(alpha_db),
      beta_(beta_db_per_decade),
      r0_(r0_m),
      sigma_psi_(sigma_psi_db) {
  if (!std::isfinite(alpha_)) {
    throw std::invalid_argument("PathLossParams: alpha must be finite");
  }
  if (!(beta_ > 0.0) || !std::isfinite(beta_)) {
    throw std::invalid_argument("PathLossParams: beta must be > 0");
  }
  if (!(r0_ > 0.0) || !std::isfinite(r0_)) {
    throw std::invalid_argument("PathLossParams: r0 must be > 0");
  }
  if (!(sigma_psi_ >= 0.0) || !std::isfinite(sigma_psi_)) {
    throw std::invalid_argument("PathLossParams: sigma_psi must be >= 0");
  }
}

double PathLossParams::alpha_prime() const noexcept {
  return alpha_ - beta_ * std::log10(r0_);
}

PathLossParams PathLossParams::with_sigma(double sigma_psi_db) const {
  return PathLossParams(alpha_, beta_, r0_, sigma_psi_db);
}

PathLossParams from_intercept(double alpha_prime_db, double beta_db_per_decade,
                              double r0_m, double sigma_psi_db) {
  if (!(beta_db_per_decade > 0.0)) {
    throw std::invalid_argument("from_intercept: beta must be > 0");
  }
  if (!(r0_m > 0.0)) {
    throw std::invalid_argument("from_intercept: r0 must be > 0");
  }
  return PathLossParams(alpha_prime_db + beta_db_per_decade * std::log10(r0_m),
                        beta_db_per_decade, r0_m, sigma_psi_db);
}

double mean_pathloss(const PathLossParams& params, double r) {
  if (!(r > 0.0)) throw std::domain_error("mean_pathloss: r must be > 0");
  return params.alpha() + params.beta() * std::log10(r / params.r0());
}

double sample_lp(const PathLossParams& params, double r, VariateStream& stream) {
  const double w = mean_pathloss(params, r);
  const double z = stream.normal();
  if (params.sigma_psi() == 0.0) return w;
  return w + params.sigma_psi() * z;
}

}  // namespace hexloss
