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

#ifndef HEXLOSS_PATHLOSS_HPP
#define HEXLOSS_PATHLOSS_HPP

#include "hexloss/variate_stream.hpp"

namespace hexloss {

/// Log-distance path loss with log-normal shadowing,
///   L_p = alpha + beta log10(r / r0) + Psi,   Psi ~ N(0, sigma_psi^2).
/// Distances in metres, losses in dB; beta = 10 n for path-loss exponent n.
class PathLossParams {
 public:
  /// Throws std::invalid_argument unless beta > 0, r0 > 0, sigma_psi >= 0.
  PathLossParams(double alpha_db, double beta_db_per_decade, double r0_m,
                 double sigma_psi_db);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double r0() const noexcept { return r0_; }
  double sigma_psi() const noexcept { return sigma_psi_; }

  double exponent() const noexcept { return beta_ / 10.0; }

  /// Intercept for r in metres, alpha' = alpha - beta log10(r0).
  double alpha_prime() const noexcept;

  PathLossParams with_sigma(double sigma_psi_db) const;

 private:
  double alpha_;
  double beta_;
  double r0_;
  double sigma_psi_;
};

/// Builds params from the metre-referenced intercept:
/// alpha = alpha' + beta log10(r0).
PathLossParams from_intercept(double alpha_prime_db, double beta_db_per_decade,
                              double r0_m, double sigma_psi_db);

/// W(r) = alpha + beta log10(r / r0). r < r0 extrapolates; r <= 0 throws
/// std::domain_error.
double mean_pathloss(const PathLossParams& params, double r);

/// W(r) + sigma_psi * N(0, 1). Draws one normal even when sigma_psi is 0 so
/// the stream advances identically for every sigma.
double sample_lp(const PathLossParams& params, double r, VariateStream& stream);

}  // namespace hexloss

#endif  // HEXLOSS_PATHLOSS_HPP
