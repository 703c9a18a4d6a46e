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

#ifndef HEXLOSS_PRESETS_HPP
#define HEXLOSS_PRESETS_HPP

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hexloss/pathloss.hpp"

namespace hexloss {

/// Raised for a preset name that is not in the catalogue. The message lists
/// the valid names.
class unknown_preset_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A channel environment: metre-referenced intercept alpha', slope beta,
/// shadowing deviation and close-in distance, plus the cell radii it is
/// specified for.
struct ChannelPreset {
  std::string name;
  double alpha_prime_db = 0.0;
  double beta_db_per_decade = 0.0;
  double sigma_psi_db = 0.0;
  double r0_m = 0.0;
  double cell_radius_min_m = 0.0;
  double cell_radius_max_m = 0.0;
  std::string model_label;

  bool operator==(const ChannelPreset&) const = default;
};

/// Carrier frequency the built-in environments were specified at. Metadata
/// only; nothing in the library depends on it.
inline constexpr double kCarrierFrequencyHz = 1.9e9;

/// IEEE 802.20 suburban/urban macrocell and urban microcell (NLOS, LOS).
const std::vector<ChannelPreset>& builtin_presets();

/// Looks a preset up by name in `catalogue` (the built-ins by default).
ChannelPreset load_preset(std::string_view name,
                          const std::vector<ChannelPreset>& catalogue =
                              builtin_presets());

/// True iff side lies in [cell_radius_min_m, cell_radius_max_m].
bool validate_cell_radius(const ChannelPreset& preset, double side_m);

/// 1000 m when inside the preset's range, otherwise the range midpoint.
double default_side(const ChannelPreset& preset);

PathLossParams to_pathloss_params(const ChannelPreset& preset);

/// Preset file format: a JSON array with one object per preset and keys
/// name, alpha_prime_db, beta_db_per_decade, sigma_psi_db, r0_m,
/// cell_radius_min_m, cell_radius_max_m, model_label.
std::string presets_to_json(const std::vector<ChannelPreset>& presets);

/// Throws std::invalid_argument on malformed documents.
std::vector<ChannelPreset> presets_from_json(std::string_view text);

std::vector<ChannelPreset> read_preset_file(const std::filesystem::path& path);

}  // namespace hexloss

#endif  // HEXLOSS_PRESETS_HPP
