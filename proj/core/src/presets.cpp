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

#include "hexloss/presets.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"

namespace hexloss {

namespace {

using nlohmann::json;

void check(const ChannelPreset& p) {
  if (p.name.empty()) throw std::invalid_argument("preset: empty name");
  if (!(p.beta_db_per_decade > 0.0) || !(p.r0_m > 0.0) ||
      !(p.sigma_psi_db >= 0.0)) {
    throw std::invalid_argument("preset '" + p.name +
                                "': need beta > 0, r0 > 0, sigma >= 0");
  }
  if (!(p.cell_radius_min_m > 0.0) ||
      !(p.cell_radius_max_m >= p.cell_radius_min_m)) {
    throw std::invalid_argument("preset '" + p.name +
                                "': invalid cell radius range");
  }
}

}  // namespace

const std::vector<ChannelPreset>& builtin_presets() {
  static const std::vector<ChannelPreset> presets = {
      {"suburban-macro", 31.5, 35.0, 10.0, 35.0, 600.0, 3500.0,
       "COST-231 Hata-Model"},
      {"urban-macro", 34.5, 35.0, 10.0, 35.0, 600.0, 3500.0,
       "COST-231 Hata-Model"},
      {"urban-micro-nlos", 34.53, 38.0, 10.0, 20.0, 200.0, 300.0,
       "COST-231 Walfish-Ikegami"},
      {"urban-micro-los", 30.18, 26.0, 4.0, 20.0, 200.0, 300.0,
       "COST-231 Walfish-Ikegami"},
  };
  return presets;
}

ChannelPreset load_preset(std::string_view name,
                          const std::vector<ChannelPreset>& catalogue) {
  for (const auto& p : catalogue) {
    if (p.name == name) return p;
  }
  std::string valid;
  for (const auto& p : catalogue) {
    if (!valid.empty()) valid += ", ";
    valid += p.name;
  }
  throw unknown_preset_error("unknown preset '" + std::string(name) +
                             "' (valid: " + valid + ")");
}

bool validate_cell_radius(const ChannelPreset& preset, double side_m) {
  return side_m >= preset.cell_radius_min_m &&
         side_m <= preset.cell_radius_max_m;
}

double default_side(const ChannelPreset& preset) {
  if (validate_cell_radius(preset, 1000.0)) return 1000.0;
  return 0.5 * (preset.cell_radius_min_m + preset.cell_radius_max_m);
}

PathLossParams to_pathloss_params(const ChannelPreset& preset) {
  return from_intercept(preset.alpha_prime_db, preset.beta_db_per_decade,
                        preset.r0_m, preset.sigma_psi_db);
}

std::string presets_to_json(const std::vector<ChannelPreset>& presets) {
  json doc = json::array();
  for (const auto& p : presets) {
    doc.push_back({{"name", p.name},
                   {"alpha_prime_db", p.alpha_prime_db},
                   {"beta_db_per_decade", p.beta_db_per_decade},
                   {"sigma_psi_db", p.sigma_psi_db},
                   {"r0_m", p.r0_m},
                   {"cell_radius_min_m", p.cell_radius_min_m},
                   {"cell_radius_max_m", p.cell_radius_max_m},
                   {"model_label", p.model_label}});
  }
  return doc.dump(2) + "\n";
}

std::vector<ChannelPreset> presets_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("preset file: ") + e.what());
  }
  if (!doc.is_array()) {
    throw std::invalid_argument("preset file: top level must be an array");
  }
  std::vector<ChannelPreset> out;
  for (const auto& item : doc) {
    try {
      ChannelPreset p;
      p.name = item.at("name").get<std::string>();
      p.alpha_prime_db = item.at("alpha_prime_db").get<double>();
      p.beta_db_per_decade = item.at("beta_db_per_decade").get<double>();
      p.sigma_psi_db = item.at("sigma_psi_db").get<double>();
      p.r0_m = item.at("r0_m").get<double>();
      p.cell_radius_min_m = item.at("cell_radius_min_m").get<double>();
      p.cell_radius_max_m = item.at("cell_radius_max_m").get<double>();
      p.model_label = item.value("model_label", std::string{});
      check(p);
      out.push_back(std::move(p));
    } catch (const json::exception& e) {
      throw std::invalid_argument(std::string("preset file: ") + e.what());
    }
  }
  return out;
}

std::vector<ChannelPreset> read_preset_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open preset file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return presets_from_json(buf.str());
}

}  // namespace hexloss
