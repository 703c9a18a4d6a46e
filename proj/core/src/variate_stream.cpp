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

#include "hexloss/variate_stream.hpp"

#include <cmath>

namespace hexloss {

namespace {
// Worker streams are spaced by a fixed odd offset (the 64-bit golden ratio).
constexpr std::uint64_t kWorkerSeedStride = 0x9E3779B97F4A7C15ULL;
constexpr double kTwoPow53 = 9007199254740992.0;
}  // namespace

VariateStream::VariateStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

double VariateStream::uniform() {
  const std::uint64_t bits = engine_() >> 11;
  return (static_cast<double>(bits) + 0.5) / kTwoPow53;
}

double VariateStream::normal() {
  if (spare_normal_) {
    const double z = *spare_normal_;
    spare_normal_.reset();
    return z;
  }
  double v1 = 0.0;
  double v2 = 0.0;
  double s = 0.0;
  do {
    v1 = 2.0 * uniform() - 1.0;
    v2 = 2.0 * uniform() - 1.0;
    s = v1 * v1 + v2 * v2;
  } while (s >= 1.0 || s == 0.0);
  const double scale = std::sqrt(-2.0 * std::log(s) / s);
  spare_normal_ = v2 * scale;
  return v1 * scale;
}

std::string_view VariateStream::generator_label() noexcept {
  return "mt19937_64/uniform53-open/marsaglia-polar";
}

std::uint64_t VariateStream::seed_for_worker(std::uint64_t seed,
                                             std::uint64_t worker) noexcept {
  return seed + worker * kWorkerSeedStride;
}

}  // namespace hexloss
