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

#ifndef HEXLOSS_VARIATE_STREAM_HPP
#define HEXLOSS_VARIATE_STREAM_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

namespace hexloss {

/// Seedable source of open-interval uniforms and standard normals.
///
/// Backed by the 64-bit Mersenne Twister (period 2^19937 - 1). Uniforms are
/// built from the top 53 bits as (k + 0.5) / 2^53, so 0 and 1 never occur.
/// Normals use the Marsaglia polar method on those uniforms, caching the
/// second variate of each accepted pair. A stream is not thread-safe; give
/// each worker its own (see seed_for_worker).
class VariateStream {
 public:
  explicit VariateStream(std::uint64_t seed = 0);

  std::uint64_t seed() const noexcept { return seed_; }

  /// Uniform on the open interval (0, 1).
  double uniform();

  /// Standard normal N(0, 1).
  double normal();

  /// Human-readable generator name, recorded in reports.
  static std::string_view generator_label() noexcept;

  /// Seed of the independent stream used by worker index `worker`.
  static std::uint64_t seed_for_worker(std::uint64_t seed,
                                       std::uint64_t worker) noexcept;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::optional<double> spare_normal_;
};

}  // namespace hexloss

#endif  // HEXLOSS_VARIATE_STREAM_HPP
