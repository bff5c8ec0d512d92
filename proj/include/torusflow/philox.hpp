// Copyright 2026 The torusflow Authors
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

#pragma once

#include <array>
#include <cstdint>

#include "torusflow/bigfloat.hpp"

namespace torusflow {

// Philox4x32-10 counter-based generator. Output is a pure function of
// (counter, key), so sample streams are reproducible under any partitioning
// of the index space across workers.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter block(Counter ctr, Key key) {
    constexpr std::uint32_t kMul0 = 0xD2511F53u;
    constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
      }
      const std::uint64_t prod0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
      const std::uint64_t prod1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
      const std::uint32_t hi0 = static_cast<std::uint32_t>(prod0 >> 32);
      const std::uint32_t lo0 = static_cast<std::uint32_t>(prod0);
      const std::uint32_t hi1 = static_cast<std::uint32_t>(prod1 >> 32);
      const std::uint32_t lo1 = static_cast<std::uint32_t>(prod1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
  }
};

/// Uniform draw in [0, 1) for stream (seed, sample, circle); 53 random bits.
inline double philox_uniform01(std::uint64_t seed, std::uint64_t sample, std::uint32_t circle) {
  const Philox4x32::Counter ctr = {static_cast<std::uint32_t>(sample),
                                   static_cast<std::uint32_t>(sample >> 32), circle, 0x544F5255u};
  const Philox4x32::Key key = {static_cast<std::uint32_t>(seed),
                               static_cast<std::uint32_t>(seed >> 32)};
  const auto out = Philox4x32::block(ctr, key);
  const std::uint64_t bits = (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Uniform angle in [0, 2*pi) for stream (seed, sample, circle).
inline double philox_angle(std::uint64_t seed, std::uint64_t sample, std::uint32_t circle) {
  return kTwoPi * philox_uniform01(seed, sample, circle);
}

}  // namespace torusflow
