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

#include <complex>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace torusflow {

// Data-parallel inner loops, OpenMP-parallel with a fixed blocked reduction
// order: results are bitwise identical for any thread count, including one.
// Each kernel keeps a naive serial twin as the reference for tests and the
// benchmark tool.

struct McAverage {
  std::complex<double> estimate;
  double stderr_value = 0.0;
};

/// Monte Carlo mean of exp(i * sum_k n_k * phi_k) under independent uniform
/// angles, one Philox stream per (sample, circle). Support entries are
/// (circle index, n_k).
McAverage mc_character_average(std::uint64_t seed,
                               const std::vector<std::pair<std::uint32_t, std::int64_t>>& support,
                               std::uint64_t samples);
McAverage mc_character_average_serial(
    std::uint64_t seed, const std::vector<std::pair<std::uint32_t, std::int64_t>>& support,
    std::uint64_t samples);

struct QuadratureAverage {
  std::complex<double> estimate;
  double error_bound = 0.0;  // analytic Simpson bound plus rounding slack
};

/// Composite Simpson estimate of (1/T) * integral_0^T exp(i(phase0 + omega t)) dt.
QuadratureAverage simpson_character_average(double phase0, double omega, double big_t,
                                            std::uint64_t steps);
QuadratureAverage simpson_character_average_serial(double phase0, double omega, double big_t,
                                                   std::uint64_t steps);

struct GridScanHit {
  std::size_t index = 0;
  double value = 0.0;
};

/// First index attaining the minimum of eval over [0, count).
GridScanHit grid_scan_min(std::size_t count, const std::function<double(std::size_t)>& eval);
GridScanHit grid_scan_min_serial(std::size_t count,
                                 const std::function<double(std::size_t)>& eval);

}  // namespace torusflow
