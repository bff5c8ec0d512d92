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

#include "torusflow/kernels.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <stdexcept>

#include "torusflow/philox.hpp"

namespace torusflow {

namespace {

// Fixed block size decouples the reduction tree from the thread count.
constexpr std::uint64_t kBlock = 4096;

template <class Term>
std::complex<double> blocked_complex_sum(std::uint64_t count, Term term) {
  const std::int64_t nblocks = static_cast<std::int64_t>((count + kBlock - 1) / kBlock);
  std::vector<std::complex<double>> partial(static_cast<std::size_t>(nblocks));
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < nblocks; ++b) {
    const std::uint64_t lo = static_cast<std::uint64_t>(b) * kBlock;
    const std::uint64_t hi = std::min(count, lo + kBlock);
    std::complex<double> acc = 0.0;
    for (std::uint64_t i = lo; i < hi; ++i) acc += term(i);
    partial[static_cast<std::size_t>(b)] = acc;
  }
  std::complex<double> total = 0.0;
  for (const auto& x : partial) total += x;
  return total;
}

template <class Term>
double blocked_real_sum(std::uint64_t count, Term term) {
  const std::int64_t nblocks = static_cast<std::int64_t>((count + kBlock - 1) / kBlock);
  std::vector<double> partial(static_cast<std::size_t>(nblocks));
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < nblocks; ++b) {
    const std::uint64_t lo = static_cast<std::uint64_t>(b) * kBlock;
    const std::uint64_t hi = std::min(count, lo + kBlock);
    double acc = 0.0;
    for (std::uint64_t i = lo; i < hi; ++i) acc += term(i);
    partial[static_cast<std::size_t>(b)] = acc;
  }
  double total = 0.0;
  for (double x : partial) total += x;
  return total;
}

std::complex<double> character_draw(
    std::uint64_t seed, const std::vector<std::pair<std::uint32_t, std::int64_t>>& support,
    std::uint64_t sample) {
  double arg = 0.0;
  for (const auto& [circle, n] : support) {
    arg += static_cast<double>(n) * philox_angle(seed, sample, circle);
  }
  return {std::cos(arg), std::sin(arg)};
}

double stderr_from(std::uint64_t samples, double sum_sq_dev) {
  if (samples < 2) return 0.0;
  const double var = sum_sq_dev / static_cast<double>(samples - 1);
  return std::sqrt(var / static_cast<double>(samples));
}

}  // namespace

McAverage mc_character_average(std::uint64_t seed,
                               const std::vector<std::pair<std::uint32_t, std::int64_t>>& support,
                               std::uint64_t samples) {
  if (samples < 1) throw std::domain_error("mc_character_average: samples must be >= 1");
  if (support.empty()) return {std::complex<double>(1.0, 0.0), 0.0};

  const std::complex<double> sum =
      blocked_complex_sum(samples, [&](std::uint64_t s) { return character_draw(seed, support, s); });
  const std::complex<double> mean = sum / static_cast<double>(samples);
  const double dev = blocked_real_sum(samples, [&](std::uint64_t s) {
    return std::norm(character_draw(seed, support, s) - mean);
  });
  return {mean, stderr_from(samples, dev)};
}

McAverage mc_character_average_serial(
    std::uint64_t seed, const std::vector<std::pair<std::uint32_t, std::int64_t>>& support,
    std::uint64_t samples) {
  if (samples < 1) throw std::domain_error("mc_character_average: samples must be >= 1");
  if (support.empty()) return {std::complex<double>(1.0, 0.0), 0.0};
  std::complex<double> sum = 0.0;
  for (std::uint64_t s = 0; s < samples; ++s) sum += character_draw(seed, support, s);
  const std::complex<double> mean = sum / static_cast<double>(samples);
  double dev = 0.0;
  for (std::uint64_t s = 0; s < samples; ++s) dev += std::norm(character_draw(seed, support, s) - mean);
  return {mean, stderr_from(samples, dev)};
}

namespace {

double simpson_weight(std::uint64_t j, std::uint64_t steps) {
  if (j == 0 || j == steps) return 1.0;
  return (j % 2 == 1) ? 4.0 : 2.0;
}

QuadratureAverage simpson_common(double phase0, double omega, double big_t, std::uint64_t steps,
                                 bool parallel) {
  if (steps < 2) throw std::domain_error("simpson_character_average: steps must be >= 2");
  if (!(big_t > 0.0)) throw std::domain_error("simpson_character_average: T must be positive");
  if (steps % 2 == 1) ++steps;
  const double h = big_t / static_cast<double>(steps);
  auto term = [&](std::uint64_t j) {
    const double arg = phase0 + omega * (h * static_cast<double>(j));
    return simpson_weight(j, steps) * std::complex<double>(std::cos(arg), std::sin(arg));
  };
  std::complex<double> sum = 0.0;
  if (parallel) {
    sum = blocked_complex_sum(steps + 1, term);
  } else {
    for (std::uint64_t j = 0; j <= steps; ++j) sum += term(j);
  }
  QuadratureAverage out;
  out.estimate = sum * (h / (3.0 * big_t));
  const double h4 = h * h * h * h;
  const double w4 = omega * omega * omega * omega;
  out.error_bound = h4 * w4 / 180.0 + 4.0 * DBL_EPSILON * static_cast<double>(steps + 1);
  return out;
}

}  // namespace

QuadratureAverage simpson_character_average(double phase0, double omega, double big_t,
                                            std::uint64_t steps) {
  return simpson_common(phase0, omega, big_t, steps, true);
}

QuadratureAverage simpson_character_average_serial(double phase0, double omega, double big_t,
                                                   std::uint64_t steps) {
  return simpson_common(phase0, omega, big_t, steps, false);
}

GridScanHit grid_scan_min(std::size_t count, const std::function<double(std::size_t)>& eval) {
  if (count == 0) throw std::domain_error("grid_scan_min: empty grid");
  const std::int64_t nblocks = static_cast<std::int64_t>((count + kBlock - 1) / kBlock);
  std::vector<GridScanHit> partial(static_cast<std::size_t>(nblocks));
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < nblocks; ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
    const std::size_t hi = std::min(count, lo + static_cast<std::size_t>(kBlock));
    GridScanHit best{lo, eval(lo)};
    for (std::size_t i = lo + 1; i < hi; ++i) {
      const double v = eval(i);
      if (v < best.value) best = {i, v};
    }
    partial[static_cast<std::size_t>(b)] = best;
  }
  GridScanHit best = partial[0];
  for (const auto& cand : partial) {
    if (cand.value < best.value) best = cand;
  }
  return best;
}

GridScanHit grid_scan_min_serial(std::size_t count,
                                 const std::function<double(std::size_t)>& eval) {
  if (count == 0) throw std::domain_error("grid_scan_min: empty grid");
  GridScanHit best{0, eval(0)};
  for (std::size_t i = 1; i < count; ++i) {
    const double v = eval(i);
    if (v < best.value) best = {i, v};
  }
  return best;
}

}  // namespace torusflow
