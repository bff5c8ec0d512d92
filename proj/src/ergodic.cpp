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

#include "torusflow/ergodic.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace torusflow {

FrequencyVector character_frequency(const FrequencySystem& sys, const CharacterIndex& n) {
  if (n.max_circle() > sys.size())
    throw std::invalid_argument("character_frequency: support outside the frequency prefix");
  FrequencyVector combo;
  for (const auto& [k, nk] : n.support()) combo.add_scaled(sys.at(k - 1), Rational(nk));
  return combo;
}

bool is_resonant(const FrequencySystem& sys, const CharacterIndex& n) {
  return character_frequency(sys, n).is_zero();
}

std::complex<double> time_average_closed(const CharacterIndex& n, const FrequencySystem& sys,
                                         const std::vector<double>& theta0, double big_t) {
  if (!(big_t > 0)) throw std::domain_error("time_average_closed: T must be positive");
  if (n.trivial()) return {1.0, 0.0};
  const std::complex<double> at_start = char_eval(theta0, n);
  const FrequencyVector combo = character_frequency(sys, n);
  if (combo.is_zero()) return at_start;  // invariant character

  const double omega = sys.value_of(combo).convert_to<double>();
  // (1/T) int_0^T e^{i w t} dt = (e^{iwT} - 1) / (i w T)
  const std::complex<double> num =
      std::complex<double>(std::cos(omega * big_t) - 1.0, std::sin(omega * big_t));
  const std::complex<double> den(0.0, omega * big_t);
  return at_start * (num / den);
}

QuadratureAverage time_average_quadrature(const CharacterIndex& n, const FrequencySystem& sys,
                                          const std::vector<double>& theta0, double big_t,
                                          std::uint64_t steps) {
  if (steps < 2) throw std::domain_error("time_average_quadrature: steps must be >= 2");
  if (n.trivial()) return {std::complex<double>(1.0, 0.0), 0.0};
  double phase0 = 0.0;
  if (n.max_circle() > theta0.size())
    throw std::invalid_argument("time_average_quadrature: support outside theta0");
  for (const auto& [k, nk] : n.support()) phase0 += static_cast<double>(nk) * theta0[k - 1];
  const FrequencyVector combo = character_frequency(sys, n);
  const double omega = combo.is_zero() ? 0.0 : sys.value_of(combo).convert_to<double>();
  return simpson_character_average(phase0, omega, big_t, steps);
}

SpaceAverage space_average_mc(const TorusSpec& torus, const CharacterIndex& n,
                              std::uint64_t samples, std::uint64_t seed) {
  (void)torus;  // angles are uniform on every factor circle regardless of radius
  if (samples < 1) throw std::domain_error("space_average_mc: samples must be >= 1");
  const McAverage mc = mc_character_average(seed, n.pairs(), samples);
  return {mc.estimate, mc.stderr_value};
}

ErgodicityVerdict ergodicity_verdict(const FrequencySystem& sys, std::size_t upto) {
  if (upto < 1 || upto > sys.size())
    throw std::domain_error("ergodicity_verdict: upto out of range");
  const RelationLattice lattice = relation_lattice(sys, upto);
  ErgodicityVerdict verdict;
  verdict.prefix_len = upto;
  if (lattice.rank() >= 1) {
    verdict.status = ErgodicStatus::NotErgodic;
    verdict.witness = lattice.basis.front();
  } else if (sys.independence_declared()) {
    verdict.status = ErgodicStatus::Ergodic;
  } else {
    verdict.status = ErgodicStatus::PrefixCertifiedOnly;
  }
  return verdict;
}

double equidistribution_stat(const std::vector<PhasePoint>& samples,
                             const std::vector<std::uint32_t>& dims) {
  if (samples.size() < 2) throw std::domain_error("equidistribution_stat: need >= 2 samples");
  if (dims.empty()) throw std::domain_error("equidistribution_stat: dims must be nonempty");
  if (dims.size() > 8) throw std::invalid_argument("equidistribution_stat: too many dims");
  for (std::uint32_t d : dims) {
    if (d == 0) throw std::invalid_argument("equidistribution_stat: circles are 1-based");
    for (const auto& x : samples) {
      if (d > x.trunc_level())
        throw std::invalid_argument("equidistribution_stat: dim outside a sample's truncation");
    }
  }

  constexpr int kMaxHarmonic = 3;
  constexpr int kRange = 2 * kMaxHarmonic + 1;
  const std::size_t d = dims.size();
  const std::size_t nsamples = samples.size();

  // Per sample and dim, the powers e^{i m theta} for m in [-3, 3].
  std::vector<std::complex<double>> table(nsamples * d * kRange);
  for (std::size_t s = 0; s < nsamples; ++s) {
    for (std::size_t j = 0; j < d; ++j) {
      const double theta = samples[s].theta()[dims[j] - 1];
      for (int m = -kMaxHarmonic; m <= kMaxHarmonic; ++m) {
        table[(s * d + j) * kRange + (m + kMaxHarmonic)] = {std::cos(m * theta),
                                                            std::sin(m * theta)};
      }
    }
  }

  std::size_t total = 1;
  for (std::size_t j = 0; j < d; ++j) total *= kRange;
  std::vector<double> moduli(total, 0.0);

#pragma omp parallel for schedule(static)
  for (std::int64_t code = 0; code < static_cast<std::int64_t>(total); ++code) {
    std::array<int, 8> n{};
    std::size_t rest = static_cast<std::size_t>(code);
    bool zero = true;
    for (std::size_t j = 0; j < d; ++j) {
      n[j] = static_cast<int>(rest % kRange) - kMaxHarmonic;
      rest /= kRange;
      if (n[j] != 0) zero = false;
    }
    if (zero) continue;  // skip the constant character
    std::complex<double> acc = 0.0;
    for (std::size_t s = 0; s < nsamples; ++s) {
      std::complex<double> v = 1.0;
      for (std::size_t j = 0; j < d; ++j)
        v *= table[(s * d + j) * kRange + (n[j] + kMaxHarmonic)];
      acc += v;
    }
    moduli[static_cast<std::size_t>(code)] = std::abs(acc) / static_cast<double>(nsamples);
  }

  double stat = 0.0;
  for (double m : moduli) stat = std::max(stat, m);
  return stat;
}

}  // namespace torusflow
