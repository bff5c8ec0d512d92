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
#include <optional>
#include <vector>

#include "torusflow/character.hpp"
#include "torusflow/kernels.hpp"
#include "torusflow/relation.hpp"
#include "torusflow/torus.hpp"

namespace torusflow {

/// sum_k n_k * lambda_k in exact coordinates; zero iff the character is
/// invariant under the flow.
FrequencyVector character_frequency(const FrequencySystem& sys, const CharacterIndex& n);
bool is_resonant(const FrequencySystem& sys, const CharacterIndex& n);

/// Birkhoff average (1/T) * integral_0^T of the character along the flow from
/// theta0, in closed form. Resonance is decided exactly: the resonant value is
/// the character at theta0 for every T, otherwise the modulus decays like
/// 2/(T * |(lambda, n)|).
std::complex<double> time_average_closed(const CharacterIndex& n, const FrequencySystem& sys,
                                         const std::vector<double>& theta0, double big_t);

/// Composite-Simpson cross-check of time_average_closed with a reported
/// error bound.
QuadratureAverage time_average_quadrature(const CharacterIndex& n, const FrequencySystem& sys,
                                          const std::vector<double>& theta0, double big_t,
                                          std::uint64_t steps);

struct SpaceAverage {
  std::complex<double> estimate;
  double stderr_value = 0.0;
};

/// Monte Carlo average of the character under the Kolmogorov product measure.
/// Cylindrical integrands touch finitely many circles, so sampling draws only
/// the supported coordinates. Deterministic for a fixed seed under any worker
/// count.
SpaceAverage space_average_mc(const TorusSpec& torus, const CharacterIndex& n,
                              std::uint64_t samples, std::uint64_t seed);

enum class ErgodicStatus { Ergodic, NotErgodic, PrefixCertifiedOnly };

struct ErgodicityVerdict {
  ErgodicStatus status = ErgodicStatus::PrefixCertifiedOnly;
  std::optional<std::vector<BigInt>> witness;  // annihilates the prefix exactly
  std::size_t prefix_len = 0;
};

/// NotErgodic with an invariant-character witness when the prefix carries an
/// integer relation; Ergodic when relation-free with declared independence;
/// PrefixCertifiedOnly when relation-free but nothing certifies the rest of
/// the sequence.
ErgodicityVerdict ergodicity_verdict(const FrequencySystem& sys, std::size_t upto);

/// Max over nonzero characters supported on `dims` with |n_k| <= 3 of the
/// empirical character mean over the samples. Near 0 for equidistributing
/// trajectories, 1 when an invariant character exists on those dims.
double equidistribution_stat(const std::vector<PhasePoint>& samples,
                             const std::vector<std::uint32_t>& dims);

}  // namespace torusflow
