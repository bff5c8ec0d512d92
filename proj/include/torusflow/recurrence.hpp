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

#include <optional>
#include <vector>

#include "torusflow/relation.hpp"
#include "torusflow/torus.hpp"

namespace torusflow {

struct ReturnHit {
  double t = 0.0;
  double dist_upper = 0.0;
};

struct ReturnRecord {
  double epsilon = 0.0;
  double horizon = 0.0;
  std::vector<ReturnHit> hits;  // sorted by t; every dist_upper < epsilon
};

struct MinReturn {
  double t_star = 0.0;
  double dist_upper = 0.0;
};

/// Scans the grid t_min + j*dt (plus t_max as the final point) and returns the
/// grid time minimizing the upper distance bound to x0.
MinReturn min_return_distance(const PhasePoint& x0, const FrequencySystem& sys, double t_min,
                              double t_max, double dt);

/// Searches (t_floor, horizon] for returns of x0 within eps: exact period
/// multiples when the prefix has one, Diophantine candidate times otherwise
/// (continued-fraction convergents for one ratio, lattice reduction for
/// several), then a grid scan as a last resort. An empty record means no hit
/// was found, never that none exists.
ReturnRecord nonwandering_evidence(const PhasePoint& x0, const FrequencySystem& sys, double eps,
                                   double t_floor, double horizon);

enum class TrajectoryKind { TypeI_Periodic, TypeII_TransitiveProjection, TypeIII_New };
enum class Certainty { FamilyCertified, PrefixCertified };

using PeriodTable = std::vector<std::pair<std::size_t, std::optional<PrefixPeriod>>>;

struct TrajectoryClass {
  TrajectoryKind kind = TrajectoryKind::TypeI_Periodic;
  Certainty certainty = Certainty::PrefixCertified;
  std::optional<PrefixPeriod> period;        // Type I
  std::vector<std::uint32_t> witness_dims;   // Type II: an independent subset, 1-based
  PeriodTable period_table;                  // Type III: growth evidence
};

/// Three-way taxonomy: periodic (common base), transitive projection (an
/// independent pair exists), or the infinite-dimensional third kind (every
/// projection periodic, projection periods growing). Family tags upgrade the
/// verdict from prefix-certified to family-certified.
TrajectoryClass classify_trajectory(const FrequencySystem& sys, const TorusSpec& torus,
                                    std::size_t upto);

/// prefix_period tabulated for N = 1..n_max.
PeriodTable projection_period_growth(const FrequencySystem& sys, std::size_t n_max);

}  // namespace torusflow
