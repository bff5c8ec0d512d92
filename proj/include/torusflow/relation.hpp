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
#include <string>
#include <vector>

#include "torusflow/frequency.hpp"
#include "torusflow/rational.hpp"

namespace torusflow {

// Integer vectors n with sum_k n_k * lambda_k == 0, decided exactly over the
// declared symbol basis. Basis vectors are primitive, first nonzero entry
// positive, sorted lexicographically; rank + Q-rank(prefix) == ambient_dim.
struct RelationLattice {
  std::size_t ambient_dim = 0;
  std::vector<std::vector<BigInt>> basis;

  std::size_t rank() const { return basis.size(); }
};

RelationLattice relation_lattice(const FrequencySystem& sys, std::size_t upto);

/// Exact Q-rank of the chosen prefix entries (0-based indices).
std::size_t q_rank(const FrequencySystem& sys, const std::vector<std::size_t>& indices);

/// True iff the first `upto` frequencies are Q-linearly dependent. Needs
/// upto >= 2.
bool is_rationally_commensurable(const FrequencySystem& sys, std::size_t upto);

enum class StrongMode {
  // Each prefix element lies in the Q-span of the other upto-1 elements.
  Literal,
  // Relation rank == upto - 1, equivalently every pairwise ratio is rational.
  RankCharacterization,
};

bool is_strongly_commensurable(const FrequencySystem& sys, std::size_t upto,
                               StrongMode mode = StrongMode::RankCharacterization);

// lambda_k = coefficient * gcd-normalized base for every k in the prefix:
// lambda_k = (coefficient * symbol) * multipliers[k].
struct CommonBase {
  Rational coefficient;
  std::string symbol;
  std::vector<BigInt> multipliers;
  // The verdict inspects a finite prefix; only a generative family rule can
  // promote it to the full sequence.
  bool prefix_certified_only = true;
};

std::optional<CommonBase> common_base(const FrequencySystem& sys, std::size_t upto);

// Minimal period as T = 2*pi * turns / value(per_symbol). For plain rational
// systems per_symbol is "1" and T/(2*pi) = turns.
struct PrefixPeriod {
  Rational turns;
  std::string per_symbol;

  friend bool operator==(const PrefixPeriod&, const PrefixPeriod&) = default;
};

std::optional<PrefixPeriod> prefix_period(const FrequencySystem& sys, std::size_t upto);

}  // namespace torusflow
