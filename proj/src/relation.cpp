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

#include "torusflow/relation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace torusflow {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// In-place reduced row echelon form; returns pivot column per pivot row.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = row;
    while (sel < rows && m[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[row]);
    const Rational inv = Rational(1) / m[row][col];
    for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Symbols (rows) x frequencies (columns) coefficient matrix for the chosen
// prefix entries.
Matrix coefficient_matrix(const FrequencySystem& sys, const std::vector<std::size_t>& indices) {
  std::set<std::string> used;
  for (std::size_t k : indices) {
    for (const auto& [id, c] : sys.at(k).coords()) {
      (void)c;
      used.insert(id);
    }
  }
  Matrix m;
  m.reserve(used.size());
  for (const auto& id : used) {
    std::vector<Rational> row(indices.size());
    for (std::size_t j = 0; j < indices.size(); ++j) row[j] = sys.at(indices[j]).coord(id);
    m.push_back(std::move(row));
  }
  return m;
}

std::vector<std::size_t> first_indices(std::size_t upto) {
  std::vector<std::size_t> idx(upto);
  for (std::size_t i = 0; i < upto; ++i) idx[i] = i;
  return idx;
}

void normalize_integer_vector(std::vector<BigInt>& v) {
  BigInt g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0) {
      for (auto& y : v) y = -y;
    }
    break;
  }
}

void check_upto(const FrequencySystem& sys, std::size_t upto, std::size_t min_upto,
                const char* who) {
  if (upto < min_upto)
    throw std::domain_error(std::string(who) + ": needs at least " + std::to_string(min_upto) +
                            " frequencies");
  if (upto > sys.size())
    throw std::domain_error(std::string(who) + ": upto exceeds prefix length");
}

}  // namespace

RelationLattice relation_lattice(const FrequencySystem& sys, std::size_t upto) {
  check_upto(sys, upto, 1, "relation_lattice");
  const auto indices = first_indices(upto);
  Matrix m = coefficient_matrix(sys, indices);
  const auto pivots = rref(m);

  // Kernel basis from the free columns of the echelon form.
  std::vector<bool> is_pivot(upto, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  RelationLattice lattice;
  lattice.ambient_dim = upto;
  for (std::size_t free_col = 0; free_col < upto; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(upto, Rational(0));
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free_col];

    BigInt scale = 1;
    for (const auto& x : v) scale = lcm(scale, denominator(x));
    std::vector<BigInt> iv(upto);
    for (std::size_t j = 0; j < upto; ++j) iv[j] = numerator(v[j] * Rational(scale));
    normalize_integer_vector(iv);
    lattice.basis.push_back(std::move(iv));
  }
  std::sort(lattice.basis.begin(), lattice.basis.end());
  return lattice;
}

std::size_t q_rank(const FrequencySystem& sys, const std::vector<std::size_t>& indices) {
  if (indices.empty()) return 0;
  Matrix m = coefficient_matrix(sys, indices);
  return rref(m).size();
}

bool is_rationally_commensurable(const FrequencySystem& sys, std::size_t upto) {
  check_upto(sys, upto, 2, "is_rationally_commensurable");
  return relation_lattice(sys, upto).rank() >= 1;
}

bool is_strongly_commensurable(const FrequencySystem& sys, std::size_t upto, StrongMode mode) {
  check_upto(sys, upto, 2, "is_strongly_commensurable");
  if (mode == StrongMode::RankCharacterization) {
    return relation_lattice(sys, upto).rank() == upto - 1;
  }
  const std::size_t full_rank = q_rank(sys, first_indices(upto));
  for (std::size_t drop = 0; drop < upto; ++drop) {
    std::vector<std::size_t> rest;
    rest.reserve(upto - 1);
    for (std::size_t i = 0; i < upto; ++i) {
      if (i != drop) rest.push_back(i);
    }
    // element `drop` lies in the span of the others iff removing it keeps rank
    if (q_rank(sys, rest) != full_rank) return false;
  }
  return true;
}

std::optional<CommonBase> common_base(const FrequencySystem& sys, std::size_t upto) {
  check_upto(sys, upto, 1, "common_base");
  std::string shared;
  std::vector<Rational> coeffs;
  coeffs.reserve(upto);
  for (std::size_t k = 0; k < upto; ++k) {
    auto single = sys.at(k).single_symbol();
    if (!single) return std::nullopt;
    if (k == 0) {
      shared = single->first;
    } else if (single->first != shared) {
      return std::nullopt;
    }
    if (single->second <= 0) return std::nullopt;
    coeffs.push_back(single->second);
  }

  CommonBase base;
  base.symbol = shared;
  base.coefficient = rational_gcd(coeffs);
  base.multipliers.reserve(upto);
  for (const auto& c : coeffs) {
    Rational m = c / base.coefficient;
    base.multipliers.push_back(numerator(m));  // exact integer by gcd choice
  }
  base.prefix_certified_only = !std::holds_alternative<ArithmeticFamily>(sys.family());
  return base;
}

std::optional<PrefixPeriod> prefix_period(const FrequencySystem& sys, std::size_t upto) {
  auto base = common_base(sys, upto);
  if (!base) return std::nullopt;
  // T * lambda_k in 2*pi*Z for all k: with lambda_k = c_k * beta and
  // T = 2*pi*s/beta this asks c_k * s integral, so s = lcm_k(1/c_k).
  std::vector<Rational> inverses;
  inverses.reserve(upto);
  for (std::size_t k = 0; k < upto; ++k) {
    auto single = sys.at(k).single_symbol();
    inverses.push_back(Rational(1) / single->second);
  }
  return PrefixPeriod{rational_lcm(inverses), base->symbol};
}

}  // namespace torusflow
