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

#include "torusflow/bigfloat.hpp"
#include "torusflow/rational.hpp"

namespace torusflow {

/// Textbook LLL reduction with exact rational Gram-Schmidt data. Rows of
/// `basis` are the lattice vectors; reduced in place.
void lll_reduce(std::vector<std::vector<BigInt>>& basis, const Rational& delta = Rational(3, 4));

/// Heuristic search for a nonzero integer vector n with |sum n_k v_k| < tol
/// and max |n_k| <= coeff_bound. A nullopt is *not* a proof of independence.
/// Requires 2 <= |values| <= 12 and tol within the Real50 precision budget.
std::optional<std::vector<BigInt>> detect_integer_relation_numeric(
    const std::vector<Real50>& values, const BigInt& coeff_bound, const Real50& tol);

struct Convergent {
  BigInt p;
  BigInt q;
};

/// Continued-fraction convergents p/q of x with q <= max_q.
std::vector<Convergent> continued_fraction_convergents(const Real50& x, const BigInt& max_q);

/// Denominators q <= max_q making every q*alpha_i simultaneously close to an
/// integer, found by lattice reduction over a ladder of scales. Sorted,
/// deduplicated, best-effort.
std::vector<BigInt> simultaneous_denominators(const std::vector<Real50>& alphas,
                                              const BigInt& max_q);

}  // namespace torusflow
