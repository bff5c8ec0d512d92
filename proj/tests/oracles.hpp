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

// Independent brute-force oracles for the test suites. Nothing in here calls
// into the code paths under test.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "torusflow/rational.hpp"

namespace torusflow::oracle {

/// All primes <= limit by the classic sieve.
inline std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

/// Exhaustive search for the largest i/j (i <= max_num, j <= max_den) that
/// divides every entry into a positive integer.
inline Rational brute_rational_gcd(const std::vector<Rational>& xs, long max_num, long max_den) {
  Rational best(0);
  for (long i = 1; i <= max_num; ++i) {
    for (long j = 1; j <= max_den; ++j) {
      const Rational g(i, j);
      bool divides_all = true;
      for (const auto& x : xs) {
        const Rational q = x / g;
        if (denominator(q) != 1 || q <= 0) {
          divides_all = false;
          break;
        }
      }
      if (divides_all && g > best) best = g;
    }
  }
  if (best == 0) throw std::logic_error("brute_rational_gcd: no divisor in the search box");
  return best;
}

/// Smallest multiple m = k * xs[0], k = 1..k_max, with m/x a positive integer
/// for every x.
inline Rational brute_rational_lcm(const std::vector<Rational>& xs, long k_max) {
  for (long k = 1; k <= k_max; ++k) {
    const Rational m = Rational(k) * xs[0];
    bool ok = true;
    for (const auto& x : xs) {
      const Rational q = m / x;
      if (denominator(q) != 1 || q <= 0) {
        ok = false;
        break;
      }
    }
    if (ok) return m;
  }
  throw std::logic_error("brute_rational_lcm: no common multiple in the search range");
}

/// Rank of a rational matrix by fraction-free Bareiss elimination. A second
/// route, independent of the library's reduced-row-echelon path.
inline std::size_t bareiss_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  std::vector<bool> used(rows, false);
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = 0; r < rows; ++r) {
      if (!used[r] && m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    used[pivot] = true;
    ++rank;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot || m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[pivot][col];
      for (std::size_t c = 0; c < cols; ++c) m[r][c] -= f * m[pivot][c];
    }
  }
  return rank;
}

}  // namespace torusflow::oracle
