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

#include "torusflow/rational.hpp"

#include <stdexcept>

namespace torusflow {

namespace {

void check_positive(const std::vector<Rational>& xs, const char* who) {
  if (xs.empty()) throw std::domain_error(std::string(who) + ": empty input");
  for (const auto& x : xs) {
    if (x <= 0) throw std::domain_error(std::string(who) + ": entries must be positive");
  }
}

}  // namespace

Rational rational_gcd(const std::vector<Rational>& xs) {
  check_positive(xs, "rational_gcd");
  // gcd(a/b, c/d) = gcd(a, c) / lcm(b, d) for reduced fractions.
  BigInt num = numerator(xs[0]);
  BigInt den = denominator(xs[0]);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    num = gcd(num, numerator(xs[i]));
    den = lcm(den, denominator(xs[i]));
  }
  return Rational(num, den);
}

Rational rational_lcm(const std::vector<Rational>& xs) {
  check_positive(xs, "rational_lcm");
  // lcm(a/b, c/d) = lcm(a, c) / gcd(b, d) for reduced fractions.
  BigInt num = numerator(xs[0]);
  BigInt den = denominator(xs[0]);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    num = lcm(num, numerator(xs[i]));
    den = gcd(den, denominator(xs[i]));
  }
  return Rational(num, den);
}

BigInt nth_prime(std::uint64_t k) {
  if (k == 0) throw std::domain_error("nth_prime: k must be >= 1");
  // Trial division against the primes found so far. Desk-scale k only.
  std::vector<std::uint64_t> primes;
  std::uint64_t candidate = 2;
  while (primes.size() < k) {
    bool is_prime = true;
    for (std::uint64_t p : primes) {
      if (p * p > candidate) break;
      if (candidate % p == 0) {
        is_prime = false;
        break;
      }
    }
    if (is_prime) primes.push_back(candidate);
    candidate += (candidate == 2) ? 1 : 2;
  }
  return BigInt(primes[k - 1]);
}

BigInt factorial(std::uint64_t k) {
  BigInt acc = 1;
  for (std::uint64_t i = 2; i <= k; ++i) acc *= i;
  return acc;
}

Rational rational_mod1(const Rational& r) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  Rational frac = r - Rational(q);
  return frac;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
  }
}

std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace torusflow
