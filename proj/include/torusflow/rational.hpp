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

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace torusflow {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction in canonical form: gcd(|num|, den) == 1 and den > 0 after
// every operation (maintained by the backend).
using Rational = boost::multiprecision::cpp_rational;

/// Largest g with x/g a positive integer for every x. All inputs must be > 0.
Rational rational_gcd(const std::vector<Rational>& xs);

/// Smallest m with m/x a positive integer for every x. All inputs must be > 0.
Rational rational_lcm(const std::vector<Rational>& xs);

/// k-th prime, 1-based (nth_prime(1) == 2).
BigInt nth_prime(std::uint64_t k);

BigInt factorial(std::uint64_t k);

/// Fractional part r - floor(r), always in [0, 1).
Rational rational_mod1(const Rational& r);

/// Parses "num/den" or "num" (optional leading '-').
Rational parse_rational(const std::string& text);

/// Canonical "num/den", or just "num" when den == 1.
std::string format_rational(const Rational& r);

}  // namespace torusflow
