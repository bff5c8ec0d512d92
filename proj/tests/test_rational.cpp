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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "torusflow/rational.hpp"

using namespace torusflow;

TEST_CASE("rational_gcd on integers and fractions") {
  CHECK(rational_gcd({Rational(2), Rational(4), Rational(6)}) == Rational(2));
  CHECK(rational_gcd({Rational(5, 3)}) == Rational(5, 3));

  // frozen from the brute-force divisor search
  const std::vector<Rational> xs{Rational(3, 2), Rational(7, 5)};
  const Rational g = rational_gcd(xs);
  CHECK(g == Rational(1, 10));
  CHECK(g == oracle::brute_rational_gcd(xs, 21, 10));
  CHECK(xs[0] / g == Rational(15));
  CHECK(xs[1] / g == Rational(14));
}

TEST_CASE("rational_lcm on integers and fractions") {
  CHECK(rational_lcm({Rational(2, 3), Rational(5, 7)}) == Rational(10));
  CHECK(rational_lcm({Rational(1), Rational(2), Rational(3)}) == Rational(6));

  const std::vector<Rational> halves{Rational(1, 2), Rational(1, 3)};
  CHECK(rational_lcm(halves) == Rational(1));
  CHECK(rational_lcm(halves) == oracle::brute_rational_lcm(halves, 100));
}

TEST_CASE("gcd and lcm reject bad input") {
  CHECK_THROWS_AS(rational_gcd({}), std::domain_error);
  CHECK_THROWS_AS(rational_lcm({}), std::domain_error);
  CHECK_THROWS_AS(rational_gcd({Rational(1), Rational(0)}), std::domain_error);
  CHECK_THROWS_AS(rational_lcm({Rational(-1, 2)}), std::domain_error);
}

TEST_CASE("gcd*lcm == a*b for random positive rationals") {
  std::mt19937 rng(20260810);
  std::uniform_int_distribution<int> dist(1, 60);
  for (int trial = 0; trial < 300; ++trial) {
    const Rational a(dist(rng), dist(rng));
    const Rational b(dist(rng), dist(rng));
    CHECK(rational_gcd({a, b}) * rational_lcm({a, b}) == a * b);
  }
}

TEST_CASE("canonical form is maintained through arithmetic") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-40, 40);
  for (int trial = 0; trial < 200; ++trial) {
    int num = dist(rng);
    int den = dist(rng);
    if (den == 0) den = 1;
    const Rational r = Rational(num, den) + Rational(dist(rng), 97) * Rational(3, 5);
    CHECK(denominator(r) > 0);
    CHECK(gcd(abs(numerator(r)), denominator(r)) == 1);
  }
}

TEST_CASE("nth_prime against a sieve") {
  CHECK(nth_prime(1) == 2);
  CHECK(nth_prime(4) == 7);
  CHECK(nth_prime(25) == 97);
  CHECK_THROWS_AS(nth_prime(0), std::domain_error);

  const auto primes = oracle::sieve_primes(2000);
  for (std::size_t k = 1; k <= 100; ++k) CHECK(nth_prime(k) == BigInt(primes[k - 1]));
}

TEST_CASE("rational_mod1 lands in [0,1)") {
  CHECK(rational_mod1(Rational(7, 3)) == Rational(1, 3));
  CHECK(rational_mod1(Rational(-1, 4)) == Rational(3, 4));
  CHECK(rational_mod1(Rational(5)) == Rational(0));
  CHECK(rational_mod1(Rational(-9, 3)) == Rational(0));
}

TEST_CASE("parse and format round-trip") {
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("-21/14") == Rational(-3, 2));
  CHECK(parse_rational("17") == Rational(17));
  CHECK(format_rational(Rational(6, 4)) == "3/2");
  CHECK(format_rational(Rational(-8, 2)) == "-4");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);

  std::mt19937 rng(99);
  std::uniform_int_distribution<long> dist(-100000, 100000);
  for (int trial = 0; trial < 200; ++trial) {
    long den = dist(rng);
    if (den == 0) den = 3;
    const Rational r(dist(rng), den);
    CHECK(parse_rational(format_rational(r)) == r);
  }
}

TEST_CASE("factorial basics") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
}
