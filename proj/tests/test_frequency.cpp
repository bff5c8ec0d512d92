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

#include "oracles.hpp"
#include "torusflow/frequency.hpp"

using namespace torusflow;

TEST_CASE("factorial family prefix is 1/k!") {
  const auto sys = family_generate(FactorialFamily{}, 3);
  REQUIRE(sys.size() == 3);
  CHECK(sys.at(0) == FrequencyVector::rational(Rational(1)));
  CHECK(sys.at(1) == FrequencyVector::rational(Rational(1, 2)));
  CHECK(sys.at(2) == FrequencyVector::rational(Rational(1, 6)));
  for (std::size_t k = 0; k < 3; ++k)
    CHECK(sys.at(k).coord("1") == Rational(1, factorial(k + 1)));
}

TEST_CASE("prime-ratio family prefix is p_2k / p_2k-1") {
  const auto sys = family_generate(PrimeRatioFamily{}, 2);
  CHECK(sys.at(0) == FrequencyVector::rational(Rational(3, 2)));
  CHECK(sys.at(1) == FrequencyVector::rational(Rational(7, 5)));

  const auto primes = oracle::sieve_primes(200);
  const auto longer = family_generate(PrimeRatioFamily{}, 8);
  for (std::size_t k = 1; k <= 8; ++k) {
    CHECK(longer.at(k - 1).coord("1") ==
          Rational(BigInt(primes[2 * k - 1]), BigInt(primes[2 * k - 2])));
  }
}

TEST_CASE("arithmetic family multiplies lambda0 by the given naturals") {
  const ArithmeticFamily fam{Rational(1), {1, 2, 3}};
  const auto sys = family_generate(fam, 3);
  CHECK(sys.at(0).coord("1") == Rational(1));
  CHECK(sys.at(1).coord("1") == Rational(2));
  CHECK(sys.at(2).coord("1") == Rational(3));

  CHECK_THROWS_AS(family_generate(ArithmeticFamily{Rational(1), {1, 2}}, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(family_generate(ArithmeticFamily{Rational(-1), {1}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(family_generate(ExplicitFamily{}, 2), std::invalid_argument);
  CHECK_THROWS_AS(family_generate(FactorialFamily{}, 0), std::invalid_argument);
}

TEST_CASE("frequency vectors drop zero coordinates") {
  FrequencyVector v({{"1", Rational(0)}, {"sqrt2", Rational(2, 3)}});
  CHECK(v.coords().size() == 1);
  CHECK(v.coord("1") == 0);
  CHECK(v.coord("sqrt2") == Rational(2, 3));

  v.add_scaled(FrequencyVector::multiple("sqrt2", Rational(-2, 3)), Rational(1));
  CHECK(v.is_zero());
}

TEST_CASE("system validation") {
  // undeclared symbol in the prefix
  CHECK_THROWS_AS(FrequencySystem({FrequencyVector::multiple("sqrt2", Rational(1))},
                                  {BasisSymbol::unit()}),
                  std::invalid_argument);
  // zero frequency
  CHECK_THROWS_AS(FrequencySystem({FrequencyVector{}}, {BasisSymbol::unit()}),
                  std::invalid_argument);
  // negative numeric value: 1 - sqrt2 < 0
  FrequencyVector neg({{"1", Rational(1)}, {"sqrt2", Rational(-1)}});
  CHECK_THROWS_AS(FrequencySystem({neg}, {BasisSymbol::unit(), BasisSymbol::builtin("sqrt2")}),
                  std::invalid_argument);
  // family tag must match the prefix
  CHECK_THROWS_AS(FrequencySystem({FrequencyVector::rational(Rational(2))},
                                  {BasisSymbol::unit()}, FactorialFamily{}),
                  std::invalid_argument);
}

TEST_CASE("numeric cache evaluates combinations at high precision") {
  const auto sqrt2 = BasisSymbol::builtin("sqrt2");
  FrequencySystem sys({FrequencyVector::rational(Rational(1)),
                       FrequencyVector::multiple("sqrt2", Rational(1)),
                       FrequencyVector({{"1", Rational(1)}, {"sqrt2", Rational(1)}})},
                      {BasisSymbol::unit(), sqrt2});
  CHECK(sys.numeric(0) == 1);
  CHECK(abs(sys.numeric(1) - sqrt(Real50(2))) < Real50("1e-45"));
  CHECK(abs(sys.numeric(2) - (1 + sqrt(Real50(2)))) < Real50("1e-45"));

  const auto head = sys.numeric_head(2);
  CHECK(head[0] == 1.0);
  CHECK(head[1] == doctest::Approx(1.4142135623730951).epsilon(1e-15));
  CHECK_THROWS_AS(sys.numeric_head(4), std::out_of_range);
}

TEST_CASE("independence declarations propagate") {
  BasisSymbol undeclared{"x", Real50("1.234567890123456789012345678901"), false};
  FrequencySystem sys({FrequencyVector::multiple("x", Rational(1))},
                      {BasisSymbol::unit(), undeclared});
  CHECK_FALSE(sys.independence_declared());

  FrequencySystem declared({FrequencyVector::multiple("sqrt2", Rational(1))},
                           {BasisSymbol::unit(), BasisSymbol::builtin("sqrt2")});
  CHECK(declared.independence_declared());
}

TEST_CASE("builtin symbols carry at least 30 correct digits") {
  CHECK(abs(BasisSymbol::builtin("sqrt2").value * BasisSymbol::builtin("sqrt2").value - 2) <
        Real50("1e-45"));
  CHECK(abs(BasisSymbol::builtin("phi").value -
            Real50("1.61803398874989484820458683436563811772")) < Real50("1e-38"));
  CHECK_THROWS_AS(BasisSymbol::builtin("tau"), std::invalid_argument);
}
