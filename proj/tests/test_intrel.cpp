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

#include <cmath>
#include <random>

#include "torusflow/intrel.hpp"
#include "torusflow/relation.hpp"

using namespace torusflow;

TEST_CASE("detects the plain halving relation") {
  const auto rel = detect_integer_relation_numeric({Real50(1), Real50(0.5)}, BigInt(1000000),
                                                   Real50("1e-12"));
  REQUIRE(rel.has_value());
  CHECK(*rel == std::vector<BigInt>{1, -2});
}

TEST_CASE("detects 1 + sqrt2 - (1+sqrt2) = 0 from 50-digit decimals") {
  const Real50 root2 = sqrt(Real50(2));
  const auto rel = detect_integer_relation_numeric({Real50(1), root2, 1 + root2}, BigInt(1000000),
                                                   Real50("1e-12"));
  REQUIRE(rel.has_value());
  CHECK(*rel == std::vector<BigInt>{1, 1, -1});
  Real50 residual = Real50((*rel)[0]) + Real50((*rel)[1]) * root2 + Real50((*rel)[2]) * (1 + root2);
  CHECK(abs(residual) < Real50("1e-12"));
}

TEST_CASE("golden ratio admits no relation with coefficients up to 1000") {
  const Real50 phi = (1 + sqrt(Real50(5))) / 2;
  CHECK_FALSE(
      detect_integer_relation_numeric({Real50(1), phi}, BigInt(1000), Real50("1e-12")).has_value());

  // brute-force oracle: the best |n1 + n2*phi| in the box is far above tol
  const double phi_d = (1.0 + std::sqrt(5.0)) / 2.0;
  double best = 1.0;
  for (int n2 = -1000; n2 <= 1000; ++n2) {
    const double target = -n2 * phi_d;
    const double n1 = std::round(target);
    if (std::abs(n1) > 1000.0 || (n2 == 0 && n1 == 0.0)) continue;
    const double residual = std::abs(n1 + n2 * phi_d);
    if (residual > 0) best = std::min(best, residual);
  }
  CHECK(best > 1e-5);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(detect_integer_relation_numeric({Real50(1)}, BigInt(10), Real50("1e-6")),
                  std::domain_error);
  CHECK_THROWS_AS(detect_integer_relation_numeric(std::vector<Real50>(13, Real50(1)), BigInt(10),
                                                  Real50("1e-6")),
                  std::domain_error);
  CHECK_THROWS_AS(
      detect_integer_relation_numeric({Real50(1), Real50(2)}, BigInt(0), Real50("1e-6")),
      std::domain_error);
  CHECK_THROWS_AS(
      detect_integer_relation_numeric({Real50(1), Real50(2)}, BigInt(10), Real50(0)),
      std::domain_error);
  // tolerance below what 50-digit inputs can support
  CHECK_THROWS_AS(
      detect_integer_relation_numeric({Real50(1), Real50(2)}, BigInt(10), Real50("1e-44")),
      std::domain_error);
}

TEST_CASE("numeric detection matches the exact lattice on rational prefixes") {
  std::mt19937 rng(20260101);
  std::uniform_int_distribution<int> num(1, 20), den(1, 9), len(2, 5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(len(rng));
    std::vector<Rational> values;
    std::vector<Real50> decimals;
    for (std::size_t k = 0; k < n; ++k) {
      values.emplace_back(num(rng), den(rng));
      decimals.push_back(to_real50(values.back()));
    }
    const auto sys = make_rational_system(values);
    const bool dependent = relation_lattice(sys, n).rank() >= 1;
    const auto rel =
        detect_integer_relation_numeric(decimals, BigInt(1000000), Real50("1e-12"));
    CHECK(rel.has_value() == dependent);
    if (rel) {
      // with rational inputs, below-tolerance means exactly zero
      Rational exact(0);
      for (std::size_t k = 0; k < n; ++k) exact += Rational((*rel)[k]) * values[k];
      CHECK(exact == 0);
    }
  }
}

TEST_CASE("continued fraction convergents of sqrt2 are the Pell pairs") {
  const auto conv = continued_fraction_convergents(sqrt(Real50(2)), BigInt(6000));
  // oracle: p_{k+1} = 2 p_k + p_{k-1} starting 1/1, 3/2
  std::vector<std::pair<long, long>> pell{{1, 1}, {3, 2}};
  while (pell.back().second <= 6000) {
    const auto [p1, q1] = pell[pell.size() - 1];
    const auto [p0, q0] = pell[pell.size() - 2];
    pell.emplace_back(2 * p1 + p0, 2 * q1 + q0);
  }
  pell.pop_back();
  REQUIRE(conv.size() == pell.size());
  for (std::size_t i = 0; i < conv.size(); ++i) {
    CHECK(conv[i].p == BigInt(pell[i].first));
    CHECK(conv[i].q == BigInt(pell[i].second));
  }
}

TEST_CASE("continued fraction convergents of the golden ratio are Fibonacci pairs") {
  const auto conv = continued_fraction_convergents((1 + sqrt(Real50(5))) / 2, BigInt(100));
  std::vector<std::pair<long, long>> fib{{1, 1}, {2, 1}, {3, 2}, {5, 3}, {8, 5}, {13, 8},
                                         {21, 13}, {34, 21}, {55, 34}, {89, 55}, {144, 89}};
  REQUIRE(conv.size() == fib.size());
  for (std::size_t i = 0; i < conv.size(); ++i) {
    CHECK(conv[i].p == BigInt(fib[i].first));
    CHECK(conv[i].q == BigInt(fib[i].second));
  }
}

TEST_CASE("exact expansions terminate") {
  const auto conv = continued_fraction_convergents(Real50(3) / 8, BigInt(1000));
  REQUIRE(!conv.empty());
  CHECK(conv.back().p == 3);
  CHECK(conv.back().q == 8);
}

TEST_CASE("simultaneous denominators approximate sqrt2 and sqrt3 at once") {
  const std::vector<Real50> alphas{sqrt(Real50(2)), sqrt(Real50(3))};
  const auto qs = simultaneous_denominators(alphas, BigInt(1000000));
  REQUIRE(!qs.empty());
  double best = 1.0;
  for (const auto& q : qs) {
    const double qd = q.convert_to<double>();
    double worst = 0.0;
    for (const auto& a : alphas) {
      const double x = qd * a.convert_to<double>();
      worst = std::max(worst, std::abs(x - std::round(x)));
    }
    best = std::min(best, worst);
  }
  CHECK(best < 0.05);
}
