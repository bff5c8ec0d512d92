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

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "torusflow/bigfloat.hpp"
#include "torusflow/rational.hpp"

namespace torusflow {

// A named real number the rest of the system treats as part of a
// Q-linearly-independent set. Whether two frequencies are commensurable is
// undecidable from finite decimals, so irrationals enter the system only by
// declaration; the numeric value is carried for evaluation and reporting.
struct BasisSymbol {
  std::string id;
  Real50 value;
  bool independence_declared = true;

  static BasisSymbol unit();                       // id "1", value 1
  static BasisSymbol builtin(const std::string& id);  // "sqrt2", "sqrt3", "sqrt5", "phi", "pi", "e"
};

/// One frequency as a finite rational combination of basis symbols.
/// Zero coefficients are never stored.
class FrequencyVector {
 public:
  FrequencyVector() = default;
  explicit FrequencyVector(std::map<std::string, Rational> coords);

  /// Shorthand for a plain rational frequency c * "1".
  static FrequencyVector rational(const Rational& c);
  /// Shorthand for c * symbol.
  static FrequencyVector multiple(const std::string& symbol, const Rational& c);

  const std::map<std::string, Rational>& coords() const { return coords_; }
  Rational coord(const std::string& symbol) const;
  bool is_zero() const { return coords_.empty(); }

  /// Support is exactly one symbol; returns (symbol, coefficient).
  std::optional<std::pair<std::string, Rational>> single_symbol() const;

  FrequencyVector& add_scaled(const FrequencyVector& other, const Rational& scale);

  friend bool operator==(const FrequencyVector&, const FrequencyVector&) = default;

 private:
  std::map<std::string, Rational> coords_;
};

struct ExplicitFamily {
  friend bool operator==(const ExplicitFamily&, const ExplicitFamily&) = default;
};
struct FactorialFamily {  // lambda_k = 1/k!
  friend bool operator==(const FactorialFamily&, const FactorialFamily&) = default;
};
struct PrimeRatioFamily {  // lambda_k = p_{2k} / p_{2k-1}
  friend bool operator==(const PrimeRatioFamily&, const PrimeRatioFamily&) = default;
};
struct ArithmeticFamily {  // lambda_k = lambda0 * n_k
  Rational lambda0;
  std::vector<BigInt> n;
  friend bool operator==(const ArithmeticFamily&, const ArithmeticFamily&) = default;
};

using Family = std::variant<ExplicitFamily, FactorialFamily, PrimeRatioFamily, ArithmeticFamily>;

std::string family_name(const Family& f);

/// A finite prefix of the frequency sequence plus the generative family tag
/// (when one is known) and the symbol basis the coordinates refer to.
class FrequencySystem {
 public:
  FrequencySystem(std::vector<FrequencyVector> prefix, std::vector<BasisSymbol> basis,
                  Family family = ExplicitFamily{});

  std::size_t size() const { return prefix_.size(); }
  const std::vector<FrequencyVector>& prefix() const { return prefix_; }
  const FrequencyVector& at(std::size_t k) const { return prefix_.at(k); }  // 0-based
  const std::vector<BasisSymbol>& basis() const { return basis_; }
  const Family& family() const { return family_; }

  const BasisSymbol& symbol(const std::string& id) const;
  bool has_symbol(const std::string& id) const;

  /// True when every symbol used by the prefix, other than "1", carries an
  /// independence declaration.
  bool independence_declared() const;

  Real50 value_of(const FrequencyVector& v) const;
  /// High-precision numeric value of lambda_k (0-based), cached.
  const Real50& numeric(std::size_t k) const;
  /// All cached numeric values as doubles, truncated to n entries.
  std::vector<double> numeric_head(std::size_t n) const;

 private:
  std::vector<FrequencyVector> prefix_;
  std::vector<BasisSymbol> basis_;
  Family family_;
  std::map<std::string, std::size_t> index_;
  std::vector<Real50> cache_;
};

/// Materializes the exact length-N prefix of a named family.
FrequencySystem family_generate(const Family& family, std::size_t n);

/// Convenience: explicit system from plain rationals (basis {"1"}).
FrequencySystem make_rational_system(const std::vector<Rational>& values);

}  // namespace torusflow
