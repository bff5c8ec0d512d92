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

#include "torusflow/frequency.hpp"

#include <stdexcept>
#include <utility>

namespace torusflow {

BasisSymbol BasisSymbol::unit() { return {"1", Real50(1), true}; }

BasisSymbol BasisSymbol::builtin(const std::string& id) {
  if (id == "1") return unit();
  if (id == "sqrt2") return {id, sqrt(Real50(2)), true};
  if (id == "sqrt3") return {id, sqrt(Real50(3)), true};
  if (id == "sqrt5") return {id, sqrt(Real50(5)), true};
  if (id == "phi") return {id, (1 + sqrt(Real50(5))) / 2, true};
  if (id == "pi") return {id, pi50(), true};
  if (id == "e") return {id, exp(Real50(1)), true};
  throw std::invalid_argument("BasisSymbol::builtin: unknown symbol '" + id + "'");
}

FrequencyVector::FrequencyVector(std::map<std::string, Rational> coords) {
  for (auto& [id, c] : coords) {
    if (c != 0) coords_.emplace(id, std::move(c));
  }
}

FrequencyVector FrequencyVector::rational(const Rational& c) { return multiple("1", c); }

FrequencyVector FrequencyVector::multiple(const std::string& symbol, const Rational& c) {
  FrequencyVector v;
  if (c != 0) v.coords_.emplace(symbol, c);
  return v;
}

Rational FrequencyVector::coord(const std::string& symbol) const {
  auto it = coords_.find(symbol);
  return it == coords_.end() ? Rational(0) : it->second;
}

std::optional<std::pair<std::string, Rational>> FrequencyVector::single_symbol() const {
  if (coords_.size() != 1) return std::nullopt;
  return *coords_.begin();
}

FrequencyVector& FrequencyVector::add_scaled(const FrequencyVector& other, const Rational& scale) {
  if (scale == 0) return *this;
  for (const auto& [id, c] : other.coords_) {
    Rational next = coord(id) + c * scale;
    if (next == 0) {
      coords_.erase(id);
    } else {
      coords_[id] = next;
    }
  }
  return *this;
}

std::string family_name(const Family& f) {
  if (std::holds_alternative<FactorialFamily>(f)) return "factorial";
  if (std::holds_alternative<PrimeRatioFamily>(f)) return "prime_ratio";
  if (std::holds_alternative<ArithmeticFamily>(f)) return "arithmetic";
  return "explicit";
}

FrequencySystem::FrequencySystem(std::vector<FrequencyVector> prefix,
                                 std::vector<BasisSymbol> basis, Family family)
    : prefix_(std::move(prefix)), basis_(std::move(basis)), family_(std::move(family)) {
  if (prefix_.empty()) throw std::invalid_argument("FrequencySystem: empty prefix");

  bool has_unit = false;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    auto [it, fresh] = index_.emplace(basis_[i].id, i);
    if (!fresh) throw std::invalid_argument("FrequencySystem: duplicate symbol '" + basis_[i].id + "'");
    if (basis_[i].id == "1") {
      has_unit = true;
      if (basis_[i].value != 1) throw std::invalid_argument("FrequencySystem: symbol \"1\" must have value 1");
    }
  }
  if (!has_unit) {
    index_.emplace("1", basis_.size());
    basis_.push_back(BasisSymbol::unit());
  }

  for (const auto& v : prefix_) {
    if (v.is_zero()) throw std::invalid_argument("FrequencySystem: zero frequency in prefix");
    for (const auto& [id, c] : v.coords()) {
      (void)c;
      if (!index_.contains(id))
        throw std::invalid_argument("FrequencySystem: prefix uses undeclared symbol '" + id + "'");
    }
  }

  cache_.reserve(prefix_.size());
  for (const auto& v : prefix_) {
    Real50 value = value_of(v);
    if (value <= 0)
      throw std::invalid_argument("FrequencySystem: frequencies must evaluate positive");
    cache_.push_back(std::move(value));
  }

  // Family-tagged prefixes must actually agree with the family rule.
  if (const auto* fam = std::get_if<FactorialFamily>(&family_)) {
    (void)fam;
    for (std::size_t k = 0; k < prefix_.size(); ++k) {
      if (prefix_[k] != FrequencyVector::rational(Rational(1, factorial(k + 1))))
        throw std::invalid_argument("FrequencySystem: factorial prefix entry mismatch");
    }
  } else if (std::holds_alternative<PrimeRatioFamily>(family_)) {
    for (std::size_t k = 0; k < prefix_.size(); ++k) {
      Rational expect(nth_prime(2 * (k + 1)), nth_prime(2 * (k + 1) - 1));
      if (prefix_[k] != FrequencyVector::rational(expect))
        throw std::invalid_argument("FrequencySystem: prime-ratio prefix entry mismatch");
    }
  } else if (const auto* ar = std::get_if<ArithmeticFamily>(&family_)) {
    if (ar->n.size() < prefix_.size())
      throw std::invalid_argument("FrequencySystem: arithmetic family shorter than prefix");
    for (std::size_t k = 0; k < prefix_.size(); ++k) {
      if (prefix_[k] != FrequencyVector::rational(ar->lambda0 * Rational(ar->n[k])))
        throw std::invalid_argument("FrequencySystem: arithmetic prefix entry mismatch");
    }
  }
}

const BasisSymbol& FrequencySystem::symbol(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw std::invalid_argument("FrequencySystem: unknown symbol '" + id + "'");
  return basis_[it->second];
}

bool FrequencySystem::has_symbol(const std::string& id) const { return index_.contains(id); }

bool FrequencySystem::independence_declared() const {
  for (const auto& v : prefix_) {
    for (const auto& [id, c] : v.coords()) {
      (void)c;
      if (id != "1" && !symbol(id).independence_declared) return false;
    }
  }
  return true;
}

Real50 FrequencySystem::value_of(const FrequencyVector& v) const {
  Real50 acc = 0;
  for (const auto& [id, c] : v.coords()) acc += to_real50(c) * symbol(id).value;
  return acc;
}

const Real50& FrequencySystem::numeric(std::size_t k) const { return cache_.at(k); }

std::vector<double> FrequencySystem::numeric_head(std::size_t n) const {
  if (n > cache_.size()) throw std::out_of_range("FrequencySystem: prefix shorter than requested");
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = cache_[k].convert_to<double>();
  return out;
}

FrequencySystem family_generate(const Family& family, std::size_t n) {
  if (n < 1) throw std::invalid_argument("family_generate: N must be >= 1");
  std::vector<FrequencyVector> prefix;
  prefix.reserve(n);
  if (std::holds_alternative<FactorialFamily>(family)) {
    for (std::size_t k = 1; k <= n; ++k)
      prefix.push_back(FrequencyVector::rational(Rational(1, factorial(k))));
  } else if (std::holds_alternative<PrimeRatioFamily>(family)) {
    for (std::size_t k = 1; k <= n; ++k)
      prefix.push_back(FrequencyVector::rational(Rational(nth_prime(2 * k), nth_prime(2 * k - 1))));
  } else if (const auto* ar = std::get_if<ArithmeticFamily>(&family)) {
    if (ar->lambda0 <= 0) throw std::invalid_argument("family_generate: lambda0 must be positive");
    if (ar->n.size() < n)
      throw std::invalid_argument("family_generate: arithmetic rule provides fewer than N terms");
    for (std::size_t k = 0; k < n; ++k) {
      if (ar->n[k] <= 0) throw std::invalid_argument("family_generate: n_k must be natural");
      prefix.push_back(FrequencyVector::rational(ar->lambda0 * Rational(ar->n[k])));
    }
  } else {
    throw std::invalid_argument("family_generate: explicit systems have no generative rule");
  }
  return FrequencySystem(std::move(prefix), {BasisSymbol::unit()}, family);
}

FrequencySystem make_rational_system(const std::vector<Rational>& values) {
  std::vector<FrequencyVector> prefix;
  prefix.reserve(values.size());
  for (const auto& v : values) prefix.push_back(FrequencyVector::rational(v));
  return FrequencySystem(std::move(prefix), {BasisSymbol::unit()});
}

}  // namespace torusflow
