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

#include "torusflow/intrel.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace torusflow {

namespace {

BigInt round_to_int(const Rational& r) {
  // nearest integer, half away from zero
  BigInt num = numerator(r) * 2 + denominator(r) * (r < 0 ? -1 : 1);
  return num / (denominator(r) * 2);
}

BigInt round_to_int(const Real50& x) {
  Real50 shifted = x < 0 ? x - Real50(0.5) : x + Real50(0.5);
  return boost::multiprecision::trunc(shifted).convert_to<BigInt>();
}

struct Gso {
  std::vector<std::vector<Rational>> mu;  // mu[i][j], j < i
  std::vector<Rational> norm_sq;          // |b_i*|^2

  void compute(const std::vector<std::vector<BigInt>>& b) {
    const std::size_t n = b.size();
    mu.assign(n, std::vector<Rational>(n, Rational(0)));
    norm_sq.assign(n, Rational(0));
    std::vector<std::vector<Rational>> star(n, std::vector<Rational>(b[0].size(), Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < b[i].size(); ++c) star[i][c] = Rational(b[i][c]);
      for (std::size_t j = 0; j < i; ++j) {
        if (norm_sq[j] == 0) {
          mu[i][j] = 0;
          continue;
        }
        Rational proj = 0;
        for (std::size_t c = 0; c < b[i].size(); ++c) proj += Rational(b[i][c]) * star[j][c];
        mu[i][j] = proj / norm_sq[j];
        for (std::size_t c = 0; c < b[i].size(); ++c) star[i][c] -= mu[i][j] * star[j][c];
      }
      Rational ns = 0;
      for (const auto& x : star[i]) ns += x * x;
      norm_sq[i] = ns;
    }
  }
};

}  // namespace

void lll_reduce(std::vector<std::vector<BigInt>>& basis, const Rational& delta) {
  if (basis.size() < 2) return;
  Gso gso;
  gso.compute(basis);
  std::size_t k = 1;
  while (k < basis.size()) {
    for (std::size_t j = k; j-- > 0;) {
      BigInt q = round_to_int(gso.mu[k][j]);
      if (q != 0) {
        for (std::size_t c = 0; c < basis[k].size(); ++c) basis[k][c] -= q * basis[j][c];
        gso.compute(basis);  // small dimensions; exact recompute keeps this simple
      }
    }
    Rational lhs = gso.norm_sq[k];
    Rational rhs = (delta - gso.mu[k][k - 1] * gso.mu[k][k - 1]) * gso.norm_sq[k - 1];
    if (lhs >= rhs) {
      ++k;
    } else {
      std::swap(basis[k], basis[k - 1]);
      gso.compute(basis);
      k = std::max<std::size_t>(1, k - 1);
    }
  }
}

std::optional<std::vector<BigInt>> detect_integer_relation_numeric(
    const std::vector<Real50>& values, const BigInt& coeff_bound, const Real50& tol) {
  const std::size_t n = values.size();
  if (n < 2 || n > 12)
    throw std::domain_error("detect_integer_relation_numeric: need 2..12 values");
  if (coeff_bound < 1) throw std::domain_error("detect_integer_relation_numeric: coeff_bound >= 1");
  if (tol <= 0) throw std::domain_error("detect_integer_relation_numeric: tol must be positive");
  if (tol < Real50("1e-40"))
    throw std::domain_error(
        "detect_integer_relation_numeric: tolerance below the precision of the inputs");

  auto residual_ok = [&](const std::vector<BigInt>& cand) {
    Real50 acc = 0;
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (cand[i] != 0) nonzero = true;
      if (abs(cand[i]) > coeff_bound) return false;
      acc += Real50(cand[i]) * values[i];
    }
    return nonzero && abs(acc) < tol;
  };

  // Standard integer-relation lattice [I | C*v], reduced over a scale ladder.
  for (int exponent = 8; exponent <= 44; exponent += 6) {
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(exponent));
    std::vector<std::vector<BigInt>> rows(n, std::vector<BigInt>(n + 1, BigInt(0)));
    for (std::size_t i = 0; i < n; ++i) {
      rows[i][i] = 1;
      rows[i][n] = round_to_int(Real50(scale) * values[i]);
    }
    lll_reduce(rows);
    for (const auto& row : rows) {
      std::vector<BigInt> cand(row.begin(), row.begin() + n);
      if (!residual_ok(cand)) continue;
      for (auto& x : cand) {
        if (x == 0) continue;
        if (x < 0) {
          for (auto& y : cand) y = -y;
        }
        break;
      }
      return cand;
    }
  }
  return std::nullopt;
}

std::vector<Convergent> continued_fraction_convergents(const Real50& x, const BigInt& max_q) {
  if (x <= 0) throw std::domain_error("continued_fraction_convergents: x must be positive");
  std::vector<Convergent> out;
  // h_{-1} = 1, h_{-2} = 0, k_{-1} = 0, k_{-2} = 1
  BigInt p_prev = 0, q_prev = 1;
  BigInt p = 1, q = 0;
  Real50 rest = x;
  const Real50 floor_eps("1e-42");
  for (int term = 0; term < 200; ++term) {
    BigInt a = boost::multiprecision::trunc(rest).convert_to<BigInt>();
    BigInt p_next = a * p + p_prev;
    BigInt q_next = a * q + q_prev;
    if (q_next > max_q) break;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
    if (q > 0 && q <= max_q) out.push_back({p, q});
    Real50 frac = rest - Real50(a);
    if (frac < floor_eps) break;  // expansion exhausted at working precision
    rest = 1 / frac;
  }
  return out;
}

std::vector<BigInt> simultaneous_denominators(const std::vector<Real50>& alphas,
                                              const BigInt& max_q) {
  if (alphas.empty()) throw std::domain_error("simultaneous_denominators: no ratios given");
  const std::size_t d = alphas.size();
  std::set<BigInt> found;
  for (int exponent = 2; exponent <= 36; exponent += 2) {
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(exponent));
    std::vector<std::vector<BigInt>> rows(d + 1, std::vector<BigInt>(d + 1, BigInt(0)));
    rows[0][0] = 1;
    for (std::size_t i = 0; i < d; ++i) {
      Real50 shifted = Real50(scale) * alphas[i] + Real50(0.5);
      rows[0][i + 1] = boost::multiprecision::trunc(shifted).convert_to<BigInt>();
      rows[i + 1][i + 1] = scale;
    }
    lll_reduce(rows);
    for (const auto& row : rows) {
      BigInt q = abs(row[0]);
      if (q >= 1 && q <= max_q) found.insert(q);
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace torusflow
