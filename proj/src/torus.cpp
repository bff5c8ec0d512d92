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

#include "torusflow/torus.hpp"

#include <cmath>
#include <stdexcept>

#include "torusflow/errors.hpp"
#include "torusflow/philox.hpp"

namespace torusflow {

TorusSpec::TorusSpec(std::vector<double> head, TailRule tail)
    : head_(std::move(head)), tail_(tail) {
  if (head_.empty()) throw std::invalid_argument("TorusSpec: explicit head must be nonempty");
  for (double r : head_) {
    if (!(r > 0.0) || !std::isfinite(r))
      throw std::invalid_argument("TorusSpec: head radii must be positive (degenerate torus)");
  }
  if (tail_.kind == TailRule::Kind::Geometric) {
    if (!(tail_.first > 0.0) || !(tail_.ratio > 0.0) || !(tail_.ratio < 1.0))
      throw std::invalid_argument("TorusSpec: geometric tail needs first > 0 and ratio in (0,1)");
  }
}

double TorusSpec::radius(std::size_t k) const {
  if (k == 0) throw std::out_of_range("TorusSpec::radius: circles are 1-based");
  if (k <= head_.size()) return head_[k - 1];
  switch (tail_.kind) {
    case TailRule::Kind::Zero:
      return 0.0;
    case TailRule::Kind::Geometric:
      return tail_.first * std::pow(tail_.ratio, static_cast<double>(k - head_.size() - 1));
    case TailRule::Kind::Unknown:
    default:
      throw infeasible_error("TorusSpec::radius: tail bound unavailable past the explicit head");
  }
}

double TorusSpec::tail_sq_sum(std::size_t n) const {
  const std::size_t m = head_.size();
  double past_head = 0.0;
  switch (tail_.kind) {
    case TailRule::Kind::Zero:
      past_head = 0.0;
      break;
    case TailRule::Kind::Geometric: {
      const double f2 = tail_.first * tail_.first;
      const double q2 = tail_.ratio * tail_.ratio;
      const std::size_t skip = n > m ? n - m : 0;  // tail terms already inside the first n
      past_head = f2 * std::pow(q2, static_cast<double>(skip)) / (1.0 - q2);
      break;
    }
    case TailRule::Kind::Unknown:
    default:
      throw infeasible_error("TorusSpec::tail_sq_sum: tail bound unavailable");
  }
  double acc = past_head;
  for (std::size_t k = n; k < m; ++k) acc += head_[k] * head_[k];
  return acc;
}

PhasePoint::PhasePoint(TorusSpec torus, std::vector<double> theta)
    : torus_(std::move(torus)), theta_(std::move(theta)) {
  if (theta_.empty()) throw std::invalid_argument("PhasePoint: empty angle vector");
  for (double& a : theta_) {
    if (!std::isfinite(a)) throw std::invalid_argument("PhasePoint: non-finite angle");
    if (a < 0.0 || a >= kTwoPi) a = reduce_angle(a);
  }
  torus_.radius(theta_.size());  // tail must cover the truncation level
}

PhasePoint PhasePoint::exact(TorusSpec torus, std::vector<Rational> turns) {
  std::vector<double> theta;
  theta.reserve(turns.size());
  for (auto& t : turns) {
    t = rational_mod1(t);
    double a = (two_pi50() * to_real50(t)).convert_to<double>();
    if (a >= kTwoPi) a -= kTwoPi;
    theta.push_back(a);
  }
  PhasePoint p(std::move(torus), std::move(theta));
  p.turns_ = std::move(turns);
  return p;
}

std::pair<std::vector<double>, std::vector<double>> PhasePoint::qp() const {
  std::vector<double> q(theta_.size()), p(theta_.size());
  for (std::size_t k = 0; k < theta_.size(); ++k) {
    const double r = torus_.radius(k + 1);
    q[k] = r * std::cos(theta_[k]);
    p[k] = -r * std::sin(theta_[k]);
  }
  return {std::move(q), std::move(p)};
}

double time_seconds(const FrequencySystem& sys, const Time& t) {
  if (!t.exact) return t.seconds;
  const auto& [turns, symbol] = *t.exact;
  return (two_pi50() * to_real50(turns) / sys.symbol(symbol).value).convert_to<double>();
}

PhasePoint evolve(const PhasePoint& x, const FlowParams& fp) {
  const std::size_t n = x.trunc_level();
  if (fp.freqs.size() < n)
    throw std::invalid_argument("evolve: frequency prefix shorter than truncation level");

  if (fp.time.exact && x.turns()) {
    const auto& [rho, symbol] = *fp.time.exact;
    // theta_k/2pi advances by c_k * rho when lambda_k = c_k * symbol.
    bool compatible = true;
    std::vector<Rational> next(n);
    for (std::size_t k = 0; k < n; ++k) {
      auto single = fp.freqs.at(k).single_symbol();
      if (!single || single->first != symbol) {
        compatible = false;
        break;
      }
      next[k] = rational_mod1((*x.turns())[k] + single->second * rho);
    }
    if (compatible) return PhasePoint::exact(x.torus(), std::move(next));
  }

  Real50 t50 = fp.time.exact
                   ? two_pi50() * to_real50(fp.time.exact->first) /
                         fp.freqs.symbol(fp.time.exact->second).value
                   : Real50(fp.time.seconds);
  std::vector<double> theta(n);
  for (std::size_t k = 0; k < n; ++k) {
    theta[k] = reduce_angle(Real50(x.theta()[k]) + fp.freqs.numeric(k) * t50);
  }
  return PhasePoint(x.torus(), std::move(theta));
}

std::pair<std::vector<double>, std::vector<double>> realize(
    const std::vector<std::complex<double>>& phi) {
  std::vector<double> q(phi.size()), p(phi.size());
  for (std::size_t k = 0; k < phi.size(); ++k) {
    q[k] = phi[k].real();
    p[k] = phi[k].imag();
  }
  return {std::move(q), std::move(p)};
}

std::vector<std::complex<double>> realize_inverse(const std::vector<double>& q,
                                                  const std::vector<double>& p) {
  if (q.size() != p.size()) throw std::invalid_argument("realize_inverse: length mismatch");
  std::vector<std::complex<double>> phi(q.size());
  for (std::size_t k = 0; k < q.size(); ++k) phi[k] = {q[k], p[k]};
  return phi;
}

std::pair<std::vector<double>, std::vector<double>> rotate_qp(const std::vector<double>& q,
                                                              const std::vector<double>& p,
                                                              const FlowParams& fp) {
  if (q.size() != p.size()) throw std::invalid_argument("rotate_qp: length mismatch");
  if (fp.freqs.size() < q.size())
    throw std::invalid_argument("rotate_qp: frequency prefix shorter than input");
  const Real50 t50(time_seconds(fp.freqs, fp.time));
  std::vector<double> q2(q.size()), p2(p.size());
  for (std::size_t k = 0; k < q.size(); ++k) {
    const double a = reduce_angle(fp.freqs.numeric(k) * t50);
    const double c = std::cos(a), s = std::sin(a);
    q2[k] = q[k] * c + p[k] * s;
    p2[k] = p[k] * c - q[k] * s;
  }
  return {std::move(q2), std::move(p2)};
}

std::size_t truncation_index(const TorusSpec& torus, double eps) {
  if (!(eps > 0.0)) throw std::domain_error("truncation_index: eps must be positive");
  const double budget = eps * eps / 4.0;
  // tail_sq_sum(n) decreases to 0, so this terminates for every bounded tail.
  for (std::size_t n = 0;; ++n) {
    if (torus.tail_sq_sum(n) < budget) return n;
  }
}

DistanceInterval l2_distance(const PhasePoint& x, const PhasePoint& y) {
  if (!(x.torus() == y.torus()))
    throw std::invalid_argument("l2_distance: points live on different tori");
  const std::size_t shared = std::min(x.trunc_level(), y.trunc_level());
  double acc = 0.0;
  for (std::size_t k = 0; k < shared; ++k) {
    const double r = x.torus().radius(k + 1);
    const double chord = 2.0 * r * std::sin(0.5 * (x.theta()[k] - y.theta()[k]));
    acc += chord * chord;
  }
  DistanceInterval d;
  d.lower = std::sqrt(acc);
  d.upper = d.lower + 2.0 * std::sqrt(x.torus().tail_sq_sum(shared));
  return d;
}

double energy(const PhasePoint& x, const FlowParams& fp) {
  if (fp.freqs.size() < x.trunc_level())
    throw std::invalid_argument("energy: frequency prefix shorter than truncation level");
  double acc = 0.0;
  for (std::size_t k = 0; k < x.trunc_level(); ++k) {
    const double r = x.torus().radius(k + 1);
    acc += 0.5 * fp.freqs.numeric(k).convert_to<double>() * r * r;
  }
  return acc;
}

std::vector<double> first_integrals(const PhasePoint& x) {
  std::vector<double> out(x.trunc_level());
  for (std::size_t k = 0; k < out.size(); ++k) {
    const double r = x.torus().radius(k + 1);
    out[k] = r * r;
  }
  return out;
}

PhasePoint random_point(const TorusSpec& torus, std::size_t trunc, std::uint64_t seed) {
  if (trunc == 0) throw std::invalid_argument("random_point: truncation level must be >= 1");
  std::vector<double> theta(trunc);
  for (std::size_t k = 0; k < trunc; ++k)
    theta[k] = philox_angle(seed, 0, static_cast<std::uint32_t>(k + 1));
  return PhasePoint(torus, std::move(theta));
}

}  // namespace torusflow
