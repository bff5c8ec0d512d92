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

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "torusflow/frequency.hpp"
#include "torusflow/rational.hpp"

namespace torusflow {

struct TailRule {
  enum class Kind { Zero, Geometric, Unknown };
  Kind kind = Kind::Zero;
  double first = 0.0;  // radius of the first circle past the explicit head
  double ratio = 0.0;  // r_{k+1} / r_k past the head, must be in (0, 1)

  friend bool operator==(const TailRule&, const TailRule&) = default;
};

// The invariant torus: explicit head radii plus a tail rule that certifies
// the square-summability of the full radius sequence.
class TorusSpec {
 public:
  explicit TorusSpec(std::vector<double> head, TailRule tail = TailRule{});

  std::size_t head_size() const { return head_.size(); }
  const std::vector<double>& head() const { return head_; }
  const TailRule& tail() const { return tail_; }

  /// Radius of circle k (1-based). Zero tails contribute degenerate circles
  /// past the head; unknown tails throw there.
  double radius(std::size_t k) const;

  /// Upper bound for sum_{k>n} r_k^2. Throws infeasible_error when the tail
  /// rule cannot bound it.
  double tail_sq_sum(std::size_t n) const;
  double total_sq_sum() const { return tail_sq_sum(0); }

  friend bool operator==(const TorusSpec&, const TorusSpec&) = default;

 private:
  std::vector<double> head_;
  TailRule tail_;
};

// Point on the truncated torus in angle coordinates. The chart back to the
// plane is q_k = r_k cos(theta_k), p_k = -r_k sin(theta_k); everything past
// the truncation level is frozen with the tail budget accounting for it.
class PhasePoint {
 public:
  PhasePoint(TorusSpec torus, std::vector<double> theta);
  /// Point with exact angle state theta_k = 2*pi*turns_k.
  static PhasePoint exact(TorusSpec torus, std::vector<Rational> turns);

  std::size_t trunc_level() const { return theta_.size(); }
  const TorusSpec& torus() const { return torus_; }
  const std::vector<double>& theta() const { return theta_; }
  const std::optional<std::vector<Rational>>& turns() const { return turns_; }

  /// The (q, p) chart of the truncated coordinates.
  std::pair<std::vector<double>, std::vector<double>> qp() const;

 private:
  TorusSpec torus_;
  std::vector<double> theta_;
  std::optional<std::vector<Rational>> turns_;
};

// Flow time. Exact form means t = 2*pi * turns / value(per_symbol), which
// keeps angle updates in rational arithmetic whenever the frequencies are
// rational multiples of the same symbol.
struct Time {
  double seconds = 0.0;
  std::optional<std::pair<Rational, std::string>> exact;

  static Time real(double s) { return {s, std::nullopt}; }
  static Time exact_turns(Rational turns, std::string per_symbol = "1") {
    return {0.0, std::make_pair(std::move(turns), std::move(per_symbol))};
  }
};

struct FlowParams {
  FrequencySystem freqs;
  Time time;
};

/// Numeric seconds of a Time with respect to the system's symbol values.
double time_seconds(const FrequencySystem& sys, const Time& t);

/// theta_k -> theta_k + lambda_k * t mod 2*pi. Uses exact rational reduction
/// when both the point and the time carry exact state, high-precision float
/// reduction otherwise.
PhasePoint evolve(const PhasePoint& x, const FlowParams& fp);

/// Realization chart (Re, Im) <-> (q, p); a bijection, inverse below.
std::pair<std::vector<double>, std::vector<double>> realize(
    const std::vector<std::complex<double>>& phi);
std::vector<std::complex<double>> realize_inverse(const std::vector<double>& q,
                                                  const std::vector<double>& p);

/// q'_k = q_k cos(l_k t) + p_k sin(l_k t), p'_k = p_k cos(l_k t) - q_k sin(l_k t).
std::pair<std::vector<double>, std::vector<double>> rotate_qp(const std::vector<double>& q,
                                                              const std::vector<double>& p,
                                                              const FlowParams& fp);

/// Smallest N with tail_sq_sum(N) < eps^2/4, so every point sits within
/// eps/2 of its N-dimensional projection.
std::size_t truncation_index(const TorusSpec& torus, double eps);

struct DistanceInterval {
  double lower = 0.0;
  double upper = 0.0;
};

/// l2 distance bounds between two points on the same torus; the upper bound
/// adds the frozen-tail budget 2*sqrt(tail_sq_sum(min trunc)).
DistanceInterval l2_distance(const PhasePoint& x, const PhasePoint& y);

/// H = sum_{k<=N} (lambda_k/2) r_k^2; angle-independent along the flow.
double energy(const PhasePoint& x, const FlowParams& fp);

/// The conserved actions r_k^2, k <= truncation level.
std::vector<double> first_integrals(const PhasePoint& x);

/// Uniform random angles on the first `trunc` circles (Philox stream).
PhasePoint random_point(const TorusSpec& torus, std::size_t trunc, std::uint64_t seed);

}  // namespace torusflow
