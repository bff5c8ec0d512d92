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

#include "torusflow/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "torusflow/errors.hpp"
#include "torusflow/intrel.hpp"
#include "torusflow/kernels.hpp"

namespace torusflow {

namespace {

// Fast scan evaluation: double-precision angles are plenty for locating
// candidate minima; reported hits are re-evaluated through evolve().
double scan_distance_upper(const PhasePoint& x0, const std::vector<double>& lambda, double t,
                           double tail_budget) {
  double acc = 0.0;
  for (std::size_t k = 0; k < x0.trunc_level(); ++k) {
    const double delta = std::fmod(lambda[k] * t, kTwoPi);
    const double r = x0.torus().radius(k + 1);
    const double chord = 2.0 * r * std::sin(0.5 * delta);
    acc += chord * chord;
  }
  return std::sqrt(acc) + tail_budget;
}

// Precise distance between x0 and its own image at time t.
double precise_return_upper(const PhasePoint& x0, const FrequencySystem& sys, double t) {
  const PhasePoint moved = evolve(x0, {sys, Time::real(t)});
  return l2_distance(x0, moved).upper;
}

// Independent recheck through the (q, p) chart.
double chart_return_upper(const PhasePoint& x0, const FrequencySystem& sys, double t) {
  const PhasePoint moved = evolve(x0, {sys, Time::real(t)});
  const auto [q0, p0] = x0.qp();
  const auto [q1, p1] = moved.qp();
  double acc = 0.0;
  for (std::size_t k = 0; k < q0.size(); ++k) {
    acc += (q0[k] - q1[k]) * (q0[k] - q1[k]) + (p0[k] - p1[k]) * (p0[k] - p1[k]);
  }
  return std::sqrt(acc) + 2.0 * std::sqrt(x0.torus().tail_sq_sum(x0.trunc_level()));
}

double period_seconds(const FrequencySystem& sys, const PrefixPeriod& pp) {
  return (two_pi50() * to_real50(pp.turns) / sys.symbol(pp.per_symbol).value).convert_to<double>();
}

}  // namespace

MinReturn min_return_distance(const PhasePoint& x0, const FrequencySystem& sys, double t_min,
                              double t_max, double dt) {
  if (!(0.0 < t_min) || !(t_min < t_max) || !(dt > 0.0))
    throw std::domain_error("min_return_distance: need 0 < t_min < t_max and dt > 0");
  if (sys.size() < x0.trunc_level())
    throw std::invalid_argument("min_return_distance: frequency prefix too short");

  const auto count_intervals = static_cast<std::size_t>(std::floor((t_max - t_min) / dt));
  const bool append_end = t_min + static_cast<double>(count_intervals) * dt < t_max;
  const std::size_t count = count_intervals + (append_end ? 1 : 0);
  if (count == 0) throw std::domain_error("min_return_distance: empty grid");

  const std::vector<double> lambda = sys.numeric_head(x0.trunc_level());
  const double tail_budget = 2.0 * std::sqrt(x0.torus().tail_sq_sum(x0.trunc_level()));
  auto grid_time = [&](std::size_t i) {
    return (append_end && i == count - 1) ? t_max : t_min + static_cast<double>(i + 1) * dt;
  };
  const GridScanHit hit = grid_scan_min(
      count, [&](std::size_t i) { return scan_distance_upper(x0, lambda, grid_time(i), tail_budget); });

  const double t_star = grid_time(hit.index);
  return {t_star, precise_return_upper(x0, sys, t_star)};
}

ReturnRecord nonwandering_evidence(const PhasePoint& x0, const FrequencySystem& sys, double eps,
                                   double t_floor, double horizon) {
  if (!(t_floor > 0.0)) throw std::domain_error("nonwandering_evidence: T_floor must be positive");
  if (!(horizon > t_floor))
    throw std::domain_error("nonwandering_evidence: horizon must exceed T_floor");
  if (sys.size() < x0.trunc_level())
    throw std::invalid_argument("nonwandering_evidence: frequency prefix too short");

  const double tail_budget = 2.0 * std::sqrt(x0.torus().tail_sq_sum(x0.trunc_level()));
  if (!(eps > tail_budget)) {
    std::ostringstream msg;
    msg << "nonwandering_evidence: eps " << eps << " not above the frozen-tail budget; "
        << "minimal feasible eps is " << tail_budget;
    throw infeasible_error(msg.str());
  }

  const std::size_t n = x0.trunc_level();
  const std::vector<double> lambda = sys.numeric_head(n);
  std::set<double> candidates;
  constexpr std::size_t kMaxHits = 16;

  if (auto pp = prefix_period(sys, n)) {
    const double period = period_seconds(sys, *pp);
    double m = std::floor(t_floor / period) + 1.0;
    for (std::size_t i = 0; i < kMaxHits && m * period <= horizon; ++i, m += 1.0)
      candidates.insert(m * period);
  } else {
    // Candidate times 2*pi*q/lambda_1 return oscillator 1 exactly; q is chosen
    // so the remaining ratios are simultaneously near integers.
    const double base = kTwoPi / lambda[0];
    const BigInt q_max(static_cast<long long>(horizon / base) + 1);
    std::vector<BigInt> qs;
    if (n == 1) {
      qs.push_back(1);
    } else if (n == 2) {
      const Real50 alpha = sys.numeric(1) / sys.numeric(0);
      for (const auto& c : continued_fraction_convergents(alpha, q_max)) qs.push_back(c.q);
    } else {
      std::vector<Real50> alphas;
      for (std::size_t k = 1; k < n; ++k) alphas.push_back(sys.numeric(k) / sys.numeric(0));
      qs = simultaneous_denominators(alphas, q_max);
    }
    for (const auto& q : qs) {
      const double tq = q.convert_to<double>() * base;
      if (tq <= 0 || tq > horizon) continue;
      // first few multiples of each candidate that clear the floor
      double m = std::max(1.0, std::floor(t_floor / tq) + 1.0);
      for (int i = 0; i < 4 && m * tq <= horizon; ++i, m += 1.0) candidates.insert(m * tq);
    }
  }

  ReturnRecord record;
  record.epsilon = eps;
  record.horizon = horizon;
  auto try_accept = [&](double t) {
    if (!(t > t_floor) || t > horizon || record.hits.size() >= kMaxHits) return;
    const double precise = precise_return_upper(x0, sys, t);
    if (precise >= eps) return;
    if (chart_return_upper(x0, sys, t) >= eps) return;
    record.hits.push_back({t, precise});
  };
  for (double t : candidates) try_accept(t);

  if (record.hits.empty()) {
    // Last resort: scan a bounded window just above the floor.
    const double span = std::min(horizon - t_floor, 4096.0 * kTwoPi / lambda[0]);
    const double dt = span / 262144.0;
    const MinReturn best = min_return_distance(x0, sys, t_floor, t_floor + span, dt);
    if (best.dist_upper < eps) try_accept(best.t_star);
  }

  std::sort(record.hits.begin(), record.hits.end(),
            [](const ReturnHit& a, const ReturnHit& b) { return a.t < b.t; });
  return record;
}

PeriodTable projection_period_growth(const FrequencySystem& sys, std::size_t n_max) {
  if (n_max < 1 || n_max > sys.size())
    throw std::domain_error("projection_period_growth: N_max out of range");
  PeriodTable table;
  table.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) table.emplace_back(n, prefix_period(sys, n));
  return table;
}

TrajectoryClass classify_trajectory(const FrequencySystem& sys, const TorusSpec& torus,
                                    std::size_t upto) {
  (void)torus;  // the verdict depends on frequencies only; any non-degenerate torus behaves alike
  if (upto < 2 || upto > sys.size())
    throw std::domain_error("classify_trajectory: upto must be in [2, prefix length]");

  const RelationLattice lattice = relation_lattice(sys, upto);
  const std::size_t rank_q = upto - lattice.rank();
  TrajectoryClass out;

  if (rank_q >= 2) {
    // Some pair is irrationally related: its 2d projection is transitive.
    out.kind = TrajectoryKind::TypeII_TransitiveProjection;
    out.certainty =
        sys.independence_declared() ? Certainty::FamilyCertified : Certainty::PrefixCertified;
    std::vector<std::size_t> chosen;
    for (std::size_t k = 0; k < upto; ++k) {
      auto trial = chosen;
      trial.push_back(k);
      if (q_rank(sys, trial) > chosen.size()) chosen = std::move(trial);
    }
    for (std::size_t k : chosen) out.witness_dims.push_back(static_cast<std::uint32_t>(k + 1));
    return out;
  }

  // All pairwise ratios rational: every finite projection is periodic.
  const bool factorial = std::holds_alternative<FactorialFamily>(sys.family());
  const bool prime_ratio = std::holds_alternative<PrimeRatioFamily>(sys.family());
  const bool arithmetic = std::holds_alternative<ArithmeticFamily>(sys.family());

  if (factorial || prime_ratio) {
    // Built-in families with provably unbounded projection periods.
    out.kind = TrajectoryKind::TypeIII_New;
    out.certainty = Certainty::FamilyCertified;
    out.period_table = projection_period_growth(sys, upto);
    return out;
  }

  if (arithmetic) {
    out.kind = TrajectoryKind::TypeI_Periodic;
    out.certainty = Certainty::FamilyCertified;
    // 2*pi/lambda0 is a period of every oscillator the family will ever emit.
    const auto& fam = std::get<ArithmeticFamily>(sys.family());
    out.period = PrefixPeriod{Rational(1) / fam.lambda0, "1"};
    return out;
  }

  // Explicit prefix: a strictly growing period table is the Type III signal;
  // otherwise report the periodic prefix. Either way only the prefix is
  // certified.
  out.certainty = Certainty::PrefixCertified;
  out.period_table = projection_period_growth(sys, upto);
  bool all_defined = true;
  bool strictly_growing = true;
  for (std::size_t i = 0; i < out.period_table.size(); ++i) {
    if (!out.period_table[i].second) {
      all_defined = false;
      break;
    }
    if (i > 0 && out.period_table[i].second->per_symbol == out.period_table[i - 1].second->per_symbol &&
        !(out.period_table[i].second->turns > out.period_table[i - 1].second->turns)) {
      strictly_growing = false;
    }
  }
  if (all_defined && strictly_growing && upto >= 3) {
    out.kind = TrajectoryKind::TypeIII_New;
    return out;
  }
  out.kind = TrajectoryKind::TypeI_Periodic;
  out.period = prefix_period(sys, upto);
  out.period_table.clear();
  return out;
}

}  // namespace torusflow
