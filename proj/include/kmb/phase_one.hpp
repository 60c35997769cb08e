// Copyright 2026 The Authors.
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

#ifndef KMB_PHASE_ONE_HPP_
#define KMB_PHASE_ONE_HPP_

#include <algorithm>
#include <cmath>
#include <vector>

#include "kmb/capped_cost.hpp"
#include "kmb/instance.hpp"

namespace kmb {

/// Sorted unique values (2k+1)*shrink*c_ij over all edges, plus the
/// sentinels 0 and inf. Between two consecutive breakpoints the
/// assigned/unassigned pattern of every candidate center set is constant.
struct BreakpointIndex {
  std::vector<double> values;

  static BreakpointIndex build(const Instance& inst, const CappedParams& p) {
    BreakpointIndex idx;
    idx.values.reserve(static_cast<std::size_t>(inst.num_edges()) + 2);
    idx.values.push_back(0.0);
    idx.values.push_back(kInf);
    for (const Edge& e : inst.edges()) {
      idx.values.push_back(p.breakpoint_of(e.cost));
    }
    std::sort(idx.values.begin(), idx.values.end());
    idx.values.erase(std::unique(idx.values.begin(), idx.values.end()),
                     idx.values.end());
    return idx;
  }
};

struct Phase1Step {
  int iteration = 0;
  double lambda = 0.0;
  double tau = 0.0;
  int center = 0;
  double capped_after = 0.0;
};

struct Phase1Trace {
  std::vector<Phase1Step> steps;
  double final_lambda = 0.0;
};

struct Phase1Result {
  double lambda = 0.0;
  std::vector<int> centers;
  Phase1Trace trace;
};

struct LambdaStepResult {
  double lambda = 0.0;
  int center = 0;
};

/// Smallest lambda >= lambda_prev at which some single addition brings the
/// capped cost down to tau, together with a center attaining it.
///
/// If the condition already holds at lambda_prev, returns lambda_prev and the
/// best addition there. Otherwise locates the breakpoint interval containing
/// the answer (the O(m) predicate "min_i capped cost <= tau" is monotone in
/// lambda), aggregates per-center assigned-cost sums c'(i) and unassigned
/// counts u(i) for the interval's fixed pattern, and takes the closed form
///   lambda_t = max(lambda_prev, min_i c'(i)*shrink / (tau - u(i)*cap)),
/// where centers with tau - u(i)*cap <= 0 contribute infinity. All candidates
/// infinite gives lambda_t = inf. Classification inside the interval compares
/// pattern breakpoints against the interval's lower endpoint, never against
/// an interior lambda.
///
/// interval_hint, when given, carries the located interval index across calls
/// (valid because lambda never decreases within one solve).
inline LambdaStepResult lambda_step(const AssignmentState& state,
                                    double lambda_prev, double tau,
                                    const BreakpointIndex& index,
                                    const CappedParams& p,
                                    std::size_t* interval_hint = nullptr) {
  const Instance& inst = state.instance();
  const std::vector<double>& beta = index.values;
  const std::size_t last = beta.size() - 1;  // index of the inf sentinel

  const auto predicate = [&](double lambda) {
    return best_addition(state, lambda, p).capped_cost <= tau;
  };

  Addition at_prev = best_addition(state, lambda_prev, p);
  if (at_prev.capped_cost <= tau) return {lambda_prev, at_prev.center};

  // First breakpoint index where the predicate holds. Everything at or below
  // lambda_prev is false by monotonicity; the inf sentinel is always true.
  std::size_t lo = static_cast<std::size_t>(
      std::upper_bound(beta.begin(), beta.end(), lambda_prev) - beta.begin());
  if (interval_hint != nullptr && *interval_hint + 1 > lo) {
    lo = std::min<std::size_t>(*interval_hint + 1, last);
  }
  // Gallop toward the first true index, then narrow by binary search.
  std::size_t hi = last;
  std::size_t span = 1;
  std::size_t probe = lo;
  std::size_t known_false = lo;  // everything below lo is false
  while (probe < last && !predicate(beta[probe])) {
    known_false = probe + 1;
    probe = std::min(last, probe + span);
    span *= 2;
  }
  hi = probe;
  lo = known_false;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (predicate(beta[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const std::size_t first_true = hi;
  const double beta_lo = beta[first_true - 1];
  const double beta_hi = beta[first_true];
  if (interval_hint != nullptr) *interval_hint = first_true - 1;

  // Pattern aggregation for the interval (beta_lo, beta_hi]: customer j is
  // assigned iff its pattern breakpoint is <= beta_lo.
  std::span<const double> d = state.distances();
  const int n = inst.num_customers();
  long long assigned_base = 0;
  double sum_base = 0.0;
  for (int j = 0; j < n; ++j) {
    double dj = d[static_cast<std::size_t>(j)];
    if (p.breakpoint_of(dj) <= beta_lo) {
      ++assigned_base;
      sum_base += dj;
    }
  }

  double best_cand = kInf;
  int best_center = 0;
  for (int i = 0; i < inst.num_centers(); ++i) {
    long long u = n - assigned_base;
    double cp = sum_base;
    Instance::Row r = inst.row_of_center(i);
    for (std::size_t t = 0; t < r.size(); ++t) {
      double dj = d[static_cast<std::size_t>(r.ids[t])];
      double c = r.costs[t];
      if (p.breakpoint_of(dj) <= beta_lo) {
        if (c < dj) cp -= dj - c;
      } else if (p.breakpoint_of(c) <= beta_lo) {
        --u;
        cp += c;
      }
    }
    double denom = tau - static_cast<double>(u) * p.cap;
    double cand;
    if (denom > 0.0) {
      cand = p.shrink * std::max(cp, 0.0) / denom;
    } else {
      cand = (denom == 0.0 && cp <= 0.0) ? 0.0 : kInf;
    }
    if (cand < best_cand) {
      best_cand = cand;
      best_center = i;
    }
  }

  double lambda_t = std::max(lambda_prev, best_cand);
  // The closed form must land in the located interval.
  bool in_interval =
      lambda_t > beta_lo &&
      (std::isinf(beta_hi) || lambda_t <= beta_hi + 1e-9 * std::max(1.0, beta_hi));
  if (!in_interval) {
    fail(Errc::internal_invariant,
         "lambda_step: closed-form lambda " + std::to_string(lambda_t) +
             " escaped interval (" + std::to_string(beta_lo) + ", " +
             std::to_string(beta_hi) + "]");
  }
  return {lambda_t, best_center};
}

/// First phase without any externally supplied parameter: grows lambda and
/// the center set together. Returns (lambda, C) with capped cost < 1,
/// |C| <= T, and lambda at most the optimum of the size-k LP relaxation.
inline Phase1Result greedy_adaptive(const Instance& inst) {
  validate_or_throw(inst);
  const int k = inst.k();
  const int n = inst.num_customers();
  CappedParams p(k, n);
  const long long budget = budget_T(k, n);
  BreakpointIndex index = BreakpointIndex::build(inst, p);
  AssignmentState state(inst);

  Phase1Result res;
  double lambda = 0.0;
  double cc = capped_cost(state, lambda, p);
  int t = 0;
  std::size_t hint = 0;
  while (cc >= 1.0) {
    ++t;
    if (t > budget) {
      fail(Errc::internal_invariant,
           "first phase exceeded its iteration budget T=" +
               std::to_string(budget));
    }
    double tau = (1.0 - 1.0 / k) * cc + (1.0 / k) * p.shrink;
    LambdaStepResult step = lambda_step(state, lambda, tau, index, p, &hint);
    lambda = step.lambda;
    state.add_center(step.center);
    cc = capped_cost(state, lambda, p);
    res.trace.steps.push_back(Phase1Step{t, lambda, tau, step.center, cc});
  }
  res.lambda = lambda;
  res.centers = state.chosen();
  res.trace.final_lambda = lambda;
  return res;
}

/// First phase at a fixed lambda: repeatedly adds the best single center
/// while the capped cost is >= 1. Succeeds within T iterations whenever
/// lambda is at least the LP optimum; otherwise may exhaust the budget,
/// which certifies that the supplied lambda was below the LP optimum.
inline Phase1Result greedy_fixed(const Instance& inst, double lambda) {
  validate_or_throw(inst);
  const int k = inst.k();
  const int n = inst.num_customers();
  CappedParams p(k, n);
  const long long budget = budget_T(k, n);
  AssignmentState state(inst);

  Phase1Result res;
  res.lambda = lambda;
  res.trace.final_lambda = lambda;
  double cc = capped_cost(state, lambda, p);
  int t = 0;
  while (cc >= 1.0) {
    if (t == budget) {
      fail(Errc::budget_exhausted,
           "capped cost still >= 1 after T=" + std::to_string(budget) +
               " additions; this certifies the supplied lambda is below the "
               "LP optimum");
    }
    ++t;
    Addition a = best_addition(state, lambda, p);
    state.add_center(a.center);
    cc = capped_cost(state, lambda, p);
    res.trace.steps.push_back(
        Phase1Step{t, lambda, std::numeric_limits<double>::quiet_NaN(),
                   a.center, cc});
  }
  res.centers = state.chosen();
  return res;
}

}  // namespace kmb

#endif  // KMB_PHASE_ONE_HPP_
