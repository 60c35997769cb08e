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

#ifndef KMB_SOLVER_HPP_
#define KMB_SOLVER_HPP_

#include <algorithm>
#include <optional>
#include <vector>

#include "kmb/capped_cost.hpp"
#include "kmb/certificate.hpp"
#include "kmb/instance.hpp"
#include "kmb/phase_one.hpp"
#include "kmb/phase_two.hpp"

namespace kmb {

enum class SolveMode { fast, fixed_lambda };

struct SolveOptions {
  SolveMode mode = SolveMode::fast;
  // Target cost for fixed_lambda, on the original cost scale. Values below
  // the normalization offset behave like the offset itself.
  double lambda = 0.0;
};

enum class SolvePath { k1, all_centers, large_k, two_phase };

inline const char* solve_path_name(SolvePath p) {
  switch (p) {
    case SolvePath::k1: return "k1_exact";
    case SolvePath::all_centers: return "all_centers_exact";
    case SolvePath::large_k: return "large_k_exact";
    case SolvePath::two_phase: return "two_phase";
  }
  return "unknown";
}

/// Result of a solve. `centers` holds at most size_bound ids; `cost` is the
/// exact assignment cost on the original instance and never exceeds the cost
/// of any size-k center set. `lower_bound` is the objective of a verified
/// dual certificate (plus the normalization offset), a proven lower bound on
/// every size-k solution's cost. It may exceed `cost`: the oversized solution
/// is then certified to beat everything of size k.
struct Solution {
  std::vector<int> centers;    // sorted ascending
  std::vector<int> assignment; // nearest chosen center per customer, -1 if none
  double cost = 0.0;
  double cost_normalized = 0.0;  // the exact value the polish guard compared
  std::optional<double> lambda;  // phase-one lambda, normalized scale
  double lower_bound = 0.0;      // original scale
  double dual_objective = 0.0;   // normalized scale
  std::optional<DualCertificate> certificate;  // valid against the original costs
  long long size_bound = 0;
  double alpha = 0.0;
  int phase1_iterations = 0;
  int phase2_additions = 0;
  Phase1Trace phase1;
  PolishTrace phase2;
  double offset_total = 0.0;
  SolvePath path = SolvePath::two_phase;
};

namespace detail {

inline void fill_assignment(const Instance& inst, Solution& sol) {
  std::vector<char> in(static_cast<std::size_t>(inst.num_centers()), 0);
  for (int i : sol.centers) in[static_cast<std::size_t>(i)] = 1;
  sol.assignment.assign(static_cast<std::size_t>(inst.num_customers()), -1);
  sol.cost = 0.0;
  for (int j = 0; j < inst.num_customers(); ++j) {
    Instance::Row r = inst.row_of_customer(j);
    int arg = -1;
    double best = kInf;
    for (std::size_t t = 0; t < r.size(); ++t) {
      if (in[static_cast<std::size_t>(r.ids[t])] && r.costs[t] < best) {
        best = r.costs[t];
        arg = r.ids[t];
      }
    }
    sol.assignment[static_cast<std::size_t>(j)] = arg;
    sol.cost += arg >= 0 ? best : kInf;
  }
}

}  // namespace detail

/// End-to-end pipeline: exact special cases for k = 1, k >= |U| and k > n/3,
/// otherwise normalize, run the first phase (adaptive lambda or a supplied
/// one), polish, and attach the best dual lower bound seen along the way.
inline Solution solve(const Instance& inst, const SolveOptions& opt = {}) {
  validate_or_throw(inst);
  const int k = inst.k();
  const int n = inst.num_customers();
  Solution sol;

  if (k == 1) {
    K1Result r = solve_k1(inst);
    sol.centers = {r.center};
    sol.path = SolvePath::k1;
    sol.size_bound = 1;
  } else if (k >= inst.num_centers()) {
    sol.centers.resize(static_cast<std::size_t>(inst.num_centers()));
    for (int i = 0; i < inst.num_centers(); ++i)
      sol.centers[static_cast<std::size_t>(i)] = i;
    sol.path = SolvePath::all_centers;
    sol.size_bound = inst.num_centers();
  } else if (3LL * k > n) {
    LargeKResult r = solve_large_k(inst);
    sol.centers = r.centers;
    sol.path = SolvePath::large_k;
    sol.size_bound = n;
  } else {
    NormalizedInstance norm = normalize(inst);
    CappedParams p(k, n);
    const long long budget = budget_T(k, n);

    Phase1Result p1 =
        opt.mode == SolveMode::fast
            ? greedy_adaptive(norm.base)
            : greedy_fixed(norm.base,
                           std::max(0.0, opt.lambda - norm.offset_total));

    // Best dual objective over the iteration's (lambda_t, C_{t-1}) and
    // (lambda_t, C_t) pairs; 0 (the trivial certificate) is the floor.
    double best_obj = 0.0;
    double best_lambda = 0.0;
    std::vector<int> best_set;
    AssignmentState replay(norm.base);
    for (const Phase1Step& step : p1.trace.steps) {
      double before = dual_objective_quick(replay, step.lambda, p);
      if (before > best_obj) {
        best_obj = before;
        best_lambda = step.lambda;
        best_set = replay.chosen();
      }
      replay.add_center(step.center);
      double after = dual_objective_quick(replay, step.lambda, p);
      if (after > best_obj) {
        best_obj = after;
        best_lambda = step.lambda;
        best_set = replay.chosen();
      }
    }

    PolishResult p2 = polish(norm.base, p1.centers, p1.lambda);

    DualCertificate cert =
        build_certificate(norm.base, best_lambda, best_set, p);
    sol.dual_objective = cert.objective;
    sol.certificate = shift_certificate(std::move(cert), norm.customer_offsets);
    sol.lower_bound = sol.certificate->objective;

    sol.centers = p2.centers;
    std::sort(sol.centers.begin(), sol.centers.end());
    sol.lambda = p1.lambda;
    sol.cost_normalized = p2.final_cost;
    sol.size_bound = budget + 2LL * k;
    sol.alpha = alpha_kn(k, n);
    sol.phase1_iterations = static_cast<int>(p1.trace.steps.size());
    sol.phase2_additions = static_cast<int>(p2.trace.additions.size());
    sol.phase1 = std::move(p1.trace);
    sol.phase2 = std::move(p2.trace);
    sol.offset_total = norm.offset_total;
    sol.path = SolvePath::two_phase;
    detail::fill_assignment(inst, sol);
    return sol;
  }

  // Exact paths: the solution cost itself is a valid lower bound on the
  // best size-k cost.
  detail::fill_assignment(inst, sol);
  sol.cost_normalized = sol.cost;
  sol.lower_bound = sol.cost;
  sol.alpha = static_cast<double>(sol.size_bound) / k;
  return sol;
}

}  // namespace kmb

#endif  // KMB_SOLVER_HPP_
