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

#ifndef KMB_SAMPLING_HPP_
#define KMB_SAMPLING_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "kmb/capped_cost.hpp"
#include "kmb/instance.hpp"
#include "kmb/parallel.hpp"
#include "kmb/rng.hpp"

namespace kmb {

struct FractionalEntry {
  int center = 0;
  int customer = 0;
  double value = 0.0;
};

/// A point (x, y) of the k-Median LP relaxation: per-center opening mass and
/// sparse per-edge assignment mass. Feasibility means x_i >= y_ij >= 0 for
/// all pairs, every customer's y row sums to 1, and sum_i x_i = k.
struct FractionalSolution {
  std::vector<double> x;
  std::vector<FractionalEntry> y;  // sorted by (center, customer)

  void sort_entries() {
    std::sort(y.begin(), y.end(),
              [](const FractionalEntry& a, const FractionalEntry& b) {
                if (a.center != b.center) return a.center < b.center;
                return a.customer < b.customer;
              });
  }
};

/// The integral feasible point of a covering center set: x is its indicator,
/// y routes each customer fully to its nearest chosen center (lowest id on
/// ties). Fails if some customer has no edge into the set.
inline FractionalSolution integral_solution(const Instance& inst,
                                            const std::vector<int>& centers) {
  FractionalSolution f;
  f.x.assign(static_cast<std::size_t>(inst.num_centers()), 0.0);
  for (int i : centers) f.x[static_cast<std::size_t>(i)] = 1.0;
  for (int j = 0; j < inst.num_customers(); ++j) {
    Instance::Row r = inst.row_of_customer(j);
    int arg = -1;
    double best = kInf;
    for (std::size_t t = 0; t < r.size(); ++t) {
      if (f.x[static_cast<std::size_t>(r.ids[t])] == 1.0 && r.costs[t] < best) {
        best = r.costs[t];
        arg = r.ids[t];
      }
    }
    if (arg < 0) {
      fail(Errc::infeasible, "integral_solution: customer " +
                                 std::to_string(j + 1) +
                                 " has no edge into the center set");
    }
    f.y.push_back(FractionalEntry{arg, j, 1.0});
  }
  f.sort_entries();
  return f;
}

struct FeasibilityReport {
  double bound_residual = 0.0;   // violation of x_i >= y_ij >= 0
  double rowsum_residual = 0.0;  // worst |sum_i y_ij - 1|
  double sumx_residual = 0.0;    // |sum_i x_i - k|
  int off_edge_entries = 0;      // y mass on pairs that are not edges

  bool ok(double tol = 1e-9) const {
    return bound_residual <= tol && rowsum_residual <= tol &&
           sumx_residual <= tol && off_edge_entries == 0;
  }
};

inline FeasibilityReport check_feasible(const FractionalSolution& f,
                                        const Instance& inst) {
  FeasibilityReport rep;
  std::vector<double> row_sums(static_cast<std::size_t>(inst.num_customers()), 0.0);
  for (const FractionalEntry& e : f.y) {
    if (e.center < 0 || e.center >= inst.num_centers() || e.customer < 0 ||
        e.customer >= inst.num_customers() ||
        std::isinf(inst.cost(e.center, e.customer))) {
      ++rep.off_edge_entries;
      continue;
    }
    rep.bound_residual = std::max(rep.bound_residual, -e.value);
    rep.bound_residual = std::max(
        rep.bound_residual, e.value - f.x[static_cast<std::size_t>(e.center)]);
    row_sums[static_cast<std::size_t>(e.customer)] += e.value;
  }
  for (double v : f.x) rep.bound_residual = std::max(rep.bound_residual, -v);
  for (double rs : row_sums) {
    rep.rowsum_residual = std::max(rep.rowsum_residual, std::abs(rs - 1.0));
  }
  double sum_x = 0.0;
  for (double v : f.x) sum_x += v;
  rep.sumx_residual = std::abs(sum_x - inst.k());
  return rep;
}

/// c . y, the assignment cost of the fractional point.
inline double fractional_cost(const FractionalSolution& f, const Instance& inst) {
  double total = 0.0;
  for (const FractionalEntry& e : f.y) {
    total += e.value * inst.cost(e.center, e.customer);
  }
  return total;
}

/// A per-customer map to a center or none (-1), with the cost over assigned
/// customers and the count of unassigned ones.
struct PartialAssignment {
  std::vector<int> a;
  double cost = 0.0;
  int unassigned = 0;
};

/// Rounds (x, y) to a partial assignment: `rounds` times, draw a center from
/// the distribution x/k, then independently reassign each of its customers j
/// to it with probability y_ij/x_i (zero when x_i = 0). Deterministic in the
/// seed.
inline PartialAssignment sample_round(const FractionalSolution& f,
                                      const Instance& inst, int rounds,
                                      std::uint64_t seed) {
  if (rounds < 0) fail(Errc::bad_parameters, "sample_round: rounds < 0");
  FeasibilityReport rep = check_feasible(f, inst);
  if (!rep.ok()) {
    fail(Errc::infeasible_fractional,
         "sample_round: fractional solution is not feasible");
  }
  // cumulative opening mass, for inverse-transform draws
  std::vector<double> cum(f.x.size());
  double total = 0.0;
  for (std::size_t i = 0; i < f.x.size(); ++i) {
    total += f.x[i];
    cum[i] = total;
  }
  // y grouped by center
  std::vector<std::size_t> y_off(f.x.size() + 1, 0);
  for (const FractionalEntry& e : f.y) {
    ++y_off[static_cast<std::size_t>(e.center) + 1];
  }
  for (std::size_t i = 1; i < y_off.size(); ++i) y_off[i] += y_off[i - 1];

  PartialAssignment res;
  res.a.assign(static_cast<std::size_t>(inst.num_customers()), -1);
  std::mt19937_64 eng(seed);
  for (int r = 0; r < rounds; ++r) {
    double u = detail::u01(eng) * total;
    std::size_t i = static_cast<std::size_t>(
        std::upper_bound(cum.begin(), cum.end(), u) - cum.begin());
    if (i >= f.x.size()) i = f.x.size() - 1;  // u == total edge case
    double xi = f.x[i];
    for (std::size_t t = y_off[i]; t < y_off[i + 1]; ++t) {
      const FractionalEntry& e = f.y[t];
      double prob = xi > 0.0 ? e.value / xi : 0.0;
      if (detail::u01(eng) < prob) {
        res.a[static_cast<std::size_t>(e.customer)] = static_cast<int>(i);
      }
    }
  }
  for (int j = 0; j < inst.num_customers(); ++j) {
    int i = res.a[static_cast<std::size_t>(j)];
    if (i < 0) {
      ++res.unassigned;
    } else {
      res.cost += inst.cost(i, j);
    }
  }
  return res;
}

struct MonteCarloStats {
  int trials = 0;
  int rounds = 0;
  double fractional_cost = 0.0;   // c . y of the input
  double mean_cost = 0.0;
  double se_cost = 0.0;
  double mean_unassigned = 0.0;
  double se_unassigned = 0.0;
  // joint bad event: cost >= (c.y)/shrink or unassigned >= 2k+1
  double cost_threshold = 0.0;
  int unassigned_threshold = 0;
  double bad_event_freq = 0.0;
  double se_bad_event = 0.0;
  long long good_samples = 0;
};

/// Independent-seed repetitions of sample_round. Trial t uses a seed derived
/// from (seed, t), so results are reproducible and independent of the thread
/// count used to compute them.
inline MonteCarloStats monte_carlo(const FractionalSolution& f,
                                   const Instance& inst, int rounds, int trials,
                                   std::uint64_t seed, int threads = 1) {
  if (trials < 1) fail(Errc::bad_parameters, "monte_carlo: trials must be >= 1");
  FeasibilityReport rep = check_feasible(f, inst);
  if (!rep.ok()) {
    fail(Errc::infeasible_fractional,
         "monte_carlo: fractional solution is not feasible");
  }
  MonteCarloStats stats;
  stats.trials = trials;
  stats.rounds = rounds;
  stats.fractional_cost = fractional_cost(f, inst);
  double shrink = 1.0 - 2.0 * inst.k() / static_cast<double>(inst.num_customers());
  stats.cost_threshold = shrink > 0.0 ? stats.fractional_cost / shrink : kInf;
  stats.unassigned_threshold = 2 * inst.k() + 1;

  std::vector<double> costs(static_cast<std::size_t>(trials));
  std::vector<int> unassigned(static_cast<std::size_t>(trials));
  parallel_chunks(trials, threads, [&](int begin, int end) {
    for (int t = begin; t < end; ++t) {
      PartialAssignment pa =
          sample_round(f, inst, rounds, detail::mix_seed(seed, t));
      costs[static_cast<std::size_t>(t)] = pa.cost;
      unassigned[static_cast<std::size_t>(t)] = pa.unassigned;
    }
  });

  double sum_c = 0.0, sum_u = 0.0, bad = 0.0;
  for (int t = 0; t < trials; ++t) {
    sum_c += costs[static_cast<std::size_t>(t)];
    sum_u += unassigned[static_cast<std::size_t>(t)];
    bool is_bad = costs[static_cast<std::size_t>(t)] >= stats.cost_threshold ||
                  unassigned[static_cast<std::size_t>(t)] >=
                      stats.unassigned_threshold;
    if (is_bad) {
      bad += 1.0;
    } else {
      ++stats.good_samples;
    }
  }
  stats.mean_cost = sum_c / trials;
  stats.mean_unassigned = sum_u / trials;
  stats.bad_event_freq = bad / trials;
  if (trials > 1) {
    double vc = 0.0, vu = 0.0, vb = 0.0;
    for (int t = 0; t < trials; ++t) {
      double dc = costs[static_cast<std::size_t>(t)] - stats.mean_cost;
      double du = unassigned[static_cast<std::size_t>(t)] - stats.mean_unassigned;
      bool is_bad = costs[static_cast<std::size_t>(t)] >= stats.cost_threshold ||
                    unassigned[static_cast<std::size_t>(t)] >=
                        stats.unassigned_threshold;
      double db = (is_bad ? 1.0 : 0.0) - stats.bad_event_freq;
      vc += dc * dc;
      vu += du * du;
      vb += db * db;
    }
    double inv = 1.0 / (static_cast<double>(trials) - 1.0) / trials;
    stats.se_cost = std::sqrt(vc * inv);
    stats.se_unassigned = std::sqrt(vu * inv);
    stats.se_bad_event = std::sqrt(vb * inv);
  }
  return stats;
}

struct SingleStepCheck {
  bool ok = false;
  double min_value = 0.0;     // min over all centers of capped cost after one add
  double expectation = 0.0;   // average over the reference set
  double bound = 0.0;         // (1-1/k)*cc + (1/k)*shrink*c(Cstar)/lambda
};

/// Deterministically verifies that the best single addition improves the
/// capped cost at least as much as a uniformly random center of a covering
/// size-k set Cstar would in expectation:
///   min_i cc(C+i) <= avg_{i in Cstar} cc(C+i) <= (1-1/k)cc + shrink*c(Cstar)/(k*lambda).
inline SingleStepCheck single_step_bound_check(const Instance& inst,
                                               double lambda,
                                               const std::vector<int>& C,
                                               const std::vector<int>& Cstar) {
  CappedParams p(inst.k(), inst.num_customers());
  AssignmentState state(inst);
  for (int i : C) state.add_center(i);
  double cc = capped_cost(state, lambda, p);
  SingleStepCheck check;
  check.min_value = best_addition(state, lambda, p).capped_cost;
  double sum = 0.0;
  for (int i : Cstar) {
    AssignmentState with(state);
    with.add_center(i);
    sum += capped_cost(with, lambda, p);
  }
  check.expectation = Cstar.empty() ? cc : sum / static_cast<double>(Cstar.size());
  double cstar_cost = inst.set_cost(Cstar);
  double ratio;
  if (std::isinf(lambda)) {
    ratio = 0.0;  // inf denominator reads as zero, as in the capped cost
  } else if (lambda == 0.0) {
    ratio = cstar_cost == 0.0 ? 0.0 : kInf;
  } else {
    ratio = cstar_cost / lambda;
  }
  check.bound = (1.0 - 1.0 / p.k) * cc + (1.0 / p.k) * p.shrink * ratio;
  check.ok = check.min_value <= check.bound + 1e-9;
  return check;
}

}  // namespace kmb

#endif  // KMB_SAMPLING_HPP_
