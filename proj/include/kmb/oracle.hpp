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
//
// Independent brute-force references for tests and acceptance runs. These
// deliberately avoid the incremental machinery of the solver so they can
// serve as oracles for it.

#ifndef KMB_ORACLE_HPP_
#define KMB_ORACLE_HPP_

#include <algorithm>
#include <numeric>
#include <vector>

#include "kmb/capped_cost.hpp"
#include "kmb/instance.hpp"

namespace kmb {

struct OptResult {
  double best_cost = kInf;
  std::vector<int> best_set;
  long long enumerated_count = 0;
};

namespace detail {

inline double choose_count(int n, int k) {
  double c = 1.0;
  for (int t = 1; t <= k; ++t) c *= static_cast<double>(n - k + t) / t;
  return c;
}

}  // namespace detail

/// Exact optimum over all size-min(k, |U|) center sets by exhaustive
/// enumeration in lexicographic order. Guarded to at most 1e6 subsets.
/// Prunes with per-customer suffix minima: extending a partial set with
/// centers of id > i can never beat sum_j min(d_j, best cost among ids > i).
inline OptResult brute_force_opt(const Instance& inst, int k) {
  if (k < 1) fail(Errc::bad_parameters, "brute_force_opt: k must be >= 1");
  const int nc = inst.num_centers();
  const int n = inst.num_customers();
  const int kk = std::min(k, nc);
  if (detail::choose_count(nc, kk) > 1e6) {
    fail(Errc::too_large, "brute_force_opt: C(" + std::to_string(nc) + ", " +
                              std::to_string(kk) + ") exceeds the 1e6 guard");
  }

  // suffix_min[i*n + j] = cheapest edge (i', j) over i' >= i.
  std::vector<double> suffix_min(static_cast<std::size_t>(nc + 1) * n, kInf);
  for (int i = nc - 1; i >= 0; --i) {
    for (int j = 0; j < n; ++j) {
      suffix_min[static_cast<std::size_t>(i) * n + j] =
          suffix_min[static_cast<std::size_t>(i + 1) * n + j];
    }
    Instance::Row r = inst.row_of_center(i);
    for (std::size_t t = 0; t < r.size(); ++t) {
      double& s = suffix_min[static_cast<std::size_t>(i) * n + r.ids[t]];
      s = std::min(s, r.costs[t]);
    }
  }

  OptResult res;
  std::vector<double> d(static_cast<std::size_t>(n), kInf);
  std::vector<int> current;
  current.reserve(static_cast<std::size_t>(kk));
  std::vector<std::pair<int, double>> undo;

  auto lower_bound_from = [&](int next) {
    double b = 0.0;
    for (int j = 0; j < n; ++j) {
      b += std::min(d[static_cast<std::size_t>(j)],
                    suffix_min[static_cast<std::size_t>(next) * n + j]);
    }
    return b;
  };

  auto recurse = [&](auto&& self, int next, int remaining) -> void {
    if (remaining == 0) {
      ++res.enumerated_count;
      double cost = 0.0;
      for (double v : d) cost += v;
      if (cost < res.best_cost || res.best_set.empty()) {
        res.best_cost = cost;
        res.best_set = current;
      }
      return;
    }
    for (int i = next; i <= nc - remaining; ++i) {
      // strict: equal-cost subtrees still run so the lexicographically
      // smallest optimum (and any all-infinite optimum) is recorded
      if (!res.best_set.empty() && lower_bound_from(i) > res.best_cost) continue;
      std::size_t undo_mark = undo.size();
      Instance::Row r = inst.row_of_center(i);
      for (std::size_t t = 0; t < r.size(); ++t) {
        double& dj = d[static_cast<std::size_t>(r.ids[t])];
        if (r.costs[t] < dj) {
          undo.push_back({r.ids[t], dj});
          dj = r.costs[t];
        }
      }
      current.push_back(i);
      self(self, i + 1, remaining - 1);
      current.pop_back();
      while (undo.size() > undo_mark) {
        d[static_cast<std::size_t>(undo.back().first)] = undo.back().second;
        undo.pop_back();
      }
    }
  };
  recurse(recurse, 0, kk);
  return res;
}

struct ReferenceStepResult {
  double lambda = 0.0;
  int center = 0;
};

/// Dense re-derivation of the parametric step: sweeps every breakpoint
/// interval, evaluates each center's closed-form candidate where it is valid,
/// and returns the global minimum >= lambda_prev. O(N * (n + m)).
inline ReferenceStepResult reference_lambda_step(const AssignmentState& state,
                                                 double lambda_prev, double tau,
                                                 const CappedParams& p) {
  const Instance& inst = state.instance();
  const int n = inst.num_customers();
  std::vector<double> beta;
  beta.push_back(0.0);
  beta.push_back(kInf);
  for (const Edge& e : inst.edges()) beta.push_back(p.breakpoint_of(e.cost));
  std::sort(beta.begin(), beta.end());
  beta.erase(std::unique(beta.begin(), beta.end()), beta.end());

  double best_lambda = kInf;
  int best_center = 0;
  bool found = false;
  std::span<const double> d = state.distances();
  for (std::size_t l = 0; l + 1 < beta.size(); ++l) {
    const double beta_lo = beta[l];
    const double beta_hi = beta[l + 1];
    if (beta_hi < lambda_prev) continue;
    long long assigned = 0;
    double assigned_sum = 0.0;
    for (int j = 0; j < n; ++j) {
      if (p.breakpoint_of(d[static_cast<std::size_t>(j)]) <= beta_lo) {
        ++assigned;
        assigned_sum += d[static_cast<std::size_t>(j)];
      }
    }
    for (int i = 0; i < inst.num_centers(); ++i) {
      long long u = n - assigned;
      double cp = assigned_sum;
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
      double x = std::max(std::max(lambda_prev, beta_lo), cand);
      if (x <= beta_hi) {
        if (!found || x < best_lambda ||
            (x == best_lambda && i < best_center)) {
          best_lambda = x;
          best_center = i;
          found = true;
        }
      }
    }
  }
  return {best_lambda, best_center};
}

/// Copy of b with its `count` largest entries (earliest index on ties)
/// replaced by zero.
inline std::vector<double> zero_top_values(std::vector<double> b, int count) {
  if (count < 0 || count > static_cast<int>(b.size())) {
    fail(Errc::bad_parameters, "zero_top_values: count out of range");
  }
  std::vector<int> order(b.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int c) {
    if (b[static_cast<std::size_t>(a)] != b[static_cast<std::size_t>(c)]) {
      return b[static_cast<std::size_t>(a)] > b[static_cast<std::size_t>(c)];
    }
    return a < c;
  });
  for (int t = 0; t < count; ++t) {
    b[static_cast<std::size_t>(order[static_cast<std::size_t>(t)])] = 0.0;
  }
  return b;
}

}  // namespace kmb

#endif  // KMB_ORACLE_HPP_
