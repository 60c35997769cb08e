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

#ifndef KMB_PHASE_TWO_HPP_
#define KMB_PHASE_TWO_HPP_

#include <algorithm>
#include <numeric>
#include <vector>

#include "kmb/capped_cost.hpp"
#include "kmb/instance.hpp"

namespace kmb {

struct PolishStep {
  int customer = 0;
  int center = 0;
  double cost_after = 0.0;
};

struct PolishTrace {
  std::vector<PolishStep> additions;
  int skipped_already_zero = 0;
};

struct PolishResult {
  std::vector<int> centers;
  PolishTrace trace;
  double final_cost = 0.0;  // on the instance handed in
};

/// Second phase: walks customers in decreasing order of their initial capped
/// cost and, while the true cost exceeds lambda, opens each walked customer's
/// cheapest center (zero-cost once the instance is normalized). Customers
/// whose distance is already zero are skipped without consuming an addition.
/// Adds at most 2k centers and ends with cost <= lambda.
///
/// Requires capped cost < 1 on entry and an instance where every customer
/// has a zero-cost edge. The walk order is fixed up front; it is not
/// re-sorted as additions change other customers' capped costs.
inline PolishResult polish(const Instance& inst, const std::vector<int>& centers,
                           double lambda) {
  CappedParams p(inst.k(), inst.num_customers());
  AssignmentState state(inst);
  for (int i : centers) state.add_center(i);

  double entry_capped = capped_cost(state, lambda, p);
  if (!(entry_capped < 1.0)) {
    fail(Errc::precondition_violated,
         "polish requires capped cost < 1 on entry (got " +
             std::to_string(entry_capped) + ")");
  }

  const int n = inst.num_customers();
  std::vector<double> initial(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    initial[static_cast<std::size_t>(j)] =
        capped_contribution(state.distances()[static_cast<std::size_t>(j)],
                            lambda, p);
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    double va = initial[static_cast<std::size_t>(a)];
    double vb = initial[static_cast<std::size_t>(b)];
    if (va != vb) return va > vb;
    return a < b;
  });

  PolishResult res;
  const int max_additions = 2 * inst.k();
  int additions = 0;
  std::size_t pos = 0;
  while (state.true_cost() > lambda) {
    if (pos == order.size() || additions == max_additions) {
      fail(Errc::internal_invariant,
           "polish: cost still exceeds lambda after " +
               std::to_string(additions) + " additions");
    }
    int j = order[pos++];
    if (state.distances()[static_cast<std::size_t>(j)] == 0.0) {
      ++res.trace.skipped_already_zero;
      continue;
    }
    Instance::Row r = inst.row_of_customer(j);
    int best = -1;
    double best_cost = kInf;
    for (std::size_t t = 0; t < r.size(); ++t) {
      if (r.costs[t] < best_cost) {
        best_cost = r.costs[t];
        best = r.ids[t];
      }
    }
    state.add_center(best);
    ++additions;
    res.trace.additions.push_back(PolishStep{j, best, state.true_cost()});
  }
  res.centers = state.chosen();
  res.final_cost = state.true_cost();
  return res;
}

}  // namespace kmb

#endif  // KMB_PHASE_TWO_HPP_
