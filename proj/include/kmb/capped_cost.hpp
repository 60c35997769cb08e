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

#ifndef KMB_CAPPED_COST_HPP_
#define KMB_CAPPED_COST_HPP_

#include <cmath>
#include <span>
#include <vector>

#include "kmb/instance.hpp"

namespace kmb {

/// Constants of the capped cost for a (k, n) pair:
/// cap = 1/(2k+1) and shrink = 1 - 2k/n. Requires 2 <= k <= n/3, which pins
/// shrink to [1/3, 1) and cap to (0, 1/5].
struct CappedParams {
  int k = 0;
  int n = 0;
  double cap = 0.0;
  double shrink = 0.0;

  CappedParams(int k_in, int n_in) : k(k_in), n(n_in) {
    if (k < 2 || 3LL * k > n) {
      fail(Errc::parameter_out_of_range,
           "capped cost requires 2 <= k <= n/3 (got k=" + std::to_string(k) +
               ", n=" + std::to_string(n) + ")");
    }
    cap = 1.0 / (2.0 * k + 1.0);
    shrink = 1.0 - 2.0 * k / static_cast<double>(n);
  }

  // The lambda at which a customer at distance d switches between the capped
  // and linear branches. One canonical expression so that equal distances map
  // to bitwise-equal breakpoints everywhere.
  double breakpoint_of(double d) const { return (2.0 * k + 1.0) * shrink * d; }
};

/// Capped cost of a single customer at distance d:
/// min(cap, shrink * d / lambda), with 0/0 and inf/inf read as zero. So
/// lambda = inf or d = 0 gives 0; d = inf or lambda = 0 (with d > 0) gives cap.
inline double capped_contribution(double d, double lambda,
                                  const CappedParams& p) {
  if (std::isinf(lambda) || d == 0.0) return 0.0;
  if (std::isinf(d) || lambda == 0.0) return p.cap;
  return std::min(p.cap, p.shrink * d / lambda);
}

/// Chosen centers plus each customer's distance to the nearest of them.
/// d_j = min over chosen centers of c_ij, inf while nothing serves j.
/// add_center updates in O(degree) and never increases any d_j.
class AssignmentState {
 public:
  explicit AssignmentState(const Instance& inst)
      : inst_(&inst),
        in_chosen_(static_cast<std::size_t>(inst.num_centers()), 0),
        d_(static_cast<std::size_t>(inst.num_customers()), kInf),
        uncovered_(inst.num_customers()) {}

  const Instance& instance() const { return *inst_; }
  const std::vector<int>& chosen() const { return chosen_; }
  bool is_chosen(int i) const { return in_chosen_[static_cast<std::size_t>(i)] != 0; }
  std::span<const double> distances() const { return d_; }
  int uncovered_count() const { return uncovered_; }

  /// Sum of all distances; inf iff some customer is still uncovered. Summed
  /// fresh so that exact comparisons against it (the polish loop guard) are
  /// free of incremental rounding residue.
  double true_cost() const {
    if (uncovered_ > 0) return kInf;
    double total = 0.0;
    for (double v : d_) total += v;
    return total;
  }

  void add_center(int i) {
    if (i < 0 || i >= inst_->num_centers()) {
      fail(Errc::bad_index, "add_center: center " + std::to_string(i + 1) +
                                " is out of range");
    }
    if (in_chosen_[static_cast<std::size_t>(i)]) return;  // idempotent
    in_chosen_[static_cast<std::size_t>(i)] = 1;
    chosen_.push_back(i);
    Instance::Row r = inst_->row_of_center(i);
    for (std::size_t t = 0; t < r.size(); ++t) {
      double& dj = d_[static_cast<std::size_t>(r.ids[t])];
      double c = r.costs[t];
      if (c < dj) {
        if (std::isinf(dj)) --uncovered_;
        dj = c;
      }
    }
  }

 private:
  const Instance* inst_;
  std::vector<int> chosen_;
  std::vector<char> in_chosen_;
  std::vector<double> d_;
  int uncovered_ = 0;
};

/// Capped cost of the current center set; always in [0, n*cap]. O(n).
inline double capped_cost(const AssignmentState& state, double lambda,
                          const CappedParams& p) {
  if (std::isinf(lambda)) return 0.0;
  double total = 0.0;
  for (double dj : state.distances()) {
    total += capped_contribution(dj, lambda, p);
  }
  return total;
}

struct Addition {
  int center = 0;
  double capped_cost = 0.0;
};

/// The center whose addition minimizes the capped cost at this lambda, with
/// the minimized value. Centers already chosen are legal candidates (their
/// delta is zero); ties break to the lowest center id. O(n + m).
inline Addition best_addition(const AssignmentState& state, double lambda,
                              const CappedParams& p) {
  const Instance& inst = state.instance();
  if (std::isinf(lambda)) return {0, 0.0};
  std::span<const double> d = state.distances();
  double base = 0.0;
  for (double dj : d) base += capped_contribution(dj, lambda, p);
  int best_center = 0;
  double best_value = kInf;
  for (int i = 0; i < inst.num_centers(); ++i) {
    double delta = 0.0;
    Instance::Row r = inst.row_of_center(i);
    for (std::size_t t = 0; t < r.size(); ++t) {
      double dj = d[static_cast<std::size_t>(r.ids[t])];
      double c = r.costs[t];
      if (c < dj) {
        delta += capped_contribution(c, lambda, p) -
                 capped_contribution(dj, lambda, p);
      }
    }
    double v = base + delta;
    if (v < best_value) {
      best_value = v;
      best_center = i;
    }
  }
  return {best_center, best_value};
}

}  // namespace kmb

#endif  // KMB_CAPPED_COST_HPP_
