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

#ifndef KMB_INSTANCE_HPP_
#define KMB_INSTANCE_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kmb/errors.hpp"

namespace kmb {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// One center/customer pair with its assignment cost. Ids are 0-based.
struct Edge {
  int center = 0;
  int customer = 0;
  double cost = 0.0;
};

struct Violation {
  Errc code;
  int center = -1;
  int customer = -1;
  std::string message;
};

/// A k-Median instance: a sparse bipartite cost graph between centers and
/// customers plus the target solution size k. Pairs without an edge have
/// implicit infinite cost. Immutable after construction; duplicate edges
/// collapse to their minimum cost.
class Instance {
 public:
  Instance() = default;

  Instance(int num_centers, int num_customers, int k, std::vector<Edge> edges)
      : num_centers_(num_centers), num_customers_(num_customers), k_(k) {
    if (num_centers < 1 || num_customers < 1 || k < 1) {
      violation_ = Violation{Errc::bad_parameters, -1, -1,
                             "num_centers, num_customers and k must be >= 1"};
    }
    std::vector<Edge> kept;
    kept.reserve(edges.size());
    for (const Edge& e : edges) {
      if (e.center < 0 || e.center >= num_centers_ || e.customer < 0 ||
          e.customer >= num_customers_) {
        if (!violation_) {
          violation_ = Violation{Errc::bad_index, e.center, e.customer,
                                 "edge (" + std::to_string(e.center + 1) + ", " +
                                     std::to_string(e.customer + 1) +
                                     ") is out of range"};
        }
        continue;  // keep adjacency well-formed for the valid part
      }
      if (!(e.cost >= 0.0) || e.cost == kInf) {  // catches NaN too
        if (!violation_) {
          violation_ = Violation{Errc::negative_cost, e.center, e.customer,
                                 "edge (" + std::to_string(e.center + 1) + ", " +
                                     std::to_string(e.customer + 1) +
                                     ") has a negative or non-finite cost"};
        }
      }
      kept.push_back(e);
    }
    std::sort(kept.begin(), kept.end(), [](const Edge& a, const Edge& b) {
      if (a.center != b.center) return a.center < b.center;
      if (a.customer != b.customer) return a.customer < b.customer;
      return a.cost < b.cost;
    });
    edges_.reserve(kept.size());
    for (const Edge& e : kept) {
      if (!edges_.empty() && edges_.back().center == e.center &&
          edges_.back().customer == e.customer) {
        edges_.back().cost = std::min(edges_.back().cost, e.cost);
      } else {
        edges_.push_back(e);
      }
    }
    build_adjacency();
  }

  int num_centers() const { return num_centers_; }
  int num_customers() const { return num_customers_; }
  int k() const { return k_; }
  long long num_edges() const { return static_cast<long long>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  struct Row {
    std::span<const int> ids;
    std::span<const double> costs;
    std::size_t size() const { return ids.size(); }
  };

  /// Customers served by center i, sorted by customer id.
  Row row_of_center(int i) const {
    return {std::span<const int>(by_center_ids_).subspan(
                center_off_[i], center_off_[i + 1] - center_off_[i]),
            std::span<const double>(by_center_costs_)
                .subspan(center_off_[i], center_off_[i + 1] - center_off_[i])};
  }

  /// Centers serving customer j, sorted by center id.
  Row row_of_customer(int j) const {
    return {std::span<const int>(by_customer_ids_)
                .subspan(customer_off_[j], customer_off_[j + 1] - customer_off_[j]),
            std::span<const double>(by_customer_costs_)
                .subspan(customer_off_[j], customer_off_[j + 1] - customer_off_[j])};
  }

  int center_degree(int i) const { return center_off_[i + 1] - center_off_[i]; }
  int customer_degree(int j) const {
    return customer_off_[j + 1] - customer_off_[j];
  }

  /// Assignment cost of pair (i, j); kInf when there is no edge.
  double cost(int i, int j) const {
    Row r = row_of_center(i);
    auto it = std::lower_bound(r.ids.begin(), r.ids.end(), j);
    if (it == r.ids.end() || *it != j) return kInf;
    return r.costs[it - r.ids.begin()];
  }

  /// Cost of a center set: sum over customers of the cheapest edge into it.
  double set_cost(const std::vector<int>& centers) const {
    std::vector<char> in(static_cast<std::size_t>(num_centers_), 0);
    for (int i : centers) in[static_cast<std::size_t>(i)] = 1;
    double total = 0.0;
    for (int j = 0; j < num_customers_; ++j) {
      double best = kInf;
      Row r = row_of_customer(j);
      for (std::size_t t = 0; t < r.size(); ++t) {
        if (in[static_cast<std::size_t>(r.ids[t])]) best = std::min(best, r.costs[t]);
      }
      total += best;
      if (total == kInf) return kInf;
    }
    return total;
  }

  /// Same instance with a different target size.
  Instance with_k(int k) const {
    Instance copy = *this;
    copy.k_ = k;
    if (k < 1 && !copy.violation_) {
      copy.violation_ = Violation{Errc::bad_parameters, -1, -1, "k must be >= 1"};
    }
    return copy;
  }

  const std::optional<Violation>& construction_violation() const {
    return violation_;
  }

 private:
  void build_adjacency() {
    const auto nc = static_cast<std::size_t>(std::max(num_centers_, 0));
    const auto nw = static_cast<std::size_t>(std::max(num_customers_, 0));
    center_off_.assign(nc + 1, 0);
    customer_off_.assign(nw + 1, 0);
    for (const Edge& e : edges_) {
      ++center_off_[static_cast<std::size_t>(e.center) + 1];
      ++customer_off_[static_cast<std::size_t>(e.customer) + 1];
    }
    for (std::size_t i = 1; i <= nc; ++i) center_off_[i] += center_off_[i - 1];
    for (std::size_t j = 1; j <= nw; ++j) customer_off_[j] += customer_off_[j - 1];
    by_center_ids_.resize(edges_.size());
    by_center_costs_.resize(edges_.size());
    by_customer_ids_.resize(edges_.size());
    by_customer_costs_.resize(edges_.size());
    std::vector<int> cpos(center_off_.begin(), center_off_.end() - 1);
    std::vector<int> wpos(customer_off_.begin(), customer_off_.end() - 1);
    for (const Edge& e : edges_) {
      int& p = cpos[static_cast<std::size_t>(e.center)];
      by_center_ids_[static_cast<std::size_t>(p)] = e.customer;
      by_center_costs_[static_cast<std::size_t>(p)] = e.cost;
      ++p;
      int& q = wpos[static_cast<std::size_t>(e.customer)];
      by_customer_ids_[static_cast<std::size_t>(q)] = e.center;
      by_customer_costs_[static_cast<std::size_t>(q)] = e.cost;
      ++q;
    }
  }

  int num_centers_ = 0;
  int num_customers_ = 0;
  int k_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> center_off_, customer_off_;
  std::vector<int> by_center_ids_, by_customer_ids_;
  std::vector<double> by_center_costs_, by_customer_costs_;
  std::optional<Violation> violation_;
};

/// Checks all Instance invariants; returns the first violation found, if any.
/// Order: construction-time problems (bad index, bad cost, bad parameters) in
/// input order, then isolated customers by id.
inline std::optional<Violation> validate(const Instance& inst) {
  if (inst.construction_violation()) return inst.construction_violation();
  for (int j = 0; j < inst.num_customers(); ++j) {
    if (inst.customer_degree(j) == 0) {
      return Violation{Errc::isolated_customer, -1, j,
                       "customer " + std::to_string(j + 1) +
                           " has no edge; no center set can serve it"};
    }
  }
  return std::nullopt;
}

inline void validate_or_throw(const Instance& inst) {
  if (auto v = validate(inst)) fail(v->code, v->message);
}

/// An instance shifted so every customer has a zero-cost edge, together with
/// the per-customer offsets that were subtracted. For every center set,
/// cost(original) = cost(shifted) + offset_total.
struct NormalizedInstance {
  Instance base;
  std::vector<double> customer_offsets;
  double offset_total = 0.0;
};

inline NormalizedInstance normalize(const Instance& inst) {
  validate_or_throw(inst);
  std::vector<double> offsets(static_cast<std::size_t>(inst.num_customers()), 0.0);
  for (int j = 0; j < inst.num_customers(); ++j) {
    Instance::Row r = inst.row_of_customer(j);
    double m = kInf;
    for (double c : r.costs) m = std::min(m, c);
    offsets[static_cast<std::size_t>(j)] = m;
  }
  std::vector<Edge> shifted = inst.edges();
  for (Edge& e : shifted) e.cost -= offsets[static_cast<std::size_t>(e.customer)];
  double total = 0.0;
  for (double v : offsets) total += v;
  return NormalizedInstance{
      Instance(inst.num_centers(), inst.num_customers(), inst.k(),
               std::move(shifted)),
      std::move(offsets), total};
}

/// Iteration budget of the first phase, ceil(k * ln(n^2 / (2k(2k+1)))).
/// Meaningful only for 2 <= k <= n/3.
inline long long budget_T(int k, int n) {
  if (k < 2 || 3LL * k > n) {
    fail(Errc::parameter_out_of_range,
         "T is defined for 2 <= k <= n/3 (got k=" + std::to_string(k) +
             ", n=" + std::to_string(n) + ")");
  }
  double ratio = (static_cast<double>(n) * n) /
                 (2.0 * k * (2.0 * k + 1.0));
  return static_cast<long long>(std::ceil(k * std::log(ratio)));
}

/// Size ratio T/k + 2 of the two-phase solver.
inline double alpha_kn(int k, int n) {
  return static_cast<double>(budget_T(k, n)) / k + 2.0;
}

struct InstanceStats {
  int n = 0;
  long long m = 0;
  int delta = 0;       // max customers any single center can serve
  double h_delta = 0;  // harmonic number of delta
  std::optional<long long> t_budget;
  std::optional<double> alpha;
};

inline InstanceStats stats(const Instance& inst) {
  InstanceStats s;
  s.n = inst.num_customers();
  s.m = inst.num_edges();
  for (int i = 0; i < inst.num_centers(); ++i)
    s.delta = std::max(s.delta, inst.center_degree(i));
  for (int h = 1; h <= s.delta; ++h) s.h_delta += 1.0 / h;
  if (inst.k() >= 2 && 3LL * inst.k() <= s.n) {
    s.t_budget = budget_T(inst.k(), s.n);
    s.alpha = alpha_kn(inst.k(), s.n);
  }
  return s;
}

struct K1Result {
  int center = -1;
  double cost = kInf;
};

/// Exact optimum for k = 1: the center minimizing its column sum, counting
/// absent pairs as infinite. Ties break to the lowest center id.
inline K1Result solve_k1(const Instance& inst) {
  validate_or_throw(inst);
  K1Result best;
  for (int i = 0; i < inst.num_centers(); ++i) {
    if (inst.center_degree(i) != inst.num_customers()) continue;  // misses someone
    Instance::Row r = inst.row_of_center(i);
    double sum = 0.0;
    for (double c : r.costs) sum += c;
    if (sum < best.cost) {
      best.center = i;
      best.cost = sum;
    }
  }
  if (best.center < 0) {
    fail(Errc::infeasible, "no single center serves every customer");
  }
  return best;
}

struct LargeKResult {
  std::vector<int> centers;
  std::vector<int> assignment;
  double cost = 0.0;
};

/// Minimum-possible-cost solution for k > n/3: each customer's cheapest
/// center (lowest id on ties). Uses at most n centers.
inline LargeKResult solve_large_k(const Instance& inst) {
  validate_or_throw(inst);
  LargeKResult res;
  res.assignment.assign(static_cast<std::size_t>(inst.num_customers()), -1);
  for (int j = 0; j < inst.num_customers(); ++j) {
    Instance::Row r = inst.row_of_customer(j);
    int arg = -1;
    double best = kInf;
    for (std::size_t t = 0; t < r.size(); ++t) {
      if (r.costs[t] < best) {
        best = r.costs[t];
        arg = r.ids[t];
      }
    }
    res.assignment[static_cast<std::size_t>(j)] = arg;
    res.cost += best;
    res.centers.push_back(arg);
  }
  std::sort(res.centers.begin(), res.centers.end());
  res.centers.erase(std::unique(res.centers.begin(), res.centers.end()),
                    res.centers.end());
  return res;
}

/// Encodes a Set Cover system as a zero-cost k-Median instance: one center
/// per set, one customer per element. A size-k cover exists iff the instance
/// has a size-k solution of cost zero.
inline Instance from_setcover(const std::vector<std::vector<int>>& sets,
                              int num_elements, int k) {
  std::vector<char> covered(static_cast<std::size_t>(std::max(num_elements, 0)), 0);
  std::vector<Edge> edges;
  for (int s = 0; s < static_cast<int>(sets.size()); ++s) {
    for (int e : sets[static_cast<std::size_t>(s)]) {
      if (e < 0 || e >= num_elements) {
        fail(Errc::bad_index, "element " + std::to_string(e + 1) +
                                  " of set " + std::to_string(s + 1) +
                                  " is out of range");
      }
      covered[static_cast<std::size_t>(e)] = 1;
      edges.push_back(Edge{s, e, 0.0});
    }
  }
  for (int e = 0; e < num_elements; ++e) {
    if (!covered[static_cast<std::size_t>(e)]) {
      fail(Errc::uncoverable_element,
           "element " + std::to_string(e + 1) + " belongs to no set");
    }
  }
  return Instance(static_cast<int>(sets.size()), num_elements, k,
                  std::move(edges));
}

}  // namespace kmb

#endif  // KMB_INSTANCE_HPP_
