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

#ifndef KMB_CERTIFICATE_HPP_
#define KMB_CERTIFICATE_HPP_

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "kmb/capped_cost.hpp"
#include "kmb/instance.hpp"

namespace kmb {

struct PiEntry {
  int center = 0;
  int customer = 0;
  double value = 0.0;
};

/// A feasible point (delta, pi, mu) of the dual of the standard k-Median LP
/// relaxation. Its objective -k*mu + sum_j delta_j is a machine-checkable
/// lower bound on the LP optimum, hence on the cost of every size-k set.
/// pi is stored sparsely on edges; constraints off the support are vacuous.
struct DualCertificate {
  double lambda = 0.0;
  std::vector<int> centers;        // the set the certificate was built from
  std::vector<double> delta;       // dense, per customer
  std::vector<PiEntry> pi;         // sorted by (center, customer)
  double mu = 0.0;
  double objective = 0.0;
};

/// Builds the dual point induced by a pair (lambda, C):
///   delta_j = min(lambda / (shrink*(2k+1)), d_j)
///   pi_ij   = max(0, delta_j - c_ij)
///   mu      = max_i sum_j pi_ij
/// Degenerate lambda in {0, inf} yields the all-zeros certificate, which is
/// always feasible with objective 0.
inline DualCertificate build_certificate(const Instance& inst, double lambda,
                                         const std::vector<int>& centers,
                                         const CappedParams& p) {
  DualCertificate cert;
  cert.lambda = lambda;
  cert.centers = centers;
  std::sort(cert.centers.begin(), cert.centers.end());
  cert.delta.assign(static_cast<std::size_t>(inst.num_customers()), 0.0);
  if (lambda == 0.0 || std::isinf(lambda)) return cert;

  AssignmentState state(inst);
  for (int i : centers) state.add_center(i);
  const double delta_cap = lambda * p.cap / p.shrink;
  for (int j = 0; j < inst.num_customers(); ++j) {
    cert.delta[static_cast<std::size_t>(j)] =
        std::min(delta_cap, state.distances()[static_cast<std::size_t>(j)]);
  }
  double mu = 0.0;
  for (int i = 0; i < inst.num_centers(); ++i) {
    Instance::Row r = inst.row_of_center(i);
    double row_sum = 0.0;
    for (std::size_t t = 0; t < r.size(); ++t) {
      double v = cert.delta[static_cast<std::size_t>(r.ids[t])] - r.costs[t];
      if (v > 0.0) {
        cert.pi.push_back(PiEntry{i, r.ids[t], v});
        row_sum += v;
      }
    }
    mu = std::max(mu, row_sum);
  }
  cert.mu = mu;
  double delta_sum = 0.0;
  for (double v : cert.delta) delta_sum += v;
  cert.objective = -static_cast<double>(p.k) * mu + delta_sum;
  return cert;
}

/// Dual objective of the pair (lambda, state) through the accounting identity
///   objective = (lambda/shrink) * (cc - k * (cc - min_i cc(C + i))),
/// without materializing delta/pi. Equals build_certificate's objective.
inline double dual_objective_quick(const AssignmentState& state, double lambda,
                                   const CappedParams& p) {
  if (lambda == 0.0 || std::isinf(lambda)) return 0.0;
  double cc = capped_cost(state, lambda, p);
  double best = best_addition(state, lambda, p).capped_cost;
  return lambda / p.shrink * (cc - p.k * (cc - best));
}

/// Re-expresses a certificate built on a normalized instance against the
/// original costs: delta shifts up by the per-customer offsets, pi and mu
/// are unchanged, and the objective grows by the total offset.
inline DualCertificate shift_certificate(DualCertificate cert,
                                         const std::vector<double>& offsets) {
  double total = 0.0;
  for (std::size_t j = 0; j < cert.delta.size(); ++j) {
    cert.delta[j] += offsets[j];
    total += offsets[j];
  }
  cert.objective += total;
  return cert;
}

struct CertificateCheck {
  double nonneg_residual = 0.0;  // violation of pi >= 0
  double cover_residual = 0.0;   // violation of pi >= delta - c on edges
  double row_residual = 0.0;     // violation of mu >= sum_j pi_ij
  double objective_error = 0.0;  // |stated - recomputed|
  bool wellformed = true;        // pi entries land on actual edges
  std::string note;

  bool feasible(double tol = 1e-9) const {
    return wellformed && nonneg_residual <= tol && cover_residual <= tol &&
           row_residual <= tol && objective_error <= tol;
  }
  double worst() const {
    return std::max(std::max(nonneg_residual, cover_residual),
                    std::max(row_residual, objective_error));
  }
};

/// Checks the three dual feasibility families and recomputes the objective.
/// Non-edge pairs carry infinite cost, so their cover constraints hold
/// vacuously and are not enumerated.
inline CertificateCheck verify_certificate(const DualCertificate& cert,
                                           const Instance& inst) {
  CertificateCheck check;
  if (static_cast<int>(cert.delta.size()) != inst.num_customers()) {
    check.wellformed = false;
    check.note = "delta length does not match the number of customers";
    return check;
  }
  for (const PiEntry& e : cert.pi) {
    check.nonneg_residual = std::max(check.nonneg_residual, -e.value);
  }
  // Walk edges and pi entries together; both are (center, customer)-sorted.
  std::size_t t = 0;
  std::vector<double> row_sums(static_cast<std::size_t>(inst.num_centers()), 0.0);
  for (const Edge& e : inst.edges()) {
    double pi_val = 0.0;
    while (t < cert.pi.size() &&
           (cert.pi[t].center < e.center ||
            (cert.pi[t].center == e.center && cert.pi[t].customer < e.customer))) {
      check.wellformed = false;
      check.note = "pi entry off the edge support";
      ++t;
    }
    if (t < cert.pi.size() && cert.pi[t].center == e.center &&
        cert.pi[t].customer == e.customer) {
      pi_val = cert.pi[t].value;
      ++t;
    }
    check.cover_residual =
        std::max(check.cover_residual,
                 cert.delta[static_cast<std::size_t>(e.customer)] - e.cost - pi_val);
    row_sums[static_cast<std::size_t>(e.center)] += pi_val;
  }
  if (t < cert.pi.size()) {
    check.wellformed = false;
    check.note = "pi entry off the edge support";
  }
  for (double rs : row_sums) {
    check.row_residual = std::max(check.row_residual, rs - cert.mu);
  }
  double delta_sum = 0.0;
  for (double v : cert.delta) delta_sum += v;
  double recomputed = -static_cast<double>(inst.k()) * cert.mu + delta_sum;
  check.objective_error = std::abs(recomputed - cert.objective);
  return check;
}

}  // namespace kmb

#endif  // KMB_CERTIFICATE_HPP_
