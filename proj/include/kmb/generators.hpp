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

#ifndef KMB_GENERATORS_HPP_
#define KMB_GENERATORS_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "kmb/instance.hpp"
#include "kmb/rng.hpp"

namespace kmb {

/// Random instance with i.i.d. costs in [0,1) on pairs sampled with the given
/// density. Every customer is forced to have at least one edge. Deterministic
/// in the seed.
inline Instance gen_uniform(int num_centers, int num_customers, double density,
                            int k, std::uint64_t seed) {
  if (num_centers < 1 || num_customers < 1 || k < 1 || density < 0.0 ||
      density > 1.0) {
    fail(Errc::bad_parameters, "gen_uniform: bad parameters");
  }
  std::mt19937_64 eng(seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(density * num_centers * num_customers) +
                static_cast<std::size_t>(num_customers));
  for (int j = 0; j < num_customers; ++j) {
    int degree = 0;
    for (int i = 0; i < num_centers; ++i) {
      if (detail::u01(eng) < density) {
        edges.push_back(Edge{i, j, detail::u01(eng)});
        ++degree;
      }
    }
    if (degree == 0) {
      edges.push_back(
          Edge{detail::uniform_int(eng, num_centers), j, detail::u01(eng)});
    }
  }
  return Instance(num_centers, num_customers, k, std::move(edges));
}

struct PlantedInstance {
  Instance instance;
  std::vector<int> planted;  // sorted center ids
  double planted_cost = 0.0; // exact cost of the planted set
};

/// Instance with a known size-k center set whose cost equals planted_cost
/// (split evenly across customers); every other edge is strictly costlier.
inline PlantedInstance gen_planted(int num_centers, int num_customers, int k,
                                   double planted_cost, std::uint64_t seed) {
  if (num_centers < 1 || num_customers < 1 || k < 1 || k > num_centers ||
      planted_cost < 0.0) {
    fail(Errc::bad_parameters, "gen_planted: bad parameters");
  }
  std::mt19937_64 eng(seed);
  std::vector<int> perm(static_cast<std::size_t>(num_centers));
  for (int i = 0; i < num_centers; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (int i = num_centers - 1; i > 0; --i) {
    std::swap(perm[static_cast<std::size_t>(i)],
              perm[static_cast<std::size_t>(detail::uniform_int(eng, i + 1))]);
  }
  std::vector<int> planted(perm.begin(), perm.begin() + k);

  std::vector<Edge> edges;
  const double per_customer = planted_cost / num_customers;
  double achieved = 0.0;
  for (int j = 0; j < num_customers; ++j) {
    int home = planted[static_cast<std::size_t>(j % k)];
    edges.push_back(Edge{home, j, per_customer});
    achieved += per_customer;
    // noise edges, strictly above the planted cost for this customer
    for (int i = 0; i < num_centers; ++i) {
      if (i == home) continue;
      if (detail::u01(eng) < 0.5) {
        edges.push_back(Edge{i, j, per_customer + (1.0 - detail::u01(eng))});
      }
    }
  }
  std::sort(planted.begin(), planted.end());
  return PlantedInstance{
      Instance(num_centers, num_customers, k, std::move(edges)),
      std::move(planted), achieved};
}

}  // namespace kmb

#endif  // KMB_GENERATORS_HPP_
