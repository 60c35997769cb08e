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

#include <catch2/catch_amalgamated.hpp>

#include "kmb/generators.hpp"
#include "kmb/instance.hpp"
#include "kmb/oracle.hpp"
#include "test_support.hpp"

using namespace kmb;
using namespace kmb_tests;
using Catch::Approx;

namespace {

Instance complete_unit(int nc, int nw, int k) {
  std::vector<Edge> edges;
  for (int i = 0; i < nc; ++i) {
    for (int j = 0; j < nw; ++j) edges.push_back({i, j, 1.0});
  }
  return Instance(nc, nw, k, edges);
}

}  // namespace

TEST_CASE("validate accepts a complete bipartite instance", "[instance]") {
  REQUIRE_FALSE(validate(complete_unit(2, 6, 2)).has_value());
}

TEST_CASE("validate reports an isolated customer", "[instance]") {
  // customer 3 (1-based) has no edge
  std::vector<Edge> edges{{0, 0, 1.0}, {0, 1, 1.0}, {1, 3, 1.0}};
  Instance inst(2, 4, 1, edges);
  auto v = validate(inst);
  REQUIRE(v.has_value());
  CHECK(v->code == Errc::isolated_customer);
  CHECK(v->customer == 2);
}

TEST_CASE("validate reports a negative cost", "[instance]") {
  std::vector<Edge> edges{{0, 0, 1.0}, {0, 1, -0.5}, {1, 0, 1.0}, {1, 1, 1.0}};
  Instance inst(2, 2, 1, edges);
  auto v = validate(inst);
  REQUIRE(v.has_value());
  CHECK(v->code == Errc::negative_cost);
  CHECK(v->center == 0);
  CHECK(v->customer == 1);
}

TEST_CASE("validate reports an out-of-range edge", "[instance]") {
  std::vector<Edge> edges{{0, 0, 1.0}, {5, 0, 1.0}};
  Instance inst(2, 1, 1, edges);
  auto v = validate(inst);
  REQUIRE(v.has_value());
  CHECK(v->code == Errc::bad_index);
}

TEST_CASE("duplicate edges collapse to the minimum cost", "[instance]") {
  std::vector<Edge> edges{{0, 0, 3.0}, {0, 0, 1.5}, {0, 0, 2.0}, {1, 0, 4.0}};
  Instance inst(2, 1, 1, edges);
  CHECK(inst.num_edges() == 2);
  CHECK(inst.cost(0, 0) == 1.5);
  CHECK(inst.cost(1, 0) == 4.0);
}

TEST_CASE("absent pairs read as infinite cost", "[instance]") {
  Instance inst = worked_instance();
  CHECK(std::isinf(inst.cost(0, 5)));
  CHECK(inst.cost(1, 5) == 2.0);
}

TEST_CASE("normalize shifts every customer onto a zero edge", "[instance]") {
  SECTION("costs (2, 5) become (0, 3) with offset 2") {
    std::vector<Edge> edges{{0, 0, 2.0}, {1, 0, 5.0}};
    NormalizedInstance norm = normalize(Instance(2, 1, 1, edges));
    CHECK(norm.base.cost(0, 0) == 0.0);
    CHECK(norm.base.cost(1, 0) == 3.0);
    CHECK(norm.customer_offsets[0] == 2.0);
  }
  SECTION("a customer already at zero is untouched") {
    std::vector<Edge> edges{{0, 0, 0.0}, {1, 0, 4.0}};
    NormalizedInstance norm = normalize(Instance(2, 1, 1, edges));
    CHECK(norm.base.cost(0, 0) == 0.0);
    CHECK(norm.base.cost(1, 0) == 4.0);
    CHECK(norm.customer_offsets[0] == 0.0);
  }
  SECTION("offset_total sums the per-customer minima") {
    std::vector<Edge> edges{{0, 0, 1.0}, {0, 1, 0.0}, {0, 2, 2.0}};
    NormalizedInstance norm = normalize(Instance(1, 3, 1, edges));
    CHECK(norm.offset_total == 3.0);
  }
}

TEST_CASE("normalization preserves costs up to the offset", "[instance][property]") {
  std::mt19937_64 eng(2026);
  for (int trial = 0; trial < 50; ++trial) {
    Instance inst = random_small_instance(eng);
    NormalizedInstance norm = normalize(inst);
    // random center sets, including undersized ones
    for (int rep = 0; rep < 8; ++rep) {
      std::vector<int> centers;
      for (int i = 0; i < inst.num_centers(); ++i) {
        if (detail::u01(eng) < 0.5) centers.push_back(i);
      }
      if (centers.empty()) centers.push_back(0);
      double orig = inst.set_cost(centers);
      double norm_cost = norm.base.set_cost(centers);
      if (std::isinf(orig)) {
        CHECK(std::isinf(norm_cost));
      } else {
        CHECK(close_rel(norm_cost + norm.offset_total, orig));
      }
    }
  }
}

TEST_CASE("stats computes T, alpha and the harmonic number", "[instance]") {
  SECTION("k=2, n=12") {
    CHECK(budget_T(2, 12) == 4);
    CHECK(alpha_kn(2, 12) == Approx(4.0));
  }
  SECTION("k=3, n=30") {
    CHECK(budget_T(3, 30) == 10);
    CHECK(alpha_kn(3, 30) == Approx(10.0 / 3.0 + 2.0));
  }
  SECTION("H_4 = 25/12") {
    Instance inst = complete_unit(1, 4, 1);
    InstanceStats st = stats(inst);
    CHECK(st.delta == 4);
    CHECK(st.h_delta == Approx(25.0 / 12.0));
    CHECK_FALSE(st.t_budget.has_value());  // k=1 is out of range for T
  }
  SECTION("out-of-range k throws") {
    CHECK_THROWS_AS(budget_T(1, 12), Error);
    CHECK_THROWS_AS(budget_T(5, 12), Error);
  }
}

TEST_CASE("alpha bound chain holds on a spot grid", "[instance][property]") {
  // full grid runs in the acceptance suite; spot-check the chain here
  for (int k = 2; k <= 12; ++k) {
    for (int n = 3 * k; n <= 400; n += 7) {
      double alpha = alpha_kn(k, n);
      double mid = 2.0 * std::log(static_cast<double>(n) / k) + 2.0 -
                   2.0 * std::log(2.0) + 1.0 / (2.0 * k) + 1.0 / (4.0 * k * k);
      double outer = 1.0 + 2.0 * std::log(static_cast<double>(n) / k);
      REQUIRE(alpha < mid);
      REQUIRE(mid < outer);
    }
  }
}

TEST_CASE("delta dominates n/k on feasibly coverable instances",
          "[instance][property]") {
  std::mt19937_64 eng(99);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Instance inst = random_small_instance(eng);
    OptResult opt = brute_force_opt(inst, inst.k());
    if (std::isinf(opt.best_cost)) continue;  // no size-k cover exists
    InstanceStats st = stats(inst);
    REQUIRE(static_cast<double>(inst.num_customers()) / inst.k() <=
            static_cast<double>(st.delta) + 1e-12);
    ++checked;
  }
  REQUIRE(checked > 10);
}

TEST_CASE("solve_k1 picks the cheapest full-coverage column", "[instance]") {
  SECTION("only one center covers everything") {
    std::vector<Edge> edges;
    for (int j = 0; j < 6; ++j) edges.push_back({0, j, 1.0});
    for (int j = 0; j < 3; ++j) edges.push_back({1, j, 0.1});
    K1Result r = solve_k1(Instance(2, 6, 1, edges));
    CHECK(r.center == 0);
    CHECK(r.cost == Approx(6.0));
  }
  SECTION("smaller column sum wins") {
    std::vector<Edge> edges;
    for (int j = 0; j < 3; ++j) edges.push_back({0, j, 7.0 / 3});
    for (int j = 0; j < 3; ++j) edges.push_back({1, j, 5.0 / 3});
    K1Result r = solve_k1(Instance(2, 3, 1, edges));
    CHECK(r.center == 1);
    CHECK(r.cost == Approx(5.0));
  }
  SECTION("ties break to the lower id") {
    K1Result r = solve_k1(complete_unit(3, 4, 1));
    CHECK(r.center == 0);
  }
  SECTION("infeasible when no center has full coverage") {
    std::vector<Edge> edges{{0, 0, 1.0}, {1, 1, 1.0}};
    CHECK_THROWS_AS(solve_k1(Instance(2, 2, 1, edges)), Error);
  }
}

TEST_CASE("solve_large_k takes each customer's cheapest center", "[instance]") {
  SECTION("normalized instance gives cost zero") {
    std::vector<Edge> edges{{0, 0, 0.0}, {1, 1, 0.0}, {0, 1, 2.0}, {1, 0, 3.0}};
    LargeKResult r = solve_large_k(Instance(2, 2, 1, edges));
    CHECK(r.cost == 0.0);
    CHECK(r.centers == std::vector<int>{0, 1});
  }
  SECTION("shared cheapest center collapses the set") {
    std::vector<Edge> edges;
    for (int j = 0; j < 6; ++j) edges.push_back({3, j, 0.5});
    for (int j = 0; j < 6; ++j) edges.push_back({0, j, 0.9});
    LargeKResult r = solve_large_k(Instance(5, 6, 4, edges));
    CHECK(r.centers == std::vector<int>{3});
    CHECK(r.cost == Approx(3.0));
  }
  SECTION("distinct minima sum up") {
    std::vector<Edge> edges{{0, 0, 1.0}, {1, 1, 0.0}, {2, 2, 2.0},
                            {0, 1, 9.0}, {0, 2, 9.0}, {1, 0, 9.0}};
    LargeKResult r = solve_large_k(Instance(3, 3, 2, edges));
    CHECK(r.cost == Approx(3.0));
    CHECK(r.centers.size() == 3);
  }
}

TEST_CASE("exact special cases agree with brute force", "[instance][property]") {
  std::mt19937_64 eng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int nc = 2 + detail::uniform_int(eng, 7);
    int n = 3 + detail::uniform_int(eng, 8);
    Instance inst = gen_uniform(nc, n, 0.8, 1, eng());
    OptResult opt = brute_force_opt(inst, 1);
    if (std::isinf(opt.best_cost)) {
      CHECK_THROWS_AS(solve_k1(inst), Error);
    } else {
      K1Result r = solve_k1(inst);
      CHECK(close_rel(r.cost, opt.best_cost));
    }
    // large-k result can never beat any set it is compared against
    LargeKResult lk = solve_large_k(inst);
    CHECK(le_rel(lk.cost, opt.best_cost));
  }
}

TEST_CASE("from_setcover encodes membership as zero edges", "[instance]") {
  SECTION("two sets over three elements") {
    Instance inst = from_setcover({{0, 1}, {1, 2}}, 3, 1);
    CHECK(inst.num_centers() == 2);
    CHECK(inst.num_customers() == 3);
    CHECK(inst.num_edges() == 4);
    for (const Edge& e : inst.edges()) CHECK(e.cost == 0.0);
  }
  SECTION("single covering set solves at cost zero") {
    Instance inst = from_setcover({{0, 1, 2}}, 3, 1);
    OptResult opt = brute_force_opt(inst, 1);
    CHECK(opt.best_cost == 0.0);
  }
  SECTION("uncovered element is rejected") {
    CHECK_THROWS_AS(from_setcover({{0}}, 2, 1), Error);
  }
}

TEST_CASE("set cover k-coverability matches the zero-cost optimum",
          "[instance][property]") {
  std::mt19937_64 eng(31);
  for (int trial = 0; trial < 60; ++trial) {
    RandomSetCover sc = random_setcover(eng);
    Instance inst = from_setcover(sc.sets, sc.num_elements, sc.k);
    OptResult opt = brute_force_opt(inst, sc.k);
    bool coverable = has_k_cover(sc.sets, sc.num_elements, sc.k);
    CHECK((opt.best_cost == 0.0) == coverable);
  }
}

TEST_CASE("generators are deterministic and respect their contracts",
          "[instance]") {
  SECTION("planted set achieves the planted cost") {
    PlantedInstance pl = gen_planted(8, 15, 3, 0.0, 7);
    CHECK(pl.planted.size() == 3);
    CHECK(pl.instance.set_cost(pl.planted) == 0.0);
  }
  SECTION("positive planted cost is achieved exactly by the planted set") {
    PlantedInstance pl = gen_planted(6, 12, 3, 4.5, 11);
    CHECK(pl.instance.set_cost(pl.planted) == Approx(pl.planted_cost));
    OptResult opt = brute_force_opt(pl.instance, 3);
    CHECK(le_rel(opt.best_cost, pl.planted_cost));
  }
  SECTION("density one gives the complete bipartite graph") {
    Instance inst = gen_uniform(5, 12, 1.0, 2, 1);
    CHECK(inst.num_edges() == 60);
  }
  SECTION("same seed, same instance") {
    Instance a = gen_uniform(6, 10, 0.4, 2, 123);
    Instance b = gen_uniform(6, 10, 0.4, 2, 123);
    REQUIRE(a.num_edges() == b.num_edges());
    for (std::size_t t = 0; t < a.edges().size(); ++t) {
      CHECK(a.edges()[t].center == b.edges()[t].center);
      CHECK(a.edges()[t].customer == b.edges()[t].customer);
      CHECK(a.edges()[t].cost == b.edges()[t].cost);
    }
    CHECK_FALSE(validate(a).has_value());
  }
}
