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
// Acceptance suite: one line per criterion, oracle- and property-based.
// Exits with the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "kmb/kmb.hpp"
#include "test_support.hpp"

using namespace kmb;
using namespace kmb_tests;

namespace {

struct Criterion {
  std::string name;
  bool pass = true;
  std::string detail;
};

std::vector<Criterion> g_results;

void report(const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] %-14s %s\n", pass ? "PASS" : "FAIL", name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  g_results.push_back({name, pass, detail});
}

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

// Everything criteria 1-5 need from one corpus instance, computed once.
struct CorpusRun {
  std::string kind;
  Instance instance;
  Solution solution;
  OptResult opt;
  bool two_phase = false;
};

std::vector<CorpusRun> run_corpus() {
  std::vector<CorpusRun> runs;
  for (CorpusItem& item : build_corpus(180, 20260809)) {
    CorpusRun run{item.kind, item.instance, solve(item.instance),
                  brute_force_opt(item.instance, item.instance.k()), false};
    run.two_phase = run.solution.path == SolvePath::two_phase;
    runs.push_back(std::move(run));
  }
  return runs;
}

void criterion_1_bicriteria(const std::vector<CorpusRun>& runs,
                            double corpus_seconds) {
  int fails = 0;
  for (const CorpusRun& r : runs) {
    bool size_ok = static_cast<long long>(r.solution.centers.size()) <=
                   r.solution.size_bound;
    bool cost_ok = le_rel(r.solution.cost, r.opt.best_cost);
    if (!size_ok || !cost_ok) ++fails;
  }
  bool time_ok = corpus_seconds < 60.0;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%zu instances (uniform/planted/setcover), %d violations, "
                "corpus solved+checked in %.1fs (< 60s: %s)",
                runs.size(), fails, corpus_seconds, time_ok ? "yes" : "no");
  report("criterion 1", fails == 0 && time_ok && runs.size() >= 500, buf);
}

void criterion_2_lambda_bound(const std::vector<CorpusRun>& runs) {
  int fails = 0;
  int with_lambda = 0;
  for (const CorpusRun& r : runs) {
    if (!r.solution.lambda) continue;
    ++with_lambda;
    if (!le_rel(*r.solution.lambda + r.solution.offset_total, r.opt.best_cost)) {
      ++fails;
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "phase-one lambda <= brute-force optimum on %d two-phase "
                "solves, %d violations",
                with_lambda, fails);
  report("criterion 2", fails == 0 && with_lambda > 100, buf);
}

void criterion_3_invariants(const std::vector<CorpusRun>& runs) {
  int fails = 0;
  long long iterations = 0;
  for (const CorpusRun& r : runs) {
    if (!r.two_phase) continue;
    const Instance& inst = r.instance;
    const int k = inst.k();
    const int n = inst.num_customers();
    long long budget = budget_T(k, n);
    double shrink = 1.0 - 2.0 * k / static_cast<double>(n);
    if (static_cast<long long>(r.solution.phase1.steps.size()) > budget) ++fails;
    for (const Phase1Step& st : r.solution.phase1.steps) {
      ++iterations;
      double pt = std::pow(1.0 - 1.0 / k, st.iteration);
      double rhs = pt * n / (2.0 * k + 1.0) + (1.0 - pt) * shrink;
      if (!(st.capped_after <= rhs + 1e-9)) ++fails;
    }
    if (static_cast<int>(r.solution.phase2.additions.size()) > 2 * k) ++fails;
    // post-polish normalized cost <= lambda, exact comparison
    if (!(r.solution.cost_normalized <= *r.solution.lambda)) ++fails;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "trace invariant, iteration budget, polish budget, exact "
                "polish guard over %lld iterations, %d violations",
                iterations, fails);
  report("criterion 3", fails == 0 && iterations > 200, buf);
}

void criterion_4_reference_equivalence(const std::vector<CorpusRun>& runs) {
  int fails = 0;
  long long steps = 0;
  for (const CorpusRun& r : runs) {
    if (!r.two_phase) continue;
    NormalizedInstance norm = normalize(r.instance);
    CappedParams p(r.instance.k(), r.instance.num_customers());
    BreakpointIndex idx = BreakpointIndex::build(norm.base, p);
    AssignmentState state(norm.base);
    double lambda = 0.0;
    double cc = capped_cost(state, lambda, p);
    long long budget = budget_T(p.k, p.n);
    for (long long t = 1; cc >= 1.0 && t <= budget; ++t) {
      double tau = (1.0 - 1.0 / p.k) * cc + (1.0 / p.k) * p.shrink;
      LambdaStepResult fast = lambda_step(state, lambda, tau, idx, p);
      ReferenceStepResult ref = reference_lambda_step(state, lambda, tau, p);
      ++steps;
      bool lambda_ok = close_rel(fast.lambda, ref.lambda);
      bool center_ok = fast.center == ref.center;
      if (!center_ok && lambda_ok && !std::isinf(fast.lambda)) {
        // a genuine tie: both centers must meet the bar at lambda_t
        AssignmentState a(state), b(state);
        a.add_center(fast.center);
        b.add_center(ref.center);
        center_ok = capped_cost(a, fast.lambda, p) <= tau + 1e-9 &&
                    capped_cost(b, fast.lambda, p) <= tau + 1e-9;
      }
      if (!lambda_ok || !center_ok) ++fails;
      lambda = fast.lambda;
      state.add_center(fast.center);
      cc = capped_cost(state, lambda, p);
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "lambda_step vs dense reference on %lld iterations, %d "
                "mismatches (rel 1e-9)",
                steps, fails);
  report("criterion 4", fails == 0 && steps > 200, buf);
}

void criterion_5_certificates(const std::vector<CorpusRun>& runs) {
  int fails = 0;
  int sketch_violations = 0;
  long long built = 0;
  for (const CorpusRun& r : runs) {
    if (!r.two_phase) continue;
    NormalizedInstance norm = normalize(r.instance);
    CappedParams p(r.instance.k(), r.instance.num_customers());
    AssignmentState replay(norm.base);
    double max_dual = 0.0;
    auto consider = [&](double lambda) {
      DualCertificate cert =
          build_certificate(norm.base, lambda, replay.chosen(), p);
      ++built;
      CertificateCheck check = verify_certificate(cert, norm.base);
      if (!check.feasible()) ++fails;
      if (!le_rel(cert.objective + norm.offset_total, r.opt.best_cost)) ++fails;
      double quick = dual_objective_quick(replay, lambda, p);
      if (!close_rel(cert.objective, quick)) ++fails;
      max_dual = std::max(max_dual, cert.objective);
    };
    for (const Phase1Step& st : r.solution.phase1.steps) {
      consider(st.lambda);       // pair (lambda_t, C_{t-1})
      replay.add_center(st.center);
      consider(st.lambda);       // pair (lambda_t, C_t)
    }
    // sketched experimental property: final primal <= max dual objective
    if (!(r.solution.cost_normalized <= max_dual + 1e-9)) ++sketch_violations;
  }
  char buf[220];
  std::snprintf(buf, sizeof buf,
                "%lld dual certificates: feasibility, optimum bound, "
                "accounting identity -> %d violations; experimental "
                "primal<=max-dual violations: %d (target 0)",
                built, fails, sketch_violations);
  report("criterion 5", fails == 0 && sketch_violations == 0 && built > 400,
         buf);
}

void criterion_6_alpha_grid() {
  long long checked = 0;
  long long fails = 0;
  for (int k = 2; k <= 50; ++k) {
    for (int n = 3 * k; n <= 10000; ++n) {
      double alpha = alpha_kn(k, n);
      double mid = 2.0 * std::log(static_cast<double>(n) / k) + 2.0 -
                   2.0 * std::log(2.0) + 1.0 / (2.0 * k) +
                   1.0 / (4.0 * static_cast<double>(k) * k);
      double outer = 1.0 + 2.0 * std::log(static_cast<double>(n) / k);
      ++checked;
      if (!(alpha < mid && mid < outer)) ++fails;
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "alpha < 2ln(n/k)+2-2ln2+1/(2k)+1/(4k^2) < 1+2ln(n/k) on "
                "%lld grid points, %lld violations (exact compare)",
                checked, fails);
  report("criterion 6", fails == 0, buf);
}

void criterion_7_max_ave() {
  std::mt19937_64 eng(777);
  long long fails = 0;
  const int total = 100000;
  for (int trial = 0; trial < total; ++trial) {
    int k = 1 + detail::uniform_int(eng, 8);
    int n = 2 * k + 1 + detail::uniform_int(eng, 50);
    std::vector<double> b(static_cast<std::size_t>(n));
    double sum = 0.0;
    for (double& v : b) {
      v = detail::u01(eng);
      sum += v;
    }
    double scale = (0.02 + 0.96 * detail::u01(eng)) / sum;
    for (double& v : b) v *= scale;
    std::vector<double> z = zero_top_values(b, 2 * k);
    double zmax = 0.0, zsum = 0.0;
    for (double v : z) {
      zmax = std::max(zmax, v);
      zsum += v;
    }
    if (!(zmax < 1.0 / (2.0 * k + 1.0) &&
          zsum < 1.0 - 2.0 * k / static_cast<double>(n))) {
      ++fails;
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "zero_top_values bounds on %d fuzzed vectors, %lld violations",
                total, fails);
  report("criterion 7", fails == 0, buf);
}

void criterion_8_submodular_step() {
  std::mt19937_64 eng(888);
  long long checked = 0;
  long long fails = 0;
  while (checked < 10000) {
    Instance inst = random_small_instance(eng);
    OptResult opt = brute_force_opt(inst, inst.k());
    if (std::isinf(opt.best_cost)) continue;  // the reference set must cover
    for (int rep = 0; rep < 20 && checked < 10000; ++rep) {
      std::vector<int> C;
      for (int i = 0; i < inst.num_centers(); ++i) {
        if (detail::u01(eng) < 0.4) C.push_back(i);
      }
      double lambda;
      double roll = detail::u01(eng);
      if (roll < 0.05) {
        lambda = kInf;
      } else {
        lambda = 0.02 + 8.0 * detail::u01(eng);
      }
      SingleStepCheck check =
          single_step_bound_check(inst, lambda, C, opt.best_set);
      ++checked;
      if (!check.ok) ++fails;
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "single-step bound on %lld random (instance, lambda, C) "
                "triples, %lld violations",
                checked, fails);
  report("criterion 8", fails == 0, buf);
}

void criterion_9_sampling() {
  struct Case {
    std::string name;
    Instance instance;
    std::vector<int> cstar;
  };
  std::vector<Case> cases;
  {
    Instance w = worked_instance();
    cases.push_back({"worked", w, {0, 1}});
    PlantedInstance pl = gen_planted(8, 15, 3, 2.5, 99);
    cases.push_back({"planted", pl.instance, pl.planted});
    std::mt19937_64 eng(909);
    for (;;) {
      Instance inst = random_small_instance(eng);
      OptResult opt = brute_force_opt(inst, inst.k());
      if (!std::isinf(opt.best_cost)) {
        cases.push_back({"uniform", inst, opt.best_set});
        break;
      }
    }
  }
  int fails = 0;
  std::string detail;
  for (const Case& c : cases) {
    const int k = c.instance.k();
    const int n = c.instance.num_customers();
    int rounds = static_cast<int>(budget_T(k, n));
    FractionalSolution f = integral_solution(c.instance, c.cstar);
    MonteCarloStats mc =
        monte_carlo(f, c.instance, rounds, 10000, 4242, thread_budget());
    double miss = std::pow(1.0 - 1.0 / k, rounds);
    double expect_unassigned = n * miss;
    double bound = (1.0 - 2.0 * k / static_cast<double>(n)) +
                   expect_unassigned / (2.0 * k + 1.0);
    bool cost_ok = mc.mean_cost <= mc.fractional_cost + 4.0 * mc.se_cost;
    bool unassigned_ok = std::abs(mc.mean_unassigned - expect_unassigned) <=
                         4.0 * mc.se_unassigned;
    bool bad_ok =
        mc.bad_event_freq <= bound + 4.0 * mc.se_bad_event && mc.good_samples >= 1;
    if (!cost_ok || !unassigned_ok || !bad_ok) ++fails;
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s(T=%d cost %s unassigned %s bad %s) ",
                  c.name.c_str(), rounds, cost_ok ? "ok" : "BAD",
                  unassigned_ok ? "ok" : "BAD", bad_ok ? "ok" : "BAD");
    detail += buf;
  }
  report("criterion 9", fails == 0,
         "10^4 trials at rounds=T per instance: " + detail);
}

void criterion_10_performance() {
  Instance big = gen_uniform(100, 20000, 0.1, 50, 42);
  double t0 = now_seconds();
  Solution sol = solve(big);
  double big_seconds = now_seconds() - t0;
  bool big_ok = big_seconds < 10.0 &&
                static_cast<long long>(sol.centers.size()) <= sol.size_bound;

  BenchResult sweep_m = bench_sweep_m(7);
  BenchResult sweep_k = bench_sweep_k(7);
  bool slopes_ok = sweep_m.slope <= 1.3 && sweep_k.slope <= 1.3;

  char buf[220];
  std::snprintf(buf, sizeof buf,
                "m=%lld n=%d k=%d solved in %.2fs (< 10s); sweep slopes "
                "m: %.2f, k: %.2f (<= 1.3)",
                big.num_edges(), big.num_customers(), big.k(), big_seconds,
                sweep_m.slope, sweep_k.slope);
  report("criterion 10", big_ok && slopes_ok, buf);
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  double t0 = now_seconds();
  std::vector<CorpusRun> runs = run_corpus();
  double corpus_seconds = now_seconds() - t0;

  criterion_1_bicriteria(runs, corpus_seconds);
  criterion_2_lambda_bound(runs);
  criterion_3_invariants(runs);
  criterion_4_reference_equivalence(runs);
  criterion_5_certificates(runs);
  criterion_6_alpha_grid();
  criterion_7_max_ave();
  criterion_8_submodular_step();
  criterion_9_sampling();
  criterion_10_performance();

  int failures = 0;
  for (const Criterion& c : g_results) failures += c.pass ? 0 : 1;
  std::printf("%d/%zu criteria passed (total %.1fs)\n",
              static_cast<int>(g_results.size()) - failures, g_results.size(),
              now_seconds() - t0);
  return failures;
}
