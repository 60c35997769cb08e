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
// Command-line surface. Exit codes: 0 success, 1 parse/usage error,
// 2 infeasible or invalid instance, 3 phase-one budget exhausted (fixed
// lambda below the LP optimum), 4 certificate check failure, 5 oracle
// guard exceeded, 70 internal invariant violation.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kmb/kmb.hpp"

namespace {

using nlohmann::json;

constexpr const char* kSchemaRun = "kmb.run/1";
constexpr const char* kSchemaCertificate = "kmb.certificate/1";
constexpr const char* kSchemaSimulate = "kmb.simulate/1";
constexpr const char* kSchemaOracle = "kmb.oracle/1";
constexpr const char* kSchemaBench = "kmb.bench/1";

int exit_code_for(kmb::Errc code) {
  switch (code) {
    case kmb::Errc::parse_error:
    case kmb::Errc::io_error:
    case kmb::Errc::bad_parameters:
      return 1;
    case kmb::Errc::budget_exhausted:
      return 3;
    case kmb::Errc::too_large:
      return 5;
    case kmb::Errc::internal_invariant:
      return 70;
    default:
      return 2;  // infeasible / invalid instance family
  }
}

// Extended reals in JSON: infinities as strings, NaN as null.
json jext(double v) {
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double jext_parse(const json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "inf") return kmb::kInf;
    if (s == "-inf") return -kmb::kInf;
    kmb::fail(kmb::Errc::parse_error, "unexpected string number '" + s + "'");
  }
  return j.get<double>();
}

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

double parse_extended(const std::string& s) {
  if (s == "inf") return kmb::kInf;
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    kmb::fail(kmb::Errc::parse_error, "bad number '" + s + "'");
  }
}

template <typename T, typename Reader>
T read_from(const std::string& path, Reader reader) {
  if (path == "-") return reader(std::cin);
  std::ifstream in(path);
  if (!in) kmb::fail(kmb::Errc::io_error, "cannot open '" + path + "'");
  return reader(in);
}

kmb::Instance load_instance(const std::string& path) {
  return read_from<kmb::Instance>(
      path, [](std::istream& s) { return kmb::read_instance(s); });
}

void write_out(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) kmb::fail(kmb::Errc::io_error, "cannot open '" + path + "' for writing");
  out << content;
}

json instance_digest(const kmb::Instance& inst) {
  kmb::InstanceStats st = kmb::stats(inst);
  json j{{"num_centers", inst.num_centers()},
         {"num_customers", inst.num_customers()},
         {"num_edges", inst.num_edges()},
         {"k", inst.k()},
         {"delta", st.delta},
         {"h_delta", st.h_delta}};
  j["t_budget"] = st.t_budget ? json(*st.t_budget) : json(nullptr);
  j["alpha"] = st.alpha ? json(*st.alpha) : json(nullptr);
  return j;
}

json centers_1based(const std::vector<int>& centers) {
  json arr = json::array();
  for (int i : centers) arr.push_back(i + 1);
  return arr;
}

// ---------------------------------------------------------------- solve ----

int cmd_solve(const std::string& path, const std::string& mode, double lambda,
              bool trace, bool as_json) {
  kmb::Instance inst = load_instance(path);
  kmb::SolveOptions opt;
  opt.mode = mode == "fixed" ? kmb::SolveMode::fixed_lambda : kmb::SolveMode::fast;
  opt.lambda = lambda;
  auto start = std::chrono::steady_clock::now();
  kmb::Solution sol = kmb::solve(inst, opt);
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  double gap = sol.cost - sol.lower_bound;

  if (as_json) {
    json j{{"schema", kSchemaRun},
           {"instance", instance_digest(inst)},
           {"mode", mode},
           {"time_ms", ms}};
    json s{{"size", sol.centers.size()},
           {"centers", centers_1based(sol.centers)},
           {"cost", jext(sol.cost)},
           {"cost_normalized", jext(sol.cost_normalized)},
           {"lower_bound", jext(sol.lower_bound)},
           {"gap", jext(gap)},
           {"size_bound", sol.size_bound},
           {"alpha", sol.alpha},
           {"phase1_iterations", sol.phase1_iterations},
           {"phase2_additions", sol.phase2_additions},
           {"offset_total", sol.offset_total},
           {"path", kmb::solve_path_name(sol.path)}};
    s["lambda"] = sol.lambda ? jext(*sol.lambda) : json(nullptr);
    j["solution"] = s;
    if (trace) {
      json p1 = json::array();
      for (const kmb::Phase1Step& st : sol.phase1.steps) {
        p1.push_back(json{{"iteration", st.iteration},
                          {"lambda", jext(st.lambda)},
                          {"tau", jext(st.tau)},
                          {"center", st.center + 1},
                          {"capped_after", jext(st.capped_after)}});
      }
      json p2 = json::array();
      for (const kmb::PolishStep& st : sol.phase2.additions) {
        p2.push_back(json{{"customer", st.customer + 1},
                          {"center", st.center + 1},
                          {"cost_after", jext(st.cost_after)}});
      }
      j["trace"] = json{{"phase1", p1},
                        {"phase2", p2},
                        {"phase2_skipped", sol.phase2.skipped_already_zero}};
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "instance        : " << path << " (centers=" << inst.num_centers()
              << " customers=" << inst.num_customers() << " edges="
              << inst.num_edges() << " k=" << inst.k() << ")\n";
    std::cout << "mode / path     : " << mode << " / "
              << kmb::solve_path_name(sol.path) << '\n';
    std::cout << "centers (" << sol.centers.size() << ")     :";
    for (int i : sol.centers) std::cout << ' ' << (i + 1);
    std::cout << '\n';
    std::cout << "cost            : " << fmt(sol.cost) << '\n';
    std::cout << "lower bound     : " << fmt(sol.lower_bound) << '\n';
    std::cout << "gap             : " << fmt(gap) << '\n';
    if (sol.lambda) {
      std::cout << "lambda (norm)   : " << fmt(*sol.lambda) << '\n';
    }
    std::cout << "size bound      : " << sol.size_bound
              << "  (alpha=" << fmt(sol.alpha) << ")\n";
    std::cout << "phase1 iters    : " << sol.phase1_iterations
              << "  phase2 additions: " << sol.phase2_additions << '\n';
    std::cout << "time            : " << fmt(ms) << " ms\n";
    if (trace) {
      for (const kmb::Phase1Step& st : sol.phase1.steps) {
        std::cout << "  p1 t=" << st.iteration << " lambda=" << fmt(st.lambda)
                  << " tau=" << fmt(st.tau) << " center=" << (st.center + 1)
                  << " capped=" << fmt(st.capped_after) << '\n';
      }
      for (const kmb::PolishStep& st : sol.phase2.additions) {
        std::cout << "  p2 customer=" << (st.customer + 1) << " center="
                  << (st.center + 1) << " cost=" << fmt(st.cost_after) << '\n';
      }
    }
  }
  return 0;
}

// -------------------------------------------------------------- certify ----

json certificate_to_json(const kmb::DualCertificate& cert,
                         const kmb::CertificateCheck& check,
                         double offset_total) {
  json delta = json::array();
  for (double v : cert.delta) delta.push_back(jext(v));
  json pi = json::array();
  for (const kmb::PiEntry& e : cert.pi) {
    pi.push_back(json::array({e.center + 1, e.customer + 1, e.value}));
  }
  return json{{"schema", kSchemaCertificate},
              {"lambda", jext(cert.lambda)},
              {"centers", centers_1based(cert.centers)},
              {"delta", delta},
              {"pi", pi},
              {"mu", cert.mu},
              {"objective", jext(cert.objective)},
              {"offset_total", offset_total},
              {"residuals",
               json{{"nonneg", check.nonneg_residual},
                    {"cover", check.cover_residual},
                    {"row", check.row_residual},
                    {"objective", check.objective_error}}},
              {"feasible", check.feasible()}};
}

kmb::DualCertificate certificate_from_json(const json& j) {
  kmb::DualCertificate cert;
  cert.lambda = jext_parse(j.at("lambda"));
  for (const json& c : j.at("centers")) cert.centers.push_back(c.get<int>() - 1);
  for (const json& d : j.at("delta")) cert.delta.push_back(jext_parse(d));
  for (const json& e : j.at("pi")) {
    cert.pi.push_back(kmb::PiEntry{e.at(0).get<int>() - 1,
                                   e.at(1).get<int>() - 1,
                                   e.at(2).get<double>()});
  }
  cert.mu = j.at("mu").get<double>();
  cert.objective = jext_parse(j.at("objective"));
  std::sort(cert.pi.begin(), cert.pi.end(),
            [](const kmb::PiEntry& a, const kmb::PiEntry& b) {
              if (a.center != b.center) return a.center < b.center;
              return a.customer < b.customer;
            });
  return cert;
}

void print_certificate_human(const kmb::DualCertificate& cert,
                             const kmb::CertificateCheck& check) {
  std::cout << "lambda          : " << fmt(cert.lambda) << '\n';
  std::cout << "centers         :";
  for (int i : cert.centers) std::cout << ' ' << (i + 1);
  std::cout << '\n';
  std::cout << "delta           :";
  for (double v : cert.delta) std::cout << ' ' << fmt(v);
  std::cout << '\n';
  std::cout << "pi (" << cert.pi.size() << " entries)";
  for (const kmb::PiEntry& e : cert.pi) {
    std::cout << "  (" << (e.center + 1) << "," << (e.customer + 1) << ")="
              << fmt(e.value);
  }
  std::cout << '\n';
  std::cout << "mu              : " << fmt(cert.mu) << '\n';
  std::cout << "objective       : " << fmt(cert.objective) << '\n';
  std::cout << "residuals       : nonneg=" << fmt(check.nonneg_residual)
            << " cover=" << fmt(check.cover_residual)
            << " row=" << fmt(check.row_residual)
            << " objective=" << fmt(check.objective_error) << '\n';
  std::cout << "feasible (1e-9) : " << (check.feasible() ? "yes" : "no") << '\n';
}

int cmd_certify(const std::string& path, const std::string& lambda_str,
                std::vector<int> centers_1b, bool from_solve,
                const std::string& check_path, bool as_json) {
  kmb::Instance inst = load_instance(path);
  kmb::DualCertificate cert;
  double offset_total = 0.0;

  if (!check_path.empty()) {
    json doc = read_from<json>(check_path, [](std::istream& s) {
      json j;
      s >> j;
      return j;
    });
    cert = certificate_from_json(doc);
  } else if (from_solve) {
    kmb::Solution sol = kmb::solve(inst);
    if (sol.certificate) {
      cert = *sol.certificate;
      offset_total = sol.offset_total;
    } else {
      std::cerr << "note: exact solve path (" << kmb::solve_path_name(sol.path)
                << "); emitting the trivial certificate\n";
      cert.delta.assign(static_cast<std::size_t>(inst.num_customers()), 0.0);
    }
  } else {
    if (lambda_str.empty() || centers_1b.empty()) {
      kmb::fail(kmb::Errc::bad_parameters,
                "certify needs --lambda and --centers, or --from-solve, or --check");
    }
    double lambda = parse_extended(lambda_str);
    std::vector<int> centers;
    for (int c : centers_1b) centers.push_back(c - 1);
    kmb::CappedParams p(inst.k(), inst.num_customers());
    if (lambda == 0.0 || std::isinf(lambda)) {
      std::cerr << "warning: degenerate lambda; the certificate is the "
                   "all-zeros one with objective 0\n";
    }
    cert = kmb::build_certificate(inst, lambda, centers, p);
  }

  kmb::CertificateCheck check = kmb::verify_certificate(cert, inst);
  if (as_json) {
    std::cout << certificate_to_json(cert, check, offset_total).dump(2) << '\n';
  } else {
    print_certificate_human(cert, check);
  }
  if (!check.feasible()) return 4;
  return 0;
}

// ------------------------------------------------------------- simulate ----

int cmd_simulate(const std::string& inst_path, const std::string& frac_path,
                 int rounds, int trials, std::uint64_t seed, bool as_json) {
  kmb::Instance inst = load_instance(inst_path);
  kmb::FractionalSolution frac = read_from<kmb::FractionalSolution>(
      frac_path, [](std::istream& s) { return kmb::read_fractional(s); });
  if (rounds < 0) {
    kmb::InstanceStats st = kmb::stats(inst);
    if (!st.t_budget) {
      kmb::fail(kmb::Errc::bad_parameters,
                "--rounds is required when T is undefined (k outside [2, n/3])");
    }
    rounds = static_cast<int>(*st.t_budget);
  }
  kmb::MonteCarloStats mc =
      kmb::monte_carlo(frac, inst, rounds, trials, seed, kmb::thread_budget());

  const int n = inst.num_customers();
  const int k = inst.k();
  double miss = std::pow(1.0 - 1.0 / k, rounds);
  double expect_unassigned = n * miss;
  double bad_bound =
      (1.0 - 2.0 * k / static_cast<double>(n)) +
      expect_unassigned / (2.0 * k + 1.0);
  bool cost_ok = mc.mean_cost <= mc.fractional_cost + 4.0 * mc.se_cost;
  bool unassigned_ok =
      std::abs(mc.mean_unassigned - expect_unassigned) <= 4.0 * mc.se_unassigned;
  bool bad_ok = mc.bad_event_freq <= bad_bound + 4.0 * mc.se_bad_event &&
                mc.good_samples >= 1;

  if (as_json) {
    json j{{"schema", kSchemaSimulate},
           {"rounds", rounds},
           {"trials", trials},
           {"seed", seed},
           {"fractional_cost", jext(mc.fractional_cost)},
           {"mean_cost", mc.mean_cost},
           {"se_cost", mc.se_cost},
           {"mean_unassigned", mc.mean_unassigned},
           {"se_unassigned", mc.se_unassigned},
           {"expected_unassigned", expect_unassigned},
           {"bad_event",
            json{{"cost_threshold", jext(mc.cost_threshold)},
                 {"unassigned_threshold", mc.unassigned_threshold},
                 {"frequency", mc.bad_event_freq},
                 {"se", mc.se_bad_event},
                 {"bound", bad_bound},
                 {"good_samples", mc.good_samples}}},
           {"checks",
            json{{"mean_cost_ok", cost_ok},
                 {"mean_unassigned_ok", unassigned_ok},
                 {"bad_event_ok", bad_ok}}}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "rounds/trials   : " << rounds << " / " << trials << '\n';
    std::cout << "c.y             : " << fmt(mc.fractional_cost) << '\n';
    std::cout << "mean cost       : " << fmt(mc.mean_cost) << " (se "
              << fmt(mc.se_cost) << ")  bound " << fmt(mc.fractional_cost)
              << (cost_ok ? "  [ok]" : "  [VIOLATED]") << '\n';
    std::cout << "mean unassigned : " << fmt(mc.mean_unassigned) << " (se "
              << fmt(mc.se_unassigned) << ")  expected "
              << fmt(expect_unassigned)
              << (unassigned_ok ? "  [ok]" : "  [VIOLATED]") << '\n';
    std::cout << "bad event freq  : " << fmt(mc.bad_event_freq) << " (se "
              << fmt(mc.se_bad_event) << ")  bound " << fmt(bad_bound)
              << "  good samples " << mc.good_samples
              << (bad_ok ? "  [ok]" : "  [VIOLATED]") << '\n';
  }
  return 0;
}

// -------------------------------------------------------------- convert ----

int cmd_convert(const std::string& path, const std::string& to,
                const std::string& out) {
  // Peek at the format tag to decide how to read the input.
  std::string content = read_from<std::string>(path, [](std::istream& s) {
    std::ostringstream buf;
    buf << s.rdbuf();
    return buf.str();
  });
  std::istringstream probe(content);
  std::string tag;
  probe >> tag;
  std::ostringstream result;
  if (to == "kmedian") {
    if (tag == "kmedian") {
      std::istringstream in(content);
      kmb::write_instance(result, kmb::read_instance(in));
    } else {
      std::istringstream in(content);
      kmb::SetCoverProblem sc = kmb::read_setcover(in);
      kmb::write_instance(result,
                          kmb::from_setcover(sc.sets, sc.num_elements, sc.k));
    }
  } else if (to == "setcover") {
    if (tag == "setcover") {
      std::istringstream in(content);
      kmb::write_setcover(result, kmb::read_setcover(in));
    } else {
      std::istringstream in(content);
      kmb::write_setcover(result, kmb::to_setcover(kmb::read_instance(in)));
    }
  } else {
    kmb::fail(kmb::Errc::bad_parameters, "--to must be kmedian or setcover");
  }
  write_out(out, result.str());
  return 0;
}

// ------------------------------------------------------------------ gen ----

int cmd_gen(const std::string& type, int num_centers, int num_customers, int k,
            double density, double planted_cost, std::uint64_t seed,
            const std::string& out) {
  std::ostringstream result;
  if (type == "uniform") {
    kmb::Instance inst =
        kmb::gen_uniform(num_centers, num_customers, density, k, seed);
    kmb::write_instance(result, inst);
    std::cerr << "uniform instance: centers=" << num_centers << " customers="
              << num_customers << " edges=" << inst.num_edges() << " k=" << k
              << '\n';
  } else if (type == "planted") {
    kmb::PlantedInstance pl =
        kmb::gen_planted(num_centers, num_customers, k, planted_cost, seed);
    kmb::write_instance(result, pl.instance);
    std::cerr << "planted centers :";
    for (int i : pl.planted) std::cerr << ' ' << (i + 1);
    std::cerr << "\nplanted cost    : " << fmt(pl.planted_cost) << '\n';
  } else {
    kmb::fail(kmb::Errc::bad_parameters, "--type must be uniform or planted");
  }
  write_out(out, result.str());
  return 0;
}

// --------------------------------------------------------------- oracle ----

int cmd_oracle(const std::string& path, int k_override, bool as_json) {
  kmb::Instance inst = load_instance(path);
  int k = k_override > 0 ? k_override : inst.k();
  kmb::OptResult res = kmb::brute_force_opt(inst, k);
  if (as_json) {
    json j{{"schema", kSchemaOracle},
           {"k", k},
           {"best_cost", jext(res.best_cost)},
           {"best_set", centers_1based(res.best_set)},
           {"enumerated", res.enumerated_count}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "k               : " << k << '\n';
    std::cout << "best cost       : " << fmt(res.best_cost) << '\n';
    std::cout << "best set        :";
    for (int i : res.best_set) std::cout << ' ' << (i + 1);
    std::cout << '\n';
    std::cout << "enumerated      : " << res.enumerated_count << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------- bench ----

int cmd_bench(const std::string& sweep, std::uint64_t seed, bool as_json) {
  kmb::BenchResult res;
  if (sweep == "m") {
    res = kmb::bench_sweep_m(seed);
  } else if (sweep == "k") {
    res = kmb::bench_sweep_k(seed);
  } else {
    kmb::fail(kmb::Errc::bad_parameters, "--sweep must be m or k");
  }
  if (as_json) {
    json pts = json::array();
    for (const kmb::BenchPoint& p : res.points) {
      pts.push_back(json{
          {"m", p.m}, {"n", p.n}, {"k", p.k}, {"seconds", p.seconds}});
    }
    json j{{"schema", kSchemaBench},
           {"sweep", sweep},
           {"points", pts},
           {"slope", res.slope}};
    std::cout << j.dump(2) << '\n';
  } else {
    for (const kmb::BenchPoint& p : res.points) {
      std::cout << "m=" << p.m << " n=" << p.n << " k=" << p.k << " time="
                << fmt(p.seconds) << " s\n";
    }
    std::cout << "log-log slope   : " << fmt(res.slope) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-median solver: oversized center sets at certified size-k cost"};
  app.require_subcommand(1);

  std::string path, frac_path, mode = "fast", lambda_str, check_path,
              to_format, out_path = "-", gen_type, sweep;
  std::vector<int> centers_1b;
  double lambda = 0.0, density = 0.5, planted_cost = 0.0;
  int rounds = -1, trials = 10000, k_override = 0;
  int num_centers = 10, num_customers = 30, k = 3;
  std::uint64_t seed = 1;
  bool trace = false, as_json = false, from_solve = false;

  CLI::App* c_solve = app.add_subcommand("solve", "solve an instance file");
  c_solve->add_option("path", path, "instance file ('-' for stdin)")->required();
  c_solve->add_option("--mode", mode, "fast | fixed")
      ->check(CLI::IsMember({"fast", "fixed"}));
  c_solve->add_option("--lambda", lambda,
                      "target cost for --mode fixed (original scale)");
  c_solve->add_flag("--trace", trace, "include per-iteration traces");
  c_solve->add_flag("--json", as_json, "machine-readable output");

  CLI::App* c_certify =
      app.add_subcommand("certify", "build or check a dual lower-bound certificate");
  c_certify->add_option("path", path, "instance file")->required();
  c_certify->add_option("--lambda", lambda_str, "lambda ('inf' allowed)");
  c_certify->add_option("--centers", centers_1b, "center ids, 1-based")
      ->delimiter(',');
  c_certify->add_flag("--from-solve", from_solve,
                      "use the certificate of an internal fast solve");
  c_certify->add_option("--check", check_path, "verify a certificate JSON file");
  c_certify->add_flag("--json", as_json, "machine-readable output");

  CLI::App* c_sim = app.add_subcommand("simulate",
                                       "randomized rounding of a fractional solution");
  c_sim->add_option("path", path, "instance file")->required();
  c_sim->add_option("fracpath", frac_path, "fractional solution file")->required();
  c_sim->add_option("--rounds", rounds, "sampling iterations (default: T)");
  c_sim->add_option("--trials", trials, "independent repetitions");
  c_sim->add_option("--seed", seed, "RNG seed");
  c_sim->add_flag("--json", as_json, "machine-readable output");

  CLI::App* c_conv = app.add_subcommand("convert", "convert between formats");
  c_conv->add_option("path", path, "input file ('-' for stdin)")->required();
  c_conv->add_option("--to", to_format, "kmedian | setcover")->required();
  c_conv->add_option("--out", out_path, "output file ('-' for stdout)");

  CLI::App* c_gen = app.add_subcommand("gen", "generate instances");
  c_gen->add_option("--type", gen_type, "uniform | planted")->required();
  c_gen->add_option("--num-centers", num_centers, "number of centers");
  c_gen->add_option("--num-customers", num_customers, "number of customers");
  c_gen->add_option("--k", k, "target size");
  c_gen->add_option("--density", density, "edge probability (uniform)");
  c_gen->add_option("--planted-cost", planted_cost, "planted solution cost");
  c_gen->add_option("--seed", seed, "RNG seed");
  c_gen->add_option("--out", out_path, "output file ('-' for stdout)");

  CLI::App* c_oracle = app.add_subcommand("oracle", "exact brute-force optimum");
  c_oracle->add_option("path", path, "instance file")->required();
  c_oracle->add_option("--k", k_override, "override the instance's k");
  c_oracle->add_flag("--json", as_json, "machine-readable output");

  CLI::App* c_bench = app.add_subcommand("bench", "empirical scaling sweeps");
  c_bench->add_option("--sweep", sweep, "m | k")->required();
  c_bench->add_option("--seed", seed, "RNG seed");
  c_bench->add_flag("--json", as_json, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_solve->parsed()) return cmd_solve(path, mode, lambda, trace, as_json);
    if (c_certify->parsed()) {
      return cmd_certify(path, lambda_str, centers_1b, from_solve, check_path,
                         as_json);
    }
    if (c_sim->parsed()) {
      return cmd_simulate(path, frac_path, rounds, trials, seed, as_json);
    }
    if (c_conv->parsed()) return cmd_convert(path, to_format, out_path);
    if (c_gen->parsed()) {
      return cmd_gen(gen_type, num_centers, num_customers, k, density,
                     planted_cost, seed, out_path);
    }
    if (c_oracle->parsed()) return cmd_oracle(path, k_override, as_json);
    if (c_bench->parsed()) return cmd_bench(sweep, seed, as_json);
  } catch (const kmb::Error& e) {
    std::cerr << "error (" << kmb::errc_name(e.code()) << "): " << e.what()
              << '\n';
    return exit_code_for(e.code());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error (parse_error): " << e.what() << '\n';
    return 1;
  }
  return 0;
}
