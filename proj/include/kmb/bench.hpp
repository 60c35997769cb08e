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

#ifndef KMB_BENCH_HPP_
#define KMB_BENCH_HPP_

#include <chrono>
#include <cmath>
#include <cstdint>
#include <vector>

#include "kmb/generators.hpp"
#include "kmb/solver.hpp"

namespace kmb {

struct BenchPoint {
  long long m = 0;
  int n = 0;
  int k = 0;
  double seconds = 0.0;
};

struct BenchResult {
  std::vector<BenchPoint> points;
  double slope = 0.0;  // least-squares slope of log(seconds) vs log(swept axis)
};

namespace detail {

inline double timed_solve(const Instance& inst) {
  auto start = std::chrono::steady_clock::now();
  Solution sol = solve(inst);
  auto stop = std::chrono::steady_clock::now();
  (void)sol;
  double s = std::chrono::duration<double>(stop - start).count();
  return std::max(s, 1e-6);  // clamp away timer noise at tiny sizes
}

inline double loglog_slope(const std::vector<double>& xs,
                           const std::vector<double>& ys) {
  double mx = 0.0, my = 0.0;
  const double n = static_cast<double>(xs.size());
  for (std::size_t t = 0; t < xs.size(); ++t) {
    mx += std::log(xs[t]);
    my += std::log(ys[t]);
  }
  mx /= n;
  my /= n;
  double num = 0.0, den = 0.0;
  for (std::size_t t = 0; t < xs.size(); ++t) {
    num += (std::log(xs[t]) - mx) * (std::log(ys[t]) - my);
    den += (std::log(xs[t]) - mx) * (std::log(xs[t]) - mx);
  }
  return den > 0.0 ? num / den : 0.0;
}

}  // namespace detail

/// Wall-time sweep over the instance size m at fixed k, via edge density.
inline BenchResult bench_sweep_m(std::uint64_t seed = 1) {
  const int num_centers = 100;
  const int n = 20000;
  const int k = 20;
  BenchResult res;
  std::vector<double> xs, ys;
  for (long long target_m : {20000LL, 50000LL, 100000LL, 200000LL}) {
    double density = static_cast<double>(target_m) / num_centers / n;
    Instance inst = gen_uniform(num_centers, n, density, k, seed);
    double s = detail::timed_solve(inst);
    res.points.push_back(BenchPoint{inst.num_edges(), n, k, s});
    xs.push_back(static_cast<double>(inst.num_edges()));
    ys.push_back(s);
  }
  res.slope = detail::loglog_slope(xs, ys);
  return res;
}

/// Wall-time sweep over k at (approximately) fixed m.
inline BenchResult bench_sweep_k(std::uint64_t seed = 1) {
  const int num_centers = 100;
  const int n = 10000;
  const double density = 0.1;
  BenchResult res;
  std::vector<double> xs, ys;
  for (int k : {10, 20, 35, 50}) {
    Instance inst = gen_uniform(num_centers, n, density, k, seed);
    double s = detail::timed_solve(inst);
    res.points.push_back(BenchPoint{inst.num_edges(), n, k, s});
    xs.push_back(static_cast<double>(k));
    ys.push_back(s);
  }
  res.slope = detail::loglog_slope(xs, ys);
  return res;
}

}  // namespace kmb

#endif  // KMB_BENCH_HPP_
