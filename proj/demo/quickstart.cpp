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
// Minimal library walkthrough: build an instance, solve it, inspect the
// certificate, and sanity-check against the exhaustive oracle.

#include <cstdio>

#include "kmb/kmb.hpp"

int main() {
  // 60 customers, 12 centers, a hidden set of 4 centers at total cost 3.
  kmb::PlantedInstance planted = kmb::gen_planted(12, 60, 4, 3.0, 1);
  const kmb::Instance& inst = planted.instance;

  kmb::Solution sol = kmb::solve(inst);
  std::printf("solution: %zu centers (bound %lld), cost %.4f\n",
              sol.centers.size(), sol.size_bound, sol.cost);
  std::printf("certified lower bound on any size-%d solution: %.4f\n",
              inst.k(), sol.lower_bound);

  kmb::OptResult opt = kmb::brute_force_opt(inst, inst.k());
  std::printf("exhaustive size-%d optimum: %.4f (solution beats it: %s)\n",
              inst.k(), opt.best_cost, sol.cost <= opt.best_cost ? "yes" : "no");

  if (sol.certificate) {
    kmb::CertificateCheck check = kmb::verify_certificate(*sol.certificate, inst);
    std::printf("dual certificate feasible: %s (worst residual %.2e)\n",
                check.feasible() ? "yes" : "no", check.worst());
  }
  return 0;
}
