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

#ifndef KMB_PARALLEL_HPP_
#define KMB_PARALLEL_HPP_

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace kmb {

/// Thread cap: the KMB_THREADS environment variable when set, otherwise the
/// hardware concurrency.
inline int thread_budget() {
  if (const char* env = std::getenv("KMB_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

/// Runs fn(begin, end) over contiguous chunks of [0, total), possibly on
/// several threads. Callers index results by position, so the outcome does
/// not depend on the thread count.
template <typename Fn>
void parallel_chunks(int total, int threads, Fn fn) {
  threads = std::max(1, std::min(threads, total));
  if (threads == 1) {
    fn(0, total);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  int chunk = (total + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    int begin = t * chunk;
    int end = std::min(total, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([fn, begin, end] { fn(begin, end); });
  }
  for (std::thread& th : pool) th.join();
}

}  // namespace kmb

#endif  // KMB_PARALLEL_HPP_
