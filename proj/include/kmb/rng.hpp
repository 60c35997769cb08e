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

#ifndef KMB_RNG_HPP_
#define KMB_RNG_HPP_

#include <cstdint>
#include <random>

namespace kmb::detail {

// Uniform double in [0, 1) from the top 53 bits; avoids the
// implementation-defined std distributions so runs are reproducible.
inline double u01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

inline int uniform_int(std::mt19937_64& eng, int bound) {
  return static_cast<int>(eng() % static_cast<std::uint64_t>(bound));
}

// splitmix64 finalizer; derives independent per-trial seeds from (seed, t).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace kmb::detail

#endif  // KMB_RNG_HPP_
