// Copyright 2026 The genrig Authors
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

#pragma once

#include <cstdint>

namespace genrig {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based derivation: a fresh, reproducible stream key from a parent
// seed and a (tag, index) pair. Distinct arguments give unrelated streams.
inline constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag,
                                           std::uint64_t index = 0) {
  return splitmix64(splitmix64(seed ^ splitmix64(tag)) + splitmix64(~index));
}

// Stream tags.
inline constexpr std::uint64_t kTagRankTrial = 0x72616e6b;       // "rank"
inline constexpr std::uint64_t kTagGlobalTrial = 0x676c6f62;     // "glob"
inline constexpr std::uint64_t kTagStress = 0x73747273;          // "strs"
inline constexpr std::uint64_t kTagCoordinate = 0x636f6f72;      // "coor"
inline constexpr std::uint64_t kTagCorpus = 0x636f7270;          // "corp"
inline constexpr std::uint64_t kTagOracle = 0x6f72636c;          // "orcl"

// Sequential generator with portable bounded draws (no <random>
// distributions, whose outputs differ between standard libraries).
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound > 0; rejection sampling.
  constexpr std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
  }

  // Uniform integer in [lo, hi].
  constexpr int between(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // True with probability num/den.
  constexpr bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::uint64_t state_;
};

// Uniform element of F keyed by (key, counter); rejection keeps it exact.
template <class F>
F uniform_element(std::uint64_t key, std::uint64_t counter) {
  constexpr std::uint64_t p = F::kModulus;
  constexpr int bits = 64 - __builtin_clzll(p);
  for (std::uint64_t attempt = 0;; ++attempt) {
    std::uint64_t x = derive_seed(key, counter, attempt) >> (64 - bits);
    if (x < p) return F::from_reduced(x);
  }
}

}  // namespace genrig
