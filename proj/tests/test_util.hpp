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

#include <algorithm>
#include <cstdint>
#include <vector>

#include "genrig/graph.hpp"
#include "genrig/random.hpp"

namespace genrig::testing {

// Erdos-Renyi graph with edge probability num/den; no connectivity filter.
inline Graph random_graph(int n, std::uint64_t num, std::uint64_t den, std::uint64_t seed) {
  SplitMix64 rng(seed);
  EdgeList edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.chance(num, den)) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

// Vertex connectivity by brute force over removed subsets: the smallest k
// such that deleting some k vertices disconnects g or leaves one vertex.
inline int brute_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  for (int k = 0; k < n - 1; ++k) {
    std::vector<int> pick(static_cast<std::size_t>(n), 0);
    std::fill(pick.begin(), pick.begin() + k, 1);
    std::sort(pick.begin(), pick.end());
    do {
      std::vector<Vertex> drop;
      for (Vertex v = 0; v < n; ++v) {
        if (pick[static_cast<std::size_t>(v)]) drop.push_back(v);
      }
      if (!is_connected(delete_vertices(g, drop))) return k;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return n - 1;
}

}  // namespace genrig::testing
