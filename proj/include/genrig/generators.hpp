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

#include <vector>

#include "genrig/graph.hpp"

namespace genrig {

Graph empty_graph(int n);
Graph complete_graph(int n);
// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(int a, int b);
Graph path_graph(int n);
// Requires n >= 3.
Graph cycle_graph(int n);
// cone(cycle_graph(n)); hub is vertex n.
Graph wheel_graph(int n);

// Adds vertex n adjacent to every vertex of g.
Graph cone(const Graph& g);

// Disjoint union of g1 and g2 with the listed pairs identified. Vertices of
// g1 keep their indices; unidentified vertices of g2 follow in increasing
// order. Parallel edges created by the identification are merged.
Graph glue(const Graph& g1, const Graph& g2, const VertexPartitionSpec& spec);

struct GluedGraph {
  Graph graph;
  // Images of g1's and g2's vertex sets in the glued graph.
  Decomposition parts;
};
GluedGraph glue_with_parts(const Graph& g1, const Graph& g2,
                           const VertexPartitionSpec& spec);

// Ring of k copies of K_5 on {a_i, b_i, t_i, a_{i+1}, b_{i+1}} (indices mod
// k); consecutive copies share the edge a_{i+1} b_{i+1}. Vertex layout:
// a_i = i, b_i = k + i, t_i = 2k + i. Requires k >= 3.
Graph ring_of_k5(int k);

// Ring of three K_5's pinned at single vertices, plus a K_5 through the
// pinning ring. Layout: b_k = k, c_k = 3 + k, d_k = 6 + k, e_k = 9 + k for
// k in {0,1,2}; o1 = 12, o2 = 13.
Graph figure1_graph();
// Vertex indices of figure1_graph's inner K_5 {b_0, b_1, b_2, o1, o2}.
std::vector<Vertex> figure1_inner_vertices();

// Band of twelve K_4 squares between an outer and an inner 12-cycle, closed
// into K_5's by four core vertices (corners) and eight apexes, plus a hub
// completing the core K_4 into an inner K_5. Layout: O_x = x, I_x = 12 + x,
// W_0..W_7 = 24..31, C_0..C_3 = 32..35, o = 36.
Graph figure2a_graph();
// As figure2a_graph with a second hub o2 = 37 joined to the four core
// vertices, so the core is K_6 minus the edge o o2.
Graph figure2b_graph();
// Vertex indices of the inner core ({C_0..C_3, o} or {C_0..C_3, o, o2}).
std::vector<Vertex> figure2_core_vertices(bool with_second_hub);

}  // namespace genrig
