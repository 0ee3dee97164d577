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

#include <gtest/gtest.h>

#include <set>

#include "genrig/errors.hpp"
#include "genrig/generators.hpp"
#include "genrig/graph.hpp"
#include "test_util.hpp"

namespace genrig {
namespace {

TEST(GraphTest, NormalizesEdgeOrderAndDuplicates) {
  const Graph g(4, {{2, 1}, {0, 3}, {1, 2}, {3, 0}, {0, 1}});
  const EdgeList expect{{0, 1}, {0, 3}, {1, 2}};
  EXPECT_EQ(g.edges(), expect);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_EQ(g.edge_index(3, 0), 1);
  EXPECT_EQ(g.edge_index(2, 3), -1);
}

TEST(GraphTest, RejectsSelfLoopsAndBadEndpoints) {
  EXPECT_THROW(Graph(3, {{1, 1}}), InputError);
  EXPECT_THROW(Graph(3, {{0, 3}}), InputError);
  EXPECT_THROW(Graph(3, {{-1, 2}}), InputError);
}

TEST(GraphTest, CanonicalBytesIdentifyGraphs) {
  const Graph a(3, {{0, 1}, {1, 2}});
  const Graph b(3, {{2, 1}, {1, 0}});
  const Graph c(4, {{0, 1}, {1, 2}});
  EXPECT_EQ(a.canonical_bytes(), b.canonical_bytes());
  EXPECT_NE(a.canonical_bytes(), c.canonical_bytes());
  EXPECT_EQ(a, b);
}

TEST(GraphTest, DeletionAndSubgraphsReindex) {
  const Graph k4 = complete_graph(4);
  const Graph k3 = delete_vertex(k4, 0);
  EXPECT_EQ(k3, complete_graph(3));
  const Graph minus = delete_edge(k4, {0, 1});
  EXPECT_EQ(minus.edge_count(), 5u);
  EXPECT_FALSE(minus.has_edge(0, 1));
  const std::vector<Vertex> keep{1, 3};
  const Graph ind = induced_subgraph(k4, keep);
  EXPECT_EQ(ind, Graph(2, {{0, 1}}));
  const EdgeList es{{1, 3}, {3, 2}};
  const Graph sub = edge_subgraph(k4, es);
  EXPECT_EQ(sub.vertex_count(), 3);
  EXPECT_EQ(sub.edge_count(), 2u);
  const Graph u = disjoint_union(k4, complete_graph(3));
  EXPECT_EQ(u.vertex_count(), 7);
  EXPECT_EQ(connected_components(u).size(), 2u);
  EXPECT_THROW(add_edge(k4, 0, 0), InputError);
}

TEST(GraphTest, ConnectivityOfNamedFamilies) {
  EXPECT_EQ(vertex_connectivity(complete_graph(6)), 5);
  EXPECT_EQ(vertex_connectivity(cycle_graph(7)), 2);
  EXPECT_EQ(vertex_connectivity(path_graph(5)), 1);
  EXPECT_EQ(vertex_connectivity(complete_bipartite(5, 5)), 5);
  EXPECT_EQ(vertex_connectivity(complete_bipartite(2, 6)), 2);
  EXPECT_EQ(vertex_connectivity(disjoint_union(cycle_graph(3), cycle_graph(3))), 0);
  EXPECT_EQ(vertex_connectivity(wheel_graph(6)), 3);
}

TEST(GraphTest, LocalConnectivityNeedsDistinctNonadjacentPair) {
  const Graph g = cycle_graph(6);
  EXPECT_EQ(local_vertex_connectivity(g, 0, 3), 2);
  EXPECT_THROW(local_vertex_connectivity(g, 0, 1), InputError);
  EXPECT_THROW(local_vertex_connectivity(g, 2, 2), InputError);
}

TEST(GraphProperty, MaxFlowConnectivityMatchesSubsetEnumeration) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const int n = 4 + static_cast<int>(s % 5);
    const Graph g = testing::random_graph(n, 1 + s % 4, 5, s);
    EXPECT_EQ(vertex_connectivity(g), testing::brute_connectivity(g)) << "seed " << s;
  }
}

TEST(GraphTest, FindCliquesListsEachOnce) {
  const auto k5 = find_cliques(complete_graph(6), 5);
  EXPECT_EQ(k5.size(), 6u);
  std::set<std::vector<Vertex>> uniq(k5.begin(), k5.end());
  EXPECT_EQ(uniq.size(), k5.size());
  EXPECT_TRUE(find_cliques(cycle_graph(5), 3).empty());
  EXPECT_EQ(find_cliques(ring_of_k5(4), 5).size(), 4u);
}

TEST(GeneratorsTest, BasicFamilies) {
  EXPECT_EQ(complete_graph(5).edge_count(), 10u);
  EXPECT_EQ(complete_bipartite(3, 4).edge_count(), 12u);
  EXPECT_EQ(cycle_graph(5).edge_count(), 5u);
  EXPECT_EQ(path_graph(5).edge_count(), 4u);
  EXPECT_THROW(cycle_graph(2), InputError);
  const Graph w = wheel_graph(5);
  EXPECT_EQ(w.vertex_count(), 6);
  EXPECT_EQ(w.edge_count(), 10u);
  EXPECT_EQ(w.degrees()[5], 5);
  EXPECT_EQ(cone(complete_graph(4)), complete_graph(5));
}

TEST(GeneratorsTest, GlueMergesIdentifiedVertices) {
  const Graph k5 = complete_graph(5);
  const auto glued = glue_with_parts(k5, k5, {{{0, 0}, {1, 1}, {2, 2}}});
  EXPECT_EQ(glued.graph.vertex_count(), 7);
  // The shared triangle appears once.
  EXPECT_EQ(glued.graph.edge_count(), 17u);
  EXPECT_EQ(glued.parts.part1, (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_EQ(glued.parts.part2, (std::vector<Vertex>{0, 1, 2, 5, 6}));
  EXPECT_EQ(glue(k5, k5, {}).vertex_count(), 10);
  EXPECT_THROW(glue(k5, k5, {{{0, 0}, {0, 1}}}), InputError);
  EXPECT_THROW(glue(k5, k5, {{{0, 7}}}), InputError);
}

TEST(GeneratorsTest, RingOfK5) {
  const Graph r = ring_of_k5(6);
  EXPECT_EQ(r.vertex_count(), 18);
  // Six K5's sharing one edge each with the next: 6 * 10 - 6.
  EXPECT_EQ(r.edge_count(), 54u);
  EXPECT_EQ(vertex_connectivity(r), 4);
  const auto deg = r.degrees();
  EXPECT_EQ(std::count(deg.begin(), deg.end(), 4), 6);
  EXPECT_THROW(ring_of_k5(2), InputError);
}

TEST(GeneratorsTest, Figure1Layout) {
  const Graph g = figure1_graph();
  EXPECT_EQ(g.vertex_count(), 14);
  EXPECT_EQ(g.edge_count(), 40u);
  EXPECT_EQ(vertex_connectivity(g), 3);
  const auto inner = figure1_inner_vertices();
  EXPECT_TRUE(induced_subgraph(g, inner).is_complete());
  EXPECT_EQ(find_cliques(g, 5).size(), 4u);
}

TEST(GeneratorsTest, Figure2Layout) {
  const Graph a = figure2a_graph();
  EXPECT_EQ(a.vertex_count(), 37);
  EXPECT_EQ(a.edge_count(), 118u);
  EXPECT_EQ(vertex_connectivity(a), 4);
  EXPECT_TRUE(induced_subgraph(a, figure2_core_vertices(false)).is_complete());
  const Graph b = figure2b_graph();
  EXPECT_EQ(b.vertex_count(), 38);
  EXPECT_EQ(b.edge_count(), 122u);
  const Graph core = induced_subgraph(b, figure2_core_vertices(true));
  EXPECT_EQ(core.vertex_count(), 6);
  EXPECT_EQ(core.edge_count(), 14u);
  const auto deg = a.degrees();
  EXPECT_EQ(std::count(deg.begin(), deg.end(), 4), 9);
}

}  // namespace
}  // namespace genrig
