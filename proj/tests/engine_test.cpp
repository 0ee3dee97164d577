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
#include <thread>

#include "genrig/engine.hpp"
#include "genrig/errors.hpp"
#include "genrig/generators.hpp"
#include "test_util.hpp"

namespace genrig {
namespace {

// Independence in the plane by the counting condition: every nonempty edge
// subset F spans at least (|F| + 3) / 2 vertices.
bool laman_independent(const Graph& g) {
  const auto m = g.edge_count();
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    EdgeList f;
    for (std::size_t j = 0; j < m; ++j) {
      if ((mask >> j) & 1) f.push_back(g.edges()[j]);
    }
    const auto verts = incident_vertices(f);
    if (f.size() > 2 * verts.size() - 3) return false;
  }
  return true;
}

TEST(EngineTest, CompleteGraphRanks) {
  RigidityEngine eng;
  for (int d = 1; d <= 4; ++d) {
    for (int n = 1; n <= 9; ++n) {
      const std::size_t expect = n >= d + 1 ? static_cast<std::size_t>(n * d - choose2(d + 1))
                                            : static_cast<std::size_t>(choose2(n));
      EXPECT_EQ(eng.rank_d(complete_graph(n), d), expect) << "n=" << n << " d=" << d;
      EXPECT_TRUE(eng.is_rigid(complete_graph(n), d));
    }
  }
}

TEST(EngineTest, NamedRanks) {
  RigidityEngine eng;
  const Graph ring = ring_of_k5(6);
  EXPECT_EQ(eng.rank_d(ring, 1), 17u);
  EXPECT_EQ(eng.rank_d(ring, 2), 33u);
  EXPECT_EQ(eng.rank_d(ring, 3), 48u);
  EXPECT_EQ(eng.rank_d(complete_bipartite(5, 5), 3), 24u);
  EXPECT_EQ(eng.rank_d(complete_bipartite(3, 3), 2), 9u);
  EXPECT_EQ(eng.rank_d(figure1_graph(), 3), 36u);
  EXPECT_EQ(eng.rank_d(figure2a_graph(), 3), 105u);
}

TEST(EngineProperty, DimensionOneIsTheGraphicMatroid) {
  RigidityEngine eng;
  for (std::uint64_t s = 0; s < 80; ++s) {
    const Graph g = testing::random_graph(3 + static_cast<int>(s % 8), 1 + s % 3, 6, s);
    const auto comps = connected_components(g).size();
    EXPECT_EQ(eng.rank_d(g, 1), static_cast<std::size_t>(g.vertex_count()) - comps);
  }
}

TEST(EngineProperty, PlaneIndependenceMatchesCounts) {
  RigidityEngine eng;
  for (std::uint64_t s = 0; s < 120; ++s) {
    const Graph g = testing::random_graph(4 + static_cast<int>(s % 4), 2 + s % 3, 6, 1000 + s);
    if (g.edge_count() > 11) continue;
    EXPECT_EQ(eng.is_independent(g, 2), laman_independent(g)) << "seed " << s;
  }
}

TEST(EngineProperty, RankBounds) {
  RigidityEngine eng;
  for (std::uint64_t s = 0; s < 60; ++s) {
    const int n = 2 + static_cast<int>(s % 9);
    const Graph g = testing::random_graph(n, 1 + s % 4, 5, 77 + s);
    for (int d = 1; d <= 3; ++d) {
      const auto r = eng.rank_d(g, d);
      EXPECT_LE(r, RigidityEngine::rank_upper_bound(g.vertex_count(), g.edge_count(), d));
      // Rank is monotone in d.
      if (d > 1) {
        EXPECT_GE(r, eng.rank_d(g, d - 1));
      }
    }
  }
}

TEST(EngineTest, RigidityPredicates) {
  RigidityEngine eng;
  EXPECT_TRUE(eng.is_rigid(wheel_graph(5), 2));
  EXPECT_FALSE(eng.is_rigid(cycle_graph(5), 2));
  EXPECT_TRUE(eng.is_rigid(complete_bipartite(3, 3), 2));
  EXPECT_FALSE(eng.is_rigid(Graph(3, {{0, 1}, {1, 2}}), 2));  // small, not complete
  EXPECT_TRUE(eng.is_redundantly_rigid(complete_graph(5), 2));
  EXPECT_TRUE(eng.is_redundantly_rigid(wheel_graph(5), 2));
  EXPECT_FALSE(eng.is_redundantly_rigid(add_edge(add_edge(Graph(5, complete_graph(4).edges()), 0, 4), 1, 4), 2));
  EXPECT_TRUE(eng.is_redundantly_rigid(complete_bipartite(5, 5), 3));
  EXPECT_TRUE(eng.is_redundantly_rigid(figure2a_graph(), 3));
  EXPECT_TRUE(eng.is_redundantly_rigid(ring_of_k5(6), 3));
  EXPECT_EQ(eng.dof(cycle_graph(5), 2), 2);
  EXPECT_FALSE(eng.dof(complete_graph(2), 3).has_value());
}

TEST(EngineTest, Circuits) {
  RigidityEngine eng;
  EXPECT_TRUE(eng.is_circuit(complete_graph(4), 2));
  EXPECT_TRUE(eng.is_circuit(complete_graph(5), 3));
  EXPECT_TRUE(eng.is_circuit(cycle_graph(6), 1));
  EXPECT_TRUE(eng.is_circuit(wheel_graph(5), 2));
  EXPECT_FALSE(eng.is_circuit(complete_graph(5), 2));
  EXPECT_FALSE(eng.is_circuit(path_graph(4), 1));
  EXPECT_FALSE(eng.is_circuit(Graph(3), 1));
}

TEST(EngineTest, Bridges) {
  RigidityEngine eng;
  const Graph tree = path_graph(6);
  EXPECT_EQ(eng.bridges(tree, 1), tree.edges());
  EXPECT_TRUE(eng.bridges(cycle_graph(5), 1).empty());
  EXPECT_EQ(eng.bridges(cycle_graph(5), 2).size(), 5u);
  EXPECT_TRUE(eng.bridges(complete_graph(5), 3).empty());
}

TEST(EngineProperty, FundamentalCircuitsMatchDeletionOracle) {
  RigidityEngine eng;
  for (std::uint64_t s = 0; s < 40; ++s) {
    const Graph g = testing::random_graph(5 + static_cast<int>(s % 4), 3, 5, 500 + s);
    for (int d = 1; d <= 3; ++d) {
      const EdgeList basis = eng.find_basis(g, d);
      ASSERT_EQ(basis.size(), eng.rank_d(g, d));
      std::set<Edge> in_basis(basis.begin(), basis.end());
      for (const Edge& e : g.edges()) {
        if (in_basis.count(e)) continue;
        // b is in C(B, e) iff B - b + e is still a basis.
        EdgeList expect{e};
        for (const Edge& b : basis) {
          EdgeList swapped{e};
          for (const Edge& x : basis) {
            if (!(x == b)) swapped.push_back(x);
          }
          if (eng.edge_set_rank(g, swapped, d) == basis.size()) expect.push_back(b);
        }
        std::sort(expect.begin(), expect.end());
        EXPECT_EQ(eng.fundamental_circuit(g, d, basis, e), expect);
      }
    }
  }
}

TEST(EngineTest, FundamentalCircuitErrors) {
  RigidityEngine eng;
  const Graph k4 = complete_graph(4);
  const EdgeList basis = eng.find_basis(k4, 2);
  EXPECT_THROW(eng.fundamental_circuit(k4, 2, basis, basis[0]), InputError);
  const EdgeList dependent = k4.edges();
  EXPECT_THROW(eng.fundamental_circuit(k4, 2, dependent, {0, 1}), InputError);
  const EdgeList part(basis.begin(), basis.begin() + 2);
  Edge outside{};
  for (const Edge& e : k4.edges()) {
    if (std::find(basis.begin(), basis.end(), e) == basis.end()) outside = e;
  }
  EXPECT_THROW(eng.fundamental_circuit(k4, 2, part, outside), InputError);
}

TEST(EngineTest, MComponentsExamples) {
  RigidityEngine eng;
  EXPECT_EQ(eng.m_components(complete_graph(4), 2).size(), 1u);
  const Graph two = disjoint_union(cycle_graph(3), cycle_graph(3));
  EXPECT_EQ(eng.m_components(two, 1).size(), 2u);
  // Bridges are singleton components.
  EXPECT_EQ(eng.m_components(path_graph(4), 1).size(), 3u);
  EXPECT_TRUE(eng.is_m_connected(ring_of_k5(6), 3));
  EXPECT_FALSE(eng.is_m_connected(figure2a_graph(), 3));
  EXPECT_THROW(eng.is_m_connected(Graph(3), 2), InputError);
  EXPECT_FALSE(eng.separability_witness(complete_graph(5), 3).has_value());
}

TEST(EngineTest, Figure1BlocksAreRankSeparators) {
  // Each K_5 meets the rest of the graph in at most two vertices, so its edge
  // set splits off additively: r(block) + r(rest) = r(E).
  RigidityEngine eng;
  const Graph g = figure1_graph();
  const std::size_t total = eng.rank_d(g, 3);
  for (const auto& clique : find_cliques(g, 5)) {
    EdgeList block, rest;
    for (const Edge& e : g.edges()) {
      const bool in = std::binary_search(clique.begin(), clique.end(), e.u) &&
                      std::binary_search(clique.begin(), clique.end(), e.v);
      (in ? block : rest).push_back(e);
    }
    EXPECT_EQ(eng.edge_set_rank(g, block, 3), 9u);
    EXPECT_EQ(eng.edge_set_rank(g, block, 3) + eng.edge_set_rank(g, rest, 3), total);
  }
  const auto comps = eng.m_components(g, 3);
  EXPECT_EQ(comps.size(), 4u);
  for (const auto& c : comps) EXPECT_EQ(eng.edge_set_rank(g, c, 3), 9u);
}

TEST(EngineTest, Figure2Witness) {
  RigidityEngine eng;
  const auto w = eng.separability_witness(figure2a_graph(), 3);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->first_rank, 96u);
  EXPECT_EQ(w->second_rank, 9u);
  EXPECT_EQ(w->first.size() + w->second.size(), 118u);
}

TEST(EngineProperty, ComponentsPartitionEdgesAndAreAdditive) {
  RigidityEngine eng;
  for (std::uint64_t s = 0; s < 40; ++s) {
    const Graph g = testing::random_graph(6 + static_cast<int>(s % 5), 2, 4, 900 + s);
    if (g.edge_count() == 0) continue;
    for (int d = 1; d <= 3; ++d) {
      const auto comps = eng.m_components(g, d);
      std::size_t edges = 0, ranks = 0;
      for (const auto& c : comps) {
        edges += c.size();
        ranks += eng.edge_set_rank(g, c, d);
      }
      EXPECT_EQ(edges, g.edge_count());
      EXPECT_EQ(ranks, eng.rank_d(g, d));
    }
  }
}

TEST(EngineTest, AnalyzeIsConsistent) {
  RigidityEngine eng;
  const auto r = eng.analyze(figure2a_graph(), 3);
  EXPECT_EQ(r.rank, 105u);
  EXPECT_EQ(r.dof, 0);
  EXPECT_TRUE(r.is_rigid);
  EXPECT_TRUE(r.is_redundantly_rigid);
  EXPECT_FALSE(r.is_m_connected);
  EXPECT_EQ(r.components.size(), 2u);
  EXPECT_TRUE(r.bridges.empty());
  EXPECT_EQ(r.seeds, eng.trial_seeds());
  const auto empty = eng.analyze(Graph(4), 2);
  EXPECT_EQ(empty.rank, 0u);
  EXPECT_TRUE(empty.components.empty());
  EXPECT_FALSE(empty.is_m_connected);
}

TEST(EngineTest, ModuliAndSeedsAgree) {
  const Graph g = figure2b_graph();
  std::set<std::size_t> ranks;
  for (auto m : {Modulus::kM61, Modulus::kAlt}) {
    for (std::uint64_t seed : {0u, 1u, 99u}) {
      RigidityEngine eng(EngineConfig{3, seed, m});
      ranks.insert(eng.rank_d(g, 3));
      EXPECT_EQ(eng.m_components(g, 3).size(), 2u);
    }
  }
  EXPECT_EQ(ranks, std::set<std::size_t>{108});
}

TEST(EngineTest, MemoizesAndIsThreadSafe) {
  RigidityEngine eng;
  const Graph g = ring_of_k5(5);
  const auto r = eng.rank_d(g, 3);
  const auto cached = eng.cached_ranks();
  EXPECT_EQ(eng.rank_d(g, 3), r);
  EXPECT_EQ(eng.cached_ranks(), cached);
  std::vector<std::size_t> out(4);
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < 4; ++t) {
      pool.emplace_back([&, t] { out[static_cast<std::size_t>(t)] = eng.m_components(g, 2 + t % 2).size(); });
    }
  }
  EXPECT_EQ(out[0], out[2]);
  EXPECT_EQ(out[1], out[3]);
}

TEST(EngineTest, RejectsBadConfig) {
  EXPECT_THROW(RigidityEngine(EngineConfig{0, 0, Modulus::kM61}), InputError);
  RigidityEngine eng;
  EXPECT_THROW(eng.rank_d(complete_graph(3), 0), InputError);
}

}  // namespace
}  // namespace genrig
