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
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "genrig/engine.hpp"
#include "genrig/global_rigidity.hpp"
#include "genrig/graph.hpp"

namespace genrig {

struct CorpusGraph {
  Graph graph;
  std::string label;
};

struct Corpus {
  std::string description;
  std::uint64_t seed = 0;
  std::vector<CorpusGraph> graphs;
};

// Family mix for random_corpus. The corpus holds exactly `count` graphs:
// named generators first (when enabled), then random instances alternating
// between connected Erdos-Renyi graphs and rigid extension graphs.
struct CorpusSpec {
  std::size_t count = 240;
  bool include_named = true;
  int min_vertices = 4;
  int max_vertices = 12;
  // Hard caps applied to every member, named or random.
  int max_vertices_cap = 40;
  std::size_t max_edges_cap = 140;
};

Corpus random_corpus(const CorpusSpec& spec, std::uint64_t seed);
Corpus default_corpus(std::uint64_t seed = 0);
std::vector<CorpusGraph> named_graphs();

// Rigid-graph builders. A 0-extension adds a vertex joined to d existing
// vertices; a 1-extension deletes an edge uv and adds a vertex joined to u, v
// and d-1 further vertices. Both preserve generic rigidity.
Graph zero_extension(const Graph& g, std::span<const Vertex> neighbours);
Graph one_extension(const Graph& g, Edge removed, std::span<const Vertex> others);
Graph random_rigid_graph(int d, int n, std::uint64_t seed);
Graph random_connected_graph(int n, double p, std::uint64_t seed);

enum class Outcome { kPass, kViolation, kNotApplicable };
std::string_view to_string(Outcome o);

struct InstanceRecord {
  std::size_t index = 0;
  std::string label;
  Graph graph;
  int dim = 0;
  Outcome outcome = Outcome::kPass;
  std::string details;
};

struct PropertyResult {
  std::string property;
  std::string corpus;
  std::vector<std::uint64_t> seeds;
  std::vector<InstanceRecord> records;

  std::size_t instances_tested() const;
  std::size_t not_applicable() const;
  std::vector<InstanceRecord> violations() const;
  bool passed() const { return violations().empty(); }
};

struct MotionDims {
  std::vector<std::int64_t> k;  // k[i-1] = n*i - r_i
};

struct HarnessContext {
  std::shared_ptr<const RigidityEngine> engine = std::make_shared<RigidityEngine>();
  StressTestConfig stress{};
  unsigned threads = 0;  // 0 = hardware concurrency
};

// Exponential oracles over a fixed generic framework.
std::vector<EdgeList> brute_m_components(const Graph& g, int d, const HarnessContext& ctx = {});
std::vector<EdgeList> brute_circuits(const Graph& g, int d, const HarnessContext& ctx = {});
constexpr std::size_t kBruteComponentsLimit = 20;
constexpr std::size_t kBruteCircuitsLimit = 12;

MotionDims motion_dims(const Graph& g, int d, const RigidityEngine& engine);

PropertyResult verify_mconnected_theorem(const Corpus& corpus, int d,
                                         const HarnessContext& ctx = {});
PropertyResult verify_dimension_monotonicity(const Corpus& corpus, int d,
                                             const HarnessContext& ctx = {});
PropertyResult verify_cone_circuit(const Corpus& corpus, int d, const HarnessContext& ctx = {});
PropertyResult verify_cone_mconnected(const Corpus& corpus, int d,
                                      const HarnessContext& ctx = {});
PropertyResult verify_dof_bound(const Corpus& corpus, int d, const HarnessContext& ctx = {});
PropertyResult verify_dof_bound(const Graph& g, int d, const HarnessContext& ctx = {});
PropertyResult verify_motion_recursion(const Corpus& corpus, int d,
                                       const HarnessContext& ctx = {});
PropertyResult verify_gluing_rank(const Graph& g1, const Graph& g2,
                                  const VertexPartitionSpec& spec, int d,
                                  const HarnessContext& ctx = {});
// Glues pairs of rigid corpus members along k = 0..d+1 identified vertices.
PropertyResult verify_gluing_corpus(const Corpus& corpus, int d, std::size_t pairs,
                                    const HarnessContext& ctx = {});
// m_components against brute_m_components, and brute_circuits members against
// is_circuit, for every corpus graph with at most `max_edges` edges.
PropertyResult verify_oracle_equivalence(const Corpus& corpus, int d,
                                         std::size_t max_edges = kBruteCircuitsLimit,
                                         const HarnessContext& ctx = {});
// is_globally_rigid against the exact characterizations for d = 1, 2.
PropertyResult verify_low_dimension_global(const Corpus& corpus, int d,
                                           const HarnessContext& ctx = {});

// Deletes every vertex of degree d+1, then one edge from each remaining K_{d+2}.
Graph reduction_replay(const Graph& g, int d = 3);

}  // namespace genrig
