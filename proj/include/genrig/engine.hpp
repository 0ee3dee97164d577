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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "genrig/field.hpp"
#include "genrig/graph.hpp"

namespace genrig {

// C(n, 2) for small non-negative n.
constexpr std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

struct EngineConfig {
  // Independent frameworks sampled per rank query; the reported rank is the
  // maximum, since a bad sample can only lose rank.
  int trials = 3;
  std::uint64_t seed = 0;
  Modulus modulus = Modulus::kM61;
};

// An additive split E = first + second with r(first) + r(second) = r(E).
struct SeparabilityWitness {
  EdgeList first;
  EdgeList second;
  std::size_t first_rank = 0;
  std::size_t second_rank = 0;
};

// Basis and fundamental circuits of the rigidity matroid as realized by one
// sampled framework (the first trial reaching the maximal rank). Edge
// references are positions in the canonical edge list.
struct MatroidStructure {
  std::size_t rank = 0;
  std::uint64_t framework_seed = 0;
  std::vector<std::size_t> basis;
  std::vector<std::size_t> non_basis;
  // fundamental_circuits[i] is the circuit of non_basis[i] inside basis +
  // non_basis[i], sorted.
  std::vector<std::vector<std::size_t>> fundamental_circuits;
};

struct MatroidReport {
  int dim = 1;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t rank = 0;
  std::optional<std::int64_t> dof;
  bool is_rigid = false;
  bool is_redundantly_rigid = false;
  bool is_independent = false;
  EdgeList bridges;
  std::vector<EdgeList> components;
  bool is_m_connected = false;
  std::optional<SeparabilityWitness> separability_witness;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> seeds;
  Modulus modulus = Modulus::kM61;
};

// Generic rigidity matroid oracle. Every query is deterministic in
// (graph, d, config); results are memoized per (canonical graph, d) for the
// lifetime of the engine. Safe for concurrent use.
class RigidityEngine {
 public:
  explicit RigidityEngine(EngineConfig config = {});

  const EngineConfig& config() const { return config_; }
  // Framework seed of each rank trial.
  std::vector<std::uint64_t> trial_seeds() const;

  // r_d(G): max over the configured trials of the rigidity matrix rank.
  std::size_t rank_d(const Graph& g, int d) const;
  // Rank of the subgraph formed by an edge set on its incident vertices.
  std::size_t edge_set_rank(const Graph& g, std::span<const Edge> edges, int d) const;
  // d n - C(d+1,2) - r_d(G); absent when n < d+1.
  std::optional<std::int64_t> dof(const Graph& g, int d) const;

  // Upper bound on r_d for any graph with this many vertices and edges.
  static std::size_t rank_upper_bound(std::size_t vertices, std::size_t edges, int d);

  // On n <= d+1 vertices a graph counts as rigid iff it is complete.
  bool is_rigid(const Graph& g, int d) const;
  bool is_redundantly_rigid(const Graph& g, int d) const;
  bool is_independent(const Graph& g, int d) const;
  bool is_circuit(const Graph& g, int d) const;

  // Edges e with r_d(G - e) = r_d(G) - 1.
  EdgeList bridges(const Graph& g, int d) const;
  // Greedy basis in canonical edge order.
  EdgeList find_basis(const Graph& g, int d) const;
  // Unique circuit in basis + e. Throws InputError if the basis is dependent,
  // contains e, or spans no circuit with e.
  EdgeList fundamental_circuit(const Graph& g, int d, std::span<const Edge> basis,
                               Edge e) const;

  // Connected components of the rigidity matroid as edge sets (each sorted,
  // ordered by first edge). Throws EngineError if the result fails the rank
  // additivity or bridge cross-checks.
  std::vector<EdgeList> m_components(const Graph& g, int d) const;
  // Requires at least one edge.
  bool is_m_connected(const Graph& g, int d) const;
  // (largest component, union of the rest) when separable.
  std::optional<SeparabilityWitness> separability_witness(const Graph& g, int d) const;

  MatroidReport analyze(const Graph& g, int d) const;

  std::shared_ptr<const MatroidStructure> structure(const Graph& g, int d) const;

  std::size_t cached_ranks() const;

 private:
  static std::string key(const Graph& g, int d);

  EngineConfig config_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<std::string, std::size_t> rank_cache_;
  mutable std::unordered_map<std::string, std::shared_ptr<const MatroidStructure>>
      structure_cache_;
};

}  // namespace genrig
