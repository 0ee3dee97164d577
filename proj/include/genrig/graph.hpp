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

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace genrig {

using Vertex = int;

// Undirected edge stored with u < v once it is part of a Graph.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

using EdgeList = std::vector<Edge>;

// Simple undirected graph on vertices 0..n-1 in canonical form. Edges are
// stored as sorted unique pairs with u < v, so two graphs built from the same
// edge multiset compare (and serialize) equal.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);
  // Throws InputError on out-of-range endpoints or self-loops.
  Graph(int vertex_count, EdgeList edges);

  int vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const EdgeList& edges() const { return edges_; }

  bool has_edge(Vertex a, Vertex b) const;
  // Position of {a,b} in edges(), or -1.
  std::ptrdiff_t edge_index(Vertex a, Vertex b) const;

  std::vector<int> degrees() const;
  std::vector<std::vector<Vertex>> adjacency() const;

  bool is_complete() const;

  // Compact byte string identifying the canonical graph; used as a memo key.
  std::string canonical_bytes() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int vertex_count_ = 0;
  EdgeList edges_;
};

// Identified vertex pairs (vertex of g1, vertex of g2) for glue().
struct VertexPartitionSpec {
  std::vector<std::pair<Vertex, Vertex>> identified_pairs;
};

// Two vertex sets covering a graph; used as a gluing decomposition.
struct Decomposition {
  std::vector<Vertex> part1;
  std::vector<Vertex> part2;
};

// --- structural operations -------------------------------------------------

Graph delete_vertex(const Graph& g, Vertex v);
Graph delete_vertices(const Graph& g, std::span<const Vertex> vs);
Graph delete_edge(const Graph& g, Edge e);
Graph delete_edges(const Graph& g, std::span<const Edge> es);
Graph add_edge(const Graph& g, Vertex u, Vertex v);
// Subgraph induced by a vertex set, reindexed compactly in increasing order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
// Subgraph formed by an edge set on its incident vertices only, reindexed
// compactly in increasing vertex order.
Graph edge_subgraph(const Graph& g, std::span<const Edge> edges);
Graph disjoint_union(const Graph& a, const Graph& b);

// Vertices incident to at least one of the given edges, sorted.
std::vector<Vertex> incident_vertices(std::span<const Edge> edges);

// --- connectivity ----------------------------------------------------------

bool is_connected(const Graph& g);
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool has_isolated_vertex(const Graph& g);

// Largest k such that g has at least k+1 vertices and stays connected after
// removing any fewer than k vertices. K_n gives n-1.
int vertex_connectivity(const Graph& g);

// Maximum number of internally vertex-disjoint s-t paths (s,t nonadjacent).
int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t);

// All cliques with exactly `size` vertices, each sorted, in lexicographic order.
std::vector<std::vector<Vertex>> find_cliques(const Graph& g, int size);

}  // namespace genrig
