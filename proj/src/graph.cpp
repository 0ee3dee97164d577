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

#include "genrig/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "genrig/errors.hpp"

namespace genrig {

Graph::Graph(int vertex_count) : Graph(vertex_count, {}) {}

Graph::Graph(int vertex_count, EdgeList edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count < 0) throw InputError("negative vertex count");
  for (Edge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count) {
      throw InputError("edge endpoint out of range: (" + std::to_string(e.u) +
                       "," + std::to_string(e.v) + ")");
    }
    if (e.u == e.v) {
      throw InputError("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

std::ptrdiff_t Graph::edge_index(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  const Edge key{a, b};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return it - edges_.begin();
}

bool Graph::has_edge(Vertex a, Vertex b) const { return edge_index(a, b) >= 0; }

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(vertex_count_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::vector<std::vector<Vertex>> Graph::adjacency() const {
  std::vector<std::vector<Vertex>> adj(vertex_count_);
  for (const Edge& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

bool Graph::is_complete() const {
  const auto n = static_cast<std::size_t>(vertex_count_);
  return edges_.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

std::string Graph::canonical_bytes() const {
  std::string out;
  out.reserve(4 + 8 * edges_.size());
  auto put = [&out](std::uint32_t x) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
  };
  put(static_cast<std::uint32_t>(vertex_count_));
  for (const Edge& e : edges_) {
    put(static_cast<std::uint32_t>(e.u));
    put(static_cast<std::uint32_t>(e.v));
  }
  return out;
}

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.vertex_count()) {
    throw InputError("vertex index out of range: " + std::to_string(v));
  }
}

// Maps kept vertices to 0..k-1 preserving order; dropped vertices map to -1.
Graph relabel(const Graph& g, const std::vector<Vertex>& new_index, int new_n) {
  EdgeList edges;
  for (const Edge& e : g.edges()) {
    const Vertex a = new_index[e.u];
    const Vertex b = new_index[e.v];
    if (a >= 0 && b >= 0) edges.push_back({a, b});
  }
  return Graph(new_n, std::move(edges));
}

}  // namespace

Graph delete_vertex(const Graph& g, Vertex v) {
  const Vertex vs[] = {v};
  return delete_vertices(g, vs);
}

Graph delete_vertices(const Graph& g, std::span<const Vertex> vs) {
  std::vector<char> drop(g.vertex_count(), 0);
  for (Vertex v : vs) {
    check_vertex(g, v);
    drop[v] = 1;
  }
  std::vector<Vertex> index(g.vertex_count(), -1);
  int next = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!drop[v]) index[v] = next++;
  }
  return relabel(g, index, next);
}

Graph delete_edge(const Graph& g, Edge e) {
  const Edge es[] = {e};
  return delete_edges(g, es);
}

Graph delete_edges(const Graph& g, std::span<const Edge> es) {
  std::vector<char> drop(g.edge_count(), 0);
  for (const Edge& e : es) {
    const auto i = g.edge_index(e.u, e.v);
    if (i < 0) {
      throw InputError("edge not in graph: (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ")");
    }
    drop[i] = 1;
  }
  EdgeList kept;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (!drop[i]) kept.push_back(g.edges()[i]);
  }
  return Graph(g.vertex_count(), std::move(kept));
}

Graph add_edge(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  EdgeList edges = g.edges();
  edges.push_back({u, v});
  return Graph(g.vertex_count(), std::move(edges));
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> index(g.vertex_count(), -1);
  for (Vertex v : vertices) {
    check_vertex(g, v);
    index[v] = 0;
  }
  int next = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (index[v] == 0) index[v] = next++;
  }
  return relabel(g, index, next);
}

Graph edge_subgraph(const Graph& g, std::span<const Edge> edges) {
  for (const Edge& e : edges) {
    if (!g.has_edge(e.u, e.v)) {
      throw InputError("edge not in graph: (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ")");
    }
  }
  const std::vector<Vertex> verts = incident_vertices(edges);
  std::vector<Vertex> index(g.vertex_count(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    index[verts[i]] = static_cast<Vertex>(i);
  }
  EdgeList out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.push_back({index[e.u], index[e.v]});
  return Graph(static_cast<int>(verts.size()), std::move(out));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  EdgeList edges = a.edges();
  const int shift = a.vertex_count();
  for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

std::vector<Vertex> incident_vertices(std::span<const Edge> edges) {
  std::vector<Vertex> out;
  out.reserve(2 * edges.size());
  for (const Edge& e : edges) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const auto adj = g.adjacency();
  std::vector<int> seen(g.vertex_count(), 0);
  std::vector<std::vector<Vertex>> comps;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : adj[comp[i]]) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return connected_components(g).size() <= 1;
}

bool has_isolated_vertex(const Graph& g) {
  const auto deg = g.degrees();
  return std::find(deg.begin(), deg.end(), 0) != deg.end();
}

namespace {

// Unit-capacity flow network over split vertices: v_in = 2v, v_out = 2v+1.
class SplitFlow {
 public:
  SplitFlow(const Graph& g, Vertex s, Vertex t) : head_(2 * g.vertex_count(), -1) {
    constexpr int kInf = std::numeric_limits<int>::max() / 4;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? kInf : 1);
    }
    for (const Edge& e : g.edges()) {
      add_arc(2 * e.u + 1, 2 * e.v, kInf);
      add_arc(2 * e.v + 1, 2 * e.u, kInf);
    }
    source_ = 2 * s + 1;
    sink_ = 2 * t;
  }

  int max_flow() {
    int flow = 0;
    std::vector<int> via(head_.size());
    while (true) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> q;
      q.push(source_);
      via[source_] = -2;
      while (!q.empty() && via[sink_] == -1) {
        const int x = q.front();
        q.pop();
        for (int a = head_[x]; a >= 0; a = next_[a]) {
          if (cap_[a] > 0 && via[to_[a]] == -1) {
            via[to_[a]] = a;
            q.push(to_[a]);
          }
        }
      }
      if (via[sink_] == -1) return flow;
      for (int x = sink_; x != source_; x = to_[via[x] ^ 1]) {
        --cap_[via[x]];
        ++cap_[via[x] ^ 1];
      }
      ++flow;
    }
  }

 private:
  void add_arc(int a, int b, int c) {
    push(a, b, c);
    push(b, a, 0);
  }
  void push(int a, int b, int c) {
    to_.push_back(b);
    cap_.push_back(c);
    next_.push_back(head_[a]);
    head_[a] = static_cast<int>(to_.size()) - 1;
  }

  std::vector<int> head_, to_, cap_, next_;
  int source_ = 0;
  int sink_ = 0;
};

}  // namespace

int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t) {
  check_vertex(g, s);
  check_vertex(g, t);
  if (s == t || g.has_edge(s, t)) {
    throw InputError("local connectivity needs distinct nonadjacent vertices");
  }
  return SplitFlow(g, s, t).max_flow();
}

int vertex_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return 0;
  if (g.is_complete()) return n - 1;
  if (!is_connected(g)) return 0;
  int best = n - 1;
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (g.has_edge(s, t)) continue;
      best = std::min(best, SplitFlow(g, s, t).max_flow());
    }
  }
  return best;
}

std::vector<std::vector<Vertex>> find_cliques(const Graph& g, int size) {
  std::vector<std::vector<Vertex>> out;
  if (size <= 0) return out;
  const auto adj = g.adjacency();
  std::vector<Vertex> current;
  // Extend `current` with vertices larger than its last element that are
  // adjacent to all of it.
  auto extend = [&](auto&& self, const std::vector<Vertex>& candidates) -> void {
    if (static_cast<int>(current.size()) == size) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const Vertex v = candidates[i];
      std::vector<Vertex> next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j) {
        if (std::binary_search(adj[v].begin(), adj[v].end(), candidates[j])) {
          next.push_back(candidates[j]);
        }
      }
      if (static_cast<int>(current.size() + 1 + next.size()) < size) continue;
      current.push_back(v);
      self(self, next);
      current.pop_back();
    }
  };
  std::vector<Vertex> all(g.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  extend(extend, all);
  return out;
}

}  // namespace genrig
