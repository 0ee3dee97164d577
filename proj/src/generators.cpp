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

#include "genrig/generators.hpp"

#include <algorithm>
#include <string>

#include "genrig/errors.hpp"

namespace genrig {

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  if (n < 0) throw InputError("complete_graph: n must be >= 0");
  EdgeList edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) throw InputError("complete_bipartite: parts must be >= 0");
  EdgeList edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < a + b; ++v) edges.push_back({u, v});
  }
  return Graph(a + b, std::move(edges));
}

Graph path_graph(int n) {
  EdgeList edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(std::max(n, 0), std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle_graph: n must be >= 3");
  EdgeList edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph(n, std::move(edges));
}

Graph wheel_graph(int n) { return cone(cycle_graph(n)); }

Graph cone(const Graph& g) {
  const Vertex apex = g.vertex_count();
  EdgeList edges = g.edges();
  for (Vertex u = 0; u < apex; ++u) edges.push_back({u, apex});
  return Graph(apex + 1, std::move(edges));
}

GluedGraph glue_with_parts(const Graph& g1, const Graph& g2,
                           const VertexPartitionSpec& spec) {
  const int n1 = g1.vertex_count();
  const int n2 = g2.vertex_count();
  std::vector<Vertex> image(n2, -1);
  std::vector<char> used1(n1, 0);
  for (const auto& [a, b] : spec.identified_pairs) {
    if (a < 0 || a >= n1 || b < 0 || b >= n2) {
      throw InputError("glue: identified pair (" + std::to_string(a) + "," +
                       std::to_string(b) + ") out of range");
    }
    if (used1[a] || image[b] >= 0) {
      throw InputError("glue: vertex identified twice");
    }
    used1[a] = 1;
    image[b] = a;
  }
  Vertex next = n1;
  for (Vertex v = 0; v < n2; ++v) {
    if (image[v] < 0) image[v] = next++;
  }
  EdgeList edges = g1.edges();
  for (const Edge& e : g2.edges()) edges.push_back({image[e.u], image[e.v]});

  GluedGraph out{Graph(next, std::move(edges)), {}};
  for (Vertex v = 0; v < n1; ++v) out.parts.part1.push_back(v);
  out.parts.part2 = image;
  std::sort(out.parts.part2.begin(), out.parts.part2.end());
  return out;
}

Graph glue(const Graph& g1, const Graph& g2, const VertexPartitionSpec& spec) {
  return glue_with_parts(g1, g2, spec).graph;
}

namespace {

void add_clique(EdgeList& edges, std::initializer_list<Vertex> vs) {
  for (auto i = vs.begin(); i != vs.end(); ++i) {
    for (auto j = std::next(i); j != vs.end(); ++j) edges.push_back({*i, *j});
  }
}

}  // namespace

Graph ring_of_k5(int k) {
  if (k < 3) throw InputError("ring_of_k5: k must be >= 3");
  auto a = [k](int i) { return ((i % k) + k) % k; };
  auto b = [k, &a](int i) { return k + a(i); };
  auto t = [k, &a](int i) { return 2 * k + a(i); };
  EdgeList edges;
  for (int i = 0; i < k; ++i) {
    add_clique(edges, {a(i), b(i), t(i), a(i + 1), b(i + 1)});
  }
  return Graph(3 * k, std::move(edges));
}

Graph figure1_graph() {
  auto b = [](int k) { return k % 3; };
  auto c = [](int k) { return 3 + k % 3; };
  auto d = [](int k) { return 6 + k % 3; };
  auto e = [](int k) { return 9 + k % 3; };
  constexpr Vertex o1 = 12;
  constexpr Vertex o2 = 13;
  EdgeList edges;
  for (int k = 0; k < 3; ++k) {
    edges.push_back({b(k), c(k)});
    edges.push_back({c(k), d(k)});
    edges.push_back({d(k), b(k)});
    edges.push_back({e(k), b(k)});
    edges.push_back({e(k), c(k)});
    edges.push_back({e(k), d(k)});
    edges.push_back({e(k), b(k + 1)});
    edges.push_back({e(k), c(k + 1)});
    edges.push_back({e(k), d(k + 1)});
    edges.push_back({e(k), e(k + 1)});
    edges.push_back({b(k), b(k + 1)});
    edges.push_back({b(k), o1});
    edges.push_back({b(k), o2});
  }
  edges.push_back({o1, o2});
  return Graph(14, std::move(edges));
}

std::vector<Vertex> figure1_inner_vertices() { return {0, 1, 2, 12, 13}; }

namespace {

Graph figure2_graph(bool with_second_hub) {
  auto outer = [](int x) { return ((x % 12) + 12) % 12; };
  auto inner = [&outer](int x) { return 12 + outer(x); };
  auto apex = [](int w) { return 24 + w; };
  auto core = [](int c) { return 32 + c; };
  constexpr Vertex hub = 36;
  constexpr Vertex hub2 = 37;

  EdgeList edges;
  // Band: twelve K_4 squares {O_x, O_{x+1}, I_x, I_{x+1}} sharing rungs.
  for (int x = 0; x < 12; ++x) {
    edges.push_back({outer(x), outer(x + 1)});
    edges.push_back({inner(x), inner(x + 1)});
    edges.push_back({inner(x), outer(x)});
    edges.push_back({inner(x), outer(x + 1)});
    edges.push_back({inner(x + 1), outer(x)});
  }
  // Core K_4 plus hub(s).
  for (int c = 0; c < 4; ++c) {
    for (int c2 = c + 1; c2 < 4; ++c2) edges.push_back({core(c), core(c2)});
    edges.push_back({core(c), hub});
    if (with_second_hub) edges.push_back({core(c), hub2});
  }
  // Corner squares start at 3c, apex squares at 3c+1 and 3c+2.
  auto attach = [&](Vertex v, int start) {
    edges.push_back({v, outer(start)});
    edges.push_back({v, outer(start + 1)});
    edges.push_back({v, inner(start)});
    edges.push_back({v, inner(start + 1)});
  };
  for (int c = 0; c < 4; ++c) {
    attach(core(c), 3 * c);
    attach(apex(2 * c), 3 * c + 1);
    attach(apex(2 * c + 1), 3 * c + 2);
  }
  return Graph(with_second_hub ? 38 : 37, std::move(edges));
}

}  // namespace

Graph figure2a_graph() { return figure2_graph(false); }
Graph figure2b_graph() { return figure2_graph(true); }

std::vector<Vertex> figure2_core_vertices(bool with_second_hub) {
  std::vector<Vertex> out{32, 33, 34, 35, 36};
  if (with_second_hub) out.push_back(37);
  return out;
}

}  // namespace genrig
