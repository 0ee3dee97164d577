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

#include "genrig/engine.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>

#include "genrig/errors.hpp"
#include "genrig/framework.hpp"
#include "genrig/linalg.hpp"
#include "genrig/random.hpp"

namespace genrig {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string edge_str(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

EdgeList edges_at(const Graph& g, const std::vector<std::size_t>& positions) {
  EdgeList out;
  out.reserve(positions.size());
  for (std::size_t i : positions) out.push_back(g.edges()[i]);
  return out;
}

std::vector<std::size_t> positions_of(const Graph& g, std::span<const Edge> edges) {
  std::vector<std::size_t> out;
  for (const Edge& e : edges) {
    const auto i = g.edge_index(e.u, e.v);
    if (i < 0) throw InputError("edge not in graph: " + edge_str(e));
    out.push_back(static_cast<std::size_t>(i));
  }
  return out;
}

}  // namespace

RigidityEngine::RigidityEngine(EngineConfig config) : config_(config) {
  if (config_.trials < 1) throw InputError("trials must be >= 1");
}

std::vector<std::uint64_t> RigidityEngine::trial_seeds() const {
  std::vector<std::uint64_t> out;
  for (int t = 0; t < config_.trials; ++t) {
    out.push_back(derive_seed(config_.seed, kTagRankTrial, static_cast<std::uint64_t>(t)));
  }
  return out;
}

std::string RigidityEngine::key(const Graph& g, int d) {
  std::string k = g.canonical_bytes();
  k.push_back(static_cast<char>(d));
  return k;
}

std::size_t RigidityEngine::cached_ranks() const {
  std::shared_lock lock(mutex_);
  return rank_cache_.size();
}

std::size_t RigidityEngine::rank_upper_bound(std::size_t vertices, std::size_t edges, int d) {
  const auto n = static_cast<std::int64_t>(vertices);
  const std::int64_t full = n >= d + 1 ? d * n - choose2(d + 1) : choose2(n);
  return std::min(edges, static_cast<std::size_t>(full));
}

std::size_t RigidityEngine::rank_d(const Graph& g, int d) const {
  if (d < 1) throw InputError("dimension must be >= 1");
  if (g.edge_count() == 0) return 0;
  const std::string k = key(g, d);
  {
    std::shared_lock lock(mutex_);
    if (auto it = rank_cache_.find(k); it != rank_cache_.end()) return it->second;
  }
  const std::size_t bound = rank_upper_bound(g.vertex_count(), g.edge_count(), d);
  std::size_t best = 0;
  for (std::uint64_t seed : trial_seeds()) {
    const std::size_t r = visit_field(config_.modulus, [&]<class F>() {
      return rank<F>(rigidity_matrix(sample_framework<F>(g, d, seed)));
    });
    best = std::max(best, r);
    if (best == bound) break;
  }
  std::unique_lock lock(mutex_);
  rank_cache_.emplace(k, best);
  return best;
}

std::size_t RigidityEngine::edge_set_rank(const Graph& g, std::span<const Edge> edges,
                                          int d) const {
  return rank_d(edge_subgraph(g, edges), d);
}

std::optional<std::int64_t> RigidityEngine::dof(const Graph& g, int d) const {
  const std::int64_t n = g.vertex_count();
  if (n < d + 1) return std::nullopt;
  return d * n - choose2(d + 1) - static_cast<std::int64_t>(rank_d(g, d));
}

bool RigidityEngine::is_rigid(const Graph& g, int d) const {
  const std::int64_t n = g.vertex_count();
  if (n <= d + 1) return g.is_complete();
  return static_cast<std::int64_t>(rank_d(g, d)) == d * n - choose2(d + 1);
}

bool RigidityEngine::is_redundantly_rigid(const Graph& g, int d) const {
  if (!is_rigid(g, d)) return false;
  for (const Edge& e : g.edges()) {
    if (!is_rigid(delete_edge(g, e), d)) return false;
  }
  return true;
}

bool RigidityEngine::is_independent(const Graph& g, int d) const {
  return rank_d(g, d) == g.edge_count();
}

bool RigidityEngine::is_circuit(const Graph& g, int d) const {
  if (g.edge_count() == 0 || rank_d(g, d) + 1 != g.edge_count()) return false;
  for (const Edge& e : g.edges()) {
    if (!is_independent(delete_edge(g, e), d)) return false;
  }
  return true;
}

EdgeList RigidityEngine::bridges(const Graph& g, int d) const {
  const std::size_t r = rank_d(g, d);
  EdgeList out;
  for (const Edge& e : g.edges()) {
    if (rank_d(delete_edge(g, e), d) + 1 == r) out.push_back(e);
  }
  return out;
}

std::shared_ptr<const MatroidStructure> RigidityEngine::structure(const Graph& g,
                                                                  int d) const {
  if (d < 1) throw InputError("dimension must be >= 1");
  const std::string k = key(g, d);
  {
    std::shared_lock lock(mutex_);
    if (auto it = structure_cache_.find(k); it != structure_cache_.end()) return it->second;
  }
  const std::size_t target = rank_d(g, d);
  auto s = std::make_shared<MatroidStructure>();
  s->rank = target;
  const auto seeds = trial_seeds();
  bool found = false;
  for (std::uint64_t seed : seeds) {
    found = visit_field(config_.modulus, [&]<class F>() {
      const FieldMatrix<F> rt = rigidity_matrix(sample_framework<F>(g, d, seed)).transpose();
      const Echelon<F> ech = row_reduce<F>(rt);
      if (ech.pivots.size() != target) return false;
      s->framework_seed = seed;
      s->basis.assign(ech.pivots.begin(), ech.pivots.end());
      std::vector<char> in_basis(g.edge_count(), 0);
      for (std::size_t b : s->basis) in_basis[b] = 1;
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (in_basis[e]) continue;
        std::vector<std::size_t> circuit{e};
        for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
          if (!ech.reduced(static_cast<Index>(i), static_cast<Index>(e)).is_zero()) {
            circuit.push_back(s->basis[i]);
          }
        }
        std::sort(circuit.begin(), circuit.end());
        s->non_basis.push_back(e);
        s->fundamental_circuits.push_back(std::move(circuit));
      }
      return true;
    });
    if (found) break;
  }
  if (!found) throw EngineError("no trial framework reproduced the rank");
  std::unique_lock lock(mutex_);
  auto [it, inserted] = structure_cache_.emplace(k, std::move(s));
  return it->second;
}

EdgeList RigidityEngine::find_basis(const Graph& g, int d) const {
  return edges_at(g, structure(g, d)->basis);
}

EdgeList RigidityEngine::fundamental_circuit(const Graph& g, int d,
                                             std::span<const Edge> basis, Edge e) const {
  std::vector<std::size_t> rows = positions_of(g, basis);
  const auto ei = g.edge_index(e.u, e.v);
  if (ei < 0) throw InputError("edge not in graph: " + edge_str(e));
  if (std::find(rows.begin(), rows.end(), static_cast<std::size_t>(ei)) != rows.end()) {
    throw InputError("edge already in basis: " + edge_str(e));
  }
  rows.push_back(static_cast<std::size_t>(ei));
  const std::uint64_t seed = structure(g, d)->framework_seed;
  std::vector<std::size_t> circuit = visit_field(config_.modulus, [&]<class F>() {
    const FieldMatrix<F> r = rigidity_matrix(sample_framework<F>(g, d, seed));
    const FieldMatrix<F> sub = select_rows<F>(r, rows);
    if (rank<F>(sub.topRows(sub.rows() - 1)) + 1 != static_cast<std::size_t>(sub.rows())) {
      throw InputError("basis is not independent");
    }
    const auto kernel = kernel_basis<F>(sub.transpose());
    if (kernel.empty()) throw InputError("edge is independent of the basis: " + edge_str(e));
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!kernel[0](static_cast<Index>(i)).is_zero()) out.push_back(rows[i]);
    }
    return out;
  });
  std::sort(circuit.begin(), circuit.end());
  return edges_at(g, circuit);
}

std::vector<EdgeList> RigidityEngine::m_components(const Graph& g, int d) const {
  const auto s = structure(g, d);
  UnionFind uf(g.edge_count());
  for (const auto& circuit : s->fundamental_circuits) {
    for (std::size_t i = 1; i < circuit.size(); ++i) uf.unite(circuit[0], circuit[i]);
  }
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::ptrdiff_t> class_of_root(g.edge_count(), -1);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const std::size_t root = uf.find(e);
    if (class_of_root[root] < 0) {
      class_of_root[root] = static_cast<std::ptrdiff_t>(classes.size());
      classes.emplace_back();
    }
    classes[class_of_root[root]].push_back(e);
  }
  std::vector<EdgeList> comps;
  for (const auto& c : classes) comps.push_back(edges_at(g, c));

  // Certify: each class splits off additively, and the singletons are
  // exactly the edges whose deletion lowers the rank.
  if (comps.size() > 1) {
    const std::size_t total = rank_d(g, d);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      EdgeList rest;
      for (std::size_t j = 0; j < comps.size(); ++j) {
        if (j != i) rest.insert(rest.end(), comps[j].begin(), comps[j].end());
      }
      std::sort(rest.begin(), rest.end());
      if (edge_set_rank(g, comps[i], d) + edge_set_rank(g, rest, d) != total) {
        throw EngineError("component rank additivity failed; retry with another seed");
      }
    }
  }
  EdgeList singles;
  for (const auto& c : comps) {
    if (c.size() == 1) singles.push_back(c[0]);
  }
  std::sort(singles.begin(), singles.end());
  if (singles != bridges(g, d)) {
    throw EngineError("singleton components disagree with bridges; retry with another seed");
  }
  return comps;
}

bool RigidityEngine::is_m_connected(const Graph& g, int d) const {
  if (g.edge_count() == 0) throw InputError("is_m_connected needs at least one edge");
  return m_components(g, d).size() == 1;
}

std::optional<SeparabilityWitness> RigidityEngine::separability_witness(const Graph& g,
                                                                        int d) const {
  if (g.edge_count() == 0) return std::nullopt;
  const auto comps = m_components(g, d);
  if (comps.size() < 2) return std::nullopt;
  std::size_t pick = 0;
  for (std::size_t i = 1; i < comps.size(); ++i) {
    if (comps[i].size() > comps[pick].size()) pick = i;
  }
  SeparabilityWitness w;
  w.first = comps[pick];
  for (std::size_t j = 0; j < comps.size(); ++j) {
    if (j != pick) w.second.insert(w.second.end(), comps[j].begin(), comps[j].end());
  }
  std::sort(w.second.begin(), w.second.end());
  w.first_rank = edge_set_rank(g, w.first, d);
  w.second_rank = edge_set_rank(g, w.second, d);
  return w;
}

MatroidReport RigidityEngine::analyze(const Graph& g, int d) const {
  MatroidReport r;
  r.dim = d;
  r.vertex_count = static_cast<std::size_t>(g.vertex_count());
  r.edge_count = g.edge_count();
  r.rank = rank_d(g, d);
  r.dof = dof(g, d);
  r.is_rigid = is_rigid(g, d);
  r.is_redundantly_rigid = is_redundantly_rigid(g, d);
  r.is_independent = is_independent(g, d);
  r.bridges = bridges(g, d);
  if (g.edge_count() > 0) {
    r.components = m_components(g, d);
    r.is_m_connected = r.components.size() == 1;
    r.separability_witness = separability_witness(g, d);
  }
  r.trials = config_.trials;
  r.seed = config_.seed;
  r.seeds = trial_seeds();
  r.modulus = config_.modulus;
  return r;
}

}  // namespace genrig
