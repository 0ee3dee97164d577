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

#include "genrig/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <sstream>
#include <thread>

#include "genrig/framework.hpp"
#include "genrig/generators.hpp"
#include "genrig/random.hpp"

namespace genrig {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::kPass:
      return "pass";
    case Outcome::kViolation:
      return "violation";
    case Outcome::kNotApplicable:
      return "not_applicable";
  }
  return "?";
}

std::size_t PropertyResult::instances_tested() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) {
    return r.outcome != Outcome::kNotApplicable;
  }));
}

std::size_t PropertyResult::not_applicable() const {
  return records.size() - instances_tested();
}

std::vector<InstanceRecord> PropertyResult::violations() const {
  std::vector<InstanceRecord> out;
  for (const auto& r : records) {
    if (r.outcome == Outcome::kViolation) out.push_back(r);
  }
  return out;
}

// ---------------------------------------------------------------- corpus

Graph zero_extension(const Graph& g, std::span<const Vertex> neighbours) {
  EdgeList edges = g.edges();
  const Vertex v = g.vertex_count();
  for (Vertex u : neighbours) edges.push_back({u, v});
  return Graph(v + 1, std::move(edges));
}

Graph one_extension(const Graph& g, Edge removed, std::span<const Vertex> others) {
  if (!g.has_edge(removed.u, removed.v)) throw InputError("1-extension needs an existing edge");
  const Graph base = delete_edge(g, removed);
  std::vector<Vertex> nb{removed.u, removed.v};
  nb.insert(nb.end(), others.begin(), others.end());
  return zero_extension(base, nb);
}

namespace {

// k distinct vertices from [0, n), excluding `skip`, in draw order.
std::vector<Vertex> distinct_vertices(SplitMix64& rng, int n, int k,
                                      const std::vector<Vertex>& skip = {}) {
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < n; ++v) {
    if (std::find(skip.begin(), skip.end(), v) == skip.end()) pool.push_back(v);
  }
  std::vector<Vertex> out;
  for (int i = 0; i < k; ++i) {
    const auto j = static_cast<std::size_t>(rng.below(pool.size() - static_cast<std::size_t>(i)));
    std::swap(pool[static_cast<std::size_t>(i) + j], pool[static_cast<std::size_t>(i)]);
    out.push_back(pool[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace

Graph random_rigid_graph(int d, int n, std::uint64_t seed) {
  if (d < 1 || n < d + 1) throw InputError("random_rigid_graph needs n >= d+1");
  SplitMix64 rng(seed);
  Graph g = complete_graph(d + 1);
  while (g.vertex_count() < n) {
    if (rng.chance(1, 2)) {
      const auto nb = distinct_vertices(rng, g.vertex_count(), d);
      g = zero_extension(g, nb);
    } else {
      const Edge e = g.edges()[static_cast<std::size_t>(rng.below(g.edge_count()))];
      const auto others = distinct_vertices(rng, g.vertex_count(), d - 1, {e.u, e.v});
      g = one_extension(g, e, others);
    }
  }
  // A few extra edges give redundantly and globally rigid members too.
  const int extra = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  for (int i = 0; i < extra && !g.is_complete(); ++i) {
    const auto uv = distinct_vertices(rng, n, 2);
    g = add_edge(g, uv[0], uv[1]);
  }
  return g;
}

Graph random_connected_graph(int n, double p, std::uint64_t seed) {
  if (n < 1) throw InputError("random_connected_graph needs n >= 1");
  // p is quantised to 1/1024 so draws stay integer-only.
  const auto num = static_cast<std::uint64_t>(std::clamp(p, 0.0, 1.0) * 1024.0 + 0.5);
  SplitMix64 rng(seed);
  for (;;) {
    EdgeList edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (rng.chance(num, 1024)) edges.push_back({u, v});
      }
    }
    Graph g(n, std::move(edges));
    if (is_connected(g)) return g;
  }
}

std::vector<CorpusGraph> named_graphs() {
  std::vector<CorpusGraph> out;
  auto add = [&](Graph g, std::string label) { out.push_back({std::move(g), std::move(label)}); };
  for (int n = 4; n <= 8; ++n) add(complete_graph(n), "complete:" + std::to_string(n));
  add(complete_bipartite(3, 3), "bipartite:3,3");
  add(complete_bipartite(3, 4), "bipartite:3,4");
  add(complete_bipartite(4, 4), "bipartite:4,4");
  add(complete_bipartite(5, 5), "bipartite:5,5");
  for (int n = 4; n <= 7; ++n) add(cycle_graph(n), "cycle:" + std::to_string(n));
  for (int n = 4; n <= 6; ++n) add(wheel_graph(n), "wheel:" + std::to_string(n));
  add(path_graph(4), "path:4");
  add(path_graph(6), "path:6");
  add(disjoint_union(cycle_graph(3), cycle_graph(3)), "two-triangles");
  add(disjoint_union(complete_graph(4), complete_graph(4)), "two-k4");
  const Graph k4 = complete_graph(4);
  const Graph k5 = complete_graph(5);
  add(delete_edge(k4, {0, 1}), "complete:4-minus-edge");
  add(delete_edge(k5, {0, 1}), "complete:5-minus-edge");
  add(glue(k5, k5, {{{0, 0}, {1, 1}, {2, 2}}}), "glue:k5,k5,3");
  add(glue(k5, k5, {{{0, 0}, {1, 1}}}), "glue:k5,k5,2");
  add(glue(k4, k4, {{{0, 0}, {1, 1}}}), "glue:k4,k4,2");
  add(cone(complete_bipartite(3, 3)), "cone:bipartite:3,3");
  for (int k = 3; k <= 6; ++k) add(ring_of_k5(k), "ring-of-k5:" + std::to_string(k));
  add(figure1_graph(), "figure1");
  add(figure2a_graph(), "figure2a");
  add(figure2b_graph(), "figure2b");
  return out;
}

Corpus random_corpus(const CorpusSpec& spec, std::uint64_t seed) {
  if (spec.min_vertices < 2 || spec.max_vertices < spec.min_vertices) {
    throw InputError("corpus vertex bounds are invalid");
  }
  Corpus c;
  c.seed = seed;
  std::ostringstream desc;
  desc << "random_corpus(count=" << spec.count << ", n=" << spec.min_vertices << ".."
       << spec.max_vertices << ", named=" << (spec.include_named ? "yes" : "no")
       << ", seed=" << seed << ")";
  c.description = desc.str();
  auto fits = [&](const Graph& g) {
    return g.vertex_count() <= spec.max_vertices_cap && g.edge_count() <= spec.max_edges_cap;
  };
  if (spec.include_named) {
    for (auto& ng : named_graphs()) {
      if (c.graphs.size() == spec.count) return c;
      if (fits(ng.graph)) c.graphs.push_back(std::move(ng));
    }
  }
  for (std::uint64_t i = 0; c.graphs.size() < spec.count; ++i) {
    SplitMix64 rng(derive_seed(seed, kTagCorpus, i));
    // Half the draws favour small graphs so brute-force oracles get coverage.
    const int hi = rng.chance(1, 2) ? std::min(spec.max_vertices, spec.min_vertices + 3)
                                    : spec.max_vertices;
    const std::uint64_t gseed = rng.next();
    CorpusGraph cg;
    if (i % 2 == 0) {
      const int n = rng.between(spec.min_vertices, hi);
      const double p = 0.2 + 0.5 * static_cast<double>(rng.below(1024)) / 1024.0;
      cg.graph = random_connected_graph(n, p, gseed);
      cg.label = "er:" + std::to_string(i);
    } else {
      const int d = (i / 2) % 2 == 0 ? 2 : 3;
      const int n = rng.between(std::max(spec.min_vertices, d + 2), std::max(hi, d + 2));
      cg.graph = random_rigid_graph(d, n, gseed);
      cg.label = "rigid" + std::to_string(d) + ":" + std::to_string(i);
    }
    if (fits(cg.graph)) c.graphs.push_back(std::move(cg));
  }
  return c;
}

Corpus default_corpus(std::uint64_t seed) { return random_corpus(CorpusSpec{}, seed); }

Graph reduction_replay(const Graph& g, int d) {
  const auto deg = g.degrees();
  std::vector<Vertex> drop;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (deg[static_cast<std::size_t>(v)] == d + 1) drop.push_back(v);
  }
  Graph h = delete_vertices(g, drop);
  for (;;) {
    const auto cliques = find_cliques(h, d + 2);
    if (cliques.empty()) return h;
    h = delete_edge(h, {cliques[0][0], cliques[0][1]});
  }
}

// ---------------------------------------------------------------- oracles

namespace {

// Ranks of edge subsets over fixed generic frameworks of g, one per trial;
// the generic rank is the maximum. Coordinates use their own stream so this
// does not share sample points with the engine.
template <class F>
class SubsetRank {
 public:
  SubsetRank(const Graph& g, int d, const EngineConfig& cfg) {
    for (int t = 0; t < cfg.trials; ++t) {
      const auto s = derive_seed(cfg.seed, kTagOracle, static_cast<std::uint64_t>(t));
      matrices_.push_back(rigidity_matrix(sample_framework<F>(g, d, s)));
    }
  }

  std::size_t operator()(std::span<const std::size_t> rows) const {
    if (rows.empty()) return 0;
    std::size_t best = 0;
    for (const auto& m : matrices_) best = std::max(best, rank<F>(select_rows(m, rows)));
    return best;
  }

 private:
  std::vector<FieldMatrix<F>> matrices_;
};

template <class F>
void split_components(const SubsetRank<F>& rk, std::vector<std::size_t> set,
                      std::vector<std::vector<std::size_t>>& out) {
  const std::size_t s = set.size();
  if (s > 1) {
    const std::size_t total = rk(set);
    const std::uint64_t limit = (std::uint64_t{1} << (s - 1)) - 1;
    std::vector<std::size_t> a, b;
    for (std::uint64_t m = 0; m < limit; ++m) {
      a.assign(1, set[0]);
      b.clear();
      for (std::size_t j = 1; j < s; ++j) {
        ((m >> (j - 1)) & 1 ? a : b).push_back(set[j]);
      }
      if (rk(a) + rk(b) == total) {
        split_components(rk, a, out);
        split_components(rk, b, out);
        return;
      }
    }
  }
  out.push_back(std::move(set));
}

EdgeList to_edges(const Graph& g, const std::vector<std::size_t>& idx) {
  EdgeList out;
  for (auto i : idx) out.push_back(g.edges()[i]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<EdgeList> brute_m_components(const Graph& g, int d, const HarnessContext& ctx) {
  if (g.edge_count() > kBruteComponentsLimit) {
    throw InputError("brute_m_components refuses graphs with more than 20 edges");
  }
  std::vector<EdgeList> out;
  if (g.edge_count() == 0) return out;
  const EngineConfig& cfg = ctx.engine->config();
  visit_field(cfg.modulus, [&]<class F>() {
    const SubsetRank<F> rk(g, d, cfg);
    std::vector<std::size_t> all(g.edge_count());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::vector<std::vector<std::size_t>> parts;
    split_components(rk, all, parts);
    for (const auto& p : parts) out.push_back(to_edges(g, p));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeList> brute_circuits(const Graph& g, int d, const HarnessContext& ctx) {
  const std::size_t m = g.edge_count();
  if (m > kBruteCircuitsLimit) {
    throw InputError("brute_circuits refuses graphs with more than 12 edges");
  }
  std::vector<EdgeList> out;
  const EngineConfig& cfg = ctx.engine->config();
  visit_field(cfg.modulus, [&]<class F>() {
    const SubsetRank<F> rk(g, d, cfg);
    const std::uint32_t full = (std::uint32_t{1} << m);
    std::vector<std::size_t> ranks(full, 0);
    std::vector<std::size_t> rows;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      rows.clear();
      for (std::size_t j = 0; j < m; ++j) {
        if ((mask >> j) & 1) rows.push_back(j);
      }
      ranks[mask] = rk(rows);
    }
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      const auto size = static_cast<std::size_t>(std::popcount(mask));
      if (ranks[mask] + 1 != size) continue;
      bool minimal = true;
      for (std::size_t j = 0; j < m && minimal; ++j) {
        if ((mask >> j) & 1) minimal = ranks[mask & ~(std::uint32_t{1} << j)] + 1 == size;
      }
      if (!minimal) continue;
      rows.clear();
      for (std::size_t j = 0; j < m; ++j) {
        if ((mask >> j) & 1) rows.push_back(j);
      }
      out.push_back(to_edges(g, rows));
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

MotionDims motion_dims(const Graph& g, int d, const RigidityEngine& engine) {
  if (d < 1) throw InputError("motion_dims needs d >= 1");
  MotionDims md;
  const std::int64_t n = g.vertex_count();
  for (int i = 1; i <= d; ++i) {
    md.k.push_back(n * i - static_cast<std::int64_t>(engine.rank_d(g, i)));
  }
  return md;
}

// ---------------------------------------------------------------- properties

namespace {

using Check = std::function<void(const Graph&, InstanceRecord&)>;

PropertyResult run_property(std::string name, const Corpus& corpus, int d,
                            const HarnessContext& ctx, const Check& check) {
  PropertyResult res;
  res.property = std::move(name);
  res.corpus = corpus.description;
  res.seeds = {corpus.seed, ctx.engine->config().seed, ctx.stress.seed};
  res.records.resize(corpus.graphs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < corpus.graphs.size(); i = next++) {
      InstanceRecord& rec = res.records[i];
      rec.index = i;
      rec.label = corpus.graphs[i].label;
      rec.graph = corpus.graphs[i].graph;
      rec.dim = d;
      try {
        check(rec.graph, rec);
      } catch (const std::exception& e) {
        rec.outcome = Outcome::kViolation;
        rec.details = std::string("error: ") + e.what();
      }
    }
  };
  unsigned threads = ctx.threads ? ctx.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, 16);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return res;
}

void verdict(InstanceRecord& rec, bool ok, std::string details) {
  rec.outcome = ok ? Outcome::kPass : Outcome::kViolation;
  rec.details = std::move(details);
}

void skip(InstanceRecord& rec, std::string why) {
  rec.outcome = Outcome::kNotApplicable;
  rec.details = std::move(why);
}

const char* yn(bool b) { return b ? "yes" : "no"; }

}  // namespace

PropertyResult verify_mconnected_theorem(const Corpus& corpus, int d, const HarnessContext& ctx) {
  const auto& eng = *ctx.engine;
  return run_property("globally_rigid_implies_m_connected", corpus, d, ctx,
                      [&](const Graph& g, InstanceRecord& rec) {
                        if (g.vertex_count() < d + 2) return skip(rec, "fewer than d+2 vertices");
                        const auto v = is_globally_rigid(g, d, ctx.stress);
                        if (!v.globally_rigid) return skip(rec, "not globally rigid");
                        const bool mc = eng.is_m_connected(g, d);
                        verdict(rec, mc, std::string("globally rigid; m_connected=") + yn(mc));
                      });
}

PropertyResult verify_dimension_monotonicity(const Corpus& corpus, int d,
                                             const HarnessContext& ctx) {
  const auto& eng = *ctx.engine;
  return run_property("m_connectivity_descends", corpus, d, ctx,
                      [&](const Graph& g, InstanceRecord& rec) {
                        if (g.edge_count() == 0 || !eng.is_m_connected(g, d)) {
                          return skip(rec, "not M-connected at d");
                        }
                        std::string bad;
                        for (int dd = 1; dd < d; ++dd) {
                          if (!eng.is_m_connected(g, dd)) bad += " d'=" + std::to_string(dd);
                        }
                        verdict(rec, bad.empty(),
                                bad.empty() ? "M-connected at every lower dimension"
                                            : "not M-connected at" + bad);
                      });
}

PropertyResult verify_cone_circuit(const Corpus& corpus, int d, const HarnessContext& ctx) {
  const auto& eng = *ctx.engine;
  return run_property("cone_circuit_equivalence", corpus, d, ctx,
                      [&](const Graph& g, InstanceRecord& rec) {
                        const bool a = eng.is_circuit(g, d);
                        const bool b = eng.is_circuit(cone(g), d + 1);
                        verdict(rec, a == b,
                                std::string("circuit at d: ") + yn(a) + ", cone circuit at d+1: " +
                                    yn(b));
                      });
}

PropertyResult verify_cone_mconnected(const Corpus& corpus, int d, const HarnessContext& ctx) {
  const auto& eng = *ctx.engine;
  return run_property("cone_m_connected_equivalence", corpus, d, ctx,
                      [&](const Graph& g, InstanceRecord& rec) {
                        const bool lhs = eng.is_m_connected(cone(g), d + 1);
                        const bool conn = is_connected(g);
                        const bool no_bridges = eng.bridges(g, d).empty();
                        verdict(rec, lhs == (conn && no_bridges),
                                std::string("cone m_connected: ") + yn(lhs) + ", connected: " +
                                    yn(conn) + ", bridgeless: " + yn(no_bridges));
                      });
}

PropertyResult verify_dof_bound(const Corpus& corpus, int d, const HarnessContext& ctx) {
  const auto& eng = *ctx.engine;
  return run_property(
      "separable_dof_sum_bound", corpus, d, ctx, [&](const Graph& g, InstanceRecord& rec) {
        if (g.vertex_count() < d + 2) return skip(rec, "fewer than d+2 vertices");
        const int kappa = vertex_connectivity(g);
        if (kappa < d + 1) return skip(rec, "only " + std::to_string(kappa) + "-connected");
        if (!eng.is_redundantly_rigid(g, d)) return skip(rec, "not redundantly rigid");
        const auto comps = eng.m_components(g, d);
        if (comps.size() < 2) return skip(rec, "M-connected");
        std::int64_t sum = 0;
        std::string parts;
        for (const auto& c : comps) {
          const Graph h = edge_subgraph(g, c);
          const std::int64_t dof = d * static_cast<std::int64_t>(h.vertex_count()) -
                                   choose2(d + 1) - static_cast<std::int64_t>(eng.rank_d(h, d));
          sum += dof;
          parts += (parts.empty() ? "" : "+") + std::to_string(dof);
        }
        const std::int64_t bound = choose2(d + 1);
        verdict(rec, sum >= bound,
                "dof sum " + std::to_string(sum) + " = " + parts + (sum == bound ? " = " : " vs ") +
                    std::to_string(bound) + (sum == bound ? " (equality)" : ""));
      });
}

PropertyResult verify_dof_bound(const Graph& g, int d, const HarnessContext& ctx) {
  Corpus one;
  one.description = "single graph";
  one.graphs.push_back({g, "input"});
  return verify_dof_bound(one, d, ctx);
}

PropertyResult verify_motion_recursion(const Corpus& corpus, int d, const HarnessContext& ctx) {
  if (d < 3) throw InputError("motion recursion needs d >= 3");
  const auto& eng = *ctx.engine;
  return run_property(
      "motion_dimension_recursion", corpus, d, ctx, [&](const Graph& g, InstanceRecord& rec) {
        if (eng.is_independent(g, d - 2)) return skip(rec, "M-independent in dimension d-2");
        const auto k = motion_dims(g, d, eng).k;
        auto K = [&](int i) { return k[static_cast<std::size_t>(i - 1)]; };
        const std::int64_t x = K(d) - choose2(d + 1);
        const std::int64_t y = K(d - 1) - choose2(d);
        std::string bad;
        for (int i = 1; i <= d - 2; ++i) {
          if (K(i) < 2 * K(i + 1) - K(i + 2) + 1) bad += " recursion@" + std::to_string(i);
          if (K(i) < choose2(i + 1) + (d - i) * (y - x) + x) bad += " closed@" + std::to_string(i);
        }
        std::string ks;
        for (auto v : k) ks += (ks.empty() ? "" : ",") + std::to_string(v);
        verdict(rec, bad.empty(), "k=[" + ks + "]" + (bad.empty() ? "" : " failed:" + bad));
      });
}

namespace {

void check_gluing(const RigidityEngine& eng, const Graph& g1, const Graph& g2,
                  const VertexPartitionSpec& spec, int d, InstanceRecord& rec) {
  if (g1.vertex_count() < d + 1 || g2.vertex_count() < d + 1) {
    return skip(rec, "a part has fewer than d+1 vertices");
  }
  if (!eng.is_rigid(g1, d) || !eng.is_rigid(g2, d)) return skip(rec, "a part is not rigid");
  const Graph glued = glue(g1, g2, spec);
  rec.graph = glued;
  const int k = static_cast<int>(spec.identified_pairs.size());
  const std::size_t r = eng.rank_d(glued, d);
  if (k >= d) {
    const bool rigid = eng.is_rigid(glued, d);
    return verdict(rec, rigid, "k=" + std::to_string(k) + " >= d, rigid: " + yn(rigid));
  }
  const std::int64_t expect = d * static_cast<std::int64_t>(glued.vertex_count()) -
                              choose2(d + 1) - choose2(d - k + 1);
  verdict(rec, static_cast<std::int64_t>(r) == expect,
          "k=" + std::to_string(k) + ", rank " + std::to_string(r) + ", formula " +
              std::to_string(expect));
}

}  // namespace

PropertyResult verify_gluing_rank(const Graph& g1, const Graph& g2,
                                  const VertexPartitionSpec& spec, int d,
                                  const HarnessContext& ctx) {
  Corpus one;
  one.description = "single glued pair";
  one.graphs.push_back({g1, "g1+g2"});
  return run_property("gluing_rank_formula", one, d, ctx,
                      [&](const Graph&, InstanceRecord& rec) {
                        check_gluing(*ctx.engine, g1, g2, spec, d, rec);
                      });
}

PropertyResult verify_gluing_corpus(const Corpus& corpus, int d, std::size_t pairs,
                                    const HarnessContext& ctx) {
  const auto& eng = *ctx.engine;
  std::vector<const CorpusGraph*> rigid;
  for (const auto& cg : corpus.graphs) {
    if (cg.graph.vertex_count() >= d + 1 && cg.graph.vertex_count() <= 16 &&
        eng.is_rigid(cg.graph, d)) {
      rigid.push_back(&cg);
    }
  }
  struct Pair {
    const CorpusGraph* a;
    const CorpusGraph* b;
    VertexPartitionSpec spec;
  };
  std::vector<Pair> work;
  Corpus glued;
  glued.seed = corpus.seed;
  glued.description = "glued pairs of rigid members of " + corpus.description;
  for (std::size_t j = 0; j < pairs && !rigid.empty(); ++j) {
    SplitMix64 rng(derive_seed(corpus.seed, kTagCorpus ^ 0x676c7565, j));
    Pair p{rigid[rng.below(rigid.size())], rigid[rng.below(rigid.size())], {}};
    const int k = std::min({static_cast<int>(j % static_cast<std::size_t>(d + 2)),
                            p.a->graph.vertex_count(), p.b->graph.vertex_count()});
    const auto va = distinct_vertices(rng, p.a->graph.vertex_count(), k);
    const auto vb = distinct_vertices(rng, p.b->graph.vertex_count(), k);
    for (int i = 0; i < k; ++i) {
      p.spec.identified_pairs.push_back({va[static_cast<std::size_t>(i)],
                                         vb[static_cast<std::size_t>(i)]});
    }
    glued.graphs.push_back({p.a->graph, p.a->label + "|" + p.b->label + "|k=" + std::to_string(k)});
    work.push_back(std::move(p));
  }
  auto res = run_property("gluing_rank_formula", glued, d, ctx,
                          [&](const Graph&, InstanceRecord& rec) {
                            const Pair& p = work[rec.index];
                            check_gluing(eng, p.a->graph, p.b->graph, p.spec, d, rec);
                          });
  return res;
}

PropertyResult verify_oracle_equivalence(const Corpus& corpus, int d, std::size_t max_edges,
                                         const HarnessContext& ctx) {
  const auto& eng = *ctx.engine;
  max_edges = std::min(max_edges, kBruteCircuitsLimit);
  return run_property(
      "oracle_equivalence", corpus, d, ctx, [&](const Graph& g, InstanceRecord& rec) {
        if (g.edge_count() == 0 || g.edge_count() > max_edges) {
          return skip(rec, "edge count outside oracle range");
        }
        auto fast = eng.m_components(g, d);
        for (auto& c : fast) std::sort(c.begin(), c.end());
        std::sort(fast.begin(), fast.end());
        const auto brute = brute_m_components(g, d, ctx);
        std::string bad;
        if (fast != brute) bad += " components differ;";
        const auto circuits = brute_circuits(g, d, ctx);
        for (const auto& c : circuits) {
          if (!eng.is_circuit(edge_subgraph(g, c), d)) bad += " brute circuit rejected;";
        }
        auto member = [&](const EdgeList& es) {
          return std::binary_search(circuits.begin(), circuits.end(), es);
        };
        // Whole graph and every single-edge deletion, both directions.
        if (eng.is_circuit(g, d) != member(g.edges())) bad += " is_circuit(G) disagrees;";
        for (const Edge& e : g.edges()) {
          const Graph h = delete_edge(g, e);
          EdgeList rest = h.edges();
          if (h.edge_count() > 0 && eng.is_circuit(edge_subgraph(g, rest), d) != member(rest)) {
            bad += " is_circuit(G-e) disagrees;";
            break;
          }
        }
        verdict(rec, bad.empty(),
                std::to_string(brute.size()) + " components, " +
                    std::to_string(circuits.size()) + " circuits" + bad);
      });
}

PropertyResult verify_low_dimension_global(const Corpus& corpus, int d,
                                           const HarnessContext& ctx) {
  if (d != 1 && d != 2) throw InputError("exact characterizations exist for d = 1, 2 only");
  const auto& eng = *ctx.engine;
  return run_property(
      "low_dimension_global_rigidity", corpus, d, ctx, [&](const Graph& g, InstanceRecord& rec) {
        const int n = g.vertex_count();
        const auto v = is_globally_rigid(g, d, ctx.stress);
        bool exact = false;
        if (n <= d + 1) {
          exact = g.is_complete();
        } else if (d == 1) {
          exact = vertex_connectivity(g) >= 2;
        } else {
          exact = vertex_connectivity(g) >= 3 && eng.is_redundantly_rigid(g, 2);
        }
        std::string details = std::string("verdict ") + std::string(to_string(v.decision)) +
                              ", exact " + yn(exact);
        bool ok = v.globally_rigid == exact;
        // For d = 1 also run the stress route, which the verdict bypasses.
        if (d == 1 && n >= 3) {
          const bool stress = stress_matrix_test(g, 1, ctx.stress).globally_rigid;
          details += std::string(", stress ") + yn(stress);
          ok = ok && stress == exact;
        }
        verdict(rec, ok, details);
      });
}

}  // namespace genrig
