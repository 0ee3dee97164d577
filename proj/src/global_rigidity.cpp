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

#include "genrig/global_rigidity.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <set>

#include "genrig/random.hpp"

namespace genrig {

std::string_view to_string(GlobalDecision d) {
  switch (d) {
    case GlobalDecision::kGloballyRigid:
      return "GloballyRigid";
    case GlobalDecision::kNotGloballyRigid:
      return "NotGloballyRigid";
    case GlobalDecision::kTriviallyRigidSmall:
      return "TriviallyRigidSmall";
  }
  return "?";
}

std::string_view to_string(ReconstructibilityDecision d) {
  switch (d) {
    case ReconstructibilityDecision::kFullyReconstructible:
      return "FullyReconstructible";
    case ReconstructibilityDecision::kNotFullyReconstructible:
      return "NotFullyReconstructible";
    case ReconstructibilityDecision::kUnknown:
      return "Unknown";
  }
  return "?";
}

std::string_view to_string(ReconstructibilityRule r) {
  switch (r) {
    case ReconstructibilityRule::kNone:
      return "none";
    case ReconstructibilityRule::kGloballyRigid:
      return "globally-rigid";
    case ReconstructibilityRule::kMSeparable:
      return "m-separable";
    case ReconstructibilityRule::kGluing:
      return "gluing";
  }
  return "?";
}

namespace {

std::string probability_note(std::size_t target, std::size_t edges, std::uint64_t p) {
  // A stress-matrix minor of order s is a polynomial of degree at most
  // s(|E|+1) in the coordinates and combination weights; the rigidity
  // matrix rank adds at most |E| more.
  const double degree = static_cast<double>(target) * static_cast<double>(edges + 1) +
                        static_cast<double>(edges);
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "per-trial miss probability <= %.0f/p = %.3g (Schwartz-Zippel over GF(p), "
                "p = %llu); transfer of a GF(p) certificate to characteristic zero is "
                "assumed, not proven",
                degree, degree / static_cast<double>(p), static_cast<unsigned long long>(p));
  return buf;
}

}  // namespace

GlobalRigidityVerdict stress_matrix_test(const Graph& g, int d, const StressTestConfig& config) {
  if (d < 1) throw InputError("dimension must be >= 1");
  if (config.trials < 1) throw InputError("trials must be >= 1");
  const int n = g.vertex_count();
  if (n < d + 2) throw InputError("stress-matrix test needs at least d+2 vertices");
  GlobalRigidityVerdict v;
  v.dim = d;
  v.method = "stress-matrix";
  v.seed = config.seed;
  v.modulus = config.modulus;
  v.target_rank = static_cast<std::size_t>(n - d - 1);
  v.failure_probability_note =
      probability_note(v.target_rank, g.edge_count(), modulus_value(config.modulus));

  for (int t = 0; t < config.trials; ++t) {
    StressTrial trial;
    trial.framework_seed = derive_seed(config.seed, kTagGlobalTrial, static_cast<std::uint64_t>(t));
    trial.stress_seed = derive_seed(trial.framework_seed, kTagStress);
    visit_field(config.modulus, [&]<class F>() {
      const Framework<F> fw = sample_framework<F>(g, d, trial.framework_seed);
      const auto basis = stress_space_basis(fw);
      trial.stress_space_dim = basis.size();
      if (basis.empty()) return;
      std::vector<FieldVector<F>> vecs;
      for (const auto& s : basis) vecs.push_back(s.weights);
      const FieldVector<F> w =
          random_combination<F>(vecs, static_cast<Index>(g.edge_count()), trial.stress_seed);
      trial.stress_rank = rank<F>(stress_matrix(fw, w));
    });
    if (trial.stress_rank > v.target_rank) {
      throw EngineError("stress matrix rank exceeds n-d-1; degenerate sample");
    }
    v.trials.push_back(trial);
    v.trials_used = t + 1;
    if (trial.stress_rank == v.target_rank) {
      v.certificate = trial;
      break;
    }
  }
  v.globally_rigid = v.certificate.has_value();
  v.decision = v.globally_rigid ? GlobalDecision::kGloballyRigid : GlobalDecision::kNotGloballyRigid;
  return v;
}

GlobalRigidityVerdict is_globally_rigid(const Graph& g, int d, const StressTestConfig& config) {
  if (d < 1) throw InputError("dimension must be >= 1");
  const int n = g.vertex_count();
  if (n <= d + 1) {
    GlobalRigidityVerdict v;
    v.dim = d;
    v.method = "small-complete";
    v.seed = config.seed;
    v.modulus = config.modulus;
    v.globally_rigid = g.is_complete();
    v.decision = v.globally_rigid ? GlobalDecision::kTriviallyRigidSmall
                                  : GlobalDecision::kNotGloballyRigid;
    return v;
  }
  if (d == 1) {
    GlobalRigidityVerdict v;
    v.dim = 1;
    v.method = "2-connectivity";
    v.seed = config.seed;
    v.modulus = config.modulus;
    v.target_rank = static_cast<std::size_t>(n - 2);
    v.globally_rigid = vertex_connectivity(g) >= 2;
    v.decision = v.globally_rigid ? GlobalDecision::kGloballyRigid
                                  : GlobalDecision::kNotGloballyRigid;
    v.failure_probability_note = "exact";
    return v;
  }
  return stress_matrix_test(g, d, config);
}

HendricksonReport hendrickson_check(const Graph& g, int d, const RigidityEngine& engine) {
  if (g.vertex_count() < d + 2) {
    throw InputError("Hendrickson's conditions apply to graphs on at least d+2 vertices");
  }
  HendricksonReport r;
  r.connectivity = vertex_connectivity(g);
  r.is_d_plus_1_connected = r.connectivity >= d + 1;
  r.is_redundantly_rigid = engine.is_redundantly_rigid(g, d);
  r.passes_hendrickson = r.is_d_plus_1_connected && r.is_redundantly_rigid;
  return r;
}

bool is_h_graph(const Graph& g, int d, const RigidityEngine& engine,
                const StressTestConfig& config) {
  return hendrickson_check(g, d, engine).passes_hendrickson &&
         !is_globally_rigid(g, d, config).globally_rigid;
}

std::vector<Decomposition> separator_decompositions(const Graph& g, int max_size) {
  std::vector<Decomposition> out;
  const int n = g.vertex_count();
  if (n < 5 || vertex_connectivity(g) > max_size) return out;
  const auto adj = g.adjacency();

  // Enumerate connected vertex sets of size 3..max_size once each: grow from
  // the smallest member `root` using only larger vertices.
  std::set<std::vector<Vertex>> seen;
  std::vector<Vertex> current;
  std::function<void(Vertex)> grow = [&](Vertex root) {
    if (static_cast<int>(current.size()) >= 3) {
      std::vector<Vertex> s = current;
      std::sort(s.begin(), s.end());
      if (seen.insert(s).second && static_cast<int>(s.size()) <= n - 2) {
        const Graph rest = delete_vertices(g, s);
        const auto comps = connected_components(rest);
        if (comps.size() >= 2) {
          // Map indices of `rest` back to g.
          std::vector<Vertex> back;
          for (Vertex v = 0, j = 0; v < n; ++v) {
            if (j < static_cast<Vertex>(s.size()) && s[j] == v) {
              ++j;
            } else {
              back.push_back(v);
            }
          }
          for (std::size_t c = 0; c < comps.size(); ++c) {
            Decomposition dec;
            dec.part1 = s;
            dec.part2 = s;
            for (std::size_t c2 = 0; c2 < comps.size(); ++c2) {
              auto& dst = c2 == c ? dec.part1 : dec.part2;
              for (Vertex x : comps[c2]) dst.push_back(back[x]);
            }
            std::sort(dec.part1.begin(), dec.part1.end());
            std::sort(dec.part2.begin(), dec.part2.end());
            out.push_back(std::move(dec));
            if (comps.size() == 2) break;  // the mirrored split is the same pair
          }
        }
      }
    }
    if (static_cast<int>(current.size()) == max_size) return;
    std::set<Vertex> frontier;
    for (Vertex x : current) {
      for (Vertex y : adj[x]) {
        if (y > root && std::find(current.begin(), current.end(), y) == current.end()) {
          frontier.insert(y);
        }
      }
    }
    for (Vertex y : frontier) {
      current.push_back(y);
      grow(root);
      current.pop_back();
    }
  };
  for (Vertex root = 0; root < n; ++root) {
    current = {root};
    grow(root);
  }
  return out;
}

namespace {

class Classifier {
 public:
  Classifier(const RigidityEngine& engine, const StressTestConfig& config)
      : engine_(engine), config_(config) {}

  ReconstructibilityVerdict run(const Graph& g, int d, std::span<const Decomposition> extra) {
    ReconstructibilityVerdict v;
    const int n = g.vertex_count();

    auto global = is_globally_rigid(g, d, config_);
    if (global.globally_rigid && n >= d + 2) {
      v.decision = ReconstructibilityDecision::kFullyReconstructible;
      v.rule = ReconstructibilityRule::kGloballyRigid;
      v.global = std::move(global);
      v.explanation = "globally rigid on at least d+2 vertices";
      return v;
    }
    if (g.edge_count() > 0) {
      if (auto w = engine_.separability_witness(g, d)) {
        v.decision = ReconstructibilityDecision::kNotFullyReconstructible;
        v.rule = ReconstructibilityRule::kMSeparable;
        v.witness = std::move(w);
        v.explanation = "M-separable, so not fully reconstructible";
        return v;
      }
    }
    std::vector<Decomposition> candidates(extra.begin(), extra.end());
    for (auto& dec : separator_decompositions(g)) candidates.push_back(std::move(dec));
    for (const Decomposition& dec : candidates) {
      if (gluing_applies(g, d, dec)) {
        v.decision = ReconstructibilityDecision::kFullyReconstructible;
        v.rule = ReconstructibilityRule::kGluing;
        v.decomposition = dec;
        v.explanation =
            "union of two rigid fully reconstructible induced subgraphs overlapping in a "
            "connected subgraph on at least 3 vertices";
        return v;
      }
    }
    v.explanation = "no rule applies";
    return v;
  }

 private:
  bool fully_reconstructible(const Graph& g, int d) {
    const std::string key = g.canonical_bytes();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    memo_[key] = false;  // guards against revisiting while in progress
    const bool r = run(g, d, {}).decision == ReconstructibilityDecision::kFullyReconstructible;
    memo_[key] = r;
    return r;
  }

  bool gluing_applies(const Graph& g, int d, const Decomposition& dec) {
    const int n = g.vertex_count();
    std::vector<char> in1(n, 0), in2(n, 0);
    for (Vertex v : dec.part1) {
      if (v < 0 || v >= n) return false;
      in1[v] = 1;
    }
    for (Vertex v : dec.part2) {
      if (v < 0 || v >= n) return false;
      in2[v] = 1;
    }
    std::vector<Vertex> overlap;
    int size1 = 0, size2 = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (!in1[v] && !in2[v]) return false;
      size1 += in1[v];
      size2 += in2[v];
      if (in1[v] && in2[v]) overlap.push_back(v);
    }
    if (size1 == n || size2 == n) return false;
    if (size1 < d + 1 || size2 < d + 1 || overlap.size() < 3) return false;
    for (const Edge& e : g.edges()) {
      if (!(in1[e.u] && in1[e.v]) && !(in2[e.u] && in2[e.v])) return false;
    }
    if (!is_connected(induced_subgraph(g, overlap))) return false;
    std::vector<Vertex> p1, p2;
    for (Vertex v = 0; v < n; ++v) {
      if (in1[v]) p1.push_back(v);
      if (in2[v]) p2.push_back(v);
    }
    const Graph g1 = induced_subgraph(g, p1);
    const Graph g2 = induced_subgraph(g, p2);
    if (has_isolated_vertex(g1) || has_isolated_vertex(g2)) return false;
    return engine_.is_rigid(g1, d) && engine_.is_rigid(g2, d) && fully_reconstructible(g1, d) &&
           fully_reconstructible(g2, d);
  }

  const RigidityEngine& engine_;
  StressTestConfig config_;
  std::map<std::string, bool> memo_;
};

}  // namespace

ReconstructibilityVerdict classify_reconstructibility(const Graph& g, int d,
                                                      const RigidityEngine& engine,
                                                      const StressTestConfig& config,
                                                      std::span<const Decomposition> decompositions) {
  if (d < 2) throw InputError("classification needs d >= 2");
  if (has_isolated_vertex(g)) throw InputError("graph has isolated vertices");
  return Classifier(engine, config).run(g, d, decompositions);
}

}  // namespace genrig
