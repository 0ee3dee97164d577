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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "genrig/engine.hpp"
#include "genrig/errors.hpp"
#include "genrig/framework.hpp"
#include "genrig/linalg.hpp"

namespace genrig {

// Equilibrium stress: per-edge weights in canonical edge order with
// R(G,p)^T w = 0, tagged with the framework it was computed for.
template <class F>
struct StressVector {
  FieldVector<F> weights;
  std::uint64_t framework_seed = 0;
  int dim = 1;
};

template <class F>
bool is_stress(const Framework<F>& fw, const FieldVector<F>& w) {
  if (w.size() != static_cast<Index>(fw.graph.edge_count())) return false;
  return is_zero((rigidity_matrix(fw).transpose() * w).eval());
}

// Basis of ker R(G,p)^T; one vector per non-basis edge of the greedy basis.
template <class F>
std::vector<StressVector<F>> stress_space_basis(const Framework<F>& fw) {
  std::vector<StressVector<F>> out;
  for (auto& v : kernel_basis<F>(rigidity_matrix(fw).transpose())) {
    out.push_back({std::move(v), fw.seed, fw.dim});
  }
  return out;
}

// n x n matrix with -w_uv off the diagonal on edges and diagonal entries
// making every row sum to zero. Throws InputError if w is not a stress.
template <class F>
FieldMatrix<F> stress_matrix(const Framework<F>& fw, const FieldVector<F>& w) {
  if (!is_stress(fw, w)) throw InputError("weights are not an equilibrium stress");
  const Index n = fw.graph.vertex_count();
  FieldMatrix<F> omega = FieldMatrix<F>::Zero(n, n);
  const auto& edges = fw.graph.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    const F x = w(static_cast<Index>(i));
    omega(u, v) -= x;
    omega(v, u) -= x;
    omega(u, u) += x;
    omega(v, v) += x;
  }
  return omega;
}

template <class F>
FieldMatrix<F> stress_matrix(const Framework<F>& fw, const StressVector<F>& s) {
  return stress_matrix(fw, s.weights);
}

enum class GlobalDecision { kGloballyRigid, kNotGloballyRigid, kTriviallyRigidSmall };
std::string_view to_string(GlobalDecision d);

struct StressTrial {
  std::uint64_t framework_seed = 0;
  std::uint64_t stress_seed = 0;
  std::size_t stress_space_dim = 0;
  std::size_t stress_rank = 0;
};

struct StressTestConfig {
  int trials = 5;
  std::uint64_t seed = 0;
  Modulus modulus = Modulus::kM61;
};

struct GlobalRigidityVerdict {
  GlobalDecision decision = GlobalDecision::kNotGloballyRigid;
  bool globally_rigid = false;
  int dim = 1;
  // "stress-matrix", "2-connectivity" or "small-complete".
  std::string method;
  // n - d - 1 for the stress test.
  std::size_t target_rank = 0;
  // The trial whose stress matrix reached target_rank (GloballyRigid only).
  std::optional<StressTrial> certificate;
  std::vector<StressTrial> trials;
  int trials_used = 0;
  std::uint64_t seed = 0;
  Modulus modulus = Modulus::kM61;
  std::string failure_probability_note;
};

// Randomized stress-matrix test on n >= d+2 vertices, for any d >= 1:
// globally rigid iff some trial's random stress has rank n-d-1.
GlobalRigidityVerdict stress_matrix_test(const Graph& g, int d,
                                         const StressTestConfig& config = {});

// n <= d+1: complete graphs are TriviallyRigidSmall, others not rigid.
// d = 1: exact, by 2-connectivity. Otherwise stress_matrix_test.
GlobalRigidityVerdict is_globally_rigid(const Graph& g, int d,
                                        const StressTestConfig& config = {});

struct HendricksonReport {
  int connectivity = 0;
  bool is_d_plus_1_connected = false;
  bool is_redundantly_rigid = false;
  bool passes_hendrickson = false;
};

// Requires at least d+2 vertices.
HendricksonReport hendrickson_check(const Graph& g, int d, const RigidityEngine& engine);

// Hendrickson's conditions hold but the graph is not globally rigid.
bool is_h_graph(const Graph& g, int d, const RigidityEngine& engine,
                const StressTestConfig& config = {});

enum class ReconstructibilityDecision { kFullyReconstructible, kNotFullyReconstructible, kUnknown };
enum class ReconstructibilityRule { kNone, kGloballyRigid, kMSeparable, kGluing };
std::string_view to_string(ReconstructibilityDecision d);
std::string_view to_string(ReconstructibilityRule r);

struct ReconstructibilityVerdict {
  ReconstructibilityDecision decision = ReconstructibilityDecision::kUnknown;
  ReconstructibilityRule rule = ReconstructibilityRule::kNone;
  // Rule kGloballyRigid: the stress certificate.
  std::optional<GlobalRigidityVerdict> global;
  // Rule kMSeparable.
  std::optional<SeparabilityWitness> witness;
  // Rule kGluing: the two overlapping parts (vertex sets of the input).
  std::optional<Decomposition> decomposition;
  std::string explanation;
};

// Rule cascade for full reconstructibility in C^d (d >= 2, no isolated
// vertices):
//  1. globally rigid on >= d+2 vertices -> fully reconstructible;
//  2. M-separable -> not fully reconstructible;
//  3. two induced rigid, fully reconstructible parts on >= d+1 vertices each
//     whose overlap induces a connected graph on >= 3 vertices -> fully
//     reconstructible. Candidates are the supplied decompositions plus the
//     splits along connected vertex separators of size 3..5.
//  Otherwise Unknown.
ReconstructibilityVerdict classify_reconstructibility(
    const Graph& g, int d, const RigidityEngine& engine, const StressTestConfig& config = {},
    std::span<const Decomposition> decompositions = {});

// Splits of g along connected vertex separators of size 3..max_size: for a
// separator S with components A_1..A_m of g - S, the pair (S + A_j, S + the
// rest) for each j. Empty when g's connectivity exceeds max_size.
std::vector<Decomposition> separator_decompositions(const Graph& g, int max_size = 5);

}  // namespace genrig
