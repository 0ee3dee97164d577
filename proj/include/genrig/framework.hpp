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
#include <span>

#include "genrig/graph.hpp"
#include "genrig/linalg.hpp"
#include "genrig/random.hpp"

namespace genrig {

// A graph together with d field coordinates per vertex: the finite-field
// stand-in for a generic realization. points is n x d.
template <class F>
struct Framework {
  Graph graph;
  int dim = 1;
  FieldMatrix<F> points;
  std::uint64_t seed = 0;
};

// Coordinates depend only on (vertex, axis, seed), so deleting edges keeps a
// framework's points while deleting vertices does not.
template <class F>
Framework<F> sample_framework(const Graph& g, int dim, std::uint64_t seed) {
  if (dim < 1) throw InputError("dimension must be >= 1");
  Framework<F> fw{g, dim, FieldMatrix<F>(g.vertex_count(), dim), seed};
  const std::uint64_t key = derive_seed(seed, kTagCoordinate);
  for (Index v = 0; v < g.vertex_count(); ++v) {
    for (Index j = 0; j < dim; ++j) {
      fw.points(v, j) = uniform_element<F>(key, static_cast<std::uint64_t>(v * dim + j));
    }
  }
  return fw;
}

// |E| x (n d) matrix; row of edge uv holds p(u)-p(v) in u's block and
// p(v)-p(u) in v's block. Rows follow the canonical edge order.
template <class F>
FieldMatrix<F> rigidity_matrix(const Framework<F>& fw) {
  const auto& edges = fw.graph.edges();
  const Index d = fw.dim;
  FieldMatrix<F> r =
      FieldMatrix<F>::Zero(static_cast<Index>(edges.size()), fw.graph.vertex_count() * d);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    const auto diff = (fw.points.row(u) - fw.points.row(v)).eval();
    r.block(static_cast<Index>(i), u * d, 1, d) = diff;
    r.block(static_cast<Index>(i), v * d, 1, d) = -diff;
  }
  return r;
}

// Rows of rigidity_matrix restricted to the listed edge positions.
template <class F>
FieldMatrix<F> select_rows(const FieldMatrix<F>& m, std::span<const std::size_t> rows) {
  FieldMatrix<F> out(static_cast<Index>(rows.size()), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.row(static_cast<Index>(i)) = m.row(static_cast<Index>(rows[i]));
  }
  return out;
}

}  // namespace genrig
