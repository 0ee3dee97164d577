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
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "genrig/errors.hpp"
#include "genrig/field.hpp"
#include "genrig/random.hpp"

namespace genrig {

template <class F>
using FieldMatrix = Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <class F>
using FieldVector = Eigen::Matrix<F, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

template <class F>
bool is_zero(const Eigen::MatrixBase<F>& m) {
  using S = typename F::Scalar;
  return (m.array() == S(0)).all();
}

// Result of Gauss-Jordan elimination: `reduced` is the reduced row echelon
// form (pivot entries 1, zeros above and below) and `pivots` the pivot
// column of each of its first pivots.size() rows, increasing.
template <class F>
struct Echelon {
  FieldMatrix<F> reduced;
  std::vector<Index> pivots;
};

namespace detail {

// In-place elimination on a row-major dense block. With `full` the result is
// reduced row echelon form; without it only rows below each pivot are
// cleared, which is all rank() needs.
template <class F>
std::vector<Index> eliminate(FieldMatrix<F>& m, bool full) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index sel = -1;
    for (Index i = r; i < rows; ++i) {
      if (!m(i, c).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != r) m.row(sel).swap(m.row(r));
    F* prow = m.row(r).data();
    const F inv = prow[c].inverse();
    for (Index j = c; j < cols; ++j) prow[j] *= inv;
    for (Index i = full ? 0 : r + 1; i < rows; ++i) {
      if (i == r) continue;
      F* row = m.row(i).data();
      const F f = row[c];
      if (f.is_zero()) continue;
      for (Index j = c; j < cols; ++j) row[j] -= f * prow[j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

template <class F>
Echelon<F> row_reduce(FieldMatrix<F> m) {
  std::vector<Index> pivots = detail::eliminate(m, true);
  return {std::move(m), std::move(pivots)};
}

// Exact rank over the prime field.
template <class F>
std::size_t rank(FieldMatrix<F> m) {
  return detail::eliminate(m, false).size();
}

// Basis of the right null space {v : m v = 0}, one vector per free column of
// the reduced form (in increasing column order), each with a 1 in its free
// column and zeros in the other free columns.
template <class F>
std::vector<FieldVector<F>> kernel_basis_from(const Echelon<F>& e) {
  const Index cols = e.reduced.cols();
  std::vector<char> is_pivot(cols, 0);
  for (Index p : e.pivots) is_pivot[p] = 1;
  std::vector<FieldVector<F>> basis;
  for (Index free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    FieldVector<F> v = FieldVector<F>::Zero(cols);
    v(free) = F(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      v(e.pivots[i]) = -e.reduced(static_cast<Index>(i), free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
std::vector<FieldVector<F>> kernel_basis(const FieldMatrix<F>& m) {
  return kernel_basis_from(row_reduce<F>(m));
}

// Uniformly random field combination of a kernel basis, keyed by seed.
template <class F>
FieldVector<F> random_combination(const std::vector<FieldVector<F>>& basis, Index cols,
                                  std::uint64_t seed) {
  FieldVector<F> v = FieldVector<F>::Zero(cols);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    v += uniform_element<F>(seed, i) * basis[i];
  }
  return v;
}

// Throws NoStressError if the kernel is trivial.
template <class F>
FieldVector<F> random_kernel_element(const FieldMatrix<F>& m, std::uint64_t seed) {
  const auto basis = kernel_basis(m);
  if (basis.empty()) throw NoStressError();
  return random_combination(basis, m.cols(), seed);
}

// Stacks vectors as the rows of a matrix.
template <class F>
FieldMatrix<F> stack_rows(const std::vector<FieldVector<F>>& vs, Index cols) {
  FieldMatrix<F> m(static_cast<Index>(vs.size()), cols);
  for (std::size_t i = 0; i < vs.size(); ++i) m.row(static_cast<Index>(i)) = vs[i].transpose();
  return m;
}

}  // namespace genrig
