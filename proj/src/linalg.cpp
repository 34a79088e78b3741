// Copyright 2026 The parasol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "linalg.hpp"

#include <algorithm>
#include <utility>

#include "errors.hpp"

namespace parasol {

RationalMatrix RationalMatrix::zero(int rows, int cols) {
  RationalMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.a.assign(rows, RationalVector(cols));
  return m;
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m = zero(n, n);
  for (int i = 0; i < n; ++i) m.a[i][i] = Rational(1);
  return m;
}

int rref(RationalMatrix& m, std::vector<int>* pivot_cols) {
  if (pivot_cols) pivot_cols->clear();
  int pivot_row = 0;
  for (int col = 0; col < m.cols && pivot_row < m.rows; ++col) {
    int sel = -1;
    for (int r = pivot_row; r < m.rows; ++r) {
      if (!m.a[r][col].is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m.a[sel], m.a[pivot_row]);

    const Rational inv = m.a[pivot_row][col].reciprocal();
    for (int c = col; c < m.cols; ++c) m.a[pivot_row][c] *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == pivot_row || m.a[r][col].is_zero()) continue;
      const Rational factor = m.a[r][col];
      for (int c = col; c < m.cols; ++c) m.a[r][c] -= factor * m.a[pivot_row][c];
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++pivot_row;
  }
  return pivot_row;
}

int rank(const RationalMatrix& m) {
  RationalMatrix copy = m;
  return rref(copy);
}

std::vector<RationalVector> null_space(const LinearSystem& sys) {
  RationalMatrix m = sys.matrix;
  std::vector<int> pivots;
  rref(m, &pivots);

  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols);
    v[free] = Rational(1);
    for (std::size_t p = 0; p < pivots.size(); ++p) {
      v[pivots[p]] = -m.a[static_cast<int>(p)][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve(const LinearSystem& sys) {
  RationalMatrix aug = sys.matrix;
  aug.cols += 1;
  for (int r = 0; r < aug.rows; ++r) {
    aug.a[r].push_back(static_cast<std::size_t>(r) < sys.rhs.size() ? sys.rhs[r] : Rational(0));
  }
  std::vector<int> pivots;
  rref(aug, &pivots);

  const int rhs_col = sys.matrix.cols;
  for (int c : pivots) {
    if (c == rhs_col) return std::nullopt;  // 0 = 1 row: inconsistent
  }
  RationalVector x(sys.matrix.cols);
  for (std::size_t p = 0; p < pivots.size(); ++p) {
    x[pivots[p]] = aug.a[static_cast<int>(p)][rhs_col];
  }
  return x;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows != m.cols) throw DimensionError("inverse of non-square matrix");
  const int n = m.rows;
  RationalMatrix aug = RationalMatrix::zero(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.a[r][c] = m.a[r][c];
    aug.a[r][n + r] = Rational(1);
  }
  std::vector<int> pivots;
  const int rk = rref(aug, &pivots);
  if (rk < n || pivots[static_cast<std::size_t>(n) - 1] >= n) {
    throw SingularMetricError("matrix is singular");
  }
  RationalMatrix inv = RationalMatrix::zero(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) inv.a[r][c] = aug.a[r][n + c];
  }
  return inv;
}

RationalVector matrix_apply(const RationalMatrix& m, const RationalVector& x) {
  if (static_cast<int>(x.size()) != m.cols) throw DimensionError("matrix/vector size mismatch");
  RationalVector y(m.rows);
  for (int r = 0; r < m.rows; ++r) {
    Rational acc;
    for (int c = 0; c < m.cols; ++c) acc += m.a[r][c] * x[c];
    y[r] = acc;
  }
  return y;
}

Tensor matrix_to_tensor(const RationalMatrix& m, IndexKind first, IndexKind second) {
  if (m.rows != m.cols) throw DimensionError("tensor conversion needs a square matrix");
  Tensor t({first, second}, m.rows);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) t.at({i, j}) = m.a[i][j];
  }
  return t;
}

RationalMatrix tensor_to_matrix(const Tensor& t) {
  if (t.rank() != 2) throw DimensionError("matrix conversion needs a rank-2 tensor");
  RationalMatrix m = RationalMatrix::zero(t.dim(), t.dim());
  for (int i = 0; i < t.dim(); ++i) {
    for (int j = 0; j < t.dim(); ++j) m.a[i][j] = t.at({i, j});
  }
  return m;
}

}  // namespace parasol
