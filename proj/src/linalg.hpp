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

#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"
#include "tensor.hpp"

namespace parasol {

using RationalVector = std::vector<Rational>;

/// Dense rational matrix, row major.
struct RationalMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<RationalVector> a;

  static RationalMatrix zero(int rows, int cols);
  static RationalMatrix identity(int n);
  Rational& at(int r, int c) { return a[r][c]; }
  const Rational& at(int r, int c) const { return a[r][c]; }
};

/// Homogeneous or inhomogeneous exact linear system matrix·x = rhs.
struct LinearSystem {
  RationalMatrix matrix;
  RationalVector rhs;  // empty means homogeneous (all zeros)
};

/// Reduces in place to reduced row echelon form; returns the rank and, if
/// requested, the pivot column positions in order.
int rref(RationalMatrix& m, std::vector<int>* pivot_cols = nullptr);

int rank(const RationalMatrix& m);

/// Exact kernel basis in RREF canonical form: one vector per free column,
/// carrying 1 in its own free column and 0 in the other free columns. The
/// vectors are linearly independent and span the full kernel; the list is
/// empty when the kernel is trivial.
std::vector<RationalVector> null_space(const LinearSystem& sys);

/// One exact solution of matrix·x = rhs with every free variable set to 0,
/// or nullopt when the system is inconsistent.
std::optional<RationalVector> solve(const LinearSystem& sys);

/// Exact inverse; throws SingularMetricError when the matrix is singular.
RationalMatrix inverse(const RationalMatrix& m);

RationalVector matrix_apply(const RationalMatrix& m, const RationalVector& x);

/// Rank-2 tensor of the given variance holding the matrix entries.
Tensor matrix_to_tensor(const RationalMatrix& m, IndexKind first, IndexKind second);
RationalMatrix tensor_to_matrix(const Tensor& t);

}  // namespace parasol
