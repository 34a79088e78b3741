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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "errors.hpp"
#include "linalg.hpp"
#include "rational.hpp"
#include "tensor.hpp"
#include "test_util.hpp"

using namespace parasol;
using namespace parasol::testing;

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::parse("3/4").str() == "3/4");
  CHECK(Rational::parse("-6/8").str() == "-3/4");
  CHECK(Rational::parse("6/-8").str() == "-3/4");
  CHECK(Rational::parse("-6/-8").str() == "3/4");
  CHECK(Rational::parse("42").str() == "42");
  CHECK(Rational::parse("+7/7").str() == "1");
  CHECK(Rational::parse("0/5").str() == "0");
  CHECK(Rational::parse(" 2/3 ").str() == "2/3");
  CHECK(Rational::parse("123456789012345678901234567890/2").str() ==
        "61728394506172839450617283945");

  CHECK_THROWS_AS(Rational::parse(""), ValueError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ValueError);
  CHECK_THROWS_AS(Rational::parse("1e3"), ValueError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ValueError);
  CHECK_THROWS_AS(Rational::parse("a/b"), ValueError);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), ValueError);
  CHECK_THROWS_AS(Rational(1, 0), ValueError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), ValueError);
}

TEST_CASE("rational field axioms on random triples") {
  for (int iter = 0; iter < 300; ++iter) {
    const Rational a = random_rational(50, 20);
    const Rational b = random_rational(50, 20);
    const Rational c = random_rational(50, 20);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Rational(0) == a);
    CHECK(a * Rational(1) == a);
    CHECK(a - a == Rational(0));
    if (!a.is_zero()) CHECK(a * a.reciprocal() == Rational(1));
  }
}

TEST_CASE("rational arithmetic never loses exactness through deep expressions") {
  // telescoping sum of 1/(k(k+1)) = 1 - 1/(N+1), exact at every step
  Rational sum;
  const long N = 200;
  for (long k = 1; k <= N; ++k) sum += Rational(1, k) - Rational(1, k + 1);
  CHECK(sum == Rational(N, N + 1));
}

TEST_CASE("tensor contraction: trace of identity in dim 4 is 4") {
  CHECK(tensor_contract(kronecker_delta(4), 0, 1).scalar_value() == Rational(4));
}

TEST_CASE("tensor contraction: trace of the example phi is -3") {
  const LoadedManifold lm = builtin_example();
  const Tensor lambda = tensor_contract(lm.structure.phi, 0, 1);
  CHECK(lambda.scalar_value() == Rational(-3));
  CHECK(lambda.scalar_value() == lm.structure.lambda);
}

TEST_CASE("tensor contraction: kronecker absorption returns the vector") {
  const int n = 4;
  const Tensor v = random_vector(n);
  const Tensor dv = tensor_outer(kronecker_delta(n), v);  // delta^i_j v^k
  const Tensor back = tensor_contract(dv, 1, 2);          // sum_j delta^i_j v^j
  CHECK(back == v);
}

TEST_CASE("tensor contraction rejects same-variance slots") {
  const Tensor g = builtin_example().manifold.metric();
  CHECK_THROWS_AS(tensor_contract(g, 0, 1), DimensionError);
  CHECK_THROWS_AS(tensor_contract(kronecker_delta(3), 0, 0), DimensionError);
  CHECK_THROWS_AS(tensor_contract(kronecker_delta(3), 0, 5), DimensionError);
}

TEST_CASE("raise/lower: xi lowers to eta on the example") {
  const LoadedManifold lm = builtin_example();
  const Tensor eta = raise_lower(lm.structure.xi, 0, lm.manifold.metric(),
                                 lm.manifold.metric_inverse());
  CHECK(eta == lm.structure.eta);
  CHECK(eta.at({3}) == Rational(-1));
}

TEST_CASE("raise/lower: e1 lowers to (1,0,0,0) under the example metric") {
  const LoadedManifold lm = builtin_example();
  Tensor e1({IndexKind::Upper}, 4);
  e1.at({0}) = Rational(1);
  const Tensor lowered = lm.manifold.lower(e1);
  CHECK(lowered.at({0}) == Rational(1));
  CHECK(lowered.at({1}) == Rational(0));
  CHECK(lowered.at({2}) == Rational(0));
  CHECK(lowered.at({3}) == Rational(0));
}

TEST_CASE("raise/lower round trip is the exact identity up to rank 4, dim 5") {
  for (int n = 2; n <= 5; ++n) {
    const Tensor g = random_metric(n);
    const Tensor ginv = matrix_to_tensor(inverse(tensor_to_matrix(g)), IndexKind::Upper,
                                         IndexKind::Upper);
    for (int rank_k = 1; rank_k <= 4; ++rank_k) {
      std::vector<IndexKind> var;
      for (int s = 0; s < rank_k; ++s) {
        var.push_back(s % 2 == 0 ? IndexKind::Upper : IndexKind::Lower);
      }
      const Tensor t = random_tensor(var, n);
      for (int slot = 0; slot < rank_k; ++slot) {
        const Tensor once = raise_lower(t, slot, g, ginv);
        CHECK(once.variance()[static_cast<std::size_t>(slot)] !=
              t.variance()[static_cast<std::size_t>(slot)]);
        CHECK(raise_lower(once, slot, g, ginv) == t);
      }
    }
  }
}

TEST_CASE("inverse throws a rank error on singular matrices") {
  RationalMatrix m = RationalMatrix::zero(3, 3);
  m.a[0][0] = Rational(1);
  m.a[1][1] = Rational(1);
  CHECK_THROWS_AS(inverse(m), SingularMetricError);
}

TEST_CASE("null space: identity matrix has an empty basis") {
  LinearSystem sys{RationalMatrix::identity(5), {}};
  CHECK(null_space(sys).empty());
}

TEST_CASE("null space: zero matrix has a full basis") {
  LinearSystem sys{RationalMatrix::zero(3, 5), {}};
  const auto basis = null_space(sys);
  REQUIRE(basis.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      CHECK(basis[i][j] == (i == j ? Rational(1) : Rational(0)));
    }
  }
}

TEST_CASE("null space vectors annihilate the matrix and span the full kernel") {
  for (int iter = 0; iter < 40; ++iter) {
    std::uniform_int_distribution<int> dim(1, 6);
    const int rows = dim(rng());
    const int cols = dim(rng());
    RationalMatrix m = RationalMatrix::zero(rows, cols);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) m.a[r][c] = random_rational(3, 2);
    }
    LinearSystem sys{m, {}};
    const auto basis = null_space(sys);

    for (const RationalVector& v : basis) {
      const RationalVector image = matrix_apply(m, v);
      for (const Rational& entry : image) CHECK(entry == Rational(0));
    }

    // kernel dimension must equal cols - rank by an independent elimination
    const int rk = rank_oracle(m.a);
    CHECK(static_cast<int>(basis.size()) == cols - rk);

    // basis linear independence: stacking the vectors as rows preserves count
    if (!basis.empty()) {
      CHECK(rank_oracle(basis) == static_cast<int>(basis.size()));
    }
  }
}

TEST_CASE("solve returns an exact particular solution or reports inconsistency") {
  RationalMatrix m = RationalMatrix::zero(2, 2);
  m.a[0][0] = Rational(2);
  m.a[1][1] = Rational(3);
  CHECK(*solve({m, {Rational(1), Rational(1)}}) ==
        RationalVector{Rational(1, 2), Rational(1, 3)});

  RationalMatrix bad = RationalMatrix::zero(2, 1);
  bad.a[0][0] = Rational(1);
  bad.a[1][0] = Rational(1);
  CHECK_FALSE(solve({bad, {Rational(1), Rational(2)}}).has_value());
}

TEST_CASE("tensor equality includes variance") {
  Tensor up({IndexKind::Upper}, 3);
  Tensor down({IndexKind::Lower}, 3);
  up.at({0}) = Rational(1);
  down.at({0}) = Rational(1);
  CHECK(up != down);
}
