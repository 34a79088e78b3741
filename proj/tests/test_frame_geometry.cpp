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

#include "frame.hpp"
#include "test_util.hpp"

using namespace parasol;
using namespace parasol::testing;

namespace {

FrameManifold flat_frame(int n) {
  Tensor g({IndexKind::Lower, IndexKind::Lower}, n);
  for (int i = 0; i < n; ++i) g.at({i, i}) = Rational(1);
  Tensor c({IndexKind::Lower, IndexKind::Lower, IndexKind::Upper}, n);
  return FrameManifold(n, std::move(g), std::move(c));
}

/// Koszul oracle for the bundled example, expanded by hand from its explicit
/// brackets [e_i, e_4] = -e_i and diagonal metric (no shared code with the
/// library implementation).
Rational example_koszul_oracle(int i, int j, int l) {
  auto bracket = [](int x, int y, int comp) {
    // [e_x, e_y] components
    if (x < 3 && y == 3) return comp == x ? Rational(-1) : Rational(0);
    if (x == 3 && y < 3) return comp == y ? Rational(1) : Rational(0);
    return Rational(0);
  };
  auto metric = [](int x, int y) {
    if (x != y) return Rational(0);
    return x == 3 ? Rational(-1) : Rational(1);
  };
  // 2 g(nabla_i e_j, e_k) = g([i,j],k) - g([i,k],j) - g([j,k],i)
  Rational sum;
  const int k = l;  // diagonal metric: component l pairs only with e_l
  for (int m = 0; m < 4; ++m) {
    sum += bracket(i, j, m) * metric(m, k);
    sum -= bracket(i, k, m) * metric(m, j);
    sum -= bracket(j, k, m) * metric(m, i);
  }
  return sum / (Rational(2) * metric(l, l));
}

}  // namespace

TEST_CASE("validate_manifold: the bundled example frame passes") {
  const LoadedManifold lm = builtin_example();
  CHECK(validate_frame(4, lm.manifold.metric(), lm.manifold.structure()).all_passed());
}

TEST_CASE("validate_manifold: flat frame passes") {
  const FrameManifold m = flat_frame(3);
  CHECK(validate_frame(3, m.metric(), m.structure()).all_passed());
}

TEST_CASE("validate_manifold: broken antisymmetry fails naming the index triple") {
  Tensor g({IndexKind::Lower, IndexKind::Lower}, 3);
  for (int i = 0; i < 3; ++i) g.at({i, i}) = Rational(1);
  Tensor c({IndexKind::Lower, IndexKind::Lower, IndexKind::Upper}, 3);
  c.at({0, 1, 0}) = Rational(1);  // c^1_12 = 1
  c.at({1, 0, 0}) = Rational(1);  // c^1_21 = 1, must be -1
  const CheckSet cs = validate_frame(3, g, c);
  CHECK_FALSE(cs.all_passed());
  const Check* anti = cs.find("manifold/brackets_antisymmetric");
  REQUIRE(anti != nullptr);
  CHECK(anti->status == CheckStatus::Fail);
  REQUIRE_FALSE(anti->witnesses.empty());
  CHECK(anti->witnesses.front().index == std::vector<int>{0, 1, 0});
}

TEST_CASE("validate_manifold: non-Jacobi brackets fail") {
  // [e1,e2] = e2 and [e2,e3] = e1 give [[e1,e2],e3] + cyclic = e1 != 0
  Tensor g({IndexKind::Lower, IndexKind::Lower}, 3);
  for (int i = 0; i < 3; ++i) g.at({i, i}) = Rational(1);
  Tensor c({IndexKind::Lower, IndexKind::Lower, IndexKind::Upper}, 3);
  auto set = [&](int i, int j, int k, long v) {
    c.at({i, j, k}) = Rational(v);
    c.at({j, i, k}) = Rational(-v);
  };
  set(0, 1, 1, 1);
  set(1, 2, 0, 1);
  const CheckSet cs = validate_frame(3, g, c);
  const Check* jac = cs.find("manifold/jacobi_identity");
  REQUIRE(jac != nullptr);
  CHECK(jac->status == CheckStatus::Fail);
}

TEST_CASE("koszul: flat frame gives a vanishing connection") {
  const FrameManifold m = flat_frame(4);
  CHECK(koszul_levi_civita(m).gamma.is_zero());
}

TEST_CASE("koszul on the example matches the published column and the oracle diagonal") {
  const LoadedManifold lm = builtin_example();
  const Tensor& gamma = lm.levi_civita.gamma;

  // nabla_{e_1} e_4 = -e_1 (published and oracle agree)
  for (int l = 0; l < 4; ++l) {
    CHECK(gamma.at({0, 3, l}) == (l == 0 ? Rational(-1) : Rational(0)));
  }

  // the full table must match the hand-expanded Koszul oracle; in particular
  // nabla_{e_1} e_1 = -e_4, not the published -2 e_4
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      for (int l = 0; l < 4; ++l) {
        CAPTURE(i);
        CAPTURE(j);
        CAPTURE(l);
        CHECK(gamma.at({i, j, l}) == example_koszul_oracle(i, j, l));
      }
    }
  }
  CHECK(gamma.at({0, 0, 3}) == Rational(-1));
}

TEST_CASE("torsion and metricity of the Koszul connection vanish on random frames") {
  for (int iter = 0; iter < 12; ++iter) {
    std::uniform_int_distribution<int> dim(2, 5);
    std::uniform_int_distribution<int> family(0, 2);
    const int n = dim(rng());
    Tensor c({IndexKind::Lower, IndexKind::Lower, IndexKind::Upper}, n);
    switch (family(rng())) {
      case 0:
        break;  // abelian
      case 1:
        // solvable family: [e_i, e_n] = mu_i e_i
        for (int i = 0; i < n - 1; ++i) {
          const Rational mu = random_rational(4, 3);
          c.at({i, n - 1, i}) = mu;
          c.at({n - 1, i, i}) = -mu;
        }
        break;
      default:
        // dim-3 epsilon brackets scale to any coefficients
        if (n >= 3) {
          auto set = [&](int i, int j, int k, Rational v) {
            c.at({i, j, k}) = v;
            c.at({j, i, k}) = -v;
          };
          set(0, 1, 2, random_rational(3, 2));
          set(1, 2, 0, random_rational(3, 2));
          set(2, 0, 1, random_rational(3, 2));
        }
        break;
    }
    const Tensor g = random_metric(n);
    if (!validate_frame(n, g, c).all_passed()) continue;
    const FrameManifold m(n, g, c);
    const Connection lc = koszul_levi_civita(m);
    CHECK(torsion(m, lc).is_zero());
    CHECK(metricity(m, lc).is_zero());
  }
}

TEST_CASE("torsion of the general connection on the example") {
  const LoadedManifold lm = builtin_example();
  const Connection conn = general_connection(lm.manifold, lm.structure, lm.levi_civita,
                                             {Rational(1), Rational(1)});
  const Tensor t = torsion(lm.manifold, conn);
  // T(e_1, e_4) = -(a+b) e_1 = -2 e_1 at (1,1)
  for (int l = 0; l < 4; ++l) {
    CHECK(t.at({0, 3, l}) == (l == 0 ? Rational(-2) : Rational(0)));
  }
}

TEST_CASE("zero connection on a flat frame has zero torsion and metricity") {
  const FrameManifold m = flat_frame(3);
  Connection zero;
  zero.gamma = Tensor({IndexKind::Lower, IndexKind::Lower, IndexKind::Upper}, 3);
  CHECK(torsion(m, zero).is_zero());
  CHECK(metricity(m, zero).is_zero());
}

TEST_CASE("metricity adjudicates the presets: b = 0 members are metric, b != 0 are not") {
  const LoadedManifold lm = builtin_example();

  const Connection svk = preset_connection(lm.manifold, lm.structure, lm.levi_civita,
                                           PresetName::SchoutenVanKampen);
  CHECK(metricity(lm.manifold, svk).is_zero());

  const Connection qs = preset_connection(lm.manifold, lm.structure, lm.levi_civita,
                                          PresetName::QuarterSymmetric);
  const Tensor d = metricity(lm.manifold, qs);
  CHECK_FALSE(d.is_zero());
  // pattern -2b eta(U) g(phi V, W) at b = -1: component (4,1,1) is
  // 2 * eta_4 * g(phi e_1, e_1) = 2 * (-1) * (-1) = 2
  CHECK(d.at({3, 0, 0}) == Rational(2));
  // and exactly that pattern everywhere
  const Tensor gphi = metric_phi(lm.manifold, lm.structure);
  d.for_each_index([&](std::span<const int> idx) {
    const Rational expected =
        Rational(2) * lm.structure.eta.at({idx[0]}) * gphi.at({idx[1], idx[2]});
    CHECK(d.at(idx) == expected);
  });
}

TEST_CASE("curvature: flat frame has zero curvature package") {
  const FrameManifold m = flat_frame(4);
  const CurvatureData cd = curvature(m, koszul_levi_civita(m));
  CHECK(cd.riemann.is_zero());
  CHECK(cd.ricci.is_zero());
  CHECK(cd.ricci_op.is_zero());
  CHECK(cd.scalar == Rational(0));
}

TEST_CASE("curvature of the example Levi-Civita connection") {
  const LoadedManifold lm = builtin_example();
  const CurvatureData cd = curvature(lm.manifold, lm.levi_civita);

  // S(e_4, e_4) = -3 = (n-1) eta(xi)
  CHECK(cd.ricci.at({3, 3}) == Rational(-3));
  // direct components give S = 3g, so r = 12
  CHECK(cd.scalar == Rational(12));
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) {
      CHECK(cd.ricci.at({j, k}) == Rational(3) * lm.manifold.metric().at({j, k}));
    }
  }
}

TEST_CASE("curvature antisymmetry in the first two slots holds for any connection") {
  const LoadedManifold lm = builtin_example();
  for (int iter = 0; iter < 6; ++iter) {
    Connection arbitrary;
    arbitrary.gamma =
        random_tensor({IndexKind::Lower, IndexKind::Lower, IndexKind::Upper}, 4);
    const Tensor r = curvature(lm.manifold, arbitrary).riemann;
    r.for_each_index([&](std::span<const int> idx) {
      CHECK(r.at(idx) == -r.at({idx[1], idx[0], idx[2], idx[3]}));
    });
  }
}

TEST_CASE("curvature sign convention: eta(R(e_i,e_j)e_k) pins the orientation") {
  const LoadedManifold lm = builtin_example();
  const CurvatureData cd = curvature(lm.manifold, lm.levi_civita);
  const Tensor& g = lm.manifold.metric();
  const Tensor& eta = lm.structure.eta;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      for (int k = 0; k < 4; ++k) {
        Rational lhs;
        for (int l = 0; l < 4; ++l) lhs += cd.riemann.at({i, j, k, l}) * eta.at({l});
        CHECK(lhs == g.at({j, k}) * eta.at({i}) - g.at({i, k}) * eta.at({j}));
      }
    }
  }
}

TEST_CASE("general connection at (0,0) is exactly Levi-Civita on every fixture") {
  for (int n = 3; n <= 5; ++n) {
    for (int sign : {1, -1}) {
      const LoadedManifold lm = lp_sasakian_fixture(n, sign, random_positive_spatial(n));
      const Connection conn =
          general_connection(lm.manifold, lm.structure, lm.levi_civita, {Rational(0), Rational(0)});
      CHECK(conn.gamma == lm.levi_civita.gamma);
    }
  }
}
