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

#include "linalg.hpp"
#include "paracontact.hpp"
#include "test_util.hpp"

using namespace parasol;
using namespace parasol::testing;

TEST_CASE("almost paracontact axioms pass on the example") {
  const LoadedManifold lm = builtin_example();
  CHECK(verify_almost_paracontact(lm.manifold, lm.structure).all_passed());
}

TEST_CASE("almost paracontact axioms pass on every family fixture") {
  for (int n = 3; n <= 5; ++n) {
    for (int sign : {1, -1}) {
      const LoadedManifold lm = lp_sasakian_fixture(n, sign, random_positive_spatial(n));
      CHECK(verify_almost_paracontact(lm.manifold, lm.structure).all_passed());
      CHECK(lm.structure.lambda == Rational(-sign * (n - 1)));
    }
  }
}

TEST_CASE("flipping the sign of eta fails eta(xi) = -1") {
  const LoadedManifold lm = builtin_example();
  Tensor flipped = lm.structure.eta;
  flipped *= Rational(-1);
  const ParacontactStructure bad =
      make_paracontact(lm.manifold, lm.structure.phi, lm.structure.xi, flipped);
  const CheckSet cs = verify_almost_paracontact(lm.manifold, bad);
  CHECK_FALSE(cs.all_passed());
  const Check* c = cs.find("axiom/eta_xi_is_minus_one");
  REQUIRE(c != nullptr);
  CHECK(c->status == CheckStatus::Fail);
}

TEST_CASE("the zero structure fails eta(xi) = -1") {
  const LoadedManifold lm = builtin_example();
  const int n = 4;
  const ParacontactStructure zero = make_paracontact(
      lm.manifold, Tensor({IndexKind::Upper, IndexKind::Lower}, n), Tensor({IndexKind::Upper}, n),
      Tensor({IndexKind::Lower}, n));
  const CheckSet cs = verify_almost_paracontact(lm.manifold, zero);
  const Check* c = cs.find("axiom/eta_xi_is_minus_one");
  REQUIRE(c != nullptr);
  CHECK(c->status == CheckStatus::Fail);
}

TEST_CASE("LP-Sasakian differential axioms pass with the Koszul connection") {
  const LoadedManifold lm = builtin_example();
  CHECK(verify_lp_sasakian(lm.manifold, lm.structure, lm.levi_civita).all_passed());
  for (int n = 3; n <= 5; ++n) {
    for (int sign : {1, -1}) {
      const LoadedManifold fx = lp_sasakian_fixture(n, sign, random_positive_spatial(n));
      CHECK(verify_lp_sasakian(fx.manifold, fx.structure, fx.levi_civita).all_passed());
    }
  }
}

TEST_CASE("a flat frame with zero structure is not LP-Sasakian") {
  Tensor g({IndexKind::Lower, IndexKind::Lower}, 3);
  for (int i = 0; i < 3; ++i) g.at({i, i}) = Rational(1);
  FrameManifold m(3, g, Tensor({IndexKind::Lower, IndexKind::Lower, IndexKind::Upper}, 3));
  const ParacontactStructure zero = make_paracontact(
      m, Tensor({IndexKind::Upper, IndexKind::Lower}, 3), Tensor({IndexKind::Upper}, 3));
  const Connection lc = koszul_levi_civita(m);
  const CheckSet cs = verify_lp_sasakian(m, zero, lc);
  CHECK_FALSE(cs.all_passed());
  const Check* pre = cs.find("sasakian/preconditions");
  REQUIRE(pre != nullptr);
  CHECK(pre->status == CheckStatus::Fail);
}

TEST_CASE("the published table diagonal -2e4 breaks the nabla-phi identity at (e1,e1)") {
  const LoadedManifold lm = builtin_example();
  Connection published;
  published.gamma = printed::levi_civita_gamma();
  const CheckSet cs = verify_lp_sasakian(lm.manifold, lm.structure, published);
  const Check* c = cs.find("sasakian/nabla_phi_identity");
  REQUIRE(c != nullptr);
  CHECK(c->status == CheckStatus::Fail);
  bool witnessed_e1_e1 = false;
  for (const Witness& w : c->witnesses) {
    if (w.index == std::vector<int>{0, 0, 3}) witnessed_e1_e1 = true;
  }
  CHECK(witnessed_e1_e1);
  // the published table is not even metric-compatible
  CHECK_FALSE(metricity(lm.manifold, published).is_zero());
}

TEST_CASE("identity suite on the example: frozen spot values") {
  const LoadedManifold lm = builtin_example();
  const CurvatureData cd = curvature(lm.manifold, lm.levi_civita);
  CHECK(lp_identity_suite(lm.manifold, lm.structure, lm.levi_civita, cd).all_passed());

  // S(e_1, xi) = 0 = (n-1) eta(e_1)
  Rational s_e1_xi;
  for (int k = 0; k < 4; ++k) s_e1_xi += cd.ricci.at({0, k}) * lm.structure.xi.at({k});
  CHECK(s_e1_xi == Rational(0));

  // R(xi, e_1) xi = e_1
  for (int l = 0; l < 4; ++l) {
    Rational lhs;
    for (int i = 0; i < 4; ++i) {
      for (int k = 0; k < 4; ++k) {
        lhs += lm.structure.xi.at({i}) * lm.structure.xi.at({k}) * cd.riemann.at({i, 0, k, l});
      }
    }
    CHECK(lhs == (l == 0 ? Rational(1) : Rational(0)));
  }

  // Q e_1 = 3 e_1
  for (int l = 0; l < 4; ++l) {
    CHECK(cd.ricci_op.at({l, 0}) == (l == 0 ? Rational(3) : Rational(0)));
  }
}

TEST_CASE("identity suite also passes on the positive-phi family where lambda = +(n-1)") {
  const LoadedManifold fx = lp_sasakian_fixture(4, -1, random_positive_spatial(4));
  const CurvatureData cd = curvature(fx.manifold, fx.levi_civita);
  const CheckSet cs = lp_identity_suite(fx.manifold, fx.structure, fx.levi_civita, cd);
  CHECK(cs.all_passed());
  CHECK(fx.structure.lambda == Rational(3));
}

TEST_CASE("general connection: reduction, published column, diagonal delta") {
  const LoadedManifold lm = builtin_example();

  const Connection zero =
      general_connection(lm.manifold, lm.structure, lm.levi_civita, {Rational(0), Rational(0)});
  CHECK(zero.gamma == lm.levi_civita.gamma);

  for (int iter = 0; iter < 8; ++iter) {
    const ConnectionParams params{random_rational(), random_rational()};
    const Connection conn = general_connection(lm.manifold, lm.structure, lm.levi_civita, params);

    // nabla-bar_{e_i} e_4 = -(a+1) e_i
    for (int i = 0; i < 3; ++i) {
      for (int l = 0; l < 4; ++l) {
        CHECK(conn.gamma.at({i, 3, l}) ==
              (l == i ? -(params.a + Rational(1)) : Rational(0)));
      }
    }
    // diagonal delta: nabla-bar_{e_1} e_1 - nabla_{e_1} e_1 = -a e_4
    for (int l = 0; l < 4; ++l) {
      CHECK(conn.gamma.at({0, 0, l}) - lm.levi_civita.gamma.at({0, 0, l}) ==
            (l == 3 ? -params.a : Rational(0)));
    }
    // row 4: nabla-bar_{e_4} e_j = b e_j
    for (int j = 0; j < 3; ++j) {
      for (int l = 0; l < 4; ++l) {
        CHECK(conn.gamma.at({3, j, l}) == (l == j ? params.b : Rational(0)));
      }
    }
  }
}

TEST_CASE("presets map to their parameter pairs") {
  CHECK(preset_params(PresetName::QuarterSymmetric).a == Rational(0));
  CHECK(preset_params(PresetName::QuarterSymmetric).b == Rational(-1));
  CHECK(preset_params(PresetName::SchoutenVanKampen).a == Rational(1));
  CHECK(preset_params(PresetName::SchoutenVanKampen).b == Rational(0));
  CHECK(preset_params(PresetName::TanakaWebster).a == Rational(1));
  CHECK(preset_params(PresetName::TanakaWebster).b == Rational(-1));
  CHECK(preset_params(PresetName::Zamkovoy).a == Rational(1));
  CHECK(preset_params(PresetName::Zamkovoy).b == Rational(1));

  const LoadedManifold lm = builtin_example();
  const Connection svk = preset_connection(lm.manifold, lm.structure, lm.levi_civita,
                                           PresetName::SchoutenVanKampen);
  // published column at a = 1: nabla-bar_{e_1} e_4 = -2 e_1
  for (int l = 0; l < 4; ++l) {
    CHECK(svk.gamma.at({0, 3, l}) == (l == 0 ? Rational(-2) : Rational(0)));
  }
  CHECK(svk.provenance.kind == Provenance::Kind::Preset);
  CHECK(svk.provenance.params.a == Rational(1));

  const Connection same =
      general_connection(lm.manifold, lm.structure, lm.levi_civita, {Rational(1), Rational(0)});
  CHECK(svk.gamma == same.gamma);
}

TEST_CASE("closed-form curvature: reduction and published components") {
  const LoadedManifold lm = builtin_example();
  const CurvatureData lc = curvature(lm.manifold, lm.levi_civita);

  CHECK(closed_form_riemann_bar(lm.manifold, lm.structure, lc.riemann,
                                {Rational(0), Rational(0)}) == lc.riemann);

  for (int iter = 0; iter < 6; ++iter) {
    const ConnectionParams params{random_rational(), random_rational()};
    const Tensor rbar = closed_form_riemann_bar(lm.manifold, lm.structure, lc.riemann, params);
    const Rational coef =
        -(params.a + params.a * params.b + params.b + Rational(1));
    // R-bar(e_i, e_4) e_i = -(a+ab+b+1) e_4 for i = 1..3
    for (int i = 0; i < 3; ++i) {
      for (int l = 0; l < 4; ++l) {
        CHECK(rbar.at({i, 3, i, l}) == (l == 3 ? coef : Rational(0)));
      }
    }
  }

  // at (1,1): R-bar(e_1,e_4)e_1 = -4 e_4
  const Tensor rbar11 = closed_form_riemann_bar(lm.manifold, lm.structure, lc.riemann,
                                                {Rational(1), Rational(1)});
  CHECK(rbar11.at({0, 3, 0, 3}) == Rational(-4));
}

TEST_CASE("closed-form Ricci: reduction and published diagonal") {
  const LoadedManifold lm = builtin_example();
  const CurvatureData lc = curvature(lm.manifold, lm.levi_civita);

  CHECK(closed_form_ricci_bar(lm.manifold, lm.structure, lc.ricci, {Rational(0), Rational(0)}) ==
        lc.ricci);

  for (int iter = 0; iter < 6; ++iter) {
    const ConnectionParams params{random_rational(), random_rational()};
    const Tensor sbar = closed_form_ricci_bar(lm.manifold, lm.structure, lc.ricci, params);
    // S-bar(e_4, e_4) = -3 (a - b - ab + 1) = -(n-1)(a+1)(1-b)
    const Rational published = Rational(-3) * (params.a - params.b - params.a * params.b +
                                               Rational(1));
    const Rational factored =
        Rational(-3) * (params.a + Rational(1)) * (Rational(1) - params.b);
    CHECK(sbar.at({3, 3}) == published);
    CHECK(published == factored);
  }

  // at (1,0): S-bar(e_4,e_4) = -6
  const Tensor sbar10 =
      closed_form_ricci_bar(lm.manifold, lm.structure, lc.ricci, {Rational(1), Rational(0)});
  CHECK(sbar10.at({3, 3}) == Rational(-6));
}

TEST_CASE("closed-form Ricci operator: reduction and the (0,-1) shift") {
  const LoadedManifold lm = builtin_example();
  const CurvatureData lc = curvature(lm.manifold, lm.levi_civita);

  CHECK(closed_form_ricci_operator_bar(lm.manifold, lm.structure, lc.ricci_op,
                                       {Rational(0), Rational(0)}) == lc.ricci_op);

  // at (0,-1): ab+b-a^2-a = -1, the a(a+2) and eta terms vanish on e_1,
  // so Q-bar e_1 = Q e_1 - e_1 = 2 e_1
  const Tensor qbar = closed_form_ricci_operator_bar(lm.manifold, lm.structure, lc.ricci_op,
                                                     {Rational(0), Rational(-1)});
  for (int l = 0; l < 4; ++l) {
    CHECK(qbar.at({l, 0}) == (l == 0 ? Rational(2) : Rational(0)));
  }

  // Q-bar xi from the display: Q xi = 3 xi, coefficient terms add up
  for (int iter = 0; iter < 4; ++iter) {
    const ConnectionParams params{random_rational(), random_rational()};
    const Rational cg = params.a * params.b + params.b - params.a * params.a - params.a;
    const Rational ceta = cg + Rational(3) * (params.a * params.b + params.b - params.a);
    const Tensor q = closed_form_ricci_operator_bar(lm.manifold, lm.structure, lc.ricci_op,
                                                    params);
    // Q-bar xi = (3 + cg) xi + ceta * eta(xi) xi = (3 + cg - ceta) xi
    for (int l = 0; l < 4; ++l) {
      Rational got;
      for (int k = 0; k < 4; ++k) got += q.at({l, k}) * lm.structure.xi.at({k});
      CHECK(got == (l == 3 ? Rational(3) + cg - ceta : Rational(0)));
    }
  }
}

TEST_CASE("closed-form scalar: reduction, example substitution, a = -2 degenerate point") {
  const LoadedManifold lm = builtin_example();
  const CurvatureData lc = curvature(lm.manifold, lm.levi_civita);
  const Rational lambda = lm.structure.lambda;

  CHECK(closed_form_scalar_bar(lc.scalar, 4, lambda, {Rational(0), Rational(0)}) == lc.scalar);

  for (int iter = 0; iter < 8; ++iter) {
    const ConnectionParams params{random_rational(), random_rational()};
    // r - 3a^2 + 9a(a+2) with lambda^2 = 9 on the example
    const Rational expected = lc.scalar - Rational(3) * params.a * params.a +
                              Rational(9) * params.a * (params.a + Rational(2));
    CHECK(closed_form_scalar_bar(lc.scalar, 4, lambda, params) == expected);
  }

  // a = -2 kills the lambda term: r-bar = r - 4(n-1) with a^2 = 4
  const Rational at_minus2 =
      closed_form_scalar_bar(lc.scalar, 4, lambda, {Rational(-2), random_rational()});
  CHECK(at_minus2 == lc.scalar - Rational(12));
  CHECK(at_minus2 == Rational(0));
}

TEST_CASE("closed-form curvature at U = W = xi matches (1+a)(1-b)(V + eta(V) xi)") {
  const LoadedManifold lm = builtin_example();
  const CurvatureData lc = curvature(lm.manifold, lm.levi_civita);
  for (int iter = 0; iter < 6; ++iter) {
    const ConnectionParams params{random_rational(), random_rational()};
    const Tensor rbar = closed_form_riemann_bar(lm.manifold, lm.structure, lc.riemann, params);
    const Rational coef = (Rational(1) + params.a) * (Rational(1) - params.b);
    for (int j = 0; j < 4; ++j) {
      for (int l = 0; l < 4; ++l) {
        Rational lhs;
        for (int i = 0; i < 4; ++i) {
          for (int k = 0; k < 4; ++k) {
            lhs += lm.structure.xi.at({i}) * lm.structure.xi.at({k}) * rbar.at({i, j, k, l});
          }
        }
        const Rational rhs =
            coef * ((l == j ? Rational(1) : Rational(0)) +
                    lm.structure.eta.at({j}) * lm.structure.xi.at({l}));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("audit: full agreement of closed forms with direct computation on the example") {
  const LoadedManifold lm = builtin_example();
  const AuditOutcome outcome = audit_closed_forms(lm.manifold, lm.structure, lm.levi_civita,
                                                  default_grid(5, true), 1);
  REQUIRE(outcome.points.size() == 25);
  CHECK(outcome.certifies_degree4);

  bool presets_seen[4] = {false, false, false, false};
  for (const AuditPoint& point : outcome.points) {
    CAPTURE(point.point.params.a.str());
    CAPTURE(point.point.params.b.str());
    CHECK(point.checks.all_passed());
    for (const Check& c : point.checks.checks()) {
      // on this example even the conditional comparisons agree exactly
      CHECK(c.status == CheckStatus::Pass);
    }
    for (const std::string& label : point.point.labels) {
      if (label == "quarter-symmetric") presets_seen[0] = true;
      if (label == "schouten-van-kampen") presets_seen[1] = true;
      if (label == "tanaka-webster") presets_seen[2] = true;
      if (label == "zamkovoy") presets_seen[3] = true;
    }
  }
  for (bool seen : presets_seen) CHECK(seen);
}

TEST_CASE("audit is deterministic and thread-count independent") {
  const LoadedManifold lm = builtin_example();
  const auto grid = default_grid(4, true);
  const AuditOutcome serial =
      audit_closed_forms(lm.manifold, lm.structure, lm.levi_civita, grid, 1);
  const AuditOutcome threaded =
      audit_closed_forms(lm.manifold, lm.structure, lm.levi_civita, grid, 4);
  REQUIRE(serial.points.size() == threaded.points.size());
  for (std::size_t i = 0; i < serial.points.size(); ++i) {
    CHECK(serial.points[i].point.params.a == threaded.points[i].point.params.a);
    CHECK(serial.points[i].point.params.b == threaded.points[i].point.params.b);
    CHECK(serial.points[i].checks.to_json() == threaded.points[i].checks.to_json());
  }
}

TEST_CASE("audit internal consistency holds on non-example fixtures too") {
  const LoadedManifold fx = lp_sasakian_fixture(5, 1, random_positive_spatial(5));
  const AuditOutcome outcome =
      audit_closed_forms(fx.manifold, fx.structure, fx.levi_civita, default_grid(3, true), 2);
  for (const AuditPoint& point : outcome.points) {
    for (const Check& c : point.checks.checks()) {
      if (c.name.rfind("closed_internal/", 0) == 0 || c.name.rfind("reduction/", 0) == 0) {
        CAPTURE(c.name);
        CAPTURE(point.point.params.a.str());
        CHECK(c.status == CheckStatus::Pass);
      }
    }
  }
}

TEST_CASE("polynomial degree certification: grid agreement extends off-grid") {
  // Components of the direct barred Ricci are polynomials in (a, b) of degree
  // <= 4 per variable. Fit a bivariate polynomial through the 5x5 grid values
  // exactly, then confirm it reproduces fresh off-grid points: agreement on
  // the grid is therefore an identity, not a coincidence of samples.
  const LoadedManifold lm = builtin_example();
  const std::vector<Rational> vals = grid_values(5);

  auto direct_s11 = [&](const Rational& a, const Rational& b) {
    const Connection conn =
        general_connection(lm.manifold, lm.structure, lm.levi_civita, {a, b});
    return curvature(lm.manifold, conn).ricci.at({0, 0});
  };

  // solve for 25 coefficients c_{st}, s,t in 0..4
  LinearSystem sys;
  sys.matrix.cols = 25;
  for (const Rational& a : vals) {
    for (const Rational& b : vals) {
      RationalVector row;
      Rational ap(1);
      for (int s = 0; s < 5; ++s) {
        Rational bp(1);
        for (int t = 0; t < 5; ++t) {
          row.push_back(ap * bp);
          bp *= b;
        }
        ap *= a;
      }
      sys.matrix.a.push_back(std::move(row));
      sys.rhs.push_back(direct_s11(a, b));
    }
  }
  sys.matrix.rows = 25;
  const auto coeffs = solve(sys);
  REQUIRE(coeffs.has_value());

  for (int iter = 0; iter < 5; ++iter) {
    const Rational a = random_rational(7, 4);
    const Rational b = random_rational(7, 4);
    Rational predicted;
    Rational ap(1);
    std::size_t idx = 0;
    for (int s = 0; s < 5; ++s) {
      Rational bp(1);
      for (int t = 0; t < 5; ++t) {
        predicted += (*coeffs)[idx++] * ap * bp;
        bp *= b;
      }
      ap *= a;
    }
    CHECK(predicted == direct_s11(a, b));
  }
}

TEST_CASE("default grid contains the presets and stays sorted") {
  const auto grid = default_grid(5, false);
  CHECK(grid.size() == 25);
  int labeled = 0;
  for (const auto& gp : grid) labeled += static_cast<int>(gp.labels.size());
  CHECK(labeled == 4);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const bool ordered = grid[i - 1].params.a < grid[i].params.a ||
                         (grid[i - 1].params.a == grid[i].params.a &&
                          grid[i - 1].params.b < grid[i].params.b);
    CHECK(ordered);
  }

  // a 2x2 grid over {0,1} already holds schouten-van-kampen and zamkovoy;
  // forcing presets appends the two b = -1 members
  const auto small = default_grid(2, false);
  int small_labeled = 0;
  for (const auto& gp : small) small_labeled += static_cast<int>(gp.labels.size());
  CHECK(small_labeled == 2);
  const auto forced = default_grid(2, true);
  CHECK(forced.size() == 6);
  int forced_labeled = 0;
  for (const auto& gp : forced) forced_labeled += static_cast<int>(gp.labels.size());
  CHECK(forced_labeled == 4);
}

TEST_CASE("trace of phi equals -(n-1) on the example (minus-identity on ker eta)") {
  const LoadedManifold lm = builtin_example();
  CHECK(lm.structure.lambda == Rational(-3));
}
