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

#include "commands.hpp"

#include <sstream>

#include "errors.hpp"

namespace parasol {

namespace {

Json provenance_json(const Provenance& prov) {
  Json j;
  switch (prov.kind) {
    case Provenance::Kind::LeviCivita: j["kind"] = "levi-civita"; break;
    case Provenance::Kind::General: j["kind"] = "general"; break;
    case Provenance::Kind::Preset: j["kind"] = "preset"; break;
  }
  if (prov.kind != Provenance::Kind::LeviCivita) {
    j["a"] = prov.params.a.str();
    j["b"] = prov.params.b.str();
  }
  if (prov.preset) j["preset"] = to_string(*prov.preset);
  return j;
}

struct Shell {
  Json report;
  CheckSummary summary;
  bool failed = false;

  Shell(const char* command, const LoadedManifold& lm) {
    report["tool"] = "parasol";
    report["version"] = tool_version();
    report["command"] = command;
    const bool builtin = is_builtin_example(lm.manifold, lm.structure);
    report["subject"] =
        builtin ? "builtin-example" : "manifold(dim=" + std::to_string(lm.manifold.n()) + ")";
    report["builtin_example"] = builtin;
    report["parameters"] = Json::object();
  }

  void set_checks(const CheckSet& cs) {
    summary.absorb(cs);
    if (!cs.all_passed()) failed = true;
    report["checks"] = cs.to_json();
  }

  CommandOutcome finish(Json data = Json::object()) {
    report["data"] = std::move(data);
    report["summary"] = summary.to_json();
    return CommandOutcome{failed ? 1 : 0, std::move(report)};
  }
};

/// Resolves the requested connection; for the two-parameter family the
/// LP-Sasakian axioms are a precondition, so their verification is prepended
/// to `cs` and resolution fails (nullopt) when they do not hold.
std::optional<Connection> resolve_connection(const LoadedManifold& lm,
                                             const ConnectionChoice& choice, CheckSet& cs) {
  if (choice.params && choice.preset) {
    throw ValueError("choose either explicit parameters or a preset, not both");
  }
  if (!choice.params && !choice.preset) return lm.levi_civita;

  CheckSet pre = verify_lp_sasakian(lm.manifold, lm.structure, lm.levi_civita);
  const bool ok = pre.all_passed();
  cs.merge(std::move(pre));
  if (!ok) {
    cs.add("precondition/lp_sasakian", CheckStatus::Fail,
           "the general connection family requires a verified LP-Sasakian structure",
           {Witness{{}, "verified LP-Sasakian structure", "verification failed"}});
    return std::nullopt;
  }
  if (choice.preset) {
    return preset_connection(lm.manifold, lm.structure, lm.levi_civita, *choice.preset);
  }
  return general_connection(lm.manifold, lm.structure, lm.levi_civita, *choice.params);
}

Json connection_table_json(const FrameManifold& m, const Connection& c) {
  const int n = m.n();
  Json rows = Json::array();
  for (int i = 0; i < n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < n; ++j) {
      Json comps = Json::array();
      for (int k = 0; k < n; ++k) comps.push_back(c.gamma.at({i, j, k}).str());
      row.push_back(std::move(comps));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json coefficients_json(const SolitonCoefficients& t) {
  Json j;
  j["alpha"] = t.alpha.str();
  j["beta"] = t.beta.str();
  j["gamma"] = t.gamma.str();
  j["delta"] = t.delta.str();
  j["epsilon"] = t.epsilon.str();
  return j;
}

/// Published-table comparisons for the builtin example. Direct computation is
/// the expected side; deviations are conditional findings, never failures.
void add_printed_connection_checks(CheckSet& cs, const LoadedManifold& lm, const Connection& c) {
  if (!is_builtin_example(lm.manifold, lm.structure)) return;
  if (c.provenance.kind == Provenance::Kind::LeviCivita) {
    cs.add_tensor_comparison("printed/connection_table", c.gamma, printed::levi_civita_gamma(),
                             CheckStatus::Conditional,
                             "published Levi-Civita table deviates from the Koszul computation");
  } else {
    cs.add_tensor_comparison("printed/connection_table", c.gamma,
                             printed::general_gamma(c.provenance.params),
                             CheckStatus::Conditional,
                             "published family table deviates from the direct computation");
  }
}

void add_printed_curvature_checks(CheckSet& cs, const LoadedManifold& lm,
                                  const ConnectionParams& params, const CurvatureData& direct) {
  if (!is_builtin_example(lm.manifold, lm.structure)) return;

  {
    Check c{"printed/curvature_components", CheckStatus::Pass, "", {}};
    const Rational coef = printed::curvature_diag_coefficient(params);
    for (int i = 0; i < 3; ++i) {
      for (int l = 0; l < 4; ++l) {
        const Rational expected = direct.riemann.at({i, 3, i, l});
        const Rational claimed = (l == 3) ? coef : Rational(0);
        if (expected != claimed) {
          c.witnesses.push_back(Witness{{i, 3, i, l}, expected.str(), claimed.str()});
        }
      }
    }
    if (!c.witnesses.empty()) {
      c.status = CheckStatus::Conditional;
      c.detail = "published curvature components deviate from the direct computation";
    }
    cs.add(std::move(c));
  }

  {
    Check c{"printed/ricci_components", CheckStatus::Pass, "", {}};
    const Rational spatial = printed::ricci_spatial_diag(params, lm.structure.lambda);
    const Rational timelike = printed::ricci_timelike_diag(params);
    for (int i = 0; i < 4; ++i) {
      const Rational expected = direct.ricci.at({i, i});
      const Rational claimed = (i == 3) ? timelike : spatial;
      if (expected != claimed) {
        c.witnesses.push_back(Witness{{i, i}, expected.str(), claimed.str()});
      }
    }
    if (!c.witnesses.empty()) {
      c.status = CheckStatus::Conditional;
      c.detail = "published Ricci components deviate from the direct computation";
    }
    cs.add(std::move(c));
  }
}

}  // namespace

const char* tool_version() { return "0.1.0"; }

Tensor parse_vector_spec(const LoadedManifold& lm, const std::string& x_spec) {
  if (x_spec == "xi") return lm.structure.xi;
  const int n = lm.manifold.n();
  Tensor x({IndexKind::Upper}, n);
  std::stringstream ss(x_spec);
  std::string item;
  int count = 0;
  while (std::getline(ss, item, ',')) {
    if (count >= n) break;
    x.at({count}) = Rational::parse(item);
    ++count;
  }
  if (count != n || ss.rdbuf()->in_avail() != 0) {
    throw ValueError("--x expects \"xi\" or " + std::to_string(n) +
                     " comma-separated rationals");
  }
  return x;
}

CommandOutcome cmd_verify(const LoadedManifold& lm) {
  Shell shell("verify", lm);
  CheckSet cs = validate_frame(lm.manifold.n(), lm.manifold.metric(), lm.manifold.structure());
  cs.merge(verify_almost_paracontact(lm.manifold, lm.structure));
  cs.merge(verify_lp_sasakian(lm.manifold, lm.structure, lm.levi_civita));
  const CurvatureData curv = curvature(lm.manifold, lm.levi_civita);
  cs.merge(lp_identity_suite(lm.manifold, lm.structure, lm.levi_civita, curv));
  shell.set_checks(cs);

  Json data;
  data["dim"] = lm.manifold.n();
  data["lambda"] = lm.structure.lambda.str();
  data["scalar_curvature"] = curv.scalar.str();
  return shell.finish(std::move(data));
}

CommandOutcome cmd_connection(const LoadedManifold& lm, const ConnectionChoice& choice) {
  Shell shell("connection", lm);
  CheckSet cs;
  const std::optional<Connection> conn = resolve_connection(lm, choice, cs);
  if (!conn) {
    shell.set_checks(cs);
    return shell.finish();
  }
  add_printed_connection_checks(cs, lm, *conn);
  shell.set_checks(cs);

  const Tensor tors = torsion(lm.manifold, *conn);
  const Tensor metr = metricity(lm.manifold, *conn);

  Json data;
  shell.report["parameters"] = provenance_json(conn->provenance);
  data["table"] = connection_table_json(lm.manifold, *conn);
  data["torsion_zero"] = tors.is_zero();
  if (!tors.is_zero()) data["torsion"] = tensor_to_json(tors);
  data["metricity_zero"] = metr.is_zero();
  if (!metr.is_zero()) data["metricity"] = tensor_to_json(metr);
  return shell.finish(std::move(data));
}

CommandOutcome cmd_curvature(const LoadedManifold& lm, const ConnectionChoice& choice) {
  Shell shell("curvature", lm);
  CheckSet cs;
  const std::optional<Connection> conn = resolve_connection(lm, choice, cs);
  if (!conn) {
    shell.set_checks(cs);
    return shell.finish();
  }
  const CurvatureData curv = curvature(lm.manifold, *conn);
  add_printed_curvature_checks(cs, lm, conn->provenance.params, curv);
  shell.set_checks(cs);

  Json data;
  shell.report["parameters"] = provenance_json(conn->provenance);
  data["riemann"] = tensor_to_json(curv.riemann);
  data["ricci"] = matrix_to_json(curv.ricci);
  data["ricci_operator"] = matrix_to_json(curv.ricci_op);
  data["scalar"] = curv.scalar.str();
  return shell.finish(std::move(data));
}

CommandOutcome cmd_ricci(const LoadedManifold& lm, const ConnectionChoice& choice) {
  Shell shell("ricci", lm);
  CheckSet cs;
  const std::optional<Connection> conn = resolve_connection(lm, choice, cs);
  if (!conn) {
    shell.set_checks(cs);
    return shell.finish();
  }
  const CurvatureData curv = curvature(lm.manifold, *conn);
  shell.set_checks(cs);

  Json data;
  shell.report["parameters"] = provenance_json(conn->provenance);
  data["ricci"] = matrix_to_json(curv.ricci);
  data["ricci_operator"] = matrix_to_json(curv.ricci_op);
  return shell.finish(std::move(data));
}

CommandOutcome cmd_scalar(const LoadedManifold& lm, const ConnectionChoice& choice) {
  Shell shell("scalar", lm);
  CheckSet cs;
  const std::optional<Connection> conn = resolve_connection(lm, choice, cs);
  if (!conn) {
    shell.set_checks(cs);
    return shell.finish();
  }
  const CurvatureData curv = curvature(lm.manifold, *conn);
  shell.set_checks(cs);

  Json data;
  shell.report["parameters"] = provenance_json(conn->provenance);
  data["scalar"] = curv.scalar.str();
  return shell.finish(std::move(data));
}

CommandOutcome cmd_soliton(const LoadedManifold& lm, const std::string& x_spec,
                           const ConnectionChoice& choice) {
  Shell shell("soliton", lm);
  const Tensor x = parse_vector_spec(lm, x_spec);

  CheckSet cs;
  ConnectionChoice effective = choice;
  if (!effective.params && !effective.preset) effective.params = ConnectionParams{};
  const std::optional<Connection> conn = resolve_connection(lm, effective, cs);
  if (!conn) {
    shell.set_checks(cs);
    return shell.finish();
  }

  const SolitonSolution sol = soliton_solve(lm.manifold, lm.structure, lm.levi_civita,
                                            conn->provenance.params, x);

  {
    Check c{"soliton/kernel_residuals_zero", CheckStatus::Pass, "", {}};
    for (std::size_t i = 0; i < sol.basis.size(); ++i) {
      if (!sol.basis[i].residual_zero) {
        c.status = CheckStatus::Fail;
        c.detail = "a kernel basis tuple does not annihilate the residual";
        c.witnesses.push_back(Witness{{static_cast<int>(i)}, "0", "nonzero"});
      }
    }
    cs.add(std::move(c));
  }
  shell.set_checks(cs);

  Json data;
  shell.report["parameters"] = provenance_json(conn->provenance);
  shell.report["parameters"]["x"] = vector_to_json(x);
  data["equations"] = sol.equations;
  data["unknowns"] = 5;
  data["kernel_dimension"] = static_cast<int>(sol.basis.size());
  Json basis = Json::array();
  for (const SolitonBasisVector& v : sol.basis) {
    Json entry = coefficients_json(v.coeffs);
    entry["classification"] = to_string(v.classification);
    entry["admissible"] = v.admissible;
    entry["vacuous"] = v.vacuous;
    entry["residual_zero"] = v.residual_zero;
    basis.push_back(std::move(entry));
  }
  data["basis"] = std::move(basis);
  data["admissible_solution_exists"] = sol.admissible_exists;
  data["nontrivial_admissible_solution_exists"] = sol.nontrivial_admissible_exists;
  return shell.finish(std::move(data));
}

CommandOutcome cmd_crosscheck(const LoadedManifold& lm, int grid_n, bool include_presets,
                              int threads) {
  Shell shell("crosscheck", lm);
  CheckSet global;
  {
    CheckSet pre = verify_lp_sasakian(lm.manifold, lm.structure, lm.levi_civita);
    const bool ok = pre.all_passed();
    global.merge(std::move(pre));
    if (!ok) {
      global.add("precondition/lp_sasakian", CheckStatus::Fail,
                 "the closed-form audit requires a verified LP-Sasakian structure",
                 {Witness{{}, "verified LP-Sasakian structure", "verification failed"}});
      shell.set_checks(global);
      return shell.finish();
    }
  }
  add_printed_connection_checks(global, lm, lm.levi_civita);

  const std::vector<GridPoint> grid = default_grid(grid_n, include_presets);
  AuditOutcome outcome =
      audit_closed_forms(lm.manifold, lm.structure, lm.levi_civita, grid, threads);

  const bool builtin = is_builtin_example(lm.manifold, lm.structure);
  const CurvatureData curv_lc = curvature(lm.manifold, lm.levi_civita);
  Json grid_json = Json::array();
  for (AuditPoint& point : outcome.points) {
    Json entry;
    entry["a"] = point.point.params.a.str();
    entry["b"] = point.point.params.b.str();
    if (!point.point.labels.empty()) entry["presets"] = point.point.labels;

    if (builtin) {
      const ConnectionParams& params = point.point.params;
      const Connection conn = general_connection(lm.manifold, lm.structure, lm.levi_civita,
                                                 params);
      const CurvatureData direct = curvature(lm.manifold, conn);
      add_printed_connection_checks(point.checks, lm, conn);
      add_printed_curvature_checks(point.checks, lm, params, direct);

      // Three-way view of the headline components: the published value, the
      // closed-form value, and the first-principles value side by side.
      const Tensor closed_riemann =
          closed_form_riemann_bar(lm.manifold, lm.structure, curv_lc.riemann, params);
      const Tensor closed_ricci =
          closed_form_ricci_bar(lm.manifold, lm.structure, curv_lc.ricci, params);
      Json values;
      auto three_way = [](const Rational& direct_v, const Rational& closed_v,
                          const Rational& printed_v) {
        Json v;
        v["direct"] = direct_v.str();
        v["closed_form"] = closed_v.str();
        v["printed"] = printed_v.str();
        return v;
      };
      values["curvature_e1_e4_e1"] =
          three_way(direct.riemann.at({0, 3, 0, 3}), closed_riemann.at({0, 3, 0, 3}),
                    printed::curvature_diag_coefficient(params));
      values["ricci_e1_e1"] =
          three_way(direct.ricci.at({0, 0}), closed_ricci.at({0, 0}),
                    printed::ricci_spatial_diag(params, lm.structure.lambda));
      values["ricci_e4_e4"] = three_way(direct.ricci.at({3, 3}), closed_ricci.at({3, 3}),
                                        printed::ricci_timelike_diag(params));
      Json scalar_pair;
      scalar_pair["direct"] = direct.scalar.str();
      scalar_pair["closed_form"] =
          closed_form_scalar_bar(curv_lc.scalar, lm.manifold.n(), lm.structure.lambda, params)
              .str();
      values["scalar"] = std::move(scalar_pair);
      entry["values"] = std::move(values);
    }
    shell.summary.absorb(point.checks);
    if (!point.checks.all_passed()) shell.failed = true;

    entry["checks"] = point.checks.to_json();
    grid_json.push_back(std::move(entry));
  }

  shell.set_checks(global);
  shell.report["parameters"]["grid"] = grid_n;
  shell.report["parameters"]["include_presets"] = include_presets;
  shell.report["grid"] = std::move(grid_json);

  Json data;
  data["grid_points"] = static_cast<int>(outcome.points.size());
  data["certifies_degree4_identity"] = outcome.certifies_degree4;
  return shell.finish(std::move(data));
}

CommandOutcome cmd_theorems(const LoadedManifold& lm, const ConnectionChoice& choice) {
  Shell shell("theorems", lm);
  CheckSet cs;
  ConnectionChoice effective = choice;
  if (!effective.params && !effective.preset) effective.preset = PresetName::Zamkovoy;
  const std::optional<Connection> conn = resolve_connection(lm, effective, cs);
  if (!conn) {
    shell.set_checks(cs);
    return shell.finish();
  }
  const ConnectionParams& params = conn->provenance.params;
  shell.report["parameters"] = provenance_json(conn->provenance);

  Json data;

  // Coefficients come from the solved soliton kernel with X = xi: the first
  // basis direction with alpha != 0, so the theorems run on a genuine
  // solution of the equation they quantify over.
  const SolitonSolution sol =
      soliton_solve(lm.manifold, lm.structure, lm.levi_civita, params, lm.structure.xi);
  std::optional<SolitonCoefficients> coeffs;
  for (const SolitonBasisVector& v : sol.basis) {
    if (!v.coeffs.alpha.is_zero()) {
      coeffs = v.coeffs;
      break;
    }
  }
  if (!coeffs) {
    for (const SolitonBasisVector& v : sol.basis) {
      if (v.admissible) {
        coeffs = v.coeffs;
        break;
      }
    }
  }
  data["soliton_kernel_dimension"] = static_cast<int>(sol.basis.size());

  if (coeffs) {
    data["coefficients"] = coefficients_json(*coeffs);
    cs.merge(theorem1_check(lm.manifold, lm.structure, lm.levi_civita, params, Rational(1),
                            *coeffs));
  } else {
    cs.add("theorem1/coefficients", CheckStatus::Skipped,
           "soliton kernel contains no admissible tuple");
  }

  cs.merge(theorem2_check(lm.manifold, lm.structure, lm.levi_civita, params, Rational(1),
                          Rational(1), Rational(1)));

  const CurvatureData curv_bar = curvature(lm.manifold, *conn);
  cs.merge(ricci_semisymmetric_check(lm.manifold, lm.structure, params, curv_bar,
                                     curv_bar.ricci));

  {
    const ConformalKillingResult ck =
        conformal_killing_check(lm.manifold, lm.structure, *conn, lm.structure.xi, coeffs);
    if (ck.h) data["conformal_killing_h"] = ck.h->str();
    cs.merge(ck.checks);
  }

  {
    const TorseFormingResult tf =
        torse_forming_check(lm.manifold, lm.structure, *conn, lm.structure.xi, coeffs);
    if (tf.f) data["torse_forming_f"] = tf.f->str();
    if (tf.omega) data["torse_forming_omega"] = vector_to_json(*tf.omega);
    if (tf.epsilon_formula) data["torse_forming_epsilon"] = tf.epsilon_formula->str();
    cs.merge(tf.checks);
  }

  shell.set_checks(cs);
  return shell.finish(std::move(data));
}

}  // namespace parasol
