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

#include "specfile.hpp"

#include <fstream>
#include <sstream>

namespace parasol {

namespace {

Rational rational_from_json(const Json& v, const std::string& location) {
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const ValueError& e) {
      throw SpecFileError(location, e.what());
    }
  }
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_number()) {
    throw SpecFileError(location, "floating literals are rejected; use rational strings \"p/q\"");
  }
  throw SpecFileError(location, "expected a rational string \"p/q\"");
}

const Json& require_field(const Json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw SpecFileError(name, "missing field");
  return *it;
}

Tensor square_matrix_from_json(const Json& j, int n, const std::string& field,
                               IndexKind first, IndexKind second) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    throw SpecFileError(field, "expected an array of " + std::to_string(n) + " rows");
  }
  Tensor t({first, second}, n);
  for (int r = 0; r < n; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw SpecFileError(field + "[" + std::to_string(r + 1) + "]",
                          "expected a row of " + std::to_string(n) + " entries");
    }
    for (int c = 0; c < n; ++c) {
      t.at({r, c}) = rational_from_json(
          row[static_cast<std::size_t>(c)],
          field + "[" + std::to_string(r + 1) + "][" + std::to_string(c + 1) + "]");
    }
  }
  return t;
}

Tensor vector_from_json(const Json& j, int n, const std::string& field, IndexKind kind) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    throw SpecFileError(field, "expected an array of " + std::to_string(n) + " entries");
  }
  Tensor t({kind}, n);
  for (int c = 0; c < n; ++c) {
    t.at({c}) =
        rational_from_json(j[static_cast<std::size_t>(c)], field + "[" + std::to_string(c + 1) + "]");
  }
  return t;
}

int int_from_json(const Json& v, const std::string& location) {
  if (!v.is_number_integer()) throw SpecFileError(location, "expected an integer");
  return v.get<int>();
}

}  // namespace

LoadedManifold load_spec_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecFileError("", std::string("JSON parse error: ") + e.what());
  }
  if (!doc.is_object()) throw SpecFileError("", "top level must be a JSON object");

  const int n = int_from_json(require_field(doc, "dim"), "dim");
  if (n < 2 || n > 8) throw SpecFileError("dim", "dimension out of supported range [2, 8]");

  const Tensor metric =
      square_matrix_from_json(require_field(doc, "metric"), n, "metric", IndexKind::Lower,
                              IndexKind::Lower);

  Tensor structure({IndexKind::Lower, IndexKind::Lower, IndexKind::Upper}, n);
  const Json& brackets = require_field(doc, "brackets");
  if (!brackets.is_array()) throw SpecFileError("brackets", "expected an array of entries");
  std::vector<std::vector<bool>> seen(static_cast<std::size_t>(n * n),
                                      std::vector<bool>(static_cast<std::size_t>(n), false));
  for (std::size_t e = 0; e < brackets.size(); ++e) {
    const std::string loc = "brackets[" + std::to_string(e + 1) + "]";
    const Json& entry = brackets[e];
    if (!entry.is_object()) throw SpecFileError(loc, "expected an object {i, j, k, value}");
    const int i = int_from_json(require_field(entry, "i"), loc + ".i");
    const int j = int_from_json(require_field(entry, "j"), loc + ".j");
    const int k = int_from_json(require_field(entry, "k"), loc + ".k");
    if (i < 1 || i > n || j < 1 || j > n || k < 1 || k > n) {
      throw SpecFileError(loc, "indices must lie in [1, " + std::to_string(n) + "]");
    }
    if (i >= j) throw SpecFileError(loc, "bracket entries require i < j");
    const std::size_t pair = static_cast<std::size_t>((i - 1) * n + (j - 1));
    if (seen[pair][static_cast<std::size_t>(k - 1)]) {
      throw SpecFileError(loc, "duplicate bracket entry for (i, j, k)");
    }
    seen[pair][static_cast<std::size_t>(k - 1)] = true;
    const Rational v = rational_from_json(require_field(entry, "value"), loc + ".value");
    structure.at({i - 1, j - 1, k - 1}) = v;
    structure.at({j - 1, i - 1, k - 1}) = -v;
  }

  const Tensor phi = square_matrix_from_json(require_field(doc, "phi"), n, "phi",
                                             IndexKind::Upper, IndexKind::Lower);
  const Tensor xi = vector_from_json(require_field(doc, "xi"), n, "xi", IndexKind::Upper);

  const CheckSet frame_checks = validate_frame(n, metric, structure);
  if (!frame_checks.all_passed()) {
    std::string failing;
    for (const Check& c : frame_checks.checks()) {
      if (c.status == CheckStatus::Fail) failing += (failing.empty() ? "" : ", ") + c.name;
    }
    throw SpecValidationError("", "frame invariants violated: " + failing, frame_checks);
  }

  FrameManifold manifold(n, metric, structure);
  std::optional<Tensor> eta;
  if (auto it = doc.find("eta"); it != doc.end()) {
    eta = vector_from_json(*it, n, "eta", IndexKind::Lower);
    const Tensor lowered = manifold.lower(xi);
    if (*eta != lowered) {
      CheckSet cs;
      Check c{"structure/eta_matches_lowered_xi", CheckStatus::Fail,
              "eta must equal the metric lowering of xi", {}};
      for (int idx = 0; idx < n; ++idx) {
        if (eta->at({idx}) != lowered.at({idx})) {
          c.witnesses.push_back(Witness{{idx}, lowered.at({idx}).str(), eta->at({idx}).str()});
        }
      }
      cs.add(std::move(c));
      throw SpecValidationError("eta", "eta does not equal the metric lowering of xi", cs);
    }
  }

  ParacontactStructure structure_p = make_paracontact(manifold, phi, xi, std::move(eta));
  Connection lc = koszul_levi_civita(manifold);
  return LoadedManifold{std::move(manifold), std::move(structure_p), std::move(lc)};
}

LoadedManifold load_spec_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecFileError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_spec_text(buf.str());
}

std::string serialize_spec(const FrameManifold& m, const ParacontactStructure& p) {
  const int n = m.n();
  Json doc;
  doc["dim"] = n;

  Json metric = Json::array();
  for (int i = 0; i < n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < n; ++j) row.push_back(m.metric().at({i, j}).str());
    metric.push_back(std::move(row));
  }
  doc["metric"] = std::move(metric);

  Json brackets = Json::array();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const Rational& v = m.structure().at({i, j, k});
        if (v.is_zero()) continue;
        Json entry;
        entry["i"] = i + 1;
        entry["j"] = j + 1;
        entry["k"] = k + 1;
        entry["value"] = v.str();
        brackets.push_back(std::move(entry));
      }
    }
  }
  doc["brackets"] = std::move(brackets);

  Json phi = Json::array();
  for (int i = 0; i < n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < n; ++j) row.push_back(p.phi.at({i, j}).str());
    phi.push_back(std::move(row));
  }
  doc["phi"] = std::move(phi);

  Json xi = Json::array();
  for (int i = 0; i < n; ++i) xi.push_back(p.xi.at({i}).str());
  doc["xi"] = std::move(xi);

  Json eta = Json::array();
  for (int i = 0; i < n; ++i) eta.push_back(p.eta.at({i}).str());
  doc["eta"] = std::move(eta);

  return doc.dump(2) + "\n";
}

LoadedManifold builtin_example() {
  const int n = 4;
  Tensor g({IndexKind::Lower, IndexKind::Lower}, n);
  for (int i = 0; i < 3; ++i) g.at({i, i}) = Rational(1);
  g.at({3, 3}) = Rational(-1);

  Tensor c({IndexKind::Lower, IndexKind::Lower, IndexKind::Upper}, n);
  for (int i = 0; i < 3; ++i) {
    c.at({i, 3, i}) = Rational(-1);
    c.at({3, i, i}) = Rational(1);
  }

  Tensor phi({IndexKind::Upper, IndexKind::Lower}, n);
  for (int i = 0; i < 3; ++i) phi.at({i, i}) = Rational(-1);

  Tensor xi({IndexKind::Upper}, n);
  xi.at({3}) = Rational(1);

  FrameManifold manifold(n, std::move(g), std::move(c));
  ParacontactStructure p = make_paracontact(manifold, std::move(phi), std::move(xi));
  Connection lc = koszul_levi_civita(manifold);
  return LoadedManifold{std::move(manifold), std::move(p), std::move(lc)};
}

std::string builtin_example_json() {
  const LoadedManifold lm = builtin_example();
  return serialize_spec(lm.manifold, lm.structure);
}

bool is_builtin_example(const FrameManifold& m, const ParacontactStructure& p) {
  const LoadedManifold lm = builtin_example();
  return m == lm.manifold && p == lm.structure;
}

namespace printed {

Tensor levi_civita_gamma() {
  Tensor gamma({IndexKind::Lower, IndexKind::Lower, IndexKind::Upper}, 4);
  for (int i = 0; i < 3; ++i) {
    gamma.at({i, i, 3}) = Rational(-2);
    gamma.at({i, 3, i}) = Rational(-1);
  }
  return gamma;
}

Tensor general_gamma(const ConnectionParams& params) {
  Tensor gamma({IndexKind::Lower, IndexKind::Lower, IndexKind::Upper}, 4);
  for (int i = 0; i < 3; ++i) {
    gamma.at({i, i, 3}) = -(params.a + Rational(2));
    gamma.at({i, 3, i}) = -(params.a + Rational(1));
  }
  return gamma;
}

Rational curvature_diag_coefficient(const ConnectionParams& params) {
  const Rational& a = params.a;
  const Rational& b = params.b;
  return -(a + a * b + b + Rational(1));
}

Rational ricci_spatial_diag(const ConnectionParams& params, const Rational& lambda) {
  const Rational& a = params.a;
  const Rational& b = params.b;
  return Rational(3) + a * b + b - a * a - a - a * a * lambda - Rational(2) * a * lambda;
}

Rational ricci_timelike_diag(const ConnectionParams& params) {
  const Rational& a = params.a;
  const Rational& b = params.b;
  return Rational(-3) * (a - b - a * b + Rational(1));
}

}  // namespace printed

}  // namespace parasol
