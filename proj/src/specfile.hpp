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

#include <string>

#include "errors.hpp"
#include "frame.hpp"
#include "paracontact.hpp"
#include "report.hpp"

namespace parasol {

/// Manifold file schema (UTF-8 JSON):
///   dim      integer in [2, 8]
///   metric   n x n array of rational strings "p/q" (integers allowed)
///   brackets list of {i, j, k, value} with 1 <= i < j <= n, 1 <= k <= n,
///            giving c^k_ij; missing entries are zero, the antisymmetric
///            counterpart is implied
///   phi      n x n array, phi[j][k] = component of phi(e_k) along e_j
///   xi       n rationals
///   eta      optional n rationals; defaults to the metric lowering of xi
///            and must equal it when present
/// Rationals are always strings (or JSON integers); floating literals are
/// rejected.
struct LoadedManifold {
  FrameManifold manifold;
  ParacontactStructure structure;
  Connection levi_civita;
};

/// Load-time invariant violations (frame invariants, eta consistency).
/// Carries the full check list for diagnostics.
class SpecValidationError : public SpecFileError {
 public:
  SpecValidationError(std::string location, const std::string& message, CheckSet checks)
      : SpecFileError(std::move(location), message), checks_(std::move(checks)) {}
  const CheckSet& checks() const { return checks_; }

 private:
  CheckSet checks_;
};

LoadedManifold load_spec_text(const std::string& text);
LoadedManifold load_spec_file(const std::string& path);

/// Canonical bytes; load_spec_text(serialize_spec(M, P)) reproduces (M, P).
std::string serialize_spec(const FrameManifold& m, const ParacontactStructure& p);

/// The bundled 4-dimensional example: metric diag(1,1,1,-1), brackets
/// [e_i, e_4] = -e_i for i = 1..3, phi = diag(-1,-1,-1,0), xi = e_4.
LoadedManifold builtin_example();
std::string builtin_example_json();
bool is_builtin_example(const FrameManifold& m, const ParacontactStructure& p);

/// The connection/curvature/Ricci component tables published for the builtin
/// example. They are audited against first-principles computation, never
/// trusted: the tool's own results are ground truth and any deviation is
/// flagged in reports.
namespace printed {

/// Published Levi-Civita table: diagonal entries -2 e_4, column-4 entries
/// -e_i, last row zero.
Tensor levi_civita_gamma();

/// Published family table: diagonal -(a+2) e_4, column-4 -(a+1) e_i, last
/// row zero.
Tensor general_gamma(const ConnectionParams& params);

/// Published curvature components R-bar(e_i, e_4) e_i = -(a+ab+b+1) e_4.
Rational curvature_diag_coefficient(const ConnectionParams& params);

/// Published S-bar(e_i, e_i) = 3 + ab + b - a^2 - a - a^2 lambda - 2 a lambda
/// for i = 1..3, evaluated at the example's lambda.
Rational ricci_spatial_diag(const ConnectionParams& params, const Rational& lambda);

/// Published S-bar(e_4, e_4) = -3 (a - b - ab + 1).
Rational ricci_timelike_diag(const ConnectionParams& params);

}  // namespace printed

}  // namespace parasol
