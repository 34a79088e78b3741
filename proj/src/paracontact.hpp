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
#include <vector>

#include "frame.hpp"
#include "report.hpp"
#include "tensor.hpp"

namespace parasol {

/// Lorentzian almost paracontact structure (phi, xi, eta) in frame
/// components. phi is stored (upper,lower) index (j,k) with
/// phi(e_k) = sum_j phi^j_k e_j; xi is a vector, eta a covector.
/// lambda caches trace(phi); the cache is validated, never trusted.
struct ParacontactStructure {
  Tensor phi;
  Tensor xi;
  Tensor eta;
  Rational lambda;

  Tensor apply_phi(const Tensor& v) const;   // phi(V)
  Rational eta_of(const Tensor& v) const;    // eta(V)
  friend bool operator==(const ParacontactStructure& a, const ParacontactStructure& b) {
    return a.phi == b.phi && a.xi == b.xi && a.eta == b.eta && a.lambda == b.lambda;
  }
};

/// Builds the structure and caches lambda = trace(phi). When eta is absent it
/// defaults to the metric lowering of xi.
ParacontactStructure make_paracontact(const FrameManifold& m, Tensor phi, Tensor xi,
                                      std::optional<Tensor> eta = std::nullopt);

/// g(e_i, phi e_j) as a rank-2 (lower,lower) tensor.
Tensor metric_phi(const FrameManifold& m, const ParacontactStructure& p);

/// eta tensor eta as an (upper) vector is xi; eta tensor eta as a 2-tensor.
Tensor eta_outer_eta(const ParacontactStructure& p);

/// Componentwise verification of the defining algebraic axioms:
/// eta(xi) = -1, eta o phi = 0, phi xi = 0, phi^2 = I + xi (x) eta,
/// g(phi U, phi V) = g(U,V) + eta(U) eta(V), eta(U) = g(U, xi),
/// g(phi U, V) = g(U, phi V). Each failed identity is reported with a
/// witness index tuple; the cached lambda is also checked against trace(phi).
CheckSet verify_almost_paracontact(const FrameManifold& m, const ParacontactStructure& p);

/// Differential axioms against the supplied Levi-Civita connection:
/// nabla_U xi = phi U and
/// (nabla_U phi)(V) = eta(V) U + g(U,V) xi + 2 eta(U) eta(V) xi,
/// plus the derived fact (nabla_U eta)(V) = g(U, phi V).
CheckSet verify_lp_sasakian(const FrameManifold& m, const ParacontactStructure& p,
                            const Connection& levi_civita);

/// The curvature/Ricci identity battery over all frame index tuples. The
/// "ricci_operator_scalar" entry (Q U = (n-1) U) is example-strength only and
/// is always tagged conditional, never fatal.
CheckSet lp_identity_suite(const FrameManifold& m, const ParacontactStructure& p,
                           const Connection& levi_civita, const CurvatureData& curv);

/// Two-parameter connection family
///   nabla-bar_U V = nabla_U V + a [ g(U, phi V) xi - eta(V) phi U ] + b eta(U) phi V.
Connection general_connection(const FrameManifold& m, const ParacontactStructure& p,
                              const Connection& levi_civita, const ConnectionParams& params);

/// Named members of the family: quarter-symmetric (0,-1),
/// schouten-van-kampen (1,0), tanaka-webster (1,-1), zamkovoy (1,1).
Connection preset_connection(const FrameManifold& m, const ParacontactStructure& p,
                             const Connection& levi_civita, PresetName name);

ConnectionParams preset_params(PresetName name);

/// Closed-form curvature of the family, assembled termwise from the unbarred
/// curvature and the structure tensors:
///   R-bar(U,V)W = R(U,V)W + (a+ab+b)[g(U,W)eta(V)xi - g(V,W)eta(U)xi]
///                 + a(a+2)[g(V,phi W)phi U - g(U,phi W)phi V]
///                 + (ab+b-a)[eta(V)eta(W)U - eta(U)eta(W)V].
Tensor closed_form_riemann_bar(const FrameManifold& m, const ParacontactStructure& p,
                               const Tensor& riemann_lc, const ConnectionParams& params);

/// Closed-form Ricci tensor:
///   S-bar(V,W) = S(V,W) + (ab+b-a^2-a) g(V,W) + a(a+2) lambda g(V, phi W)
///                + [ab+b-a^2-a + (n-1)(ab+b-a)] eta(V) eta(W).
Tensor closed_form_ricci_bar(const FrameManifold& m, const ParacontactStructure& p,
                             const Tensor& ricci_lc, const ConnectionParams& params);

/// Closed-form Ricci operator:
///   Q-bar V = Q V + (ab+b-a^2-a) V + a(a+2) lambda phi V
///             + [ab+b-a^2-a + (n-1)(ab+b-a)] eta(V) xi.
Tensor closed_form_ricci_operator_bar(const FrameManifold& m, const ParacontactStructure& p,
                                      const Tensor& ricci_op_lc, const ConnectionParams& params);

/// Closed-form scalar curvature: r-bar = r - a^2 (n-1) + a(a+2) lambda^2.
Rational closed_form_scalar_bar(const Rational& scalar_lc, int n, const Rational& lambda,
                                const ConnectionParams& params);

/// All four closed forms packaged as CurvatureData (riemann from the
/// curvature display, ricci/operator/scalar from their own displays).
CurvatureData closed_form_curvature_bar(const FrameManifold& m, const ParacontactStructure& p,
                                        const CurvatureData& curv_lc,
                                        const ConnectionParams& params);

struct GridPoint {
  ConnectionParams params;
  std::vector<std::string> labels;  // preset names hitting this point
};

/// Default audit grid: the first n values of 0, 1, -1, 1/2, -1/2, 2, -2, ...
/// crossed with itself, sorted by (a, b). A 5x5 or larger grid contains all
/// four presets and, since every audited component is polynomial in (a, b) of
/// degree <= 4 per variable, exact agreement on such a grid certifies the
/// identity, not just the sampled points.
std::vector<GridPoint> default_grid(int n, bool include_presets);

std::vector<Rational> grid_values(int n);

struct AuditPoint {
  GridPoint point;
  CheckSet checks;
};

struct AuditOutcome {
  std::vector<AuditPoint> points;  // sorted by (a, b)
  bool certifies_degree4 = false;
};

/// For every grid point, computes the barred curvature package twice — direct
/// commutator curvature of the general connection versus the closed forms —
/// and records componentwise equality or the exact discrepancy. Direct
/// computation is ground truth; closed-form mismatches are reported as
/// conditional findings, while internal inconsistencies between the closed
/// forms themselves (trace of the Ricci display vs the scalar display, raise
/// of the Ricci display vs the operator display) are failures. The grid work
/// is a pure, order-independent map; `threads` > 1 fans it out and the output
/// order stays deterministic.
AuditOutcome audit_closed_forms(const FrameManifold& m, const ParacontactStructure& p,
                                const Connection& levi_civita, std::vector<GridPoint> grid,
                                int threads = 1);

}  // namespace parasol
