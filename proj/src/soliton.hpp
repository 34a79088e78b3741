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
#include <string>
#include <vector>

#include "frame.hpp"
#include "paracontact.hpp"
#include "report.hpp"

namespace parasol {

/// Metric lowering X -> X-flat with X-flat(Y) = g(X, Y).
Tensor flat(const FrameManifold& m, const Tensor& x);

/// (L_X g)(U,V) = g(nabla_U X, V) + g(nabla_V X, U) for the given connection.
/// With the Levi-Civita connection this is the ordinary Lie derivative of g;
/// with a member of the general family it is the barred Lie derivative.
Tensor lie_derivative(const FrameManifold& m, const Connection& c, const Tensor& x);

/// The expanded closed form of the barred Lie derivative, assembled literally
/// from the unbarred one:
///   (L-bar_X g)(U,V) = (L_X g)(U,V) - 2a eta(X) g(phi U, V)
///                      + a[g(U, phi X) eta(V) + g(V, phi X) eta(U)]
///                      + b[eta(U) g(phi X, V) + eta(V) g(phi X, U)].
/// Exact equality with lie_derivative over the general connection is the
/// machine proof of this expansion.
Tensor lie_derivative_c1_form(const FrameManifold& m, const ParacontactStructure& p,
                              const Connection& levi_civita, const ConnectionParams& params,
                              const Tensor& x);

struct SolitonCoefficients {
  Rational alpha;
  Rational beta;
  Rational gamma;
  Rational delta;
  Rational epsilon;

  bool admissible() const {  // (alpha, beta, gamma) != (0, 0, 0)
    return !(alpha.is_zero() && beta.is_zero() && gamma.is_zero());
  }
};

/// T = alpha S-bar + (beta/2) L-bar + gamma X-flat (x) X-flat
///     + delta eta (x) eta + epsilon g; the soliton equation holds iff T = 0.
Tensor soliton_residual(const FrameManifold& m, const ParacontactStructure& p,
                        const Tensor& s_bar, const Tensor& l_bar, const Tensor& x,
                        const SolitonCoefficients& coeffs);

enum class SolitonClass { AlmostRicci, AlmostEtaRicci, GeneralizedRicci, General };
const char* to_string(SolitonClass c);

struct SolitonBasisVector {
  SolitonCoefficients coeffs;
  SolitonClass classification = SolitonClass::General;
  bool admissible = false;
  /// True when every coefficient the tuple actually uses multiplies an
  /// identically-zero tensor, so the tuple solves the equation without
  /// constraining anything (e.g. the free gamma direction when X = 0).
  bool vacuous = false;
  bool residual_zero = false;
};

struct SolitonSolution {
  std::vector<SolitonBasisVector> basis;
  int equations = 0;
  bool admissible_exists = false;             // some kernel direction has (alpha,beta,gamma) != 0
  bool nontrivial_admissible_exists = false;  // ... and is not vacuous
};

/// Flattens the soliton equation for the general connection at `params` into
/// n(n+1)/2 exact linear equations in (alpha, beta, gamma, delta, epsilon)
/// and returns the canonical kernel basis. The barred Ricci tensor and barred
/// Lie derivative are always the directly computed ones, never closed forms.
SolitonSolution soliton_solve(const FrameManifold& m, const ParacontactStructure& p,
                              const Connection& levi_civita, const ConnectionParams& params,
                              const Tensor& x);

struct EtaEinsteinDecomposition {
  Rational f1;
  Rational f2;
  Rational f3;
  bool residual_zero = false;
  bool unique = false;
  std::string classification;  // einstein / eta-einstein / special-generalized-eta-einstein /
                               // generalized-eta-einstein / not-decomposable
};

/// Solves S = f1 g + f2 g(.,phi .) + f3 eta (x) eta exactly. When the three
/// basis tensors are linearly dependent the solution set is a line; the
/// returned tuple is the minimal-norm representative (norm = f1^2+f2^2+f3^2)
/// and unique = false. Classification is decided over the whole solution
/// family, so an Einstein tensor is classified einstein even when the
/// returned representative has nonzero f2, f3.
EtaEinsteinDecomposition eta_einstein_decompose(const FrameManifold& m,
                                                const ParacontactStructure& p,
                                                const Tensor& s_any);

/// Soliton potential X = f xi with constant rational f: verifies the reduced
/// Lie-derivative form, evaluates the soliton residual for the supplied
/// coefficients, and when it vanishes confirms that alpha S-bar decomposes
/// eta-Einstein-exactly.
CheckSet theorem1_check(const FrameManifold& m, const ParacontactStructure& p,
                        const Connection& levi_civita, const ConnectionParams& params,
                        const Rational& f, const SolitonCoefficients& coeffs);

/// Synthetic S-bar = p g + q g(.,phi .) + r eta (x) eta: the coefficient
/// bundle (alpha, -alpha q/(a+1), gamma, -r alpha - gamma, -p alpha) must
/// produce an exactly zero residual. Guarded at a = -1.
CheckSet theorem2_check(const FrameManifold& m, const ParacontactStructure& p,
                        const Connection& levi_civita, const ConnectionParams& params,
                        const Rational& p_coef, const Rational& q_coef, const Rational& r_coef);

/// Brute-force evaluation of S-bar(R-bar(U,V)W, X) + S-bar(W, R-bar(U,V)X)
/// over every frame tuple; when the condition holds and ab+b-a-1 != 0 the
/// tensor is additionally compared against the derived closed form with
/// factor (a+1)(1-b)(n-1)/(ab+b-a-1).
CheckSet ricci_semisymmetric_check(const FrameManifold& m, const ParacontactStructure& p,
                                   const ConnectionParams& params, const CurvatureData& curv_bar,
                                   const Tensor& s_bar);

struct ConformalKillingResult {
  std::optional<Rational> h;  // L_X g = 2 h g, when proportional
  CheckSet checks;
};

/// Tests exact proportionality L_X g = 2 h g (h a rational constant). When it
/// holds and coefficients are supplied, evaluates the conformal-Killing
/// conclusion vector
///   ((a+1)(1-b)(n-1) + beta h + gamma eta(X) - delta + epsilon) xi
///   + gamma eta(X) X
/// verbatim and, alongside it, the first-principles row obtained by
/// contracting the soliton equation at V = xi. Both residual vectors are
/// reported as data.
ConformalKillingResult conformal_killing_check(
    const FrameManifold& m, const ParacontactStructure& p, const Connection& c, const Tensor& x,
    const std::optional<SolitonCoefficients>& coeffs = std::nullopt);

struct TorseFormingResult {
  std::optional<Rational> f;
  std::optional<Tensor> omega;  // covector
  bool unique = false;
  std::optional<Rational> epsilon_formula;  // epsilon forced by the trace identity
  CheckSet checks;
};

/// Solves nabla_{e_i} X = f e_i + omega(e_i) X exactly for a constant f and a
/// covector omega, if they exist. When coefficients are supplied, checks the
/// trace identity
///   trace_g(T) = alpha r-bar + n(beta f + epsilon) - delta + beta omega(X)
///                + gamma |X|^2
/// and that the epsilon forced by it (the omega term read as omega(X))
/// annihilates the trace exactly.
TorseFormingResult torse_forming_check(
    const FrameManifold& m, const ParacontactStructure& p, const Connection& c, const Tensor& x,
    const std::optional<SolitonCoefficients>& coeffs = std::nullopt);

/// trace_g(T) = sum g^{jk} T_jk for a (lower,lower) tensor.
Rational metric_trace(const FrameManifold& m, const Tensor& t);

}  // namespace parasol
