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

#include "report.hpp"
#include "tensor.hpp"

namespace parasol {

/// Pseudo-Riemannian manifold presented by a frame e_1..e_n with a constant
/// metric g(e_i, e_j) and constant structure coefficients
/// [e_i, e_j] = sum_k c^k_ij e_k. Everything downstream is constant in this
/// frame, so covariant derivatives of component data reduce to the algebraic
/// terms and all computations stay inside exact rational arithmetic.
///
/// Storage: metric (lower,lower) index (i,j); structure (lower,lower,upper)
/// index (i,j,k) holding c^k_ij.
class FrameManifold {
 public:
  /// Requires shapes to match and the metric to be invertible (the inverse is
  /// cached here). Run validate_frame first for full invariant diagnostics.
  FrameManifold(int n, Tensor metric, Tensor structure);

  int n() const { return n_; }
  const Tensor& metric() const { return metric_; }
  const Tensor& metric_inverse() const { return metric_inverse_; }
  const Tensor& structure() const { return structure_; }

  Rational metric_pairing(const Tensor& u, const Tensor& v) const;  // g(U, V)
  Tensor lower(const Tensor& vec) const;
  Tensor raise(const Tensor& covec) const;

  friend bool operator==(const FrameManifold& a, const FrameManifold& b) {
    return a.n_ == b.n_ && a.metric_ == b.metric_ && a.structure_ == b.structure_;
  }

 private:
  int n_;
  Tensor metric_;
  Tensor metric_inverse_;
  Tensor structure_;
};

/// Full invariant check on candidate frame data: metric symmetric and
/// invertible, structure coefficients antisymmetric in the bracket pair, and
/// the Jacobi identity (a frame with constant non-Jacobi brackets describes
/// no manifold). Failures carry the offending index triples as witnesses.
CheckSet validate_frame(int n, const Tensor& metric, const Tensor& structure);

enum class PresetName { QuarterSymmetric, SchoutenVanKampen, TanakaWebster, Zamkovoy };

const char* to_string(PresetName p);
std::optional<PresetName> preset_from_string(const std::string& s);

struct ConnectionParams {
  Rational a;
  Rational b;
};

struct Provenance {
  enum class Kind { LeviCivita, General, Preset };
  Kind kind = Kind::LeviCivita;
  ConnectionParams params;  // (0,0) for Levi-Civita
  std::optional<PresetName> preset;

  std::string describe() const;
};

/// Frame connection: gamma holds Gamma^k_ij with nabla_{e_i} e_j =
/// sum_k Gamma^k_ij e_k, stored (lower,lower,upper) index (i,j,k).
struct Connection {
  Tensor gamma;
  Provenance provenance;
};

/// Levi-Civita connection from the Koszul formula. With g constant in the
/// frame the derivative terms drop and
///   2 g(nabla_{e_i} e_j, e_k) = g([e_i,e_j],e_k) - g([e_i,e_k],e_j) - g([e_j,e_k],e_i).
Connection koszul_levi_civita(const FrameManifold& m);

/// T^k_ij = Gamma^k_ij - Gamma^k_ji - c^k_ij, stored (lower,lower,upper).
Tensor torsion(const FrameManifold& m, const Connection& c);

/// (nabla g)_{i;jk} = -sum_m (Gamma^m_ij g_mk + Gamma^m_ik g_jm); identically
/// zero iff the connection is metric-compatible. Stored (lower,lower,lower).
Tensor metricity(const FrameManifold& m, const Connection& c);

/// Curvature package. riemann holds R^l_ijk with R(e_i,e_j)e_k =
/// sum_l R^l_ijk e_l, stored (lower,lower,lower,upper) index (i,j,k,l).
/// The contraction convention is fixed: ricci S_jk = sum_i R^i_ijk, the Ricci
/// operator raises the first Ricci slot, and the scalar traces the operator.
struct CurvatureData {
  Tensor riemann;
  Tensor ricci;
  Tensor ricci_op;
  Rational scalar;
};

CurvatureData curvature(const FrameManifold& m, const Connection& c);

/// R(e_i, e_j) e_k as a frame vector (rank-1 upper tensor).
Tensor riemann_apply(const Tensor& riemann, int i, int j, int k);

/// nabla_{e_i} X for a frame-constant vector field X.
Tensor covariant_derivative(const Connection& c, int i, const Tensor& x);

}  // namespace parasol
