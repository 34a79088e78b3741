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

#include "frame.hpp"

#include "errors.hpp"
#include "linalg.hpp"

namespace parasol {

FrameManifold::FrameManifold(int n, Tensor metric, Tensor structure)
    : n_(n), metric_(std::move(metric)), structure_(std::move(structure)) {
  if (n_ < 2) throw DimensionError("frame dimension must be at least 2");
  if (metric_.rank() != 2 || metric_.dim() != n_) {
    throw DimensionError("metric must be an n x n rank-2 tensor");
  }
  if (structure_.rank() != 3 || structure_.dim() != n_) {
    throw DimensionError("structure coefficients must be a rank-3 tensor");
  }
  metric_inverse_ =
      matrix_to_tensor(inverse(tensor_to_matrix(metric_)), IndexKind::Upper, IndexKind::Upper);
}

Rational FrameManifold::metric_pairing(const Tensor& u, const Tensor& v) const {
  if (u.rank() != 1 || v.rank() != 1 || u.dim() != n_ || v.dim() != n_) {
    throw DimensionError("metric pairing needs two frame vectors");
  }
  Rational acc;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) acc += metric_.at({i, j}) * u.at({i}) * v.at({j});
  }
  return acc;
}

Tensor FrameManifold::lower(const Tensor& vec) const {
  return raise_lower(vec, 0, metric_, metric_inverse_);
}

Tensor FrameManifold::raise(const Tensor& covec) const {
  return raise_lower(covec, 0, metric_, metric_inverse_);
}

CheckSet validate_frame(int n, const Tensor& metric, const Tensor& structure) {
  CheckSet cs;

  if (n < 2 || metric.rank() != 2 || metric.dim() != n || structure.rank() != 3 ||
      structure.dim() != n) {
    cs.add("manifold/shapes", CheckStatus::Fail,
           "dimension must be >= 2 with an n x n metric and n^3 structure coefficients",
           {Witness{{},
                    "dim >= 2, metric rank 2, structure rank 3",
                    "dim " + std::to_string(n) + ", metric rank " +
                        std::to_string(metric.rank()) + " dim " + std::to_string(metric.dim()) +
                        ", structure rank " + std::to_string(structure.rank()) + " dim " +
                        std::to_string(structure.dim())}});
    return cs;
  }
  cs.add("manifold/shapes", CheckStatus::Pass);

  Check sym{"manifold/metric_symmetric", CheckStatus::Pass, "", {}};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (metric.at({i, j}) != metric.at({j, i})) {
        sym.witnesses.push_back(
            Witness{{i, j}, metric.at({j, i}).str(), metric.at({i, j}).str()});
      }
    }
  }
  if (!sym.witnesses.empty()) {
    sym.status = CheckStatus::Fail;
    sym.detail = "g(e_i,e_j) != g(e_j,e_i)";
  }
  cs.add(std::move(sym));

  {
    const int metric_rank = rank(tensor_to_matrix(metric));
    if (metric_rank == n) {
      cs.add("manifold/metric_invertible", CheckStatus::Pass);
    } else {
      cs.add("manifold/metric_invertible", CheckStatus::Fail,
             "rank error: frame metric is singular",
             {Witness{{}, "rank " + std::to_string(n), "rank " + std::to_string(metric_rank)}});
    }
  }

  Check anti{"manifold/brackets_antisymmetric", CheckStatus::Pass, "", {}};
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const Rational lhs = structure.at({i, j, k});
        const Rational rhs = -structure.at({j, i, k});
        if (lhs != rhs) {
          anti.witnesses.push_back(Witness{{i, j, k}, rhs.str(), lhs.str()});
        }
      }
    }
  }
  if (!anti.witnesses.empty()) {
    anti.status = CheckStatus::Fail;
    anti.detail = "c^k_ij != -c^k_ji";
  }
  cs.add(std::move(anti));

  // Jacobi: sum over cyclic permutations of [[e_i,e_j],e_k] must vanish.
  Check jac{"manifold/jacobi_identity", CheckStatus::Pass, "", {}};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          Rational acc;
          for (int m = 0; m < n; ++m) {
            acc += structure.at({i, j, m}) * structure.at({m, k, l});
            acc += structure.at({j, k, m}) * structure.at({m, i, l});
            acc += structure.at({k, i, m}) * structure.at({m, j, l});
          }
          if (!acc.is_zero()) {
            jac.witnesses.push_back(Witness{{i, j, k, l}, "0", acc.str()});
          }
        }
      }
    }
  }
  if (!jac.witnesses.empty()) {
    jac.status = CheckStatus::Fail;
    jac.detail = "cyclic sum of [[e_i,e_j],e_k] components is nonzero";
  }
  cs.add(std::move(jac));

  return cs;
}

const char* to_string(PresetName p) {
  switch (p) {
    case PresetName::QuarterSymmetric: return "quarter-symmetric";
    case PresetName::SchoutenVanKampen: return "schouten-van-kampen";
    case PresetName::TanakaWebster: return "tanaka-webster";
    case PresetName::Zamkovoy: return "zamkovoy";
  }
  return "unknown";
}

std::optional<PresetName> preset_from_string(const std::string& s) {
  if (s == "quarter-symmetric") return PresetName::QuarterSymmetric;
  if (s == "schouten-van-kampen") return PresetName::SchoutenVanKampen;
  if (s == "tanaka-webster") return PresetName::TanakaWebster;
  if (s == "zamkovoy") return PresetName::Zamkovoy;
  return std::nullopt;
}

std::string Provenance::describe() const {
  switch (kind) {
    case Kind::LeviCivita: return "levi-civita";
    case Kind::General: return "general(a=" + params.a.str() + ",b=" + params.b.str() + ")";
    case Kind::Preset:
      return std::string(to_string(*preset)) + "(a=" + params.a.str() + ",b=" + params.b.str() +
             ")";
  }
  return "unknown";
}

Connection koszul_levi_civita(const FrameManifold& m) {
  const int n = m.n();
  const Tensor& g = m.metric();
  const Tensor& ginv = m.metric_inverse();
  const Tensor& c = m.structure();

  // rhs_ijk = g([e_i,e_j],e_k) - g([e_i,e_k],e_j) - g([e_j,e_k],e_i)
  Tensor rhs({IndexKind::Lower, IndexKind::Lower, IndexKind::Lower}, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        Rational acc;
        for (int mm = 0; mm < n; ++mm) {
          acc += c.at({i, j, mm}) * g.at({mm, k});
          acc -= c.at({i, k, mm}) * g.at({mm, j});
          acc -= c.at({j, k, mm}) * g.at({mm, i});
        }
        rhs.at({i, j, k}) = acc;
      }
    }
  }

  const Rational half(1, 2);
  Tensor gamma({IndexKind::Lower, IndexKind::Lower, IndexKind::Upper}, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        Rational acc;
        for (int k = 0; k < n; ++k) acc += ginv.at({l, k}) * rhs.at({i, j, k});
        gamma.at({i, j, l}) = half * acc;
      }
    }
  }

  Connection conn;
  conn.gamma = std::move(gamma);
  conn.provenance.kind = Provenance::Kind::LeviCivita;
  return conn;
}

Tensor torsion(const FrameManifold& m, const Connection& c) {
  const int n = m.n();
  if (c.gamma.dim() != n) throw DimensionError("connection dimension mismatch");
  Tensor t({IndexKind::Lower, IndexKind::Lower, IndexKind::Upper}, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        t.at({i, j, k}) =
            c.gamma.at({i, j, k}) - c.gamma.at({j, i, k}) - m.structure().at({i, j, k});
      }
    }
  }
  return t;
}

Tensor metricity(const FrameManifold& m, const Connection& c) {
  const int n = m.n();
  if (c.gamma.dim() != n) throw DimensionError("connection dimension mismatch");
  const Tensor& g = m.metric();
  Tensor d({IndexKind::Lower, IndexKind::Lower, IndexKind::Lower}, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        Rational acc;
        for (int mm = 0; mm < n; ++mm) {
          acc += c.gamma.at({i, j, mm}) * g.at({mm, k});
          acc += c.gamma.at({i, k, mm}) * g.at({j, mm});
        }
        d.at({i, j, k}) = -acc;
      }
    }
  }
  return d;
}

CurvatureData curvature(const FrameManifold& m, const Connection& c) {
  const int n = m.n();
  if (c.gamma.dim() != n) throw DimensionError("connection dimension mismatch");
  const Tensor& gamma = c.gamma;
  const Tensor& cc = m.structure();

  // R^l_ijk = sum_m (Gamma^m_jk Gamma^l_im - Gamma^m_ik Gamma^l_jm) - sum_m c^m_ij Gamma^l_mk
  Tensor riemann({IndexKind::Lower, IndexKind::Lower, IndexKind::Lower, IndexKind::Upper}, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          Rational acc;
          for (int mm = 0; mm < n; ++mm) {
            acc += gamma.at({j, k, mm}) * gamma.at({i, mm, l});
            acc -= gamma.at({i, k, mm}) * gamma.at({j, mm, l});
            acc -= cc.at({i, j, mm}) * gamma.at({mm, k, l});
          }
          riemann.at({i, j, k, l}) = acc;
        }
      }
    }
  }

  CurvatureData data;
  data.ricci = tensor_contract(riemann, 3, 0);  // S_jk = R^i_ijk
  data.ricci_op = raise_lower(data.ricci, 0, m.metric(), m.metric_inverse());
  data.scalar = tensor_contract(data.ricci_op, 0, 1).scalar_value();
  data.riemann = std::move(riemann);
  return data;
}

Tensor riemann_apply(const Tensor& riemann, int i, int j, int k) {
  const int n = riemann.dim();
  Tensor v({IndexKind::Upper}, n);
  for (int l = 0; l < n; ++l) v.at({l}) = riemann.at({i, j, k, l});
  return v;
}

Tensor covariant_derivative(const Connection& c, int i, const Tensor& x) {
  const int n = c.gamma.dim();
  if (x.rank() != 1 || x.dim() != n) throw DimensionError("covariant derivative needs a vector");
  Tensor out({IndexKind::Upper}, n);
  for (int l = 0; l < n; ++l) {
    Rational acc;
    for (int k = 0; k < n; ++k) acc += x.at({k}) * c.gamma.at({i, k, l});
    out.at({l}) = acc;
  }
  return out;
}

}  // namespace parasol
