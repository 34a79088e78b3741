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

#include "tensor.hpp"

#include <cstddef>

#include "errors.hpp"

namespace parasol {

namespace {

std::size_t pow_size(int dim, std::size_t rank) {
  std::size_t s = 1;
  for (std::size_t i = 0; i < rank; ++i) s *= static_cast<std::size_t>(dim);
  return s;
}

}  // namespace

// Rank-0 tensors always carry dim 0 so that scalar results compare equal
// regardless of the dimension they were contracted from.
Tensor::Tensor(std::vector<IndexKind> variance, int dim)
    : variance_(std::move(variance)), dim_(variance_.empty() ? 0 : dim) {
  if (!variance_.empty() && dim < 1) throw DimensionError("tensor dimension must be positive");
  components_.resize(pow_size(dim_, variance_.size()));
}

Tensor Tensor::scalar(Rational value) {
  Tensor t;
  t.components_[0] = std::move(value);
  return t;
}

const Rational& Tensor::scalar_value() const {
  if (!variance_.empty()) throw DimensionError("scalar_value() on tensor of positive rank");
  return components_[0];
}

std::size_t Tensor::offset(std::span<const int> index) const {
  if (index.size() != variance_.size()) {
    throw DimensionError("tensor index arity mismatch");
  }
  std::size_t off = 0;
  for (std::size_t p = 0; p < index.size(); ++p) {
    if (index[p] < 0 || index[p] >= dim_) throw DimensionError("tensor index out of range");
    off = off * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(index[p]);
  }
  return off;
}

bool Tensor::is_zero() const {
  for (const Rational& c : components_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (dim_ != o.dim_ || variance_ != o.variance_) {
    throw DimensionError("tensor addition requires identical variance and dimension");
  }
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += o.components_[i];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  if (dim_ != o.dim_ || variance_ != o.variance_) {
    throw DimensionError("tensor subtraction requires identical variance and dimension");
  }
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] -= o.components_[i];
  return *this;
}

Tensor& Tensor::operator*=(const Rational& s) {
  for (Rational& c : components_) c *= s;
  return *this;
}

Tensor tensor_contract(const Tensor& t, int slot_a, int slot_b) {
  const int rank = t.rank();
  if (slot_a == slot_b || slot_a < 0 || slot_b < 0 || slot_a >= rank || slot_b >= rank) {
    throw DimensionError("contraction slots must name two distinct existing slots");
  }
  if (t.variance()[slot_a] == t.variance()[slot_b]) {
    throw DimensionError("variance error: contraction slots must have opposite variance");
  }
  const int n = t.dim();

  std::vector<IndexKind> out_var;
  std::vector<int> keep;  // positions of surviving slots, in order
  for (int p = 0; p < rank; ++p) {
    if (p == slot_a || p == slot_b) continue;
    out_var.push_back(t.variance()[p]);
    keep.push_back(p);
  }

  Tensor result(std::move(out_var), n);
  std::vector<int> full(rank, 0);
  result.for_each_index([&](std::span<const int> out_idx) {
    for (std::size_t p = 0; p < keep.size(); ++p) full[keep[p]] = out_idx[p];
    Rational sum;
    for (int m = 0; m < n; ++m) {
      full[slot_a] = m;
      full[slot_b] = m;
      sum += t.at(std::span<const int>(full.data(), full.size()));
    }
    result.at(out_idx) = sum;
  });
  return result;
}

Tensor raise_lower(const Tensor& t, int slot, const Tensor& metric,
                   const Tensor& metric_inverse) {
  const int rank = t.rank();
  if (slot < 0 || slot >= rank) throw DimensionError("raise/lower slot out of range");
  const int n = t.dim();
  if (metric.rank() != 2 || metric.dim() != n || metric_inverse.rank() != 2 ||
      metric_inverse.dim() != n) {
    throw DimensionError("metric pair must be rank-2 tensors of matching dimension");
  }

  const bool lowering = t.variance()[slot] == IndexKind::Upper;
  const Tensor& pairing = lowering ? metric : metric_inverse;

  std::vector<IndexKind> out_var = t.variance();
  out_var[slot] = lowering ? IndexKind::Lower : IndexKind::Upper;

  Tensor result(std::move(out_var), n);
  std::vector<int> full(rank, 0);
  result.for_each_index([&](std::span<const int> out_idx) {
    for (int p = 0; p < rank; ++p) full[p] = out_idx[p];
    const int j = out_idx[slot];
    Rational sum;
    for (int m = 0; m < n; ++m) {
      full[slot] = m;
      sum += pairing.at({j, m}) * t.at(std::span<const int>(full.data(), full.size()));
    }
    result.at(out_idx) = sum;
  });
  return result;
}

Tensor tensor_outer(const Tensor& a, const Tensor& b) {
  if (a.rank() > 0 && b.rank() > 0 && a.dim() != b.dim()) {
    throw DimensionError("outer product requires matching dimensions");
  }
  std::vector<IndexKind> var = a.variance();
  var.insert(var.end(), b.variance().begin(), b.variance().end());
  const int n = a.rank() > 0 ? a.dim() : b.dim();
  const std::size_t a_rank = static_cast<std::size_t>(a.rank());

  Tensor result(std::move(var), n);
  result.for_each_index([&](std::span<const int> idx) {
    result.at(idx) = a.at(idx.subspan(0, a_rank)) * b.at(idx.subspan(a_rank));
  });
  return result;
}

Tensor kronecker_delta(int dim) {
  Tensor d({IndexKind::Upper, IndexKind::Lower}, dim);
  for (int i = 0; i < dim; ++i) d.at({i, i}) = Rational(1);
  return d;
}

Tensor zero_tensor(std::vector<IndexKind> variance, int dim) {
  return Tensor(std::move(variance), dim);
}

}  // namespace parasol
