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

#include <initializer_list>
#include <span>
#include <vector>

#include "rational.hpp"

namespace parasol {

enum class IndexKind { Upper, Lower };

/// Dense tensor of exact rationals over a frame of fixed dimension.
///
/// The ordered list of index kinds (the variance) is part of the tensor's
/// identity: two tensors are equal iff they have the same variance, the same
/// dimension, and componentwise equal entries. Components are stored
/// row-major in the order the indices are written, all indices 0-based.
/// Rank 0 is allowed and holds a single scalar entry.
class Tensor {
 public:
  Tensor() : dim_(0) { components_.emplace_back(); }
  Tensor(std::vector<IndexKind> variance, int dim);

  static Tensor scalar(Rational value);

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(variance_.size()); }
  const std::vector<IndexKind>& variance() const { return variance_; }
  std::size_t size() const { return components_.size(); }

  const Rational& at(std::span<const int> index) const { return components_[offset(index)]; }
  Rational& at(std::span<const int> index) { return components_[offset(index)]; }
  const Rational& at(std::initializer_list<int> index) const {
    return at(std::span<const int>(index.begin(), index.size()));
  }
  Rational& at(std::initializer_list<int> index) {
    return components_[offset(std::span<const int>(index.begin(), index.size()))];
  }
  const Rational& scalar_value() const;

  bool is_zero() const;

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(const Rational& s);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, const Rational& s) { return a *= s; }
  friend Tensor operator*(const Rational& s, Tensor a) { return a *= s; }
  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.dim_ == b.dim_ && a.variance_ == b.variance_ && a.components_ == b.components_;
  }
  friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

  /// Iteration helper: calls fn(index) for every multi-index in row-major order.
  template <typename Fn>
  void for_each_index(Fn&& fn) const {
    std::vector<int> idx(variance_.size(), 0);
    while (true) {
      fn(std::span<const int>(idx.data(), idx.size()));
      int pos = static_cast<int>(idx.size()) - 1;
      for (; pos >= 0; --pos) {
        if (++idx[pos] < dim_) break;
        idx[pos] = 0;
      }
      if (pos < 0) break;
    }
  }

 private:
  std::size_t offset(std::span<const int> index) const;

  std::vector<IndexKind> variance_;
  int dim_;
  std::vector<Rational> components_;
};

/// Contracts one upper slot against one lower slot (0-based slot positions,
/// in either order). The paired index is summed away and the rank drops by
/// two; remaining slots keep their relative order. Throws DimensionError if
/// the slots coincide, are out of range, or do not have opposite variance.
Tensor tensor_contract(const Tensor& t, int slot_a, int slot_b);

/// Flips the variance of one slot by pairing it with the metric (to lower)
/// or the inverse metric (to raise). The slot keeps its position, so
/// raise∘lower is the identity.
Tensor raise_lower(const Tensor& t, int slot, const Tensor& metric, const Tensor& metric_inverse);

/// Outer (tensor) product; variances concatenate.
Tensor tensor_outer(const Tensor& a, const Tensor& b);

/// Identity (1,1)-tensor, i.e. the Kronecker delta.
Tensor kronecker_delta(int dim);

Tensor zero_tensor(std::vector<IndexKind> variance, int dim);

}  // namespace parasol
