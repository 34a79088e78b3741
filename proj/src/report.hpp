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

#include <json.hpp>

#include "rational.hpp"
#include "tensor.hpp"

namespace parasol {

using Json = nlohmann::ordered_json;

/// Outcome of a single named check.
///
/// pass/fail decide exit codes; conditional marks findings that are reported
/// but never fatal (adjudications of published values, example-strength
/// identities); skipped marks checks whose precondition did not apply.
enum class CheckStatus { Pass, Fail, Conditional, Skipped };

const char* to_string(CheckStatus s);

/// Concrete evidence for a check outcome: an index tuple (1-based in output)
/// plus the expected and actual values as exact rational strings.
struct Witness {
  std::vector<int> index;
  std::string expected;
  std::string actual;

  friend bool operator<(const Witness& a, const Witness& b) { return a.index < b.index; }
};

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  std::vector<Witness> witnesses;
};

/// Ordered collection of checks. Emission sorts by name and sorts witnesses
/// by index tuple, so identical inputs always render identical bytes.
class CheckSet {
 public:
  void add(Check c) { checks_.push_back(std::move(c)); }
  void add(std::string name, CheckStatus status, std::string detail = {},
           std::vector<Witness> witnesses = {});

  /// Records an exact tensor comparison. Mismatching components become
  /// witnesses (all of them, sorted by index); `on_mismatch` selects whether
  /// a difference is a failure or merely reported.
  void add_tensor_comparison(const std::string& name, const Tensor& expected,
                             const Tensor& actual,
                             CheckStatus on_mismatch = CheckStatus::Fail,
                             const std::string& detail_on_mismatch = {});

  void merge(CheckSet other);

  bool all_passed() const;  // no Fail entries (conditional and skipped count as pass)
  bool has(const std::string& name) const;
  const Check* find(const std::string& name) const;
  const std::vector<Check>& checks() const { return checks_; }

  /// Checks sorted by name, each with witnesses sorted by index tuple.
  Json to_json(bool one_based_indices = true) const;

 private:
  std::vector<Check> checks_;
};

/// Counts statuses across a list of rendered check objects (recursively not
/// needed: callers pass every CheckSet they emitted).
struct CheckSummary {
  int pass = 0;
  int fail = 0;
  int conditional = 0;
  int skipped = 0;

  void absorb(const CheckSet& cs);
  Json to_json() const;
};

/// Sparse rendering of a tensor: Rational strings keyed by 1-based index
/// tuples, sorted, zeros omitted. Rank-2 tensors render as nested arrays.
Json tensor_to_json(const Tensor& t);
Json vector_to_json(const Tensor& t);          // rank-1, dense array of strings
Json matrix_to_json(const Tensor& t);          // rank-2, dense nested arrays
Json rational_vector_to_json(const std::vector<Rational>& v);

}  // namespace parasol
