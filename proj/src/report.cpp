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

#include "report.hpp"

#include <algorithm>

#include "errors.hpp"

namespace parasol {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Conditional: return "conditional";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

void CheckSet::add(std::string name, CheckStatus status, std::string detail,
                   std::vector<Witness> witnesses) {
  checks_.push_back(Check{std::move(name), status, std::move(detail), std::move(witnesses)});
}

void CheckSet::add_tensor_comparison(const std::string& name, const Tensor& expected,
                                     const Tensor& actual, CheckStatus on_mismatch,
                                     const std::string& detail_on_mismatch) {
  Check c;
  c.name = name;
  if (expected.dim() != actual.dim() || expected.variance() != actual.variance()) {
    c.status = CheckStatus::Fail;
    c.detail = "tensor shapes differ";
    c.witnesses.push_back(Witness{{},
                                  "rank " + std::to_string(expected.rank()) + " dim " +
                                      std::to_string(expected.dim()),
                                  "rank " + std::to_string(actual.rank()) + " dim " +
                                      std::to_string(actual.dim())});
    checks_.push_back(std::move(c));
    return;
  }
  expected.for_each_index([&](std::span<const int> idx) {
    const Rational& e = expected.at(idx);
    const Rational& a = actual.at(idx);
    if (e != a) {
      c.witnesses.push_back(Witness{{idx.begin(), idx.end()}, e.str(), a.str()});
    }
  });
  if (c.witnesses.empty()) {
    c.status = CheckStatus::Pass;
  } else {
    c.status = on_mismatch;
    c.detail = detail_on_mismatch.empty() ? "componentwise discrepancy" : detail_on_mismatch;
  }
  checks_.push_back(std::move(c));
}

void CheckSet::merge(CheckSet other) {
  for (Check& c : other.checks_) checks_.push_back(std::move(c));
}

bool CheckSet::all_passed() const {
  return std::none_of(checks_.begin(), checks_.end(),
                      [](const Check& c) { return c.status == CheckStatus::Fail; });
}

bool CheckSet::has(const std::string& name) const { return find(name) != nullptr; }

const Check* CheckSet::find(const std::string& name) const {
  for (const Check& c : checks_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

Json CheckSet::to_json(bool one_based_indices) const {
  std::vector<const Check*> ordered;
  ordered.reserve(checks_.size());
  for (const Check& c : checks_) ordered.push_back(&c);
  std::sort(ordered.begin(), ordered.end(),
            [](const Check* a, const Check* b) { return a->name < b->name; });

  Json arr = Json::array();
  for (const Check* c : ordered) {
    Json jc;
    jc["name"] = c->name;
    jc["status"] = to_string(c->status);
    if (!c->detail.empty()) jc["detail"] = c->detail;
    if (!c->witnesses.empty()) {
      std::vector<Witness> ws = c->witnesses;
      std::sort(ws.begin(), ws.end());
      Json jws = Json::array();
      for (const Witness& w : ws) {
        Json jw;
        Json idx = Json::array();
        for (int i : w.index) idx.push_back(one_based_indices ? i + 1 : i);
        jw["index"] = std::move(idx);
        jw["expected"] = w.expected;
        jw["actual"] = w.actual;
        jws.push_back(std::move(jw));
      }
      jc["witnesses"] = std::move(jws);
    }
    arr.push_back(std::move(jc));
  }
  return arr;
}

void CheckSummary::absorb(const CheckSet& cs) {
  for (const Check& c : cs.checks()) {
    switch (c.status) {
      case CheckStatus::Pass: ++pass; break;
      case CheckStatus::Fail: ++fail; break;
      case CheckStatus::Conditional: ++conditional; break;
      case CheckStatus::Skipped: ++skipped; break;
    }
  }
}

Json CheckSummary::to_json() const {
  Json j;
  j["pass"] = pass;
  j["fail"] = fail;
  j["conditional"] = conditional;
  j["skipped"] = skipped;
  j["total"] = pass + fail + conditional + skipped;
  return j;
}

Json tensor_to_json(const Tensor& t) {
  if (t.rank() == 0) return t.scalar_value().str();
  if (t.rank() == 1) return vector_to_json(t);
  if (t.rank() == 2) return matrix_to_json(t);
  Json entries = Json::array();
  t.for_each_index([&](std::span<const int> idx) {
    const Rational& v = t.at(idx);
    if (v.is_zero()) return;
    Json e;
    Json jidx = Json::array();
    for (int i : idx) jidx.push_back(i + 1);
    e["index"] = std::move(jidx);
    e["value"] = v.str();
    entries.push_back(std::move(e));
  });
  Json j;
  j["rank"] = t.rank();
  j["nonzero"] = std::move(entries);
  return j;
}

Json vector_to_json(const Tensor& t) {
  if (t.rank() != 1) throw DimensionError("vector_to_json needs rank 1");
  Json arr = Json::array();
  for (int i = 0; i < t.dim(); ++i) arr.push_back(t.at({i}).str());
  return arr;
}

Json matrix_to_json(const Tensor& t) {
  if (t.rank() != 2) throw DimensionError("matrix_to_json needs rank 2");
  Json rows = Json::array();
  for (int i = 0; i < t.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < t.dim(); ++j) row.push_back(t.at({i, j}).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json rational_vector_to_json(const std::vector<Rational>& v) {
  Json arr = Json::array();
  for (const Rational& r : v) arr.push_back(r.str());
  return arr;
}

}  // namespace parasol
