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

#include "rational.hpp"

#include <cctype>
#include <ostream>

#include "errors.hpp"

namespace parasol {

namespace {

bool valid_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (!valid_integer_token(s)) {
    throw ValueError("not a rational literal: \"" + std::string(whole) + "\"");
  }
  if (s.front() == '+') s.remove_prefix(1);  // mpz_set_str rejects a leading '+'
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, den == 0 ? 1 : den) {
  if (den == 0) throw ValueError("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ValueError("empty rational literal");

  mpz_class num;
  mpz_class den = 1;
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    num = parse_integer(s, text);
  } else {
    num = parse_integer(s.substr(0, slash), text);
    den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) throw ValueError("zero denominator in \"" + std::string(text) + "\"");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw ValueError("reciprocal of zero");
  mpq_class r(v_.get_den(), v_.get_num());
  r.canonicalize();
  return Rational(std::move(r));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ValueError("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace parasol
