// Copyright 2026 The rpcheck Authors
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

#include "rpcheck/rational.h"

#include <cctype>
#include <string>

#include "rpcheck/errors.h"

namespace rpcheck {
namespace {

bool IsIntegerLiteral(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long value) : value_(value) {}

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw InputError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::FromMpq(mpq_class value) {
  value.canonicalize();
  Rational r;
  r.value_ = std::move(value);
  return r;
}

Rational Rational::Parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!IsIntegerLiteral(num) || !IsIntegerLiteral(den) ||
      den.front() == '-') {
    throw ParseError("malformed rational '" + std::string(text) +
                     "' (expected \"num/den\")");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("rational with zero denominator: " +
                               std::string(text));
  return FromMpq(mpq_class(n, d));
}

std::string Rational::ToString() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw InputError("division by zero");
  value_ /= other.value_;
  return *this;
}

Rational Abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational Factorial(int n) {
  mpz_class f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return Rational::FromMpq(mpq_class(f));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.ToString();
}

}  // namespace rpcheck
