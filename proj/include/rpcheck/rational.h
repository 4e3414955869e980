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

#ifndef RPCHECK_RATIONAL_H_
#define RPCHECK_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace rpcheck {

// Exact arbitrary-precision rational, always kept in lowest terms with a
// positive denominator. All probabilities in the library are Rationals.
class Rational {
 public:
  Rational() = default;
  Rational(long value);  // NOLINT: implicit from integers is intended.
  Rational(long numerator, long denominator);

  static Rational FromMpq(mpq_class value);

  // Accepts "n" or "n/d" with optional leading '-'. Decimal points and
  // exponents are rejected; probabilities are never parsed from floats.
  static Rational Parse(std::string_view text);

  // Canonical "num/den" form, e.g. "1/6", "0/1", "1/1".
  std::string ToString() const;
  double ToDouble() const { return value_.get_d(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  std::string numerator() const { return value_.get_num().get_str(); }
  std::string denominator() const { return value_.get_den().get_str(); }
  const mpq_class& mpq() const { return value_; }

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational() - a; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

Rational Abs(const Rational& r);

// n! as a Rational (exact).
Rational Factorial(int n);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace rpcheck

#endif  // RPCHECK_RATIONAL_H_
