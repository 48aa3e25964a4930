// Copyright 2026 The MCG Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MCG_RATIONAL_H_
#define MCG_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <type_traits>

namespace mcg {

// Exact arbitrary-precision rational number, always kept in lowest terms
// with a positive denominator.
class Rational {
 public:
  Rational() = default;
  template <typename T,
            typename = std::enable_if_t<std::is_integral_v<T>>>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rational(long numerator, long denominator);
  explicit Rational(const mpz_class& integer) : value_(integer) {}
  explicit Rational(const mpq_class& value);

  // Parses "p/q", "p" or "-p/q". Throws InvalidInput on malformed text or a
  // zero denominator.
  static Rational Parse(std::string_view text);

  // Canonical "p/q" rendering; integers render as "p/1", zero as "0/1".
  std::string ToString() const;
  double ToDouble() const { return value_.get_d(); }

  const mpq_class& value() const { return value_; }
  mpz_class Numerator() const { return value_.get_num(); }
  mpz_class Denominator() const { return value_.get_den(); }

  int Sign() const { return sgn(value_); }
  bool IsZero() const { return Sign() == 0; }
  bool IsInteger() const { return value_.get_den() == 1; }
  mpz_class Floor() const;
  mpz_class Ceil() const;
  Rational Abs() const { return Rational(mpq_class(abs(value_))); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.value_ != b.value_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.value_ < b.value_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.value_ <= b.value_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.value_ > b.value_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.value_ >= b.value_;
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational Min(const Rational& a, const Rational& b);
Rational Max(const Rational& a, const Rational& b);

}  // namespace mcg

#endif  // MCG_RATIONAL_H_
