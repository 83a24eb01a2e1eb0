/* Copyright (C) 2026 The symsum Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "symsum/bigint.hpp"

namespace symsum {

/// Polynomial with arbitrary-precision integer coefficients, constant term
/// first. The coefficient vector is kept trimmed, so the zero polynomial has
/// no coefficients and every other polynomial has a nonzero leading term.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, std::size_t degree);
  /// X - root
  static IntPolynomial linear(const BigInt& root);

  const std::vector<BigInt>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const BigInt& leading() const { return c_.back(); }
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  BigInt evaluate(const BigInt& x) const;
  /// p(inner(X))
  IntPolynomial compose(const IntPolynomial& inner) const;

  BigInt content() const;
  /// Divides out the content and makes the leading coefficient positive.
  IntPolynomial primitive() const;

  /// Exact division by a monic or general divisor over Q. Returns true and
  /// stores the quotient when `divisor` divides *this with integer quotient.
  bool divide_exact(const IntPolynomial& divisor, IntPolynomial* quotient) const;

  /// Expanded form in the variable `var`, highest degree first, e.g.
  /// "X^4 - 6*X^3 + 12*X^2 - 24*X + 32".
  std::string to_string(const std::string& var = "X") const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// a | b over Q[X] with an integer cofactor. `a` must be nonzero.
bool poly_divides(const IntPolynomial& a, const IntPolynomial& b);

/// Phi_m(X), computed by dividing X^m - 1 by Phi_d for every proper divisor d.
IntPolynomial cyclotomic_polynomial(unsigned m);

/// Euler's totient.
unsigned euler_phi(unsigned m);

}  // namespace symsum
