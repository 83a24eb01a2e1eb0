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

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symsum/bigint.hpp"
#include "symsum/polynomial.hpp"

namespace symsum {

/// Element of Z[zeta_m] held as a group-ring vector: entry j is the
/// coefficient of zeta_m^j. The representation is not unique; equality and
/// zero tests go through the canonical remainder modulo Phi_m.
///
/// Binary operations on operands of different orders first lift both to the
/// lcm of the orders via zeta_m = zeta_L^(L/m).
class CyclotomicInt {
 public:
  CyclotomicInt() : CyclotomicInt(1) {}
  explicit CyclotomicInt(unsigned order);
  CyclotomicInt(unsigned order, std::vector<BigInt> coeffs);

  static CyclotomicInt integer(const BigInt& v, unsigned order = 1);
  /// zeta_order^exponent; negative exponents are reduced mod order.
  static CyclotomicInt root(unsigned order, std::int64_t exponent);

  unsigned order() const { return static_cast<unsigned>(c_.size()); }
  const std::vector<BigInt>& coeffs() const { return c_; }

  /// Same value at a multiple of the current order.
  CyclotomicInt lifted(unsigned new_order) const;

  /// Remainder of sum c_j X^j modulo Phi_m; length phi(m).
  std::vector<BigInt> canonical() const;
  /// Same value with the group-ring vector replaced by the canonical
  /// remainder (zero padded to length m). Idempotent.
  CyclotomicInt canonicalized() const;
  bool is_zero() const;

  /// sigma_u: zeta -> zeta^u. Throws Error{kNotAUnit} if gcd(u, m) != 1.
  CyclotomicInt conjugate(std::int64_t u) const;

  /// Rewrites the value over Z[zeta_target] when it lies in that subring;
  /// target must divide the order.
  std::optional<CyclotomicInt> descend(unsigned target) const;

  std::optional<BigInt> as_integer() const;
  std::complex<double> to_complex() const;

  CyclotomicInt pow(unsigned e) const;

  /// Canonical textual form "c0 + c1*z^1 + ... (order m)"; a rational
  /// integer prints as the bare integer.
  std::string to_string() const;

  CyclotomicInt operator-() const;
  CyclotomicInt& operator+=(const CyclotomicInt& o);
  CyclotomicInt& operator-=(const CyclotomicInt& o);
  CyclotomicInt& operator*=(const CyclotomicInt& o);
  CyclotomicInt& operator*=(const BigInt& s);
  friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
  friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
  friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);
  friend CyclotomicInt operator*(CyclotomicInt a, const BigInt& s) { return a *= s; }
  friend CyclotomicInt operator*(const BigInt& s, CyclotomicInt a) { return a *= s; }
  friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b);

 private:
  std::vector<BigInt> c_;
};

/// num / den with a single positive integer denominator.
class CycloRational {
 public:
  CycloRational() = default;
  CycloRational(CyclotomicInt num, BigInt den = 1);

  const CyclotomicInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  unsigned order() const { return num_.order(); }

  /// Divides out gcd(content of the canonical numerator, den).
  CycloRational normalized() const;
  bool is_zero() const { return num_.is_zero(); }

  /// Throws Error{kNotRationalInteger} carrying the canonical form.
  BigInt to_integer() const;
  /// Exact numerator when den divides every canonical coordinate.
  std::optional<CyclotomicInt> to_cyclotomic_int() const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

  CycloRational& operator+=(const CycloRational& o);
  CycloRational& operator-=(const CycloRational& o);
  CycloRational& operator*=(const CycloRational& o);
  friend CycloRational operator+(CycloRational a, const CycloRational& b) { return a += b; }
  friend CycloRational operator-(CycloRational a, const CycloRational& b) { return a -= b; }
  friend CycloRational operator*(CycloRational a, const CycloRational& b) { return a *= b; }
  friend bool operator==(const CycloRational& a, const CycloRational& b);

 private:
  CyclotomicInt num_;
  BigInt den_ = 1;
};

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

}  // namespace symsum
