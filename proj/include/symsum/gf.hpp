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

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symsum {

/// An element of GF(p^r), stored as its index in the canonical enumeration:
/// the coefficient vector of the element (constant term first) read as the
/// base-p digits of the code. Code 0 is zero and code 1 is one.
struct Element {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(Element, Element) = default;
};

/// Coefficient list over Z_p, constant term first.
using PrimePoly = std::vector<std::uint32_t>;

bool is_prime(std::uint64_t n);

/// Returns true when `f` (monic, constant term first) is irreducible over F_p.
/// Uses Rabin's test: x^{p^r} == x mod f and gcd(x^{p^{r/l}} - x, f) == 1 for
/// every prime l dividing r.
bool is_irreducible(const PrimePoly& f, std::uint32_t p);

/// Lexicographically smallest monic irreducible of degree r over F_p, with
/// the coefficients compared from the constant term up.
PrimePoly smallest_irreducible(std::uint32_t p, std::uint32_t r);

/// Finite field GF(p^r). Immutable after construction; copies share tables.
class GaloisField {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// Throws Error{kNotPrime}, Error{kReducibleModulus}, Error{kDegreeMismatch}.
  static GaloisField make(std::uint32_t p, std::uint32_t r,
                          std::optional<PrimePoly> modulus = std::nullopt);

  /// Parses "q", "p^r", or either followed by "/c0,c1,...,cr".
  static GaloisField parse(std::string_view spec);

  std::uint32_t characteristic() const { return t_->p; }
  std::uint32_t degree() const { return t_->r; }
  std::uint32_t order() const { return t_->q; }
  const PrimePoly& modulus() const { return t_->modulus; }

  Element zero() const { return Element{0}; }
  Element one() const { return Element{1}; }
  /// Throws Error{kInvalidArgument} when code >= q.
  Element element(std::uint32_t code) const;
  bool contains(Element x) const { return x.code < t_->q; }

  std::vector<std::uint32_t> coeffs(Element x) const;
  Element from_coeffs(std::span<const std::uint32_t> c) const;
  /// Image of an integer in the prime subfield.
  Element from_integer(std::int64_t v) const;

  Element add(Element x, Element y) const;
  Element sub(Element x, Element y) const;
  Element neg(Element x) const;
  Element mul(Element x, Element y) const {
    if (x.code == 0 || y.code == 0) return Element{0};
    std::uint32_t s = t_->log[x.code] + t_->log[y.code];
    if (s >= t_->q - 1) s -= t_->q - 1;
    return Element{t_->exp[s]};
  }
  Element pow(Element x, std::uint64_t e) const;

  /// Absolute trace to F_p, returned as a residue in [0, p).
  std::uint32_t trace(Element x) const { return t_->trace[x.code]; }

  /// Human readable summary, e.g. "GF(2^2) mod x^2 + x + 1".
  std::string describe() const;
  std::string modulus_string() const;

 private:
  struct Tables {
    std::uint32_t p = 0, r = 0, q = 0;
    PrimePoly modulus;
    std::vector<std::uint32_t> exp, log, trace;
    std::vector<std::uint16_t> add;  // q*q, only filled for small q
    std::vector<std::uint32_t> place;  // p^i
  };
  explicit GaloisField(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}

  std::shared_ptr<const Tables> t_;
};

}  // namespace symsum
