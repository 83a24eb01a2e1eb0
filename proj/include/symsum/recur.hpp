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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "symsum/bigint.hpp"
#include "symsum/cyclo.hpp"
#include "symsum/gf.hpp"
#include "symsum/polynomial.hpp"

namespace symsum {

/// Irreducible factors with multiplicities, in a stable display order.
struct FactoredPolynomial {
  std::vector<std::pair<IntPolynomial, unsigned>> factors;

  IntPolynomial expand() const;
  /// e.g. "(X - 4)*(X - 2)^2*(X^2 + 4)"
  std::string to_string() const;
};

/// prod_i (X - roots[i]); throws Error{kNotRationalInteger} unless the
/// product has rational integer coefficients.
IntPolynomial poly_from_roots(const std::vector<CyclotomicInt>& roots);

/// Minimal polynomial of 1 + sum_i zeta_D^{a_i}, from its Galois orbit.
IntPolynomial minimal_poly_algebraic(unsigned D, const std::vector<unsigned>& a);

/// prod over multisets {a_1..a_{q-1}} of (X - (1 + sum zeta_D^{a_i})), grouped
/// into minimal polynomials.
FactoredPolynomial char_poly_factored(unsigned q, unsigned D);
IntPolynomial char_poly(unsigned q, unsigned D);

/// Product of the distinct minimal polynomials arising in char_poly.
FactoredPolynomial lcm_char_poly_factored(unsigned q, unsigned D);
IntPolynomial lcm_char_poly(unsigned q, unsigned D);
/// D taken as the smallest power of p exceeding k_max.
IntPolynomial lcm_char_poly(const GaloisField& f, unsigned k_max);

/// C(D + q - 2, q - 1)
BigInt char_poly_degree(unsigned q, unsigned D);
/// (D)_q / q! read as a rising factorial, i.e. C(D + q - 1, q).
BigInt pochhammer_degree_bound(unsigned q, unsigned D);

struct MinimalRecurrence {
  IntPolynomial poly;
  bool zero_sequence = false;
};

/// Lowest-degree primitive integer polynomial c with sum_i c_i s(n+i) = 0 for
/// every admissible n, applied coordinatewise to cyclotomic values. Needs at
/// least 2*max_degree + 2 terms (Error{kInsufficientTerms}); throws
/// Error{kNoRecurrenceFound} if nothing of degree <= max_degree fits.
MinimalRecurrence minimal_integer_recurrence(const std::vector<CyclotomicInt>& seq,
                                             unsigned max_degree);
MinimalRecurrence minimal_integer_recurrence(const std::vector<BigInt>& seq,
                                             unsigned max_degree);

struct RecurrenceCertificate {
  IntPolynomial poly;
  std::size_t checked_range = 0;
  bool satisfied = false;
};

RecurrenceCertificate verify_recurrence(const std::vector<CyclotomicInt>& seq,
                                        const IntPolynomial& poly);
RecurrenceCertificate verify_recurrence(const std::vector<BigInt>& seq, const IntPolynomial& poly);

/// Splits a polynomial into the given irreducible candidates by repeated
/// exact division. The leftover cofactor (1 when fully split) is appended
/// when it is not constant.
FactoredPolynomial factor_over(const IntPolynomial& poly, const std::vector<IntPolynomial>& candidates);

}  // namespace symsum
