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
#include <functional>
#include <vector>

#include "symsum/cyclo.hpp"
#include "symsum/gf.hpp"
#include "symsum/symfun.hpp"

namespace symsum {

/// F over [0, D)^r with values in [0, M), used as the exponent of xi = zeta_M.
/// values[b_1 + b_2 D + ... + b_r D^{r-1}] = F(b_1, ..., b_r).
struct PeriodicExponentTable {
  unsigned arity = 1;
  unsigned period = 1;
  unsigned xi_order = 1;
  std::vector<std::uint32_t> values;

  static PeriodicExponentTable from_function(
      unsigned arity, unsigned period, unsigned xi_order,
      const std::function<std::uint32_t(const std::vector<unsigned>&)>& fn);

  /// Throws Error{kInvalidArgument} on a size or range violation.
  void validate() const;
};

struct ClosedTerm {
  std::vector<unsigned> multiset;  // descending
  CyclotomicInt eigenvalue;
  CycloRational coeff;
};

/// S(n) = sum over terms of coeff * eigenvalue^n.
struct ClosedForm {
  unsigned period = 1;
  unsigned arity = 1;
  std::vector<ClosedTerm> terms;

  CycloRational eval(unsigned n) const;
  /// Values at n = 0..n_max, sharing the running powers.
  std::vector<CycloRational> eval_range(unsigned n_max) const;
  std::size_t nonzero_terms() const;
};

/// Coefficients c_J = D^{-r} sum_b xi^{F(b)} sum_{J' in Sym(J)} zeta_D^{J'.b}
/// for every multiset J, with eigenvalue 1 + sum_i zeta_D^{-j_i}.
ClosedForm general_closed_coefficients(const PeriodicExponentTable& table);

/// Direct nested sum of multinomial(n; n - |m|, m) xi^{F(m mod D)}, the
/// quantity the closed form reproduces.
CyclotomicInt general_direct_sum(const PeriodicExponentTable& table, unsigned n);

/// r_t(n; a) = D^{-1} sum_m zeta_D^{t m} (1 + a zeta_D^{-m})^n.
CycloRational rt_split_sum(unsigned n, unsigned t, unsigned D, const CyclotomicInt& a);
/// sum_{j = t mod D} a^j C(n, j).
CyclotomicInt rt_direct_sum(unsigned n, unsigned t, unsigned D, const CyclotomicInt& a);

/// Closed form of sum_l C(n,l) a^l xi^{F(l)} for an arity-1 table.
ClosedForm twisted_closed_form(const PeriodicExponentTable& table, const CyclotomicInt& a);
CycloRational twisted_binomial_closed(unsigned n, const PeriodicExponentTable& table,
                                      const CyclotomicInt& a);
CyclotomicInt twisted_binomial_direct(unsigned n, const PeriodicExponentTable& table,
                                      const CyclotomicInt& a);

/// Arity q-1, period D = period(p, k_s), xi = zeta_p.
PeriodicExponentTable exp_sum_table(const GaloisField& f, const SymmetricSpec& spec);
ClosedForm exp_sum_closed(const GaloisField& f, const SymmetricSpec& spec);

/// Evaluates an exponential-sum closed form and rewrites it over Z[zeta_p].
/// Throws Error{kNotRationalInteger} if the denominator does not divide out.
CyclotomicInt exp_sum_closed_eval(const ClosedForm& cf, std::uint32_t p, unsigned n);

/// Nega-Hadamard table: F(l) = sum_j C(l, k_j) mod 2 over D = 2^{floor(log2 k_s)+1},
/// with xi = -1; pair with a = zeta_4.
PeriodicExponentTable nega_hadamard_table(const std::vector<unsigned>& degrees);
/// Pisano period of the Fibonacci numbers mod m (m >= 2).
unsigned pisano_period(unsigned m);
/// F(l) = Fib(l) mod m over one Pisano period, xi = zeta_{pi(m)}; pair with a = 1.
PeriodicExponentTable pisano_table(unsigned m);

}  // namespace symsum
