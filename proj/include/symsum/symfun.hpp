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
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symsum/bigint.hpp"
#include "symsum/cyclo.hpp"
#include "symsum/gf.hpp"

namespace symsum {

struct SymmetricTerm {
  unsigned k = 0;
  Element beta;
};

/// sum_j beta_j e_{n,k_j} with 1 <= k_1 < k_2 < ... and every beta_j != 0.
class SymmetricSpec {
 public:
  /// Validates and sorts; throws Error{kInvalidArgument} on a repeated
  /// degree, a zero degree, a zero coefficient or an element outside f.
  SymmetricSpec(std::vector<SymmetricTerm> terms, const GaloisField& f);

  /// "k1:b1,k2:b2,..."; ":b" may be omitted for beta = 1.
  static SymmetricSpec parse(std::string_view text, const GaloisField& f);

  const std::vector<SymmetricTerm>& terms() const { return terms_; }
  unsigned max_degree() const { return terms_.back().k; }
  std::string to_string() const;

 private:
  std::vector<SymmetricTerm> terms_;
};

/// e_{n,k}(x) with n = x.size(). Throws Error{kArityMismatch} if n != x.size()
/// or k > n.
Element esym_eval(const GaloisField& f, std::size_t n, unsigned k, std::span<const Element> x);

/// Coefficients of prod_i (1 + a_i t)^{m_i} truncated after t^kmax, where
/// a_i is the field element with code i+1.
std::vector<Element> lambda_vector(const GaloisField& f, unsigned kmax,
                                   std::span<const std::uint64_t> m);

/// Multiplies `poly` (degree <= kmax) by (1 + a t)^m in place, binomials
/// reduced mod p by Lucas.
void mul_binomial_power(const GaloisField& f, std::vector<Element>& poly, Element a,
                        std::uint64_t m);

/// Memoized Lambda_{a_1..a_l}(k, m_1..m_l) with a_i = alpha_i.
class LambdaEvaluator {
 public:
  explicit LambdaEvaluator(GaloisField f) : f_(std::move(f)) {}

  Element operator()(std::int64_t k, std::span<const std::uint64_t> m);
  void clear() { memo_.clear(); }
  std::size_t cache_size() const { return memo_.size(); }

 private:
  Element eval(std::int64_t k, std::span<const std::uint64_t> m);

  GaloisField f_;
  std::map<std::vector<std::uint64_t>, Element> memo_;
};

Element lambda_eval(const GaloisField& f, std::int64_t k, std::span<const std::uint64_t> m);

/// Smallest power of p exceeding k.
std::uint64_t period(std::uint32_t p, std::uint64_t k);

/// Lambda after replacing every m_j <= 0 with m_j + D*(floor(-m_j/D) + 1).
Element lambda_periodic(const GaloisField& f, std::int64_t k, std::span<const std::int64_t> m,
                        std::uint64_t D);

/// Tr(sum_j beta_j e_{k_j}) given the truncated product coefficients.
std::uint32_t spec_trace(const GaloisField& f, const SymmetricSpec& spec,
                         std::span<const Element> esym);

/// Tr(sum_j beta_j Lambda(k_j, b)) for every b in [0, D)^{q-1}, indexed by
/// b_1 + b_2 D + b_3 D^2 + ... (b_i is the multiplicity of alpha_i). Needs
/// D > max degree, in which case Lambda is D-periodic in each coordinate and
/// no lift of zero entries is required. Throws Error{kBudgetExceeded} when
/// D^{q-1} exceeds `cap`.
std::vector<std::uint32_t> periodic_trace_table(const GaloisField& f, const SymmetricSpec& spec,
                                                std::uint64_t D,
                                                std::uint64_t cap = std::uint64_t{1} << 27);

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Counts tuples x in F_q^n by Tr(F(x)); entry t is the count for trace t.
std::vector<BigInt> brute_force_counts(const GaloisField& f, const SymmetricSpec& spec,
                                       unsigned n, std::uint64_t budget = kDefaultBudget);

CyclotomicInt brute_force_exp_sum(const GaloisField& f, const SymmetricSpec& spec, unsigned n,
                                  std::uint64_t budget = kDefaultBudget);

/// sum_t counts[t] zeta_p^t
CyclotomicInt counts_to_cyclotomic(const std::vector<BigInt>& counts);

}  // namespace symsum
