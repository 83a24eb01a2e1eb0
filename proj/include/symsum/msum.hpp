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
#include <span>
#include <vector>

#include "symsum/bigint.hpp"
#include "symsum/cyclo.hpp"
#include "symsum/gf.hpp"
#include "symsum/symfun.hpp"

namespace symsum {

/// C(n, k) mod p as the product of digitwise binomials in base p.
std::uint32_t lucas_binomial_mod_p(std::uint64_t n, std::uint64_t k, std::uint32_t p);

/// n! / (m0! m1! ... m_{q-1}!) where parts = (m1, ..., m_{q-1}) and
/// m0 = n - sum(parts). Throws Error{kInvalidComposition} if sum(parts) > n.
BigInt multinomial_coefficient(unsigned n, std::span<const unsigned> parts);

/// L(n;q): loops over m_0, m_1, ..., m_{q-2} (outermost first), each from 0
/// up to what is left, with the last part taking the remainder.
std::vector<BigInt> multinomial_list(unsigned n, unsigned q);

/// Trace-class counts of F_q^n obtained by summing multinomial weights over
/// all compositions (m_1, ..., m_{q-1}).
std::vector<BigInt> exp_sum_multinomial_counts(const GaloisField& f, const SymmetricSpec& spec,
                                               unsigned n);
CyclotomicInt exp_sum_multinomial(const GaloisField& f, const SymmetricSpec& spec, unsigned n);

/// Partitions of n with at most q parts, zero padded to length q, in
/// reverse lexicographic order: (n,0,..), (n-1,1,0,..), ...
std::vector<std::vector<unsigned>> partitions_padded(unsigned n, unsigned q);

CyclotomicInt exp_sum_partition(const GaloisField& f, const SymmetricSpec& spec, unsigned n);

/// S(0), S(1), ..., S(n_max). Tuples are counted by their letter
/// multiplicities modulo the period of the spec, so the cost per step is
/// independent of n. Falls back to per-n multinomial sums when the residue
/// space exceeds `state_cap`.
std::vector<CyclotomicInt> exp_sum_sequence(const GaloisField& f, const SymmetricSpec& spec,
                                            unsigned n_max,
                                            std::uint64_t state_cap = 1u << 22);

struct SectionReport {
  unsigned n = 0, q = 0, p = 0;
  std::vector<std::vector<BigInt>> sublists;  // sorted ascending
  std::vector<BigInt> sums;
  bool balanced = false;
  bool trivial = false;
};

SectionReport pq_section(const GaloisField& f, const SymmetricSpec& spec, unsigned n);

struct DiophantineSolution {
  std::vector<std::vector<unsigned>> partitions;  // nonzero parts only
  std::vector<BigInt> deltas;
  BigInt weighted_sum;
  bool certified = false;
};

/// Throws Error{kOddCharacteristic} unless p = 2.
DiophantineSolution diophantine_solution(const GaloisField& f, const SymmetricSpec& spec,
                                         unsigned n);

}  // namespace symsum
