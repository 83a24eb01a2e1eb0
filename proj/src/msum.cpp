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
#include "symsum/msum.hpp"

#include <algorithm>
#include <functional>

#include "symsum/error.hpp"

namespace symsum {

std::uint32_t lucas_binomial_mod_p(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  if (k > n) return 0;
  std::uint64_t result = 1;
  while (k > 0 || n > 0) {
    const std::uint64_t nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    // C(nd, kd) mod p with nd < p, via the multiplicative formula.
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < kd; ++i) {
      num = num * ((nd - i) % p) % p;
      den = den * ((i + 1) % p) % p;
    }
    // den is a unit mod p; invert by Fermat.
    std::uint64_t inv = 1, b = den, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * b % p;
      b = b * b % p;
      e >>= 1;
    }
    result = result * (num * inv % p) % p;
    n /= p;
    k /= p;
  }
  return static_cast<std::uint32_t>(result);
}

BigInt multinomial_coefficient(unsigned n, std::span<const unsigned> parts) {
  BigInt r = 1;
  unsigned rem = n;
  for (unsigned m : parts) {
    if (m > rem)
      throw Error(ErrorCode::kInvalidComposition,
                  "parts sum to more than n = " + std::to_string(n));
    r *= binomial(rem, m);
    rem -= m;
  }
  return r;
}

std::vector<BigInt> multinomial_list(unsigned n, unsigned q) {
  if (q < 2) throw Error(ErrorCode::kInvalidArgument, "q must be >= 2");
  std::vector<BigInt> out;
  std::function<void(unsigned, unsigned, const BigInt&)> rec = [&](unsigned level, unsigned rem,
                                                                   const BigInt& w) {
    if (level + 1 == q) {
      out.push_back(w);
      return;
    }
    for (unsigned m = 0; m <= rem; ++m) rec(level + 1, rem - m, w * binomial(rem, m));
  };
  rec(0, n, BigInt(1));
  return out;
}

namespace {

// Visits every composition (m_1, ..., m_{q-1}) of at most n with its
// multinomial weight and the trace of the spec at that point.
template <typename Visit>
void for_each_composition(const GaloisField& f, const SymmetricSpec& spec, unsigned n,
                          Visit&& visit) {
  const unsigned r = f.order() - 1;
  const unsigned kmax = spec.max_degree();
  std::vector<std::vector<Element>> poly(r + 1, std::vector<Element>(kmax + 1, f.zero()));
  poly[0][0] = f.one();
  std::vector<BigInt> weight(r + 1);
  weight[0] = 1;
  std::vector<unsigned> parts(r);
  auto rec = [&](auto&& self, unsigned level, unsigned rem) -> void {
    if (level == r) {
      visit(std::span<const unsigned>(parts), weight[r], spec_trace(f, spec, poly[r]));
      return;
    }
    for (unsigned m = 0; m <= rem; ++m) {
      parts[level] = m;
      poly[level + 1] = poly[level];
      mul_binomial_power(f, poly[level + 1], Element{level + 1}, m);
      weight[level + 1] = weight[level] * binomial(rem, m);
      self(self, level + 1, rem - m);
    }
  };
  rec(rec, 0, n);
}

template <typename Visit>
void for_each_rearrangement(const GaloisField& f, const SymmetricSpec& spec,
                            const std::vector<unsigned>& padded, Visit&& visit) {
  std::vector<unsigned> gamma(padded);
  std::sort(gamma.begin(), gamma.end());
  std::vector<std::uint64_t> star(gamma.size() - 1);
  do {
    for (std::size_t i = 1; i < gamma.size(); ++i) star[i - 1] = gamma[i];
    visit(spec_trace(f, spec, lambda_vector(f, spec.max_degree(), star)));
  } while (std::next_permutation(gamma.begin(), gamma.end()));
}

}  // namespace

std::vector<BigInt> exp_sum_multinomial_counts(const GaloisField& f, const SymmetricSpec& spec,
                                               unsigned n) {
  std::vector<BigInt> counts(f.characteristic());
  for_each_composition(f, spec, n, [&](std::span<const unsigned>, const BigInt& w,
                                       std::uint32_t t) { counts[t] += w; });
  return counts;
}

CyclotomicInt exp_sum_multinomial(const GaloisField& f, const SymmetricSpec& spec, unsigned n) {
  return counts_to_cyclotomic(exp_sum_multinomial_counts(f, spec, n));
}

std::vector<std::vector<unsigned>> partitions_padded(unsigned n, unsigned q) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned rem, unsigned cap) -> void {
    if (rem == 0) {
      out.push_back(cur);
      out.back().resize(q, 0);
      return;
    }
    const auto slots = static_cast<unsigned>(q - cur.size());
    if (slots == 0) return;
    for (unsigned part = std::min(rem, cap); part >= 1; --part) {
      if (static_cast<std::uint64_t>(part) * slots < rem) break;
      cur.push_back(part);
      self(self, rem - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

CyclotomicInt exp_sum_partition(const GaloisField& f, const SymmetricSpec& spec, unsigned n) {
  const unsigned q = f.order();
  std::vector<BigInt> counts(f.characteristic());
  for (const auto& lambda : partitions_padded(n, q)) {
    std::vector<unsigned> tail(lambda.begin() + 1, lambda.end());
    const BigInt w = multinomial_coefficient(n, tail);
    for_each_rearrangement(f, spec, lambda, [&](std::uint32_t t) { counts[t] += w; });
  }
  return counts_to_cyclotomic(counts);
}

std::vector<CyclotomicInt> exp_sum_sequence(const GaloisField& f, const SymmetricSpec& spec,
                                            unsigned n_max, std::uint64_t state_cap) {
  const std::uint32_t p = f.characteristic();
  const unsigned r = f.order() - 1;
  const std::uint64_t D = period(p, spec.max_degree());
  std::uint64_t states = 1;
  bool fits = true;
  for (unsigned i = 0; i < r && fits; ++i) {
    if (states > state_cap / D) fits = false;
    else states *= D;
  }
  std::vector<CyclotomicInt> out;
  out.reserve(n_max + 1);
  if (!fits) {
    for (unsigned n = 0; n <= n_max; ++n) out.push_back(exp_sum_multinomial(f, spec, n));
    return out;
  }

  const auto table = periodic_trace_table(f, spec, D, state_cap);
  std::vector<std::uint64_t> stride(r);
  for (unsigned i = 0; i < r; ++i) stride[i] = i == 0 ? 1 : stride[i - 1] * D;

  // cnt[s] = number of tuples whose letter multiplicities reduce to state s.
  std::vector<BigInt> cnt(states), next(states);
  cnt[0] = 1;
  for (unsigned n = 0;; ++n) {
    std::vector<BigInt> counts(p);
    for (std::uint64_t s = 0; s < states; ++s)
      if (sgn(cnt[s]) != 0) counts[table[s]] += cnt[s];
    out.push_back(counts_to_cyclotomic(counts));
    if (n == n_max) break;
    for (std::uint64_t s = 0; s < states; ++s) {
      next[s] = cnt[s];
      for (unsigned i = 0; i < r; ++i) {
        const std::uint64_t digit = (s / stride[i]) % D;
        const std::uint64_t from = digit == 0 ? s + (D - 1) * stride[i] : s - stride[i];
        next[s] += cnt[from];
      }
    }
    std::swap(cnt, next);
  }
  return out;
}

SectionReport pq_section(const GaloisField& f, const SymmetricSpec& spec, unsigned n) {
  SectionReport rep;
  rep.n = n;
  rep.q = f.order();
  rep.p = f.characteristic();
  rep.sublists.assign(rep.p, {});
  rep.sums.assign(rep.p, BigInt(0));
  for_each_composition(f, spec, n, [&](std::span<const unsigned>, const BigInt& w,
                                       std::uint32_t t) {
    rep.sublists[t].push_back(w);
    rep.sums[t] += w;
  });
  for (auto& l : rep.sublists) std::sort(l.begin(), l.end());
  rep.balanced = std::all_of(rep.sums.begin(), rep.sums.end(),
                             [&](const BigInt& s) { return s == rep.sums[0]; });
  rep.trivial = std::all_of(rep.sublists.begin(), rep.sublists.end(),
                            [&](const auto& l) { return l == rep.sublists[0]; });
  return rep;
}

DiophantineSolution diophantine_solution(const GaloisField& f, const SymmetricSpec& spec,
                                         unsigned n) {
  if (f.characteristic() != 2)
    throw Error(ErrorCode::kOddCharacteristic,
                "integer deltas need characteristic 2, got " +
                    std::to_string(f.characteristic()));
  DiophantineSolution sol;
  for (const auto& lambda : partitions_padded(n, f.order())) {
    long delta = 0;
    for_each_rearrangement(f, spec, lambda, [&](std::uint32_t t) { delta += t ? -1 : 1; });
    std::vector<unsigned> tail(lambda.begin() + 1, lambda.end());
    const BigInt w = multinomial_coefficient(n, tail);
    sol.weighted_sum += w * delta;
    std::vector<unsigned> parts;
    for (unsigned v : lambda)
      if (v) parts.push_back(v);
    sol.partitions.push_back(std::move(parts));
    sol.deltas.emplace_back(delta);
  }
  sol.certified = sgn(sol.weighted_sum) == 0;
  return sol;
}

}  // namespace symsum
