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
#include "symsum/closed.hpp"

#include <algorithm>
#include <cmath>

#include "symsum/error.hpp"
#include "symsum/msum.hpp"

namespace symsum {

namespace {

using u64 = std::uint64_t;

// Ranks multisets of a fixed size over [0, D) through the combinatorial
// number system applied to a_i + i (a ascending).
class MultisetIndex {
 public:
  MultisetIndex(unsigned D, unsigned max_size) : D_(D) {
    const unsigned top = D + max_size + 1;
    binom_.assign(top + 1, std::vector<u64>(max_size + 2, 0));
    for (unsigned n = 0; n <= top; ++n) {
      binom_[n][0] = 1;
      for (unsigned k = 1; k <= max_size + 1 && k <= n; ++k)
        binom_[n][k] = binom_[n - 1][k - 1] + (k <= n - 1 ? binom_[n - 1][k] : 0);
    }
  }

  u64 count(unsigned size) const { return binom_[D_ + size - 1][size]; }

  u64 rank(const std::vector<unsigned>& asc) const { return rank(asc.data(), asc.size()); }

  u64 rank(const unsigned* asc, std::size_t size) const {
    u64 r = 0;
    for (unsigned i = 0; i < size; ++i) r += binom_[asc[i] + i][i + 1];
    return r;
  }

  /// All multisets of the given size, ascending entries, listed by rank.
  std::vector<std::vector<unsigned>> all(unsigned size) const {
    std::vector<std::vector<unsigned>> out(count(size));
    std::vector<unsigned> cur(size, 0);
    auto rec = [&](auto&& self, unsigned pos, unsigned lo) -> void {
      if (pos == size) {
        out[rank(cur)] = cur;
        return;
      }
      for (unsigned v = lo; v < D_; ++v) {
        cur[pos] = v;
        self(self, pos + 1, v);
      }
    };
    rec(rec, 0, 0);
    return out;
  }

 private:
  unsigned D_;
  std::vector<std::vector<u64>> binom_;
};

u64 stabilizer_size(const std::vector<unsigned>& asc) {
  u64 s = 1, run = 0;
  for (std::size_t i = 0; i < asc.size(); ++i) {
    run = (i > 0 && asc[i] == asc[i - 1]) ? run + 1 : 1;
    s *= run;
  }
  return s;
}

CyclotomicInt eigenvalue_for(const std::vector<unsigned>& multiset, unsigned D) {
  CyclotomicInt lam = CyclotomicInt::integer(1, D);
  for (unsigned j : multiset) lam += CyclotomicInt::root(D, -static_cast<std::int64_t>(j));
  return lam;
}

}  // namespace

PeriodicExponentTable PeriodicExponentTable::from_function(
    unsigned arity, unsigned period, unsigned xi_order,
    const std::function<std::uint32_t(const std::vector<unsigned>&)>& fn) {
  PeriodicExponentTable t;
  t.arity = arity;
  t.period = period;
  t.xi_order = xi_order;
  u64 size = 1;
  for (unsigned i = 0; i < arity; ++i) size *= period;
  t.values.resize(size);
  std::vector<unsigned> b(arity, 0);
  for (u64 idx = 0; idx < size; ++idx) {
    u64 rest = idx;
    for (unsigned i = 0; i < arity; ++i) {
      b[i] = static_cast<unsigned>(rest % period);
      rest /= period;
    }
    t.values[idx] = fn(b) % xi_order;
  }
  return t;
}

void PeriodicExponentTable::validate() const {
  if (arity == 0 || period == 0 || xi_order == 0)
    throw Error(ErrorCode::kInvalidArgument, "table arity, period and xi order must be positive");
  u64 size = 1;
  for (unsigned i = 0; i < arity; ++i) size *= period;
  if (values.size() != size)
    throw Error(ErrorCode::kInvalidArgument, "table must have period^arity entries");
  for (auto v : values)
    if (v >= xi_order) throw Error(ErrorCode::kInvalidArgument, "table entry out of range");
}

std::size_t ClosedForm::nonzero_terms() const {
  return static_cast<std::size_t>(
      std::count_if(terms.begin(), terms.end(), [](const ClosedTerm& t) { return !t.coeff.is_zero(); }));
}

CycloRational ClosedForm::eval(unsigned n) const { return eval_range(n).back(); }

std::vector<CycloRational> ClosedForm::eval_range(unsigned n_max) const {
  std::vector<CyclotomicInt> acc(n_max + 1);
  BigInt den = 1;
  bool have_den = false;
  for (const auto& term : terms) {
    if (term.coeff.is_zero()) continue;
    if (!have_den) {
      den = term.coeff.den();
      have_den = true;
    }
    // Bring every coefficient to the common denominator.
    CyclotomicInt num = term.coeff.num();
    if (term.coeff.den() != den) {
      BigInt l;
      mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), term.coeff.den().get_mpz_t());
      const BigInt up = l / den;
      for (auto& a : acc) a *= up;
      num *= BigInt(l / term.coeff.den());
      den = l;
    }
    CyclotomicInt power = num;
    for (unsigned n = 0; n <= n_max; ++n) {
      acc[n] += power;
      if (n < n_max) power *= term.eigenvalue;
    }
  }
  std::vector<CycloRational> out;
  out.reserve(n_max + 1);
  for (auto& a : acc) out.emplace_back(std::move(a), den);
  return out;
}

ClosedForm general_closed_coefficients(const PeriodicExponentTable& table) {
  table.validate();
  const unsigned r = table.arity, D = table.period, M = table.xi_order;
  const auto L = static_cast<unsigned>(lcm_u64(D, M));
  const unsigned sM = L / M, sD = L / D;
  {
    // Count vectors are bounded by r! D^r.
    long double bound = std::pow(static_cast<long double>(D), r);
    for (unsigned i = 2; i <= r; ++i) bound *= i;
    if (bound > 9.0e18L)
      throw Error(ErrorCode::kBudgetExceeded, "closed form too large for 64-bit counts");
  }
  MultisetIndex idx(D, r);
  std::vector<std::vector<std::vector<unsigned>>> lists(r + 1);
  for (unsigned s = 0; s <= r; ++s) lists[s] = idx.all(s);

  // H_0[B] = |Stab B| * sum over the orbit of B of xi^F, as counts over
  // zeta_L. The table is scanned in storage order; the sorted form of each
  // index is merged from presorted low and high coordinate blocks.
  std::vector<u64> prev(lists[r].size() * L, 0);
  {
    const unsigned lo = (r + 1) / 2, hi = r - lo;
    auto sorted_block = [&](unsigned width) {
      u64 count = 1;
      for (unsigned i = 0; i < width; ++i) count *= D;
      std::vector<unsigned> out(count * width);
      for (u64 idx = 0; idx < count; ++idx) {
        u64 rest = idx;
        unsigned* dst = &out[idx * width];
        for (unsigned i = 0; i < width; ++i, rest /= D) dst[i] = static_cast<unsigned>(rest % D);
        std::sort(dst, dst + width);
      }
      return std::make_pair(count, out);
    };
    const auto [nlo, lo_sorted] = sorted_block(lo);
    const auto [nhi, hi_sorted] = sorted_block(hi);
    std::vector<unsigned> merged(r);
    const std::uint32_t* val = table.values.data();
    for (u64 h = 0; h < nhi; ++h) {
      const unsigned* hs = &hi_sorted[h * hi];
      for (u64 l = 0; l < nlo; ++l, ++val) {
        const unsigned* ls = &lo_sorted[l * lo];
        std::merge(ls, ls + lo, hs, hs + hi, merged.begin());
        ++prev[idx.rank(merged.data(), r) * L + *val * sM];
      }
    }
    for (std::size_t bi = 0; bi < lists[r].size(); ++bi) {
      const u64 stab = stabilizer_size(lists[r][bi]);
      for (unsigned x = 0; x < L; ++x) prev[bi * L + x] *= stab;
    }
  }

  // Stage t transforms one more coordinate; H_t is indexed by
  // (J of size t, B of size r - t) and symmetric in each.
  for (unsigned t = 1; t <= r; ++t) {
    const auto& js = lists[t];
    const auto& bs = lists[r - t];
    const std::size_t nb_prev = lists[r - t + 1].size();
    // Rank of B + {b} for every B of size r - t.
    std::vector<u64> grow(bs.size() * D);
    for (std::size_t bi = 0; bi < bs.size(); ++bi)
      for (unsigned v = 0; v < D; ++v) {
        std::vector<unsigned> bb = bs[bi];
        bb.insert(std::upper_bound(bb.begin(), bb.end(), v), v);
        grow[bi * D + v] = idx.rank(bb);
      }
    std::vector<u64> cur(js.size() * bs.size() * L, 0);
    for (std::size_t ji = 0; ji < js.size(); ++ji) {
      std::vector<unsigned> jrest = js[ji];
      const unsigned jmax = jrest.back();
      jrest.pop_back();
      const u64 jprev = idx.rank(jrest);
      for (std::size_t bi = 0; bi < bs.size(); ++bi) {
        u64* out = &cur[(ji * bs.size() + bi) * L];
        for (unsigned v = 0; v < D; ++v) {
          const u64* in = &prev[(jprev * nb_prev + grow[bi * D + v]) * L];
          const unsigned shift = static_cast<unsigned>((u64{jmax} * v) % D) * sD;
          for (unsigned x = 0, y = shift; x < L; ++x) {
            out[y] += in[x];
            if (++y == L) y = 0;
          }
        }
      }
    }
    prev = std::move(cur);
  }

  ClosedForm cf;
  cf.period = D;
  cf.arity = r;
  const BigInt den = power(BigInt(D), r);
  const auto& js = lists[r];
  cf.terms.reserve(js.size());
  for (std::size_t ji = 0; ji < js.size(); ++ji) {
    const u64 stab = stabilizer_size(js[ji]);
    std::vector<BigInt> coeffs(L);
    for (unsigned x = 0; x < L; ++x) {
      const u64 v = prev[ji * L + x];
      if (v % stab != 0)
        throw Error(ErrorCode::kNotRationalInteger, "orbit sum not divisible by stabilizer");
      coeffs[x] = big_from_u64(v / stab);
    }
    ClosedTerm term;
    term.multiset.assign(js[ji].rbegin(), js[ji].rend());
    term.eigenvalue = eigenvalue_for(term.multiset, D);
    term.coeff = CycloRational(CyclotomicInt(L, std::move(coeffs)), den);
    cf.terms.push_back(std::move(term));
  }
  return cf;
}

CyclotomicInt general_direct_sum(const PeriodicExponentTable& table, unsigned n) {
  table.validate();
  const unsigned r = table.arity, D = table.period;
  std::vector<BigInt> counts(table.xi_order);
  std::vector<u64> place(r, 1);
  for (unsigned i = 1; i < r; ++i) place[i] = place[i - 1] * D;
  auto rec = [&](auto&& self, unsigned level, unsigned rem, const BigInt& w, u64 at) -> void {
    if (level == r) {
      counts[table.values[at]] += w;
      return;
    }
    for (unsigned m = 0; m <= rem; ++m)
      self(self, level + 1, rem - m, w * binomial(rem, m), at + (m % D) * place[level]);
  };
  rec(rec, 0, n, BigInt(1), 0);
  return CyclotomicInt(table.xi_order, std::move(counts));
}

CycloRational rt_split_sum(unsigned n, unsigned t, unsigned D, const CyclotomicInt& a) {
  if (D == 0 || t >= D) throw Error(ErrorCode::kInvalidArgument, "need 0 <= t < D");
  CyclotomicInt acc(D);
  for (unsigned m = 0; m < D; ++m) {
    CyclotomicInt lam = CyclotomicInt::integer(1, D) + a * CyclotomicInt::root(D, -static_cast<std::int64_t>(m));
    acc += CyclotomicInt::root(D, static_cast<std::int64_t>(u64{t} * m % D)) * lam.pow(n);
  }
  return CycloRational(std::move(acc), BigInt(D));
}

CyclotomicInt rt_direct_sum(unsigned n, unsigned t, unsigned D, const CyclotomicInt& a) {
  CyclotomicInt acc(a.order());
  for (unsigned j = t; j <= n; j += D) acc += a.pow(j) * binomial(n, j);
  return acc;
}

ClosedForm twisted_closed_form(const PeriodicExponentTable& table, const CyclotomicInt& a) {
  table.validate();
  if (table.arity != 1) throw Error(ErrorCode::kArityMismatch, "twisted sums need an arity-1 table");
  const unsigned D = table.period, M = table.xi_order;
  ClosedForm cf;
  cf.period = D;
  cf.arity = 1;
  for (unsigned j = 0; j < D; ++j) {
    CyclotomicInt num(static_cast<unsigned>(lcm_u64(D, M)));
    for (unsigned t = 0; t < D; ++t)
      num += CyclotomicInt::root(M, table.values[t]) *
             CyclotomicInt::root(D, static_cast<std::int64_t>(u64{t} * j % D));
    ClosedTerm term;
    term.multiset = {j};
    term.eigenvalue = CyclotomicInt::integer(1, D) + a * CyclotomicInt::root(D, -static_cast<std::int64_t>(j));
    term.coeff = CycloRational(std::move(num), BigInt(D));
    cf.terms.push_back(std::move(term));
  }
  return cf;
}

CycloRational twisted_binomial_closed(unsigned n, const PeriodicExponentTable& table,
                                      const CyclotomicInt& a) {
  return twisted_closed_form(table, a).eval(n);
}

CyclotomicInt twisted_binomial_direct(unsigned n, const PeriodicExponentTable& table,
                                      const CyclotomicInt& a) {
  table.validate();
  CyclotomicInt acc(table.xi_order);
  CyclotomicInt apow = CyclotomicInt::integer(1, a.order());
  for (unsigned l = 0; l <= n; ++l) {
    acc += apow * CyclotomicInt::root(table.xi_order, table.values[l % table.period]) * binomial(n, l);
    apow *= a;
  }
  return acc;
}

PeriodicExponentTable exp_sum_table(const GaloisField& f, const SymmetricSpec& spec) {
  PeriodicExponentTable t;
  t.arity = f.order() - 1;
  t.period = static_cast<unsigned>(period(f.characteristic(), spec.max_degree()));
  t.xi_order = f.characteristic();
  t.values = periodic_trace_table(f, spec, t.period);
  return t;
}

ClosedForm exp_sum_closed(const GaloisField& f, const SymmetricSpec& spec) {
  return general_closed_coefficients(exp_sum_table(f, spec));
}

CyclotomicInt exp_sum_closed_eval(const ClosedForm& cf, std::uint32_t p, unsigned n) {
  const CycloRational v = cf.eval(n);
  auto whole = v.to_cyclotomic_int();
  if (!whole)
    throw Error(ErrorCode::kNotRationalInteger,
                "closed form value is not integral: " + v.to_string());
  auto down = whole->descend(p);
  if (!down)
    throw Error(ErrorCode::kNotRationalInteger,
                "closed form value does not lie in Z[zeta_" + std::to_string(p) + "]");
  return *down;
}

PeriodicExponentTable nega_hadamard_table(const std::vector<unsigned>& degrees) {
  if (degrees.empty()) throw Error(ErrorCode::kInvalidArgument, "no degrees given");
  const unsigned ks = *std::max_element(degrees.begin(), degrees.end());
  const auto D = static_cast<unsigned>(period(2, ks));
  return PeriodicExponentTable::from_function(1, D, 2, [&](const std::vector<unsigned>& b) {
    std::uint32_t s = 0;
    for (unsigned k : degrees) s += lucas_binomial_mod_p(b[0], k, 2);
    return s % 2;
  });
}

unsigned pisano_period(unsigned m) {
  if (m < 2) throw Error(ErrorCode::kInvalidArgument, "Pisano period needs m >= 2");
  unsigned a = 0, b = 1;
  for (unsigned i = 1;; ++i) {
    const unsigned c = (a + b) % m;
    a = b;
    b = c;
    if (a == 0 && b == 1) return i;
  }
}

PeriodicExponentTable pisano_table(unsigned m) {
  const unsigned pi = pisano_period(m);
  std::vector<unsigned> fib(pi);
  unsigned a = 0, b = 1;
  for (unsigned i = 0; i < pi; ++i) {
    fib[i] = a;
    const unsigned c = (a + b) % m;
    a = b;
    b = c;
  }
  return PeriodicExponentTable::from_function(
      1, pi, pi, [&](const std::vector<unsigned>& l) { return fib[l[0]]; });
}

}  // namespace symsum
