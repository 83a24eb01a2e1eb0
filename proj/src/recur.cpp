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
#include "symsum/recur.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "symsum/error.hpp"
#include "symsum/symfun.hpp"

namespace symsum {

namespace {

using CycloPoly = std::vector<CyclotomicInt>;  // constant term first

IntPolynomial expand_roots(const std::vector<CyclotomicInt>& roots, unsigned order) {
  CycloPoly poly{CyclotomicInt::integer(1, order)};
  for (const auto& v : roots) {
    CycloPoly next(poly.size() + 1, CyclotomicInt(order));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= v * poly[i];
    }
    poly = std::move(next);
  }
  std::vector<BigInt> c(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    auto v = poly[i].as_integer();
    if (!v)
      throw Error(ErrorCode::kNotRationalInteger,
                  "orbit product has a non-integer coefficient " + poly[i].to_string());
    c[i] = *v;
  }
  return IntPolynomial(std::move(c));
}

std::vector<long> key_of(const CyclotomicInt& v) {
  std::vector<long> k;
  for (const auto& c : v.canonical()) k.push_back(c.get_si());
  return k;
}

// Distinct Galois conjugates of v in Z[zeta_D].
std::vector<CyclotomicInt> galois_orbit(const CyclotomicInt& v) {
  const unsigned D = v.order();
  std::vector<CyclotomicInt> orbit;
  std::set<std::vector<long>> seen;
  for (unsigned u = 0; u < std::max(D, 1u); ++u) {
    if (D > 1 && gcd_u64(u, D) != 1) continue;
    if (D == 1 && u != 0) continue;
    CyclotomicInt c = v.conjugate(u).canonicalized();
    if (seen.insert(key_of(c)).second) orbit.push_back(std::move(c));
  }
  return orbit;
}

CyclotomicInt algebraic_value(unsigned D, const std::vector<unsigned>& a) {
  CyclotomicInt alpha = CyclotomicInt::integer(1, D);
  for (unsigned e : a) alpha += CyclotomicInt::root(D, e);
  return alpha;
}

template <typename Visit>
void for_each_multiset(unsigned size, unsigned D, Visit&& visit) {
  std::vector<unsigned> cur(size, 0);
  auto rec = [&](auto&& self, unsigned pos, unsigned hi) -> void {
    if (pos == size) {
      visit(cur);
      return;
    }
    for (unsigned v = 0; v <= hi; ++v) {
      cur[pos] = v;
      self(self, pos + 1, v);
    }
  };
  if (D == 0) return;
  rec(rec, 0, D - 1);
}

bool factor_less(const std::pair<IntPolynomial, unsigned>& a,
                 const std::pair<IntPolynomial, unsigned>& b) {
  if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
  return a.first.coeffs() < b.first.coeffs();
}

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, b);
    b = mulmod(b, b);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const BigInt& v) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), kPrime);
  return r.get_ui();
}

// Row-reduces a copy of `m` modulo kPrime; returns the original indices of
// the pivot rows.
std::vector<std::size_t> modular_pivot_rows(std::vector<std::vector<std::uint64_t>> m,
                                            std::size_t cols) {
  std::vector<std::size_t> order(m.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    std::swap(order[piv], order[row]);
    const std::uint64_t inv = powmod(m[row][c], kPrime - 2);
    for (std::size_t r = row + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      const std::uint64_t f = mulmod(m[r][c], inv);
      for (std::size_t k = c; k < cols; ++k) {
        const std::uint64_t sub = mulmod(f, m[row][k]);
        m[r][k] = m[r][k] >= sub ? m[r][k] - sub : m[r][k] + kPrime - sub;
      }
    }
    pivots.push_back(order[row]);
    ++row;
  }
  return pivots;
}

// Kernel vector of the exact rational system given by `rows`, with the
// largest free column set to one. Empty when the kernel is trivial.
std::vector<BigRational> rational_kernel_vector(std::vector<std::vector<BigRational>> a,
                                                std::size_t cols) {
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t piv = row;
    while (piv < a.size() && sgn(a[piv][c]) == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[row]);
    const BigRational inv = 1 / a[row][c];
    for (std::size_t k = c; k < cols; ++k) a[row][k] *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || sgn(a[r][c]) == 0) continue;
      const BigRational f = a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::size_t free_col = cols;
  for (std::size_t c = cols; c-- > 0;)
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  if (free_col == cols) return {};
  std::vector<BigRational> x(cols);
  x[free_col] = 1;
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = -a[i][free_col];
  return x;
}

IntPolynomial primitive_from_rational(const std::vector<BigRational>& x) {
  BigInt l = 1;
  for (const auto& v : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  std::vector<BigInt> c(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) c[i] = x[i].get_num() * (l / x[i].get_den());
  return IntPolynomial(std::move(c)).primitive();
}

std::vector<std::vector<BigInt>> coordinates(const std::vector<CyclotomicInt>& seq) {
  unsigned order = 1;
  for (const auto& s : seq) order = static_cast<unsigned>(lcm_u64(order, s.order()));
  std::vector<std::vector<BigInt>> out;
  out.reserve(seq.size());
  for (const auto& s : seq) out.push_back(s.lifted(order).canonical());
  return out;
}

RecurrenceCertificate verify_coords(const std::vector<std::vector<BigInt>>& s,
                                    const IntPolynomial& poly) {
  RecurrenceCertificate cert;
  cert.poly = poly;
  cert.checked_range = s.size();
  if (poly.is_zero()) throw Error(ErrorCode::kInvalidArgument, "zero polynomial");
  const auto d = static_cast<std::size_t>(poly.degree());
  if (s.size() <= d)
    throw Error(ErrorCode::kInsufficientTerms, "sequence must be longer than the degree");
  const std::size_t width = s.empty() ? 0 : s[0].size();
  cert.satisfied = true;
  BigInt acc;
  for (std::size_t n = 0; n + d < s.size() && cert.satisfied; ++n)
    for (std::size_t c = 0; c < width; ++c) {
      acc = 0;
      for (std::size_t i = 0; i <= d; ++i)
        if (sgn(poly.coeffs()[i]) != 0) acc += poly.coeffs()[i] * s[n + i][c];
      if (sgn(acc) != 0) {
        cert.satisfied = false;
        break;
      }
    }
  return cert;
}

}  // namespace

IntPolynomial FactoredPolynomial::expand() const {
  IntPolynomial r = IntPolynomial::constant(1);
  for (const auto& [f, m] : factors)
    for (unsigned i = 0; i < m; ++i) r *= f;
  return r;
}

std::string FactoredPolynomial::to_string() const {
  if (factors.empty()) return "1";
  std::string s;
  for (const auto& [f, m] : factors) {
    if (!s.empty()) s += "*";
    const bool bare = f == IntPolynomial{0, 1};
    s += bare ? "X" : "(" + f.to_string() + ")";
    if (m > 1) s += "^" + std::to_string(m);
  }
  return s;
}

IntPolynomial poly_from_roots(const std::vector<CyclotomicInt>& roots) {
  unsigned order = 1;
  for (const auto& r : roots) order = static_cast<unsigned>(lcm_u64(order, r.order()));
  return expand_roots(roots, order);
}

IntPolynomial minimal_poly_algebraic(unsigned D, const std::vector<unsigned>& a) {
  if (D == 0) throw Error(ErrorCode::kInvalidArgument, "D must be positive");
  for (unsigned e : a)
    if (e >= D) throw Error(ErrorCode::kInvalidArgument, "exponents must lie in [0, D)");
  return expand_roots(galois_orbit(algebraic_value(D, a)), D);
}

FactoredPolynomial char_poly_factored(unsigned q, unsigned D) {
  if (q < 2 || D == 0) throw Error(ErrorCode::kInvalidArgument, "need q >= 2 and D >= 1");
  std::map<std::vector<long>, std::pair<CyclotomicInt, unsigned>> values;
  for_each_multiset(q - 1, D, [&](const std::vector<unsigned>& a) {
    CyclotomicInt v = algebraic_value(D, a).canonicalized();
    auto [it, fresh] = values.try_emplace(key_of(v), v, 0u);
    ++it->second.second;
  });
  FactoredPolynomial out;
  std::set<std::vector<long>> done;
  for (const auto& [key, entry] : values) {
    if (done.count(key)) continue;
    auto orbit = galois_orbit(entry.first);
    for (const auto& c : orbit) {
      auto k = key_of(c);
      auto it = values.find(k);
      if (it == values.end() || it->second.second != entry.second)
        throw Error(ErrorCode::kNotRationalInteger, "eigenvalue multiset is not Galois stable");
      done.insert(std::move(k));
    }
    out.factors.emplace_back(expand_roots(orbit, D), entry.second);
  }
  std::sort(out.factors.begin(), out.factors.end(), factor_less);
  return out;
}

IntPolynomial char_poly(unsigned q, unsigned D) { return char_poly_factored(q, D).expand(); }

FactoredPolynomial lcm_char_poly_factored(unsigned q, unsigned D) {
  FactoredPolynomial f = char_poly_factored(q, D);
  for (auto& fm : f.factors) fm.second = 1;
  return f;
}

IntPolynomial lcm_char_poly(unsigned q, unsigned D) { return lcm_char_poly_factored(q, D).expand(); }

IntPolynomial lcm_char_poly(const GaloisField& f, unsigned k_max) {
  if (k_max == 0) throw Error(ErrorCode::kInvalidArgument, "k_max must be >= 1");
  return lcm_char_poly(f.order(), static_cast<unsigned>(period(f.characteristic(), k_max)));
}

BigInt char_poly_degree(unsigned q, unsigned D) { return binomial(D + q - 2, q - 1); }

BigInt pochhammer_degree_bound(unsigned q, unsigned D) { return binomial(D + q - 1, q); }

MinimalRecurrence minimal_integer_recurrence(const std::vector<CyclotomicInt>& seq,
                                             unsigned max_degree) {
  const std::size_t N = seq.size();
  if (N < 2 * static_cast<std::size_t>(max_degree) + 2)
    throw Error(ErrorCode::kInsufficientTerms,
                "need at least " + std::to_string(2 * max_degree + 2) + " terms, got " +
                    std::to_string(N));
  const auto s = coordinates(seq);
  const std::size_t width = s[0].size();
  bool all_zero = true;
  for (const auto& row : s)
    for (const auto& v : row)
      if (sgn(v) != 0) all_zero = false;
  if (all_zero) return {IntPolynomial::constant(1), true};

  std::vector<std::vector<std::uint64_t>> sm(N, std::vector<std::uint64_t>(width));
  for (std::size_t n = 0; n < N; ++n)
    for (std::size_t c = 0; c < width; ++c) sm[n][c] = reduce(s[n][c]);

  for (unsigned d = 1; d <= max_degree; ++d) {
    // Row (n, c) reads s(n)_c, s(n+1)_c, ..., s(n+d)_c.
    std::vector<std::vector<std::uint64_t>> rows;
    std::vector<std::pair<std::size_t, std::size_t>> label;
    for (std::size_t n = 0; n + d < N; ++n)
      for (std::size_t c = 0; c < width; ++c) {
        std::vector<std::uint64_t> r(d + 1);
        for (unsigned i = 0; i <= d; ++i) r[i] = sm[n + i][c];
        rows.push_back(std::move(r));
        label.emplace_back(n, c);
      }
    const auto pivots = modular_pivot_rows(rows, d + 1);
    if (pivots.size() > d) continue;

    std::vector<std::vector<BigRational>> exact;
    for (auto pr : pivots) {
      const auto [n, c] = label[pr];
      std::vector<BigRational> r(d + 1);
      for (unsigned i = 0; i <= d; ++i) r[i] = s[n + i][c];
      exact.push_back(std::move(r));
    }
    auto x = rational_kernel_vector(std::move(exact), d + 1);
    if (x.empty()) continue;
    IntPolynomial poly = primitive_from_rational(x);
    if (poly.degree() < 1) continue;
    if (verify_coords(s, poly).satisfied) return {poly, false};
  }
  throw Error(ErrorCode::kNoRecurrenceFound,
              "no integer recurrence of degree <= " + std::to_string(max_degree));
}

MinimalRecurrence minimal_integer_recurrence(const std::vector<BigInt>& seq, unsigned max_degree) {
  std::vector<CyclotomicInt> c;
  c.reserve(seq.size());
  for (const auto& v : seq) c.push_back(CyclotomicInt::integer(v));
  return minimal_integer_recurrence(c, max_degree);
}

RecurrenceCertificate verify_recurrence(const std::vector<CyclotomicInt>& seq,
                                        const IntPolynomial& poly) {
  return verify_coords(coordinates(seq), poly);
}

RecurrenceCertificate verify_recurrence(const std::vector<BigInt>& seq, const IntPolynomial& poly) {
  std::vector<CyclotomicInt> c;
  c.reserve(seq.size());
  for (const auto& v : seq) c.push_back(CyclotomicInt::integer(v));
  return verify_recurrence(c, poly);
}

FactoredPolynomial factor_over(const IntPolynomial& poly,
                               const std::vector<IntPolynomial>& candidates) {
  FactoredPolynomial out;
  IntPolynomial rest = poly;
  for (const auto& cand : candidates) {
    unsigned m = 0;
    IntPolynomial quo;
    while (cand.degree() > 0 && rest.divide_exact(cand, &quo)) {
      rest = quo;
      ++m;
    }
    if (m) out.factors.emplace_back(cand, m);
  }
  std::sort(out.factors.begin(), out.factors.end(), factor_less);
  if (rest.degree() > 0 || (rest.degree() == 0 && rest.leading() != 1))
    out.factors.emplace_back(rest, 1);
  return out;
}

}  // namespace symsum
