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
#include "symsum/symfun.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "symsum/error.hpp"
#include "symsum/msum.hpp"

namespace symsum {

namespace {

unsigned parse_uint(std::string_view s, std::string_view what) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorCode::kParse, "invalid " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

SymmetricSpec::SymmetricSpec(std::vector<SymmetricTerm> terms, const GaloisField& f)
    : terms_(std::move(terms)) {
  if (terms_.empty()) throw Error(ErrorCode::kInvalidArgument, "empty symmetric spec");
  std::sort(terms_.begin(), terms_.end(),
            [](const SymmetricTerm& a, const SymmetricTerm& b) { return a.k < b.k; });
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (t.k == 0) throw Error(ErrorCode::kInvalidArgument, "degrees must be >= 1");
    if (!f.contains(t.beta))
      throw Error(ErrorCode::kInvalidArgument,
                  "coefficient " + std::to_string(t.beta.code) + " is not in " + f.describe());
    if (t.beta.code == 0) throw Error(ErrorCode::kInvalidArgument, "coefficients must be nonzero");
    if (i > 0 && terms_[i - 1].k == t.k)
      throw Error(ErrorCode::kInvalidArgument, "repeated degree " + std::to_string(t.k));
  }
}

SymmetricSpec SymmetricSpec::parse(std::string_view text, const GaloisField& f) {
  std::vector<SymmetricTerm> terms;
  while (true) {
    auto comma = text.find(',');
    std::string_view item = strip(text.substr(0, comma));
    auto colon = item.find(':');
    SymmetricTerm t;
    t.k = parse_uint(strip(item.substr(0, colon)), "degree");
    t.beta = f.one();
    if (colon != std::string_view::npos)
      t.beta = Element{parse_uint(strip(item.substr(colon + 1)), "coefficient")};
    terms.push_back(t);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return SymmetricSpec(std::move(terms), f);
}

std::string SymmetricSpec::to_string() const {
  std::ostringstream os;
  for (std::size_t i = terms_.size(); i-- > 0;) {
    os << terms_[i].k << ":" << terms_[i].beta.code;
    if (i) os << ",";
  }
  return os.str();
}

Element esym_eval(const GaloisField& f, std::size_t n, unsigned k, std::span<const Element> x) {
  if (x.size() != n || k > n)
    throw Error(ErrorCode::kArityMismatch, "e_{n,k} needs k <= n and exactly n arguments");
  std::vector<Element> e(k + 1, f.zero());
  e[0] = f.one();
  for (std::size_t i = 0; i < n; ++i)
    for (unsigned j = std::min<unsigned>(k, static_cast<unsigned>(i + 1)); j >= 1; --j)
      e[j] = f.add(e[j], f.mul(e[j - 1], x[i]));
  return e[k];
}

void mul_binomial_power(const GaloisField& f, std::vector<Element>& poly, Element a,
                        std::uint64_t m) {
  if (m == 0) return;
  const std::size_t kmax = poly.size() - 1;
  const std::uint32_t p = f.characteristic();
  // Coefficients of (1 + a t)^m up to t^kmax.
  std::vector<Element> g(kmax + 1, f.zero());
  Element apow = f.one();
  for (std::size_t j = 0; j <= kmax && j <= m; ++j) {
    std::uint32_t c = lucas_binomial_mod_p(m, j, p);
    if (c) g[j] = f.mul(f.from_integer(c), apow);
    apow = f.mul(apow, a);
  }
  for (std::size_t k = kmax + 1; k-- > 0;) {
    Element acc = f.zero();
    for (std::size_t j = 0; j <= k; ++j)
      if (g[j].code && poly[k - j].code) acc = f.add(acc, f.mul(g[j], poly[k - j]));
    poly[k] = acc;
  }
}

std::vector<Element> lambda_vector(const GaloisField& f, unsigned kmax,
                                   std::span<const std::uint64_t> m) {
  std::vector<Element> poly(kmax + 1, f.zero());
  poly[0] = f.one();
  for (std::size_t i = 0; i < m.size(); ++i)
    mul_binomial_power(f, poly, Element{static_cast<std::uint32_t>(i + 1)}, m[i]);
  return poly;
}

Element LambdaEvaluator::operator()(std::int64_t k, std::span<const std::uint64_t> m) {
  return eval(k, m);
}

Element LambdaEvaluator::eval(std::int64_t k, std::span<const std::uint64_t> m) {
  if (k < 0) return f_.zero();
  const std::size_t l = m.size();
  if (l == 0) return k == 0 ? f_.one() : f_.zero();
  const Element a{static_cast<std::uint32_t>(l)};
  const std::uint32_t p = f_.characteristic();
  if (l == 1) {
    std::uint32_t c = lucas_binomial_mod_p(m[0], static_cast<std::uint64_t>(k), p);
    return c ? f_.mul(f_.from_integer(c), f_.pow(a, static_cast<std::uint64_t>(k))) : f_.zero();
  }
  std::vector<std::uint64_t> key(m.begin(), m.end());
  key.push_back(static_cast<std::uint64_t>(k));
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  Element acc = f_.zero();
  const std::uint64_t top = std::min<std::uint64_t>(m[l - 1], static_cast<std::uint64_t>(k));
  Element apow = f_.one();
  for (std::uint64_t j = 0; j <= top; ++j) {
    std::uint32_t c = lucas_binomial_mod_p(m[l - 1], j, p);
    if (c) {
      Element inner = eval(k - static_cast<std::int64_t>(j), m.first(l - 1));
      acc = f_.add(acc, f_.mul(f_.mul(f_.from_integer(c), apow), inner));
    }
    apow = f_.mul(apow, a);
  }
  memo_.emplace(std::move(key), acc);
  return acc;
}

Element lambda_eval(const GaloisField& f, std::int64_t k, std::span<const std::uint64_t> m) {
  LambdaEvaluator ev(f);
  return ev(k, m);
}

std::uint64_t period(std::uint32_t p, std::uint64_t k) {
  std::uint64_t d = p;
  while (d <= k) d *= p;
  return d;
}

Element lambda_periodic(const GaloisField& f, std::int64_t k, std::span<const std::int64_t> m,
                        std::uint64_t D) {
  std::vector<std::uint64_t> lifted(m.size());
  const auto d = static_cast<std::int64_t>(D);
  for (std::size_t i = 0; i < m.size(); ++i)
    lifted[i] = static_cast<std::uint64_t>(m[i] > 0 ? m[i] : m[i] + d * (-m[i] / d + 1));
  return lambda_eval(f, k, lifted);
}

std::uint32_t spec_trace(const GaloisField& f, const SymmetricSpec& spec,
                         std::span<const Element> esym) {
  Element v = f.zero();
  for (const auto& t : spec.terms())
    if (t.k < esym.size()) v = f.add(v, f.mul(t.beta, esym[t.k]));
  return f.trace(v);
}

std::vector<std::uint32_t> periodic_trace_table(const GaloisField& f, const SymmetricSpec& spec,
                                                std::uint64_t D, std::uint64_t cap) {
  const unsigned kmax = spec.max_degree();
  if (D <= kmax) throw Error(ErrorCode::kInvalidArgument, "period must exceed the max degree");
  const unsigned r = f.order() - 1;
  std::uint64_t size = 1;
  for (unsigned i = 0; i < r; ++i) {
    if (size > cap / D)
      throw Error(ErrorCode::kBudgetExceeded,
                  "periodic table D^(q-1) = " + std::to_string(D) + "^" + std::to_string(r) +
                      " exceeds the table budget");
    size *= D;
  }
  std::vector<std::uint32_t> table(size);

  // pw[i][b] = coefficients of (1 + alpha_{i+1} t)^b mod t^{kmax+1}.
  std::vector<std::vector<std::vector<Element>>> pw(r);
  for (unsigned i = 0; i < r; ++i) {
    pw[i].resize(D);
    for (std::uint64_t b = 0; b < D; ++b) {
      std::vector<Element> g(kmax + 1, f.zero());
      g[0] = f.one();
      mul_binomial_power(f, g, Element{i + 1}, b);
      pw[i][b] = std::move(g);
    }
  }
  // Leaf weights: h[b][i] = sum_j beta_j g_b[k_j - i] for the first
  // coordinate, so the leaf value is sum_i Tr(poly[i] h[b][i]), read from
  // tr[(b * (kmax+1) + i) * q + poly[i]].
  const std::uint32_t q = f.order(), p = f.characteristic();
  std::vector<std::uint32_t> tr(D * (kmax + 1) * q);
  for (std::uint64_t b = 0; b < D; ++b) {
    std::vector<Element> h(kmax + 1, f.zero());
    for (const auto& t : spec.terms())
      for (unsigned i = 0; i <= t.k; ++i) h[i] = f.add(h[i], f.mul(t.beta, pw[0][b][t.k - i]));
    for (unsigned i = 0; i <= kmax; ++i)
      for (std::uint32_t x = 0; x < q; ++x)
        tr[(b * (kmax + 1) + i) * q + x] = f.trace(f.mul(Element{x}, h[i]));
  }

  std::vector<std::vector<Element>> stack(r + 1, std::vector<Element>(kmax + 1, f.zero()));
  stack[r][0] = f.one();
  // Coordinates r..2 are fixed by the recursion (most significant first).
  auto rec = [&](auto&& self, unsigned level, std::uint64_t base) -> void {
    const auto& poly = stack[level];
    if (level == 1) {
      for (std::uint64_t b = 0; b < D; ++b) {
        const std::uint32_t* row = &tr[b * (kmax + 1) * q];
        std::uint32_t v = 0;
        for (unsigned i = 0; i <= kmax; ++i) v += row[i * q + poly[i].code];
        table[base + b] = v % p;
      }
      return;
    }
    std::uint64_t stride = 1;
    for (unsigned i = 1; i < level; ++i) stride *= D;
    auto& next = stack[level - 1];
    for (std::uint64_t b = 0; b < D; ++b) {
      const auto& g = pw[level - 1][b];
      for (unsigned k = 0; k <= kmax; ++k) {
        Element acc = f.zero();
        for (unsigned j = 0; j <= k; ++j)
          if (g[j].code && poly[k - j].code) acc = f.add(acc, f.mul(g[j], poly[k - j]));
        next[k] = acc;
      }
      self(self, level - 1, base + b * stride);
    }
  };
  rec(rec, r, 0);
  return table;
}

CyclotomicInt counts_to_cyclotomic(const std::vector<BigInt>& counts) {
  return CyclotomicInt(static_cast<unsigned>(counts.size()), counts);
}

std::vector<BigInt> brute_force_counts(const GaloisField& f, const SymmetricSpec& spec,
                                       unsigned n, std::uint64_t budget) {
  const std::uint32_t q = f.order();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (total > budget / q) throw Error(ErrorCode::kBudgetExceeded,
                                        std::to_string(q) + "^" + std::to_string(n) +
                                            " tuples exceed the budget of " + std::to_string(budget));
    total *= q;
  }
  if (total > budget)
    throw Error(ErrorCode::kBudgetExceeded, "tuple count exceeds the budget");

  const unsigned kmax = std::min(spec.max_degree(), n);
  std::vector<std::uint64_t> counts(f.characteristic(), 0);
  // e[i] holds e_{i,0..kmax} of the first i coordinates.
  std::vector<std::vector<Element>> e(n + 1, std::vector<Element>(kmax + 1, f.zero()));
  for (auto& row : e) row[0] = f.one();
  std::vector<std::uint32_t> digit(n, 0);

  auto refresh = [&](unsigned from) {
    for (unsigned i = from; i < n; ++i) {
      const Element x{digit[i]};
      const auto& prev = e[i];
      auto& cur = e[i + 1];
      for (unsigned j = 1; j <= kmax; ++j) cur[j] = f.add(prev[j], f.mul(prev[j - 1], x));
    }
  };
  refresh(0);
  while (true) {
    ++counts[spec_trace(f, spec, e[n])];
    // Odometer with the last coordinate fastest.
    int pos = static_cast<int>(n) - 1;
    while (pos >= 0 && digit[pos] + 1 == q) digit[pos--] = 0;
    if (pos < 0) break;
    ++digit[pos];
    refresh(static_cast<unsigned>(pos));
  }
  std::vector<BigInt> out(counts.size());
  for (std::size_t t = 0; t < counts.size(); ++t) out[t] = big_from_u64(counts[t]);
  return out;
}

CyclotomicInt brute_force_exp_sum(const GaloisField& f, const SymmetricSpec& spec, unsigned n,
                                  std::uint64_t budget) {
  return counts_to_cyclotomic(brute_force_counts(f, spec, n, budget));
}

}  // namespace symsum
