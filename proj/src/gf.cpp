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
#include "symsum/gf.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <sstream>

#include "symsum/error.hpp"

namespace symsum {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u32 inv_mod(u32 a, u32 p) {
  // p is prime; Fermat.
  u64 r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<u32>(r);
}

PrimePoly poly_mul_mod(const PrimePoly& a, const PrimePoly& b,
                       const PrimePoly& f, u32 p) {
  if (a.empty() || b.empty()) return {};
  std::vector<u64> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + static_cast<u64>(a[i]) * b[j]) % p;
  }
  const std::size_t d = f.size() - 1;  // f monic
  for (std::size_t i = prod.size(); i-- > d;) {
    u64 c = prod[i];
    if (!c) continue;
    for (std::size_t k = 0; k <= d; ++k)
      prod[i - d + k] = (prod[i - d + k] + (p - c) * f[k]) % p;
  }
  PrimePoly out(prod.begin(), prod.begin() + std::min(prod.size(), d));
  trim(out);
  return out;
}

PrimePoly poly_mod(PrimePoly a, const PrimePoly& b, u32 p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const u32 lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    u64 c = static_cast<u64>(a.back()) * lead_inv % p;
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t k = 0; k <= db; ++k)
      a[shift + k] = static_cast<u32>((a[shift + k] + (p - c) * b[k]) % p);
    trim(a);
  }
  return a;
}

PrimePoly poly_gcd(PrimePoly a, PrimePoly b, u32 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PrimePoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^e) mod f
PrimePoly frobenius_power_of_x(const PrimePoly& f, u32 p, u32 e) {
  PrimePoly x = poly_mod(PrimePoly{0, 1}, f, p);
  for (u32 i = 0; i < e; ++i) {
    // raise to the p-th power by square-and-multiply
    PrimePoly result{1}, base = x;
    u32 k = p;
    while (k) {
      if (k & 1) result = poly_mul_mod(result, base, f, p);
      base = poly_mul_mod(base, base, f, p);
      k >>= 1;
    }
    x = std::move(result);
  }
  return x;
}

std::vector<u32> prime_factors(u32 n) {
  std::vector<u32> out;
  for (u32 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

u32 parse_u32(std::string_view s, std::string_view what) {
  u32 v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw Error(ErrorCode::kParse,
                "invalid " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

std::string poly_to_string(const PrimePoly& f) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (!f[i]) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << f[i];
      continue;
    }
    if (f[i] != 1) os << f[i] << "*";
    os << "x";
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(const PrimePoly& f, std::uint32_t p) {
  if (f.size() < 2 || f.back() != 1) return false;
  const u32 r = static_cast<u32>(f.size() - 1);
  if (r == 1) return true;
  PrimePoly x = poly_mod(PrimePoly{0, 1}, f, p);
  PrimePoly full = frobenius_power_of_x(f, p, r);
  if (full != x) return false;
  for (u32 l : prime_factors(r)) {
    PrimePoly h = frobenius_power_of_x(f, p, r / l);
    // h - x
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    PrimePoly g = poly_gcd(f, h, p);
    if (g.size() != 1) return false;  // nonconstant common factor
  }
  return true;
}

PrimePoly smallest_irreducible(std::uint32_t p, std::uint32_t r) {
  // Enumerate (c0, ..., c_{r-1}) in lexicographic order, c0 most significant.
  PrimePoly f(r + 1, 0);
  f[r] = 1;
  for (;;) {
    if (is_irreducible(f, p)) return f;
    // Odometer with c_{r-1} fastest so that c0 is compared first.
    std::size_t i = r;
    while (i-- > 0) {
      if (++f[i] < p) break;
      f[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1))
      throw Error(ErrorCode::kInvalidArgument, "no irreducible polynomial found");
  }
}

GaloisField GaloisField::make(std::uint32_t p, std::uint32_t r,
                              std::optional<PrimePoly> modulus) {
  if (!is_prime(p))
    throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  if (r < 1) throw Error(ErrorCode::kDegreeMismatch, "extension degree must be >= 1");
  u64 q = 1;
  for (u32 i = 0; i < r; ++i) {
    q *= p;
    if (q > kMaxOrder)
      throw Error(ErrorCode::kInvalidArgument,
                  "field order exceeds " + std::to_string(kMaxOrder));
  }

  PrimePoly f;
  if (modulus) {
    f = *modulus;
    if (f.size() != r + 1)
      throw Error(ErrorCode::kDegreeMismatch,
                  "modulus has degree " + std::to_string(f.empty() ? 0 : f.size() - 1) +
                      ", expected " + std::to_string(r));
    for (u32 c : f)
      if (c >= p)
        throw Error(ErrorCode::kInvalidArgument, "modulus coefficient out of range");
    if (f.back() != 1)
      throw Error(ErrorCode::kDegreeMismatch, "modulus must be monic of degree " +
                                                  std::to_string(r));
    if (!is_irreducible(f, p))
      throw Error(ErrorCode::kReducibleModulus,
                  poly_to_string(f) + " is reducible over F_" + std::to_string(p));
  } else {
    f = smallest_irreducible(p, r);
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->r = r;
  t->q = static_cast<u32>(q);
  t->modulus = f;
  t->place.resize(r + 1);
  t->place[0] = 1;
  for (u32 i = 1; i <= r; ++i) t->place[i] = t->place[i - 1] * p;

  auto decode = [&](u32 code) {
    PrimePoly c(r);
    for (u32 i = 0; i < r; ++i) {
      c[i] = code % p;
      code /= p;
    }
    trim(c);
    return c;
  };
  auto encode = [&](const PrimePoly& c) {
    u32 code = 0;
    for (std::size_t i = c.size(); i-- > 0;) code = code * p + c[i];
    return code;
  };

  // Find a primitive element and build log/exp tables.
  const u32 group = t->q - 1;
  const auto factors = prime_factors(group);
  auto slow_pow = [&](const PrimePoly& g, u64 e) {
    PrimePoly result{1}, base = g;
    while (e) {
      if (e & 1) result = poly_mul_mod(result, base, f, p);
      base = poly_mul_mod(base, base, f, p);
      e >>= 1;
    }
    trim(result);
    return result;
  };
  u32 generator = 1;
  if (group > 1) {
    for (generator = 2; generator < t->q; ++generator) {
      PrimePoly g = decode(generator);
      bool ok = true;
      for (u32 l : factors) {
        if (slow_pow(g, group / l) == PrimePoly{1}) {
          ok = false;
          break;
        }
      }
      if (ok) break;
    }
  }
  t->exp.assign(group, 0);
  t->log.assign(t->q, 0);
  PrimePoly g = decode(generator), cur{1};
  for (u32 i = 0; i < group; ++i) {
    u32 code = encode(cur);
    t->exp[i] = code;
    t->log[code] = i;
    cur = poly_mul_mod(cur, g, f, p);
  }

  GaloisField field(t);
  if (t->q <= 256) {
    t->add.resize(static_cast<std::size_t>(t->q) * t->q);
    for (u32 a = 0; a < t->q; ++a)
      for (u32 b = 0; b < t->q; ++b) {
        u32 code = 0;
        for (u32 i = 0, x = a, y = b; i < r; ++i, x /= p, y /= p)
          code += ((x % p + y % p) % p) * t->place[i];
        t->add[static_cast<std::size_t>(a) * t->q + b] = static_cast<std::uint16_t>(code);
      }
  }

  t->trace.assign(t->q, 0);
  for (u32 a = 0; a < t->q; ++a) {
    Element x{a}, acc{0};
    for (u32 j = 0; j < r; ++j) {
      acc = field.add(acc, x);
      x = field.pow(x, p);
    }
    assert(acc.code < p);
    t->trace[a] = acc.code;
  }
  return field;
}

GaloisField GaloisField::parse(std::string_view spec) {
  std::string_view head = spec, tail;
  if (auto slash = spec.find('/'); slash != std::string_view::npos) {
    head = spec.substr(0, slash);
    tail = spec.substr(slash + 1);
  }
  u32 p = 0, r = 0;
  if (auto caret = head.find('^'); caret != std::string_view::npos) {
    p = parse_u32(head.substr(0, caret), "characteristic");
    r = parse_u32(head.substr(caret + 1), "extension degree");
  } else {
    u32 q = parse_u32(head, "field order");
    if (q < 2) throw Error(ErrorCode::kNotPrime, std::to_string(q) + " is not a prime power");
    auto f = prime_factors(q);
    if (f.size() != 1)
      throw Error(ErrorCode::kNotPrime, std::to_string(q) + " is not a prime power");
    p = f[0];
    for (u32 v = q; v > 1; v /= p) ++r;
  }
  std::optional<PrimePoly> modulus;
  if (spec.find('/') != std::string_view::npos) {
    PrimePoly c;
    std::size_t start = 0;
    while (start <= tail.size()) {
      auto comma = tail.find(',', start);
      if (comma == std::string_view::npos) comma = tail.size();
      c.push_back(parse_u32(tail.substr(start, comma - start), "modulus coefficient"));
      start = comma + 1;
    }
    modulus = std::move(c);
  }
  return make(p, r, std::move(modulus));
}

Element GaloisField::element(std::uint32_t code) const {
  if (code >= t_->q)
    throw Error(ErrorCode::kInvalidArgument,
                "element code " + std::to_string(code) + " outside [0, " +
                    std::to_string(t_->q) + ")");
  return Element{code};
}

std::vector<std::uint32_t> GaloisField::coeffs(Element x) const {
  std::vector<u32> c(t_->r);
  u32 code = x.code;
  for (u32 i = 0; i < t_->r; ++i, code /= t_->p) c[i] = code % t_->p;
  return c;
}

Element GaloisField::from_coeffs(std::span<const std::uint32_t> c) const {
  if (c.size() > t_->r)
    throw Error(ErrorCode::kInvalidArgument, "too many coefficients for field element");
  u32 code = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= t_->p)
      throw Error(ErrorCode::kInvalidArgument, "coefficient out of range");
    code = code * t_->p + c[i];
  }
  return Element{code};
}

Element GaloisField::from_integer(std::int64_t v) const {
  std::int64_t m = v % static_cast<std::int64_t>(t_->p);
  if (m < 0) m += t_->p;
  return Element{static_cast<u32>(m)};
}

Element GaloisField::add(Element x, Element y) const {
  if (t_->p == 2) return Element{x.code ^ y.code};
  if (!t_->add.empty())
    return Element{t_->add[static_cast<std::size_t>(x.code) * t_->q + y.code]};
  u32 code = 0;
  for (u32 i = 0, a = x.code, b = y.code; i < t_->r; ++i, a /= t_->p, b /= t_->p)
    code += ((a % t_->p + b % t_->p) % t_->p) * t_->place[i];
  return Element{code};
}

Element GaloisField::neg(Element x) const {
  if (t_->p == 2) return x;
  u32 code = 0;
  for (u32 i = 0, a = x.code; i < t_->r; ++i, a /= t_->p)
    code += ((t_->p - a % t_->p) % t_->p) * t_->place[i];
  return Element{code};
}

Element GaloisField::sub(Element x, Element y) const { return add(x, neg(y)); }

Element GaloisField::pow(Element x, std::uint64_t e) const {
  if (e == 0) return one();
  if (x.code == 0) return zero();
  u64 s = (static_cast<u64>(t_->log[x.code]) * (e % (t_->q - 1))) % (t_->q - 1);
  return Element{t_->exp[s]};
}

std::string GaloisField::modulus_string() const { return poly_to_string(t_->modulus); }

std::string GaloisField::describe() const {
  std::ostringstream os;
  os << "GF(" << t_->p << "^" << t_->r << ") mod " << modulus_string();
  return os.str();
}

}  // namespace symsum
