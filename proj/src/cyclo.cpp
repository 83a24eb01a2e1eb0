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
#include "symsum/cyclo.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "symsum/error.hpp"

namespace symsum {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_u64(a, b) * b;
}

namespace {

const std::vector<BigInt>& phi_coeffs(unsigned m) {
  thread_local std::map<unsigned, std::vector<BigInt>> cache;
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, cyclotomic_polynomial(m).coeffs()).first;
  return it->second;
}

unsigned common_order(unsigned a, unsigned b) {
  return static_cast<unsigned>(lcm_u64(a, b));
}

}  // namespace

CyclotomicInt::CyclotomicInt(unsigned order) {
  if (order == 0) throw Error(ErrorCode::kInvalidArgument, "cyclotomic order must be >= 1");
  c_.resize(order);
}

CyclotomicInt::CyclotomicInt(unsigned order, std::vector<BigInt> coeffs) : CyclotomicInt(order) {
  if (coeffs.size() > order)
    throw Error(ErrorCode::kInvalidArgument, "more coefficients than the cyclotomic order");
  for (std::size_t i = 0; i < coeffs.size(); ++i) c_[i] = std::move(coeffs[i]);
}

CyclotomicInt CyclotomicInt::integer(const BigInt& v, unsigned order) {
  CyclotomicInt r(order);
  r.c_[0] = v;
  return r;
}

CyclotomicInt CyclotomicInt::root(unsigned order, std::int64_t exponent) {
  CyclotomicInt r(order);
  std::int64_t e = exponent % static_cast<std::int64_t>(order);
  if (e < 0) e += order;
  r.c_[static_cast<std::size_t>(e)] = 1;
  return r;
}

CyclotomicInt CyclotomicInt::lifted(unsigned new_order) const {
  if (new_order == order()) return *this;
  if (new_order == 0 || new_order % order() != 0)
    throw Error(ErrorCode::kInvalidArgument, "lift target must be a multiple of the order");
  CyclotomicInt r(new_order);
  const unsigned step = new_order / order();
  for (unsigned j = 0; j < order(); ++j) r.c_[j * step] = c_[j];
  return r;
}

std::vector<BigInt> CyclotomicInt::canonical() const {
  const unsigned m = order();
  const auto& phi = phi_coeffs(m);
  const std::size_t deg = phi.size() - 1;
  std::vector<BigInt> w = c_;
  for (std::size_t i = m; i-- > deg;) {
    if (sgn(w[i]) == 0) continue;
    const BigInt f = w[i];
    for (std::size_t k = 0; k <= deg; ++k)
      if (sgn(phi[k]) != 0) w[i - deg + k] -= f * phi[k];
  }
  w.resize(deg);
  return w;
}

CyclotomicInt CyclotomicInt::canonicalized() const {
  return CyclotomicInt(order(), canonical());
}

bool CyclotomicInt::is_zero() const {
  for (const auto& v : canonical())
    if (sgn(v) != 0) return false;
  return true;
}

CyclotomicInt CyclotomicInt::conjugate(std::int64_t u) const {
  const std::int64_t m = order();
  std::int64_t uu = u % m;
  if (uu < 0) uu += m;
  if (gcd_u64(static_cast<std::uint64_t>(uu), static_cast<std::uint64_t>(m)) != 1 && m > 1)
    throw Error(ErrorCode::kNotAUnit,
                std::to_string(u) + " is not a unit modulo " + std::to_string(m));
  CyclotomicInt r(order());
  for (std::int64_t j = 0; j < m; ++j) r.c_[static_cast<std::size_t>((uu * j) % m)] += c_[j];
  return r;
}

std::optional<CyclotomicInt> CyclotomicInt::descend(unsigned target) const {
  const unsigned m = order();
  if (target == 0 || m % target != 0)
    throw Error(ErrorCode::kInvalidArgument, "descent target must divide the order");
  if (target == m) return *this;
  const std::vector<BigInt> value = canonical();
  const std::size_t rows = value.size();
  const std::size_t cols = euler_phi(target);
  const unsigned step = m / target;

  // Columns: canonical coordinates of zeta_target^i, i < phi(target); last
  // column holds the right-hand side.
  std::vector<std::vector<BigRational>> a(rows, std::vector<BigRational>(cols + 1));
  for (std::size_t i = 0; i < cols; ++i) {
    auto col = root(m, static_cast<std::int64_t>(i * step)).canonical();
    for (std::size_t r = 0; r < rows; ++r) a[r][i] = col[r];
  }
  for (std::size_t r = 0; r < rows; ++r) a[r][cols] = value[r];

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t piv = row;
    while (piv < rows && sgn(a[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[row]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || sgn(a[r][c]) == 0) continue;
      BigRational f = a[r][c] / a[row][c];
      for (std::size_t k = c; k <= cols; ++k) a[r][k] -= f * a[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (sgn(a[r][cols]) != 0) return std::nullopt;

  std::vector<BigInt> out(target);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) {
    BigRational x = a[i][cols] / a[i][pivot_col[i]];
    x.canonicalize();
    if (x.get_den() != 1) return std::nullopt;
    out[pivot_col[i]] = x.get_num();
  }
  return CyclotomicInt(target, std::move(out));
}

std::optional<BigInt> CyclotomicInt::as_integer() const {
  auto c = canonical();
  for (std::size_t i = 1; i < c.size(); ++i)
    if (sgn(c[i]) != 0) return std::nullopt;
  return c.empty() ? BigInt(0) : c[0];
}

std::complex<double> CyclotomicInt::to_complex() const {
  std::complex<double> acc = 0;
  const double m = order();
  for (unsigned j = 0; j < order(); ++j) {
    if (sgn(c_[j]) == 0) continue;
    acc += c_[j].get_d() * std::polar(1.0, 2.0 * std::numbers::pi * j / m);
  }
  return acc;
}

CyclotomicInt CyclotomicInt::pow(unsigned e) const {
  CyclotomicInt result = integer(1, order());
  CyclotomicInt base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string CyclotomicInt::to_string() const {
  auto c = canonical();
  if (auto v = as_integer()) return v->get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (sgn(c[j]) == 0) continue;
    BigInt mag = abs(c[j]);
    if (first)
      os << (sgn(c[j]) < 0 ? "-" : "");
    else
      os << (sgn(c[j]) < 0 ? " - " : " + ");
    first = false;
    if (j == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "z^" << j;
    }
  }
  os << " (order " << order() << ")";
  return os.str();
}

CyclotomicInt CyclotomicInt::operator-() const {
  CyclotomicInt r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
  const unsigned l = common_order(order(), o.order());
  if (l != order()) *this = lifted(l);
  const unsigned step = l / o.order();
  for (unsigned j = 0; j < o.order(); ++j) c_[j * step] += o.c_[j];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& o) {
  const unsigned l = common_order(order(), o.order());
  if (l != order()) *this = lifted(l);
  const unsigned step = l / o.order();
  for (unsigned j = 0; j < o.order(); ++j) c_[j * step] -= o.c_[j];
  return *this;
}

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
  const unsigned l = common_order(a.order(), b.order());
  const unsigned sa = l / a.order(), sb = l / b.order();
  CyclotomicInt r(l);
  for (unsigned i = 0; i < a.order(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (unsigned j = 0; j < b.order(); ++j) {
      if (sgn(b.c_[j]) == 0) continue;
      unsigned k = (i * sa + j * sb) % l;
      mpz_addmul(r.c_[k].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return r;
}

CyclotomicInt& CyclotomicInt::operator*=(const CyclotomicInt& o) { return *this = *this * o; }

CyclotomicInt& CyclotomicInt::operator*=(const BigInt& s) {
  for (auto& v : c_) v *= s;
  return *this;
}

bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) { return (a - b).is_zero(); }

CycloRational::CycloRational(CyclotomicInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (sgn(den_) == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  if (sgn(den_) < 0) {
    den_ = -den_;
    num_ = -num_;
  }
}

CycloRational CycloRational::normalized() const {
  std::vector<BigInt> c = num_.canonical();
  BigInt g = den_;
  for (const auto& v : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  BigInt d = den_;
  mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), g.get_mpz_t());
  return CycloRational(CyclotomicInt(num_.order(), std::move(c)), std::move(d));
}

BigInt CycloRational::to_integer() const {
  CycloRational n = normalized();
  auto v = n.num_.as_integer();
  if (!v || n.den_ != 1)
    throw Error(ErrorCode::kNotRationalInteger, "not a rational integer: " + n.to_string());
  return *v;
}

std::optional<CyclotomicInt> CycloRational::to_cyclotomic_int() const {
  std::vector<BigInt> c = num_.canonical();
  for (auto& v : c) {
    if (!mpz_divisible_p(v.get_mpz_t(), den_.get_mpz_t())) return std::nullopt;
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), den_.get_mpz_t());
  }
  return CyclotomicInt(num_.order(), std::move(c));
}

std::complex<double> CycloRational::to_complex() const {
  return num_.to_complex() / den_.get_d();
}

std::string CycloRational::to_string() const {
  CycloRational n = normalized();
  if (n.den_ == 1) return n.num_.to_string();
  std::string s = n.num_.to_string();
  if (n.num_.as_integer()) return s + "/" + n.den_.get_str();
  return "(" + s + ")/" + n.den_.get_str();
}

CycloRational& CycloRational::operator+=(const CycloRational& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
    return *this;
  }
  BigInt l;
  mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), o.den_.get_mpz_t());
  num_ *= BigInt(l / den_);
  num_ += o.num_ * BigInt(l / o.den_);
  den_ = l;
  return *this;
}

CycloRational& CycloRational::operator-=(const CycloRational& o) {
  return *this += CycloRational(-o.num_, o.den_);
}

CycloRational& CycloRational::operator*=(const CycloRational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  return *this;
}

bool operator==(const CycloRational& a, const CycloRational& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

}  // namespace symsum
