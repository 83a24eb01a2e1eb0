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
#include "symsum/polynomial.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "symsum/error.hpp"

namespace symsum {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear(const BigInt& root) {
  return IntPolynomial({BigInt(-root), BigInt(1)});
}

void IntPolynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<BigInt> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

IntPolynomial IntPolynomial::compose(const IntPolynomial& inner) const {
  IntPolynomial acc;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc *= inner;
    acc += constant(c_[i]);
  }
  return acc;
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive() const {
  if (is_zero()) return *this;
  BigInt g = content();
  if (sgn(leading()) < 0) g = -g;
  IntPolynomial r = *this;
  for (auto& v : r.c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return r;
}

bool IntPolynomial::divide_exact(const IntPolynomial& divisor, IntPolynomial* quotient) const {
  if (divisor.is_zero()) throw Error(ErrorCode::kInvalidArgument, "division by zero polynomial");
  if (is_zero()) {
    if (quotient) *quotient = IntPolynomial();
    return true;
  }
  if (degree() < divisor.degree()) return false;
  std::vector<BigRational> rem(c_.begin(), c_.end());
  const std::size_t dd = static_cast<std::size_t>(divisor.degree());
  std::vector<BigRational> q(c_.size() - dd);
  const BigRational lead(divisor.leading());
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (sgn(rem[i]) == 0) continue;
    BigRational f = rem[i] / lead;
    q[i - dd] = f;
    for (std::size_t k = 0; k <= dd; ++k) rem[i - dd + k] -= f * divisor.c_[k];
  }
  for (std::size_t i = 0; i < dd; ++i)
    if (sgn(rem[i]) != 0) return false;
  std::vector<BigInt> qi(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    q[i].canonicalize();
    if (q[i].get_den() != 1) return false;
    qi[i] = q[i].get_num();
  }
  if (quotient) *quotient = IntPolynomial(std::move(qi));
  return true;
}

bool poly_divides(const IntPolynomial& a, const IntPolynomial& b) {
  return b.divide_exact(a, nullptr);
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const BigInt& c = c_[i];
    if (sgn(c) == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

unsigned euler_phi(unsigned m) {
  unsigned result = m;
  for (unsigned d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      while (m % d == 0) m /= d;
      result -= result / d;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

IntPolynomial cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "cyclotomic order must be >= 1");
  static std::mutex mu;
  static std::map<unsigned, IntPolynomial> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  IntPolynomial acc = IntPolynomial::monomial(1, m) - IntPolynomial::constant(1);
  for (unsigned d = 1; d < m; ++d) {
    if (m % d) continue;
    IntPolynomial q;
    [[maybe_unused]] bool ok = acc.divide_exact(cyclotomic_polynomial(d), &q);
    acc = std::move(q);
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(m, acc);
  return acc;
}

}  // namespace symsum
