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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "oracle.hpp"
#include "symsum/error.hpp"
#include "symsum/gf.hpp"

using namespace symsum;

namespace {

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int moebius(unsigned n) {
  int mu = 1;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

// Number of monic irreducibles of degree r over F_p (necklace count).
std::uint64_t irreducible_count(unsigned p, unsigned r) {
  std::int64_t total = 0;
  for (unsigned d = 1; d <= r; ++d) {
    if (r % d) continue;
    std::int64_t pw = 1;
    for (unsigned i = 0; i < r / d; ++i) pw *= p;
    total += moebius(d) * pw;
  }
  return static_cast<std::uint64_t>(total / r);
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("is_prime agrees with trial division") {
  for (std::uint64_t n = 0; n < 5000; ++n) CHECK(is_prime(n) == trial_division_prime(n));
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(2147483647ull * 3));
}

TEST_CASE("irreducible counts match the necklace formula") {
  for (auto [p, r] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 6},
                                                                {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
    std::uint64_t count = 0;
    std::uint64_t total = 1;
    for (unsigned i = 0; i < r; ++i) total *= p;
    for (std::uint64_t c = 0; c < total; ++c) {
      PrimePoly f(r + 1, 0);
      std::uint64_t v = c;
      for (unsigned i = 0; i < r; ++i, v /= p) f[i] = static_cast<std::uint32_t>(v % p);
      f[r] = 1;
      count += is_irreducible(f, p);
    }
    CAPTURE(p);
    CAPTURE(r);
    CHECK(count == irreducible_count(p, r));
  }
}

TEST_CASE("default moduli") {
  CHECK(smallest_irreducible(2, 2) == PrimePoly{1, 1, 1});
  CHECK(smallest_irreducible(2, 3) == PrimePoly{1, 0, 1, 1});
  CHECK(smallest_irreducible(3, 2) == PrimePoly{1, 0, 1});
  CHECK(GaloisField::parse("4").describe() == "GF(2^2) mod x^2 + x + 1");
  CHECK(GaloisField::parse("7").describe() == "GF(7^1) mod x");
}

TEST_CASE("multiplication matches schoolbook arithmetic") {
  struct Case {
    unsigned p;
    PrimePoly mod;
  };
  for (const auto& c : std::vector<Case>{{2, {1, 1, 1}},
                                         {2, {1, 1, 0, 1}},
                                         {2, {1, 0, 1, 1}},
                                         {3, {2, 2, 1}},
                                         {3, {1, 0, 1}},
                                         {5, {2, 0, 1}},
                                         {2, {1, 1, 0, 0, 1}},
                                         {3, {1, 2, 0, 1}}}) {
    const auto f = GaloisField::make(c.p, static_cast<std::uint32_t>(c.mod.size() - 1), c.mod);
    const oracle::NaiveField g(c.p, {c.mod.begin(), c.mod.end()});
    REQUIRE(f.order() == g.q);
    for (unsigned a = 0; a < g.q; ++a) {
      for (unsigned b = 0; b < g.q; ++b) {
        CHECK(f.mul(Element{a}, Element{b}).code == g.mul(a, b));
        CHECK(f.add(Element{a}, Element{b}).code == g.add(a, b));
      }
      CHECK(f.trace(Element{a}) == g.trace(a));
    }
  }
}

TEST_CASE("field identities on random elements") {
  oracle::Rng rng(0x5eed01);
  for (const char* spec : {"4", "8", "9", "16", "25", "27", "49", "81", "125", "256", "1024"}) {
    const auto f = GaloisField::parse(spec);
    const auto q = f.order();
    const auto p = f.characteristic();
    for (int i = 0; i < 200; ++i) {
      const Element x{static_cast<std::uint32_t>(rng.range(0, q - 1))};
      const Element y{static_cast<std::uint32_t>(rng.range(0, q - 1))};
      const Element z{static_cast<std::uint32_t>(rng.range(0, q - 1))};
      CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
      CHECK(f.add(x, f.neg(x)) == f.zero());
      CHECK(f.sub(f.add(x, y), y) == x);
      CHECK(f.pow(x, q) == x);
      // Trace is additive and Frobenius-invariant.
      CHECK(f.trace(f.add(x, y)) == (f.trace(x) + f.trace(y)) % p);
      CHECK(f.trace(f.pow(x, p)) == f.trace(x));
      if (x != f.zero()) CHECK(f.pow(x, q - 1) == f.one());
    }
    // Tr(c x) = c Tr(x) for c in the prime field.
    for (std::uint32_t c = 0; c < p; ++c) {
      const Element x{static_cast<std::uint32_t>(rng.range(0, q - 1))};
      CHECK(f.trace(f.mul(f.from_integer(c), x)) == (c * f.trace(x)) % p);
    }
  }
}

TEST_CASE("trace is surjective and balanced") {
  for (const char* spec : {"2", "3", "4", "8", "9", "27"}) {
    const auto f = GaloisField::parse(spec);
    std::vector<unsigned> hist(f.characteristic(), 0);
    for (std::uint32_t a = 0; a < f.order(); ++a) ++hist[f.trace(Element{a})];
    for (unsigned h : hist) CHECK(h == f.order() / f.characteristic());
  }
}

TEST_CASE("coefficient round trip and integer images") {
  const auto f = GaloisField::parse("27");
  for (std::uint32_t a = 0; a < 27; ++a) {
    const auto c = f.coeffs(Element{a});
    CHECK(f.from_coeffs(c) == Element{a});
    CHECK(c[0] == a % 3);
  }
  CHECK(f.from_integer(-1) == Element{2});
  CHECK(f.from_integer(7) == Element{1});
  CHECK(f.element(26).code == 26);
}

TEST_CASE("parse accepts explicit moduli") {
  const auto a = GaloisField::parse("8/1,1,0,1");
  const auto b = GaloisField::parse("2^3/1,0,1,1");
  CHECK(a.modulus() == PrimePoly{1, 1, 0, 1});
  CHECK(b.modulus() == PrimePoly{1, 0, 1, 1});
  CHECK(a.modulus_string() == "x^3 + x + 1");
  CHECK(GaloisField::parse("3^1").order() == 3);
}

TEST_CASE("parse and construction errors") {
  CHECK(code_of([] { GaloisField::parse("6"); }) == ErrorCode::kNotPrime);
  CHECK(code_of([] { GaloisField::parse("1"); }) == ErrorCode::kNotPrime);
  CHECK(code_of([] { GaloisField::parse("8/1,0,0,1"); }) == ErrorCode::kReducibleModulus);
  CHECK(code_of([] { GaloisField::parse("8/1,1,1"); }) == ErrorCode::kDegreeMismatch);
  CHECK(code_of([] { GaloisField::parse("abc"); }) == ErrorCode::kParse);
  CHECK(code_of([] { GaloisField::parse(""); }) == ErrorCode::kParse);
  CHECK(code_of([] { GaloisField::parse("2^"); }) == ErrorCode::kParse);
  CHECK(code_of([] { GaloisField::parse("4").element(4); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { GaloisField::make(2, 20); }) == ErrorCode::kInvalidArgument);
}
