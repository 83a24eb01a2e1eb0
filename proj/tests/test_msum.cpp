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

#include <algorithm>
#include <numeric>

#include "oracle.hpp"
#include "symsum/error.hpp"
#include "symsum/msum.hpp"

using namespace symsum;

namespace {

SymmetricSpec random_spec(oracle::Rng& rng, const GaloisField& f, unsigned kmax) {
  std::vector<SymmetricTerm> terms;
  const unsigned count = static_cast<unsigned>(rng.range(1, std::min<unsigned>(3, kmax)));
  std::vector<unsigned> ks(kmax);
  std::iota(ks.begin(), ks.end(), 1u);
  for (unsigned i = 0; i < count; ++i) {
    std::swap(ks[i], ks[static_cast<std::size_t>(rng.range(i, kmax - 1))]);
    terms.push_back({ks[i], Element{static_cast<std::uint32_t>(rng.range(1, f.order() - 1))}});
  }
  return SymmetricSpec(terms, f);
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

// Number of partitions of n into at most q parts.
std::uint64_t partition_count(unsigned n, unsigned q) {
  std::vector<std::vector<std::uint64_t>> t(n + 1, std::vector<std::uint64_t>(q + 1, 0));
  for (unsigned j = 0; j <= q; ++j) t[0][j] = 1;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= q; ++j) t[i][j] = t[i][j - 1] + (i >= j ? t[i - j][j] : 0);
  return t[n][q];
}

}  // namespace

TEST_CASE("Lucas binomials agree with Pascal's triangle") {
  const auto t = oracle::pascal(200);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u})
    for (unsigned n = 0; n <= 200; ++n)
      for (unsigned k = 0; k <= n; ++k) {
        const BigInt r = t[n][k] % p;
        REQUIRE(lucas_binomial_mod_p(n, k, p) == r.get_ui());
      }
  CHECK(lucas_binomial_mod_p(3, 5, 2) == 0);
}

TEST_CASE("multinomial coefficients") {
  oracle::Rng rng(0x3117);
  for (int it = 0; it < 100; ++it) {
    const unsigned n = static_cast<unsigned>(rng.range(0, 25));
    std::vector<unsigned> parts(static_cast<std::size_t>(rng.range(0, 4)));
    unsigned left = n;
    for (auto& m : parts) left -= (m = static_cast<unsigned>(rng.range(0, left)));
    BigInt expect = factorial(n) / factorial(left);
    for (unsigned m : parts) expect /= factorial(m);
    CHECK(multinomial_coefficient(n, parts) == expect);
  }
  const std::vector<unsigned> bad{3, 3};
  CHECK_THROWS_AS(multinomial_coefficient(5, bad), Error);
}

TEST_CASE("multinomial lists") {
  const std::vector<long> l53{1, 5, 10, 10, 5, 1, 5, 20, 30, 20, 5, 10, 30, 30, 10, 10, 20, 10, 5, 5, 1};
  const auto got = multinomial_list(5, 3);
  REQUIRE(got.size() == l53.size());
  for (std::size_t i = 0; i < l53.size(); ++i) CHECK(got[i] == l53[i]);
  for (unsigned q = 2; q <= 5; ++q)
    for (unsigned n = 0; n <= 8; ++n) {
      const auto l = multinomial_list(n, q);
      CHECK(l.size() == binomial(n + q - 1, q - 1));
      BigInt total = 0;
      for (const auto& v : l) total += v;
      CHECK(total == power(BigInt(q), n));
    }
}

TEST_CASE("padded partitions") {
  const auto p = partitions_padded(4, 3);
  const std::vector<std::vector<unsigned>> expect{{4, 0, 0}, {3, 1, 0}, {2, 2, 0}, {2, 1, 1}};
  CHECK(p == expect);
  for (unsigned n = 0; n <= 14; ++n)
    for (unsigned q = 1; q <= 6; ++q) {
      const auto ps = partitions_padded(n, q);
      CHECK(ps.size() == partition_count(n, q));
      CHECK(std::is_sorted(ps.rbegin(), ps.rend()));
      for (const auto& v : ps) {
        CHECK(v.size() == q);
        CHECK(std::accumulate(v.begin(), v.end(), 0u) == n);
        CHECK(std::is_sorted(v.rbegin(), v.rend()));
      }
    }
}

TEST_CASE("multinomial and partition sums agree with brute force") {
  oracle::Rng rng(0xabcdef);
  for (const char* spec : {"2", "3", "4", "5", "7", "8", "9"}) {
    const auto f = GaloisField::parse(spec);
    const unsigned nmax = f.order() >= 7 ? 4 : 6;
    for (int it = 0; it < 5; ++it) {
      const auto s = random_spec(rng, f, 5);
      for (unsigned n = 0; n <= nmax; ++n) {
        const auto brute = brute_force_exp_sum(f, s, n);
        CHECK(exp_sum_multinomial(f, s, n) == brute);
        CHECK(exp_sum_partition(f, s, n) == brute);
        const auto counts = exp_sum_multinomial_counts(f, s, n);
        CHECK(counts == brute_force_counts(f, s, n));
      }
    }
  }
}

TEST_CASE("sequence recursion matches per-n sums") {
  oracle::Rng rng(0x5e9);
  for (const char* spec : {"2", "3", "4", "5", "8", "9"}) {
    const auto f = GaloisField::parse(spec);
    for (int it = 0; it < 3; ++it) {
      const auto s = random_spec(rng, f, 4);
      const auto seq = exp_sum_sequence(f, s, 14);
      const auto fallback = exp_sum_sequence(f, s, 14, 1);
      REQUIRE(seq.size() == 15);
      for (unsigned n = 0; n <= 14; ++n) {
        CHECK(seq[n] == exp_sum_multinomial(f, s, n));
        CHECK(fallback[n] == seq[n]);
      }
    }
  }
}

TEST_CASE("sections: balanced iff sublist sums agree") {
  oracle::Rng rng(0x5ec);
  for (const char* spec : {"2", "3", "4", "5", "8", "9"}) {
    const auto f = GaloisField::parse(spec);
    const auto p = f.characteristic();
    for (int it = 0; it < 8; ++it) {
      const auto s = random_spec(rng, f, 4);
      for (unsigned n = 1; n <= 6; ++n) {
        const auto rep = pq_section(f, s, n);
        REQUIRE(rep.sublists.size() == p);
        const bool equal = std::all_of(rep.sums.begin(), rep.sums.end(),
                                       [&](const BigInt& v) { return v == rep.sums[0]; });
        CHECK(rep.balanced == equal);
        CHECK(rep.balanced == exp_sum_multinomial(f, s, n).is_zero());
        if (rep.balanced) CHECK(rep.sums[0] == power(BigInt(f.order()), n) / p);
        if (rep.trivial) CHECK(rep.balanced);
        BigInt total = 0;
        for (const auto& v : rep.sums) total += v;
        CHECK(total == power(BigInt(f.order()), n));
        for (const auto& l : rep.sublists) CHECK(std::is_sorted(l.begin(), l.end()));
      }
    }
  }
}

TEST_CASE("Diophantine certificates") {
  oracle::Rng rng(0xd10);
  for (const char* spec : {"2", "4", "8"}) {
    const auto f = GaloisField::parse(spec);
    for (int it = 0; it < 6; ++it) {
      const auto s = random_spec(rng, f, 4);
      for (unsigned n = 1; n <= 7; ++n) {
        const auto sol = diophantine_solution(f, s, n);
        CHECK(sol.partitions.size() == sol.deltas.size());
        BigInt sum = 0;
        for (std::size_t i = 0; i < sol.partitions.size(); ++i) {
          sum += multinomial_coefficient(n, std::span(sol.partitions[i]).subspan(1)) * sol.deltas[i];
        }
        CHECK(sum == sol.weighted_sum);
        CHECK(sol.certified == exp_sum_multinomial(f, s, n).is_zero());
        CHECK(sol.certified == (sol.weighted_sum == 0));
      }
    }
  }
  const auto f3 = GaloisField::parse("3");
  try {
    diophantine_solution(f3, SymmetricSpec::parse("1", f3), 2);
    FAIL("odd characteristic accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kOddCharacteristic);
  }
}
