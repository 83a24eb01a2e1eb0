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
// Acceptance harness: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "symsum/closed.hpp"
#include "symsum/error.hpp"
#include "symsum/msum.hpp"
#include "symsum/recur.hpp"
#include "symsum/symfun.hpp"

using namespace symsum;

namespace {

int g_failures = 0;

void report(const std::string& name, const std::function<bool(std::string&)>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s  %s  (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), secs,
              detail.empty() ? "" : "  ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

CyclotomicInt all_methods(const GaloisField& f, const SymmetricSpec& s, unsigned n, bool& agree) {
  const auto brute = brute_force_exp_sum(f, s, n);
  const auto multi = exp_sum_multinomial(f, s, n);
  const auto part = exp_sum_partition(f, s, n);
  const auto closed = exp_sum_closed_eval(exp_sum_closed(f, s), f.characteristic(), n);
  agree = brute == multi && multi == part && part == closed;
  return multi;
}

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::vector<BigInt> sorted(std::vector<BigInt> v) {
  std::sort(v.begin(), v.end());
  return v;
}

IntPolynomial product(std::initializer_list<IntPolynomial> fs) {
  IntPolynomial out{1};
  for (const auto& f : fs) out *= f;
  return out;
}

IntPolynomial pw(const IntPolynomial& f, unsigned e) {
  IntPolynomial out{1};
  while (e--) out *= f;
  return out;
}

// Sequence S(1..n_max) for a single spec.
std::vector<CyclotomicInt> from_one(const GaloisField& f, const SymmetricSpec& s, unsigned n_max) {
  auto seq = exp_sum_sequence(f, s, n_max);
  seq.erase(seq.begin());
  return seq;
}

// ---------------------------------------------------------------------------
// 1. Reference values

void reference_values() {
  const auto f3 = GaloisField::parse("3");
  const auto f4 = GaloisField::parse("4");

  report("S_F3(e_{5,3}) = 0 by brute, multinomial, partition, closed", [&](std::string& d) {
    bool agree = false;
    const auto v = all_methods(f3, SymmetricSpec::parse("3", f3), 5, agree);
    d = "value " + v.to_string();
    return agree && v.is_zero();
  });

  report("S_F3(e_{6,5} + e_{6,3}) = 0 by brute, multinomial, partition, closed", [&](std::string& d) {
    bool agree = false;
    const auto v = all_methods(f3, SymmetricSpec::parse("5,3", f3), 6, agree);
    d = "value " + v.to_string();
    return agree && v.is_zero();
  });

  report("S_F4((1+a)e_{8,3} + (1+a)e_{8,2} + a e_{8,1}) = 0, four methods", [&](std::string& d) {
    // alpha has code 2 and 1 + alpha code 3 under x^2 + x + 1.
    const auto s = SymmetricSpec::parse("3:3,2:3,1:2", f4);
    bool agree = false;
    const auto v = all_methods(f4, s, 8, agree);
    d = "value " + v.to_string() + ", 65536 tuples enumerated";
    return agree && v.is_zero();
  });

  report("S_F4(e_{4,3}) = 64", [&](std::string& d) {
    bool agree = false;
    const auto v = all_methods(f4, SymmetricSpec::parse("3", f4), 4, agree);
    d = "value " + v.to_string();
    return agree && v.as_integer() == BigInt(64);
  });

  report("S_F4(e_{n,3}) = 4^{n-1} + 3*2^{n-1} - (3/4)((2i)^n + (-2i)^n), n = 3..12", [&](std::string& d) {
    const auto s = SymmetricSpec::parse("3", f4);
    const auto cf = exp_sum_closed(f4, s);
    const auto two_i = CyclotomicInt::root(4, 1) * BigInt(2);
    const auto minus_two_i = CyclotomicInt::root(4, 3) * BigInt(2);
    for (unsigned n = 3; n <= 12; ++n) {
      const CycloRational formula =
          CycloRational(CyclotomicInt::integer(power(4, n - 1) + 3 * power(2, n - 1), 4)) -
          CycloRational(CyclotomicInt(two_i.pow(n) + minus_two_i.pow(n)) * BigInt(3), 4);
      const auto want = formula.to_cyclotomic_int();
      if (!want) return false;
      for (const auto& got : {exp_sum_multinomial(f4, s, n), exp_sum_partition(f4, s, n),
                              exp_sum_closed_eval(cf, 2, n)}) {
        if (!(got == *want)) {
          d = "mismatch at n = " + std::to_string(n);
          return false;
        }
      }
      if (n <= 6 && !(brute_force_exp_sum(f4, s, n) == *want)) return false;
    }
    return true;
  });

  report("L(5;3) matches the printed list", [&](std::string&) {
    return multinomial_list(5, 3) ==
           ints({1, 5, 10, 10, 5, 1, 5, 20, 30, 20, 5, 10, 30, 30, 10, 10, 20, 10, 5, 5, 1});
  });

  report("L(6;3) matches the printed list", [&](std::string&) {
    return multinomial_list(6, 3) == ints({1,  6,  15, 20, 15, 6,  1,  6,  30, 60, 60, 30, 6,  15,
                                           60, 90, 60, 15, 20, 60, 60, 20, 15, 30, 15, 6,  6,  1});
  });

  report("3-section of e_{5,3}: printed sublists, trivial", [&](std::string&) {
    const auto rep = pq_section(f3, SymmetricSpec::parse("3", f3), 5);
    const auto l = ints({1, 5, 5, 10, 10, 20, 30});
    return rep.sublists.size() == 3 && sorted(rep.sublists[0]) == l && sorted(rep.sublists[1]) == l &&
           sorted(rep.sublists[2]) == l && rep.balanced && rep.trivial;
  });

  report("3-section of e_{6,5} + e_{6,3}: printed sublists, nontrivial", [&](std::string&) {
    const auto rep = pq_section(f3, SymmetricSpec::parse("5,3", f3), 6);
    const auto l1 = ints({1, 6, 6, 15, 15, 20, 30, 30, 30, 90});
    const auto l2 = ints({1, 6, 6, 15, 15, 20, 60, 60, 60});
    return rep.sublists.size() == 3 && sorted(rep.sublists[0]) == l1 && sorted(rep.sublists[1]) == l2 &&
           sorted(rep.sublists[2]) == l2 && rep.balanced && !rep.trivial;
  });

  report("F4, n = 8 delta vector (15 entries) certifies sum C(8; lambda_j) delta_j = 0", [&](std::string& d) {
    const auto sol = diophantine_solution(f4, SymmetricSpec::parse("3:3,2:3,1:2", f4), 8);
    const std::vector<std::vector<unsigned>> parts{{8},       {7, 1},       {6, 2},       {6, 1, 1},
                                                   {5, 3},    {5, 2, 1},    {5, 1, 1, 1}, {4, 4},
                                                   {4, 3, 1}, {4, 2, 2},    {4, 2, 1, 1}, {3, 3, 2},
                                                   {3, 3, 1, 1}, {3, 2, 2, 1}, {2, 2, 2, 2}};
    const auto deltas = ints({4, -4, -4, 4, -4, 8, -4, 6, -8, -4, 4, 4, 2, -4, 1});
    BigInt sum = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
      sum += multinomial_coefficient(8, std::span(parts[i]).subspan(1)) * deltas[i];
    d = "independent weighted sum " + sum.get_str();
    return sol.partitions == parts && sol.deltas == deltas && sol.certified && sum == 0;
  });
}

// ---------------------------------------------------------------------------
// 2. Recurrences

void recurrences() {
  const IntPolynomial X{0, 1};
  auto lin = [](long c) { return IntPolynomial::linear(c); };

  report("mu_{4,3} from S_F4(e_{n,3}), n <= 20, is (X-4)(X-2)(X^2+4) and divides P, lcm", [&](std::string& d) {
    const auto f = GaloisField::parse("4");
    const auto seq = from_one(f, SymmetricSpec::parse("3", f), 20);
    const auto mr = minimal_integer_recurrence(seq, 9);
    const auto want = product({lin(4), lin(2), IntPolynomial{4, 0, 1}});
    d = mr.poly.to_string();
    return mr.poly == want && poly_divides(want, char_poly(4, 4)) && poly_divides(want, lcm_char_poly(4, 4));
  });

  report("mu_{8,3} from S_F8(e_{n,3}), n <= 40, matches the printed product and divides P, lcm",
         [&](std::string& d) {
           const auto f = GaloisField::parse("8");
           const auto seq = from_one(f, SymmetricSpec::parse("3", f), 40);
           const auto mr = minimal_integer_recurrence(seq, 19);
           const auto want = product({lin(4), lin(-4), IntPolynomial{16, 0, 1}, IntPolynomial{32, -8, 1},
                                      IntPolynomial{8, -4, 1}, IntPolynomial{8, 4, 1}});
           d = "degree " + std::to_string(mr.poly.degree());
           return mr.poly == want && poly_divides(want, char_poly(8, 4)) &&
                  poly_divides(want, lcm_char_poly(8, 4));
         });

  report("P_{4,3} equals the printed factorization", [&](std::string&) {
    const auto want = product({lin(4), pw(lin(2), 2), pw(X, 2), lin(-2), IntPolynomial{4, 0, 1},
                               IntPolynomial{10, -6, 1}, IntPolynomial{8, -4, 1}, pw(IntPolynomial{2, -2, 1}, 2),
                               IntPolynomial{10, -2, 1}, IntPolynomial{2, 2, 1}});
    return char_poly(4, 4) == want && char_poly_factored(4, 4).expand() == want;
  });

  report("mu_{3,7} from S_F3(e_{n,7}), n <= 100, equals P_{3,7}/X (degree 44)", [&](std::string& d) {
    const auto f = GaloisField::parse("3");
    const auto seq = from_one(f, SymmetricSpec::parse("7", f), 100);
    const auto mr = minimal_integer_recurrence(seq, 49);
    IntPolynomial want;
    if (!char_poly(3, 9).divide_exact(X, &want)) return false;
    d = "degree " + std::to_string(mr.poly.degree());
    return mr.poly == want && want.degree() == 44;
  });

  report("xi_5 triple sum: minimal recurrence is X^5-5X^4+10X^3-10X^2+5X-244, dividing deg-35 P_S",
         [&](std::string& d) {
           const auto t = PeriodicExponentTable::from_function(
               3, 5, 5, [](const std::vector<unsigned>& b) { return (b[0] + b[1] + b[2]) % 5; });
           const auto cf = general_closed_coefficients(t);
           std::vector<CyclotomicInt> seq;
           for (unsigned n = 0; n <= 14; ++n) {
             seq.push_back(general_direct_sum(t, n));
             if (!(cf.eval(n) == CycloRational(seq.back()))) return false;
           }
           const auto mr = minimal_integer_recurrence(seq, 6);
           const IntPolynomial printed{-244, 5, -10, 10, -5, 1};
           const auto P = char_poly(4, 5);
           std::ostringstream os;
           os << "recovered " << mr.poly.to_string() << "; printed polynomial annihilates: "
              << (verify_recurrence(seq, printed).satisfied ? "yes" : "no")
              << ", divides P_S: " << (poly_divides(printed, P) ? "yes" : "no") << ", deg P_S = " << P.degree();
           d = os.str();
           return mr.poly == printed && poly_divides(mr.poly, P) && P.degree() == 35;
         });

  report("nega-Hadamard [2], [3], [2,3], n = 1..16, annihilated by (X-2) prod Phi_{2^j}(X-1)",
         [&](std::string& d) {
           for (const auto& ks : std::vector<std::vector<unsigned>>{{2}, {3}, {2, 3}}) {
             const auto t = nega_hadamard_table(ks);
             const auto i4 = CyclotomicInt::root(4, 1);
             IntPolynomial ann = lin(2);
             for (unsigned m = 4; m <= t.period; m *= 2) ann *= cyclotomic_polynomial(m).compose(lin(1));
             std::vector<CyclotomicInt> seq;
             const auto C = oracle::pascal(16);
             for (unsigned n = 1; n <= 16; ++n) {
               // Independent evaluation of sum_l C(n,l) i^l (-1)^{sum_j C(l,k_j)}.
               CyclotomicInt direct(4);
               for (unsigned l = 0; l <= n; ++l) {
                 unsigned parity = 0;
                 for (unsigned k : ks) parity += l >= k ? BigInt(C[l][k] % 2).get_ui() : 0;
                 direct += CyclotomicInt::root(4, l + 2 * parity) * C[n][l];
               }
               if (!(twisted_binomial_closed(n, t, i4) == CycloRational(direct))) return false;
               seq.push_back(direct);
             }
             if (!verify_recurrence(seq, ann).satisfied) {
               d = "fails for degree list of size " + std::to_string(ks.size());
               return false;
             }
           }
           return true;
         });
}

// ---------------------------------------------------------------------------
// 3. Oracle grid

void oracle_grid() {
  for (const char* field : {"2", "3", "4", "5", "7", "8", "9"}) {
    report(std::string("oracle grid GF(") + field + "): brute = multinomial = partition = closed, n <= 6",
           [&](std::string& d) {
             const auto f = GaloisField::parse(field);
             const std::uint64_t budget = 531441;  // 9^6
             oracle::Rng rng(0xacce97 + f.order());
             std::vector<SymmetricSpec> specs;
             for (unsigned k = 1; k <= 6; ++k) specs.emplace_back(std::vector<SymmetricTerm>{{k, f.one()}}, f);
             const std::size_t singles = specs.size();
             while (specs.size() < singles + 30) {
               std::vector<SymmetricTerm> terms;
               std::vector<unsigned> ks{1, 2, 3, 4, 5, 6};
               const auto count = static_cast<unsigned>(rng.range(2, 4));
               for (unsigned i = 0; i < count; ++i) {
                 std::swap(ks[i], ks[static_cast<std::size_t>(rng.range(i, 5))]);
                 terms.push_back({ks[i], Element{static_cast<std::uint32_t>(rng.range(1, f.order() - 1))}});
               }
               specs.emplace_back(terms, f);
             }
             std::size_t checks = 0;
             for (std::size_t i = 0; i < specs.size(); ++i) {
               const auto& s = specs[i];
               const auto cf = exp_sum_closed(f, s);
               const unsigned n0 = i < singles ? s.max_degree() : 1;
               for (unsigned n = n0; n <= 6; ++n) {
                 const auto brute = brute_force_exp_sum(f, s, n, budget);
                 const bool ok = brute == exp_sum_multinomial(f, s, n) && brute == exp_sum_partition(f, s, n) &&
                                 brute == exp_sum_closed_eval(cf, f.characteristic(), n);
                 if (!ok) {
                   d = "mismatch for spec " + s.to_string() + " at n = " + std::to_string(n);
                   return false;
                 }
                 ++checks;
               }
             }
             d = std::to_string(specs.size()) + " specs, " + std::to_string(checks) + " (spec, n) pairs";
             return true;
           });
  }
}

// ---------------------------------------------------------------------------
// 4. Invariant suites

void invariants() {
  oracle::Rng rng(0x1a7a);

  report("Lambda(k, m(x)) = e_{n,k}(x) on random tuples", [&](std::string&) {
    for (const char* field : {"2", "3", "4", "5", "8", "9", "16", "25"}) {
      const auto f = GaloisField::parse(field);
      const oracle::NaiveField g(f.characteristic(), {f.modulus().begin(), f.modulus().end()});
      for (int it = 0; it < 30; ++it) {
        const auto n = static_cast<unsigned>(rng.range(0, 10));
        std::vector<unsigned> raw(n);
        std::vector<std::uint64_t> m(f.order() - 1, 0);
        for (auto& x : raw) {
          x = static_cast<unsigned>(rng.range(0, f.order() - 1));
          if (x) ++m[x - 1];
        }
        const auto lam = lambda_vector(f, n, m);
        for (unsigned k = 0; k <= n; ++k)
          if (lam[k].code != oracle::esym(g, k, raw)) return false;
      }
    }
    return true;
  });

  report("Lambda^{(p)} is D-periodic in every coordinate", [&](std::string&) {
    for (const char* field : {"2", "3", "4", "5", "7", "8", "9"}) {
      const auto f = GaloisField::parse(field);
      for (unsigned k = 1; k <= 8; ++k) {
        const auto D = period(f.characteristic(), k);
        for (int it = 0; it < 4; ++it) {
          std::vector<std::uint64_t> m(f.order() - 1);
          for (auto& v : m) v = static_cast<std::uint64_t>(rng.range(0, 2 * static_cast<std::int64_t>(D)));
          const auto base = lambda_vector(f, k, m)[k];
          for (std::size_t j = 0; j < m.size(); ++j) {
            auto shifted = m;
            shifted[j] += D;
            if (!(lambda_vector(f, k, shifted)[k] == base)) return false;
          }
        }
      }
    }
    return true;
  });

  report("trace additivity and Frobenius invariance", [&](std::string&) {
    for (const char* field : {"4", "8", "9", "16", "27", "25", "49", "64", "81", "121", "243", "256"}) {
      const auto f = GaloisField::parse(field);
      const oracle::NaiveField g(f.characteristic(), {f.modulus().begin(), f.modulus().end()});
      const auto p = f.characteristic();
      for (int it = 0; it < 50; ++it) {
        const Element x{static_cast<std::uint32_t>(rng.range(0, f.order() - 1))};
        const Element y{static_cast<std::uint32_t>(rng.range(0, f.order() - 1))};
        if (f.trace(f.add(x, y)) != (f.trace(x) + f.trace(y)) % p) return false;
        if (f.trace(f.pow(x, p)) != f.trace(x)) return false;
        if (f.trace(x) != g.trace(x.code)) return false;
      }
    }
    return true;
  });

  report("cyclotomic ring axioms with float shadow (1e-9 relative)", [&](std::string&) {
    for (unsigned m : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 12u, 16u, 18u, 25u, 27u, 30u}) {
      auto rnd = [&] {
        std::vector<BigInt> c(m);
        for (auto& x : c) x = static_cast<long>(rng.range(-50, 50));
        return CyclotomicInt(m, c);
      };
      for (int it = 0; it < 20; ++it) {
        const auto a = rnd(), b = rnd(), c = rnd();
        if (!(a * (b + c) == a * b + a * c) || !((a * b) * c == a * (b * c)) || !(a + b == b + a)) return false;
        const auto sa = oracle::complex_of(m, a.coeffs()), sb = oracle::complex_of(m, b.coeffs());
        if (!oracle::close(oracle::complex_of(m, (a * b).coeffs()), sa * sb)) return false;
        if (!oracle::close((a - b).to_complex(), sa - sb)) return false;
      }
    }
    return true;
  });

  report("Lucas binomials mod p equal direct binomials, n, k <= 200", [&](std::string&) {
    const auto t = oracle::pascal(200);
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u})
      for (unsigned n = 0; n <= 200; ++n)
        for (unsigned k = 0; k <= 200; ++k) {
          const std::uint32_t want = k <= n ? static_cast<std::uint32_t>(BigInt(t[n][k] % p).get_ui()) : 0;
          if (lucas_binomial_mod_p(n, k, p) != want) return false;
        }
    return true;
  });

  report("balanced <=> equal sublist sums (common value q^n/p)", [&](std::string& d) {
    std::size_t balanced = 0, total = 0;
    for (const char* field : {"2", "3", "4", "5", "8", "9"}) {
      const auto f = GaloisField::parse(field);
      const auto p = f.characteristic();
      for (int it = 0; it < 12; ++it) {
        std::vector<SymmetricTerm> terms;
        const auto k = static_cast<unsigned>(rng.range(1, 5));
        terms.push_back({k, Element{static_cast<std::uint32_t>(rng.range(1, f.order() - 1))}});
        if (rng.coin() && k > 1)
          terms.push_back({k - 1, Element{static_cast<std::uint32_t>(rng.range(1, f.order() - 1))}});
        const SymmetricSpec s(terms, f);
        for (unsigned n = 1; n <= 7; ++n) {
          const auto rep = pq_section(f, s, n);
          const bool equal = std::all_of(rep.sums.begin(), rep.sums.end(), [&](const BigInt& v) { return v == rep.sums[0]; });
          const bool zero = exp_sum_multinomial(f, s, n).is_zero();
          if (rep.balanced != equal || equal != zero) return false;
          if (equal && rep.sums[0] != power(BigInt(f.order()), n) / p) return false;
          balanced += equal;
          ++total;
        }
      }
    }
    // Known balanced instances must be among them.
    const auto f3 = GaloisField::parse("3");
    if (!pq_section(f3, SymmetricSpec::parse("3", f3), 5).balanced) return false;
    d = std::to_string(balanced) + " balanced of " + std::to_string(total);
    return true;
  });

  report("S over GF(8) is invariant under the choice of irreducible cubic", [&](std::string& d) {
    const auto a = GaloisField::parse("8/1,1,0,1");
    const auto b = GaloisField::parse("8/1,0,1,1");
    // Isomorphism a -> b: send x to a root of x^3 + x + 1 in b.
    Element root{0};
    for (std::uint32_t y = 2; y < 8; ++y) {
      const Element e{y};
      if (b.add(b.add(b.pow(e, 3), e), b.one()) == b.zero()) {
        root = e;
        break;
      }
    }
    auto phi = [&](Element x) {
      const auto c = a.coeffs(x);
      Element out = b.zero();
      for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i]) out = b.add(out, b.pow(root, i));
      return out;
    };
    std::size_t checks = 0;
    for (unsigned mask = 1; mask < 64; ++mask) {
      std::vector<SymmetricTerm> ta, tb;
      for (unsigned k = 1; k <= 6; ++k) {
        if (!(mask >> (k - 1) & 1)) continue;
        const Element beta{static_cast<std::uint32_t>(rng.range(1, 7))};
        ta.push_back({k, beta});
        tb.push_back({k, phi(beta)});
      }
      const SymmetricSpec sa(ta, a), sb(tb, b);
      const SymmetricSpec ones_a = [&] {
        auto t = ta;
        for (auto& term : t) term.beta = a.one();
        return SymmetricSpec(t, a);
      }();
      const SymmetricSpec ones_b = [&] {
        auto t = tb;
        for (auto& term : t) term.beta = b.one();
        return SymmetricSpec(t, b);
      }();
      for (unsigned n = 0; n <= 7; ++n) {
        if (!(exp_sum_multinomial(a, sa, n) == exp_sum_multinomial(b, sb, n))) return false;
        if (!(exp_sum_multinomial(a, ones_a, n) == exp_sum_multinomial(b, ones_b, n))) return false;
        checks += 2;
      }
      if (!(brute_force_exp_sum(a, sa, 4) == brute_force_exp_sum(b, sb, 4))) return false;
    }
    d = std::to_string(checks) + " comparisons";
    return true;
  });
}

// ---------------------------------------------------------------------------
// 5. Binary coefficients

void binary_coefficients() {
  report("q = 2, [k] for k <= 8: closed coefficients equal the classical c_j", [&](std::string& d) {
    const auto f = GaloisField::parse("2");
    const auto C = oracle::pascal(64);
    std::size_t compared = 0;
    for (unsigned k = 1; k <= 8; ++k) {
      const auto cf = exp_sum_closed(f, SymmetricSpec::parse(std::to_string(k), f));
      const unsigned D = cf.period;
      unsigned r = 0;
      while ((1u << r) <= k) ++r;
      if (D != (1u << r)) return false;
      for (unsigned j = 0; j < D; ++j) {
        // c_j = D^{-1} sum_t (-1)^{C(t,k)} zeta_D^{-jt}, eigenvalue 1 + zeta_D^j.
        CyclotomicInt acc(D);
        for (unsigned t = 0; t < D; ++t) {
          const unsigned parity = t >= k ? static_cast<unsigned>(BigInt(C[t][k] % 2).get_ui()) : 0;
          acc += CyclotomicInt::root(D, -static_cast<std::int64_t>(j * t)) * BigInt(parity ? -1 : 1);
        }
        const CycloRational cj(acc, D);
        const unsigned m = (D - j) % D;
        const auto it = std::find_if(cf.terms.begin(), cf.terms.end(),
                                     [&](const ClosedTerm& t) { return t.multiset == std::vector<unsigned>{m}; });
        if (it == cf.terms.end()) return false;
        if (!(it->eigenvalue == CyclotomicInt::integer(1) + CyclotomicInt::root(D, j))) return false;
        if (!(it->coeff == cj)) {
          d = "k = " + std::to_string(k) + ", j = " + std::to_string(j);
          return false;
        }
        ++compared;
      }
    }
    d = std::to_string(compared) + " coefficients";
    return true;
  });
}

}  // namespace

int main() {
  reference_values();
  recurrences();
  oracle_grid();
  invariants();
  binary_coefficients();
  std::printf("%d criterion line(s) failed\n", g_failures);
  return g_failures ? 1 : 0;
}
