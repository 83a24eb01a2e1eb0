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
#include "symsum/symsum.h"

#include <cstdlib>
#include <algorithm>
#include <cstring>
#include <new>
#include <string>

#include "symsum/closed.hpp"
#include "symsum/error.hpp"
#include "symsum/json_io.hpp"
#include "symsum/msum.hpp"
#include "symsum/recur.hpp"
#include "symsum/symfun.hpp"

struct symsum_field {
  symsum::GaloisField field;
};

struct symsum_spec {
  symsum::GaloisField field;
  symsum::SymmetricSpec spec;
};

namespace {

using Json = nlohmann::json;
namespace io = symsum::json;

thread_local std::string g_last_error;

symsum_status to_status(symsum::ErrorCode code) {
  using symsum::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument: return SYMSUM_ERR_INVALID_ARGUMENT;
    case ErrorCode::kParse: return SYMSUM_ERR_PARSE;
    case ErrorCode::kNotPrime: return SYMSUM_ERR_NOT_PRIME;
    case ErrorCode::kReducibleModulus: return SYMSUM_ERR_REDUCIBLE_MODULUS;
    case ErrorCode::kDegreeMismatch: return SYMSUM_ERR_DEGREE_MISMATCH;
    case ErrorCode::kArityMismatch: return SYMSUM_ERR_ARITY_MISMATCH;
    case ErrorCode::kNotAUnit: return SYMSUM_ERR_NOT_A_UNIT;
    case ErrorCode::kNotRationalInteger: return SYMSUM_ERR_NOT_RATIONAL_INTEGER;
    case ErrorCode::kInvalidComposition: return SYMSUM_ERR_INVALID_COMPOSITION;
    case ErrorCode::kBudgetExceeded: return SYMSUM_ERR_BUDGET_EXCEEDED;
    case ErrorCode::kOddCharacteristic: return SYMSUM_ERR_ODD_CHARACTERISTIC;
    case ErrorCode::kInsufficientTerms: return SYMSUM_ERR_INSUFFICIENT_TERMS;
    case ErrorCode::kNoRecurrenceFound: return SYMSUM_ERR_NO_RECURRENCE_FOUND;
  }
  return SYMSUM_ERR_INTERNAL;
}

template <typename Fn>
symsum_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SYMSUM_OK;
  } catch (const symsum::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SYMSUM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SYMSUM_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const Json& j, char** out) { *out = dup_string(j.dump()); }

void require(const void* p, const char* what) {
  if (!p) throw symsum::Error(symsum::ErrorCode::kInvalidArgument, std::string(what) + " is null");
}

const char* method_name(symsum_method m) {
  switch (m) {
    case SYMSUM_METHOD_BRUTE: return "brute";
    case SYMSUM_METHOD_MULTINOMIAL: return "multinomial";
    case SYMSUM_METHOD_PARTITION: return "partition";
    case SYMSUM_METHOD_CLOSED: return "closed";
  }
  return "unknown";
}

std::vector<symsum::CyclotomicInt> evaluate(const symsum_spec& s, unsigned n_min, unsigned n_max,
                                            symsum_method method, std::uint64_t budget) {
  using namespace symsum;
  if (n_min > n_max) throw Error(ErrorCode::kInvalidArgument, "n_min exceeds n_max");
  if (budget == 0) budget = kDefaultBudget;
  std::vector<CyclotomicInt> out;
  const GaloisField& f = s.field;
  switch (method) {
    case SYMSUM_METHOD_BRUTE:
      for (unsigned n = n_min; n <= n_max; ++n) out.push_back(brute_force_exp_sum(f, s.spec, n, budget));
      break;
    case SYMSUM_METHOD_MULTINOMIAL:
      for (unsigned n = n_min; n <= n_max; ++n) out.push_back(exp_sum_multinomial(f, s.spec, n));
      break;
    case SYMSUM_METHOD_PARTITION:
      for (unsigned n = n_min; n <= n_max; ++n) out.push_back(exp_sum_partition(f, s.spec, n));
      break;
    case SYMSUM_METHOD_CLOSED: {
      const ClosedForm cf = exp_sum_closed(f, s.spec);
      for (unsigned n = n_min; n <= n_max; ++n)
        out.push_back(exp_sum_closed_eval(cf, f.characteristic(), n));
      break;
    }
    default:
      throw Error(ErrorCode::kInvalidArgument, "unknown method");
  }
  return out;
}

Json header(const symsum_spec& s) {
  return {{"field", s.field.describe()}, {"q", s.field.order()}, {"p", s.field.characteristic()},
          {"spec", s.spec.to_string()}};
}

Json twisted_report(const symsum::PeriodicExponentTable& table, const symsum::CyclotomicInt& a,
                    unsigned n_min, unsigned n_max, const symsum::IntPolynomial& char_poly) {
  using namespace symsum;
  if (n_min > n_max) throw Error(ErrorCode::kInvalidArgument, "n_min exceeds n_max");
  const ClosedForm cf = twisted_closed_form(table, a);
  const auto closed = cf.eval_range(n_max);
  Json values = Json::array();
  bool agree = true;
  std::vector<CyclotomicInt> seq;
  for (unsigned n = n_min; n <= n_max; ++n) {
    auto whole = closed[n].to_cyclotomic_int();
    if (!whole)
      throw Error(ErrorCode::kNotRationalInteger, "twisted closed form is not integral");
    const CyclotomicInt direct = twisted_binomial_direct(n, table, a);
    agree = agree && (*whole == direct);
    values.push_back(io::cyclo(direct));
    seq.push_back(direct);
  }
  Json j = {{"D", table.period}, {"xi_order", table.xi_order}, {"n_min", n_min},
            {"n_max", n_max},    {"values", values},           {"closed_matches_direct", agree},
            {"char_poly", io::poly(char_poly)}};
  if (seq.size() > static_cast<std::size_t>(char_poly.degree()))
    j["certificate"] = io::certificate(verify_recurrence(seq, char_poly));
  return j;
}

}  // namespace

extern "C" {

SYMSUM_API const char* symsum_version(void) { return "0.1.0"; }

SYMSUM_API const char* symsum_status_name(symsum_status status) {
  switch (status) {
    case SYMSUM_OK: return "Ok";
    case SYMSUM_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case SYMSUM_ERR_PARSE: return "ParseError";
    case SYMSUM_ERR_NOT_PRIME: return "NotPrime";
    case SYMSUM_ERR_REDUCIBLE_MODULUS: return "ReducibleModulus";
    case SYMSUM_ERR_DEGREE_MISMATCH: return "DegreeMismatch";
    case SYMSUM_ERR_ARITY_MISMATCH: return "ArityMismatch";
    case SYMSUM_ERR_NOT_A_UNIT: return "NotAUnit";
    case SYMSUM_ERR_NOT_RATIONAL_INTEGER: return "NotRationalInteger";
    case SYMSUM_ERR_INVALID_COMPOSITION: return "InvalidComposition";
    case SYMSUM_ERR_BUDGET_EXCEEDED: return "BudgetExceeded";
    case SYMSUM_ERR_ODD_CHARACTERISTIC: return "OddCharacteristic";
    case SYMSUM_ERR_INSUFFICIENT_TERMS: return "InsufficientTerms";
    case SYMSUM_ERR_NO_RECURRENCE_FOUND: return "NoRecurrenceFound";
    case SYMSUM_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

SYMSUM_API const char* symsum_last_error(void) { return g_last_error.c_str(); }

SYMSUM_API void symsum_string_free(char* s) { std::free(s); }

SYMSUM_API symsum_status symsum_field_create(const char* spec, symsum_field** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    *out = nullptr;
    *out = new symsum_field{symsum::GaloisField::parse(spec)};
  });
}

SYMSUM_API void symsum_field_destroy(symsum_field* field) { delete field; }

SYMSUM_API symsum_status symsum_field_info(const symsum_field* field, char** json_out) {
  return guarded([&] {
    require(field, "field");
    require(json_out, "json_out");
    Json j = io::field(field->field);
    j["describe"] = field->field.describe();
    emit(j, json_out);
  });
}

SYMSUM_API symsum_status symsum_spec_create(const symsum_field* field, const char* text,
                                            symsum_spec** out) {
  return guarded([&] {
    require(field, "field");
    require(text, "text");
    require(out, "out");
    *out = nullptr;
    *out = new symsum_spec{field->field, symsum::SymmetricSpec::parse(text, field->field)};
  });
}

SYMSUM_API void symsum_spec_destroy(symsum_spec* spec) { delete spec; }

SYMSUM_API symsum_status symsum_eval(const symsum_field* field, const symsum_spec* spec,
                                     unsigned n, symsum_method method, uint64_t budget,
                                     char** json_out) {
  return guarded([&] {
    require(field, "field");
    require(spec, "spec");
    require(json_out, "json_out");
    const auto v = evaluate(*spec, n, n, method, budget);
    Json j = header(*spec);
    j["n"] = n;
    j["method"] = method_name(method);
    j["value"] = io::cyclo(v.front());
    emit(j, json_out);
  });
}

SYMSUM_API symsum_status symsum_sequence(const symsum_field* field, const symsum_spec* spec,
                                         unsigned n_min, unsigned n_max, symsum_method method,
                                         uint64_t budget, char** json_out) {
  return guarded([&] {
    require(field, "field");
    require(spec, "spec");
    require(json_out, "json_out");
    const auto v = evaluate(*spec, n_min, n_max, method, budget);
    Json values = Json::array();
    for (const auto& x : v) values.push_back(io::cyclo(x));
    Json j = header(*spec);
    j["n_min"] = n_min;
    j["n_max"] = n_max;
    j["method"] = method_name(method);
    j["values"] = values;
    emit(j, json_out);
  });
}

SYMSUM_API symsum_status symsum_recurrence(const symsum_field* field, const symsum_spec* spec,
                                           symsum_recurrence_mode mode, unsigned terms,
                                           char** json_out) {
  return guarded([&] {
    using namespace symsum;
    require(field, "field");
    require(spec, "spec");
    require(json_out, "json_out");
    const GaloisField& f = spec->field;
    const unsigned q = f.order();
    const auto D = static_cast<unsigned>(period(f.characteristic(), spec->spec.max_degree()));
    Json j = header(*spec);
    j["D"] = D;
    j["char_poly_degree"] = io::big(char_poly_degree(q, D));
    j["pochhammer_bound"] = io::big(pochhammer_degree_bound(q, D));
    switch (mode) {
      case SYMSUM_RECURRENCE_CHAR: {
        const auto fp = char_poly_factored(q, D);
        j["mode"] = "char";
        j["poly"] = io::poly(fp.expand());
        j["factored"] = io::factored(fp);
        break;
      }
      case SYMSUM_RECURRENCE_LCM: {
        const auto fp = lcm_char_poly_factored(q, D);
        j["mode"] = "lcm";
        j["poly"] = io::poly(fp.expand());
        j["factored"] = io::factored(fp);
        break;
      }
      case SYMSUM_RECURRENCE_MINIMAL: {
        const auto lcm = lcm_char_poly_factored(q, D);
        const IntPolynomial chi = lcm.expand();
        const auto deg = static_cast<unsigned>(chi.degree());
        const unsigned count = terms ? terms : 2 * deg + 2;
        if (count < 4) throw Error(ErrorCode::kInsufficientTerms, "need at least 4 terms");
        // The sequence starts at n = 1: zero eigenvalues only affect S(0).
        auto all = exp_sum_sequence(f, spec->spec, count);
        std::vector<CyclotomicInt> seq(all.begin() + 1, all.end());
        const unsigned max_degree = std::min(deg, (count - 2) / 2);
        const MinimalRecurrence mr = minimal_integer_recurrence(seq, max_degree);
        std::vector<IntPolynomial> cands;
        for (const auto& fac : lcm.factors) cands.push_back(fac.first);
        j["mode"] = "minimal";
        j["start_index"] = 1;
        j["terms"] = count;
        j["zero_sequence"] = mr.zero_sequence;
        j["poly"] = io::poly(mr.poly);
        j["factored"] = io::factored(factor_over(mr.poly, cands));
        j["certificate"] = io::certificate(verify_recurrence(seq, mr.poly));
        j["divides_lcm"] = poly_divides(mr.poly, chi);
        j["divides_char"] = poly_divides(mr.poly, char_poly(q, D));
        break;
      }
      default:
        throw Error(ErrorCode::kInvalidArgument, "unknown recurrence mode");
    }
    emit(j, json_out);
  });
}

SYMSUM_API symsum_status symsum_sections(const symsum_field* field, const symsum_spec* spec,
                                         unsigned n, char** json_out) {
  return guarded([&] {
    require(field, "field");
    require(spec, "spec");
    require(json_out, "json_out");
    Json j = io::section(symsum::pq_section(spec->field, spec->spec, n));
    j["spec"] = spec->spec.to_string();
    emit(j, json_out);
  });
}

SYMSUM_API symsum_status symsum_diophantine(const symsum_field* field, const symsum_spec* spec,
                                            unsigned n, char** json_out) {
  return guarded([&] {
    require(field, "field");
    require(spec, "spec");
    require(json_out, "json_out");
    Json j = io::diophantine(symsum::diophantine_solution(spec->field, spec->spec, n));
    j["n"] = n;
    j["spec"] = spec->spec.to_string();
    emit(j, json_out);
  });
}

SYMSUM_API symsum_status symsum_closed_form(const symsum_field* field, const symsum_spec* spec,
                                            char** json_out) {
  return guarded([&] {
    require(field, "field");
    require(spec, "spec");
    require(json_out, "json_out");
    Json j = header(*spec);
    j["closed_form"] = io::closed_form(symsum::exp_sum_closed(spec->field, spec->spec));
    emit(j, json_out);
  });
}

SYMSUM_API symsum_status symsum_twisted_nega_hadamard(const unsigned* degrees, size_t count,
                                                      unsigned n_min, unsigned n_max,
                                                      char** json_out) {
  return guarded([&] {
    using namespace symsum;
    require(degrees, "degrees");
    require(json_out, "json_out");
    std::vector<unsigned> ks(degrees, degrees + count);
    for (unsigned k : ks)
      if (k == 0) throw Error(ErrorCode::kInvalidArgument, "degrees must be >= 1");
    const auto table = nega_hadamard_table(ks);
    const CyclotomicInt i4 = CyclotomicInt::root(4, 1);
    std::vector<CyclotomicInt> roots;
    for (unsigned a = 0; a < table.period; ++a)
      roots.push_back(CyclotomicInt::integer(1, 4) + i4 * CyclotomicInt::root(table.period, a));
    Json j = twisted_report(table, i4, n_min, n_max, poly_from_roots(roots));
    j["kind"] = "nega-hadamard";
    // (X - 2) prod_{4 <= 2^j <= D} Phi_{2^j}(X - 1): the full polynomial above
    // without its X factor, so it only annihilates from n = 1 on.
    IntPolynomial ann = IntPolynomial::linear(2);
    const IntPolynomial shift = IntPolynomial::linear(1);
    for (unsigned m = 4; m <= table.period; m *= 2) ann *= cyclotomic_polynomial(m).compose(shift);
    std::vector<CyclotomicInt> tail;
    for (unsigned n = std::max(n_min, 1u); n <= n_max; ++n)
      tail.push_back(twisted_binomial_direct(n, table, i4));
    Json a = {{"poly", io::poly(ann)}, {"start_index", std::max(n_min, 1u)}};
    if (tail.size() > static_cast<std::size_t>(ann.degree()))
      a["certificate"] = io::certificate(verify_recurrence(tail, ann));
    j["annihilator"] = a;
    j["degrees"] = ks;
    emit(j, json_out);
  });
}

SYMSUM_API symsum_status symsum_twisted_pisano(unsigned m, unsigned n_min, unsigned n_max,
                                               char** json_out) {
  return guarded([&] {
    using namespace symsum;
    require(json_out, "json_out");
    const auto table = pisano_table(m);
    std::vector<CyclotomicInt> roots;
    for (unsigned a = 0; a < table.period; ++a)
      roots.push_back(CyclotomicInt::integer(1, table.period) + CyclotomicInt::root(table.period, a));
    Json j = twisted_report(table, CyclotomicInt::integer(1), n_min, n_max, poly_from_roots(roots));
    j["kind"] = "pisano";
    j["modulus"] = m;
    j["pisano_period"] = table.period;
    emit(j, json_out);
  });
}

}  // extern "C"
