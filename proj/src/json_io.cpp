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
#include "symsum/json_io.hpp"

#include "symsum/error.hpp"

namespace symsum::json {

json big(const BigInt& v) {
  if (auto small = to_int64(v)) return *small;
  return v.get_str();
}

BigInt parse_big(const json& j) {
  if (j.is_number_integer()) return big_from_i64(j.get<std::int64_t>());
  if (j.is_string()) {
    BigInt v;
    if (v.set_str(j.get<std::string>(), 10) != 0)
      throw Error(ErrorCode::kParse, "not a decimal integer: " + j.get<std::string>());
    return v;
  }
  throw Error(ErrorCode::kParse, "expected an integer");
}

namespace {

json big_array(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(big(x));
  return a;
}

}  // namespace

json cyclo(const CyclotomicInt& v) {
  json j;
  j["order"] = v.order();
  j["coeffs"] = big_array(v.canonical());
  j["text"] = v.to_string();
  if (auto i = v.as_integer()) j["integer"] = big(*i);
  return j;
}

json poly(const IntPolynomial& p) {
  json j;
  j["coeffs"] = big_array(p.coeffs());
  j["degree"] = p.degree();
  j["expanded"] = p.to_string();
  return j;
}

json factored(const FactoredPolynomial& f) {
  json factors = json::array();
  for (const auto& [fac, m] : f.factors)
    factors.push_back({{"coeffs", big_array(fac.coeffs())},
                       {"text", fac.to_string()},
                       {"multiplicity", m}});
  return {{"factors", factors}, {"text", f.to_string()}};
}

json field(const GaloisField& f) {
  json j;
  j["p"] = f.characteristic();
  j["r"] = f.degree();
  j["q"] = f.order();
  j["modulus"] = f.modulus();
  j["modulus_text"] = f.modulus_string();
  json traces = json::array();
  for (std::uint32_t c = 0; c < f.order() && f.order() <= 64; ++c)
    traces.push_back(f.trace(Element{c}));
  if (f.order() <= 64) j["traces"] = traces;
  return j;
}

json section(const SectionReport& rep) {
  json subs = json::array();
  for (const auto& l : rep.sublists) subs.push_back(big_array(l));
  return {{"n", rep.n},          {"q", rep.q},
          {"p", rep.p},          {"sublists", subs},
          {"sums", big_array(rep.sums)}, {"balanced", rep.balanced},
          {"trivial", rep.trivial}};
}

json diophantine(const DiophantineSolution& sol) {
  return {{"partitions", sol.partitions},
          {"deltas", big_array(sol.deltas)},
          {"weighted_sum", big(sol.weighted_sum)},
          {"certified", sol.certified}};
}

json closed_form(const ClosedForm& cf) {
  json terms = json::array();
  for (const auto& t : cf.terms) {
    if (t.coeff.is_zero()) continue;
    terms.push_back({{"multiset", t.multiset},
                     {"eigenvalue", cyclo(t.eigenvalue)},
                     {"coeff_num", cyclo(t.coeff.num())},
                     {"coeff_den", big(t.coeff.den())},
                     {"coeff_text", t.coeff.to_string()}});
  }
  return {{"D", cf.period}, {"r", cf.arity}, {"multisets", cf.terms.size()}, {"terms", terms}};
}

json certificate(const RecurrenceCertificate& cert) {
  return {{"poly", poly(cert.poly)},
          {"checked_range", cert.checked_range},
          {"satisfied", cert.satisfied}};
}

}  // namespace symsum::json
