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
#pragma once

#include <json.hpp>

#include "symsum/closed.hpp"
#include "symsum/cyclo.hpp"
#include "symsum/gf.hpp"
#include "symsum/msum.hpp"
#include "symsum/polynomial.hpp"
#include "symsum/recur.hpp"

namespace symsum::json {

using nlohmann::json;

// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
json big(const BigInt& v);
BigInt parse_big(const json& j);

json cyclo(const CyclotomicInt& v);
json poly(const IntPolynomial& p);
json factored(const FactoredPolynomial& f);
json field(const GaloisField& f);
json section(const SectionReport& rep);
json diophantine(const DiophantineSolution& sol);
json closed_form(const ClosedForm& cf);
json certificate(const RecurrenceCertificate& cert);

}  // namespace symsum::json
