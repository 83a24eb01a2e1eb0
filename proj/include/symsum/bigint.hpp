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

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace symsum {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigInt big_from_u64(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return r;
}

inline BigInt big_from_i64(std::int64_t v) {
  if (v >= 0) return big_from_u64(static_cast<std::uint64_t>(v));
  // -(v+1) avoids overflow at INT64_MIN.
  return -big_from_u64(static_cast<std::uint64_t>(-(v + 1))) - 1;
}

inline std::optional<std::int64_t> to_int64(const BigInt& v) {
  if (mpz_sizeinbase(v.get_mpz_t(), 2) > 63) return std::nullopt;
  std::uint64_t mag = 0;
  std::size_t count = 0;
  mpz_export(&mag, &count, -1, sizeof mag, 0, 0, v.get_mpz_t());
  auto s = static_cast<std::int64_t>(mag);
  return sgn(v) < 0 ? -s : s;
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt r;
  if (k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline BigInt power(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace symsum
