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
#ifndef SYMSUM_SYMSUM_H
#define SYMSUM_SYMSUM_H

#include <stddef.h>
#include <stdint.h>

#if defined(SYMSUM_BUILDING_LIBRARY)
#define SYMSUM_API __attribute__((visibility("default")))
#else
#define SYMSUM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Opaque handles. */
typedef struct symsum_field symsum_field;
typedef struct symsum_spec symsum_spec;

typedef enum symsum_status {
  SYMSUM_OK = 0,
  SYMSUM_ERR_INVALID_ARGUMENT = 1,
  SYMSUM_ERR_PARSE = 2,
  SYMSUM_ERR_NOT_PRIME = 3,
  SYMSUM_ERR_REDUCIBLE_MODULUS = 4,
  SYMSUM_ERR_DEGREE_MISMATCH = 5,
  SYMSUM_ERR_ARITY_MISMATCH = 6,
  SYMSUM_ERR_NOT_A_UNIT = 7,
  SYMSUM_ERR_NOT_RATIONAL_INTEGER = 8,
  SYMSUM_ERR_INVALID_COMPOSITION = 9,
  SYMSUM_ERR_BUDGET_EXCEEDED = 10,
  SYMSUM_ERR_ODD_CHARACTERISTIC = 11,
  SYMSUM_ERR_INSUFFICIENT_TERMS = 12,
  SYMSUM_ERR_NO_RECURRENCE_FOUND = 13,
  SYMSUM_ERR_INTERNAL = 100
} symsum_status;

typedef enum symsum_method {
  SYMSUM_METHOD_BRUTE = 0,
  SYMSUM_METHOD_MULTINOMIAL = 1,
  SYMSUM_METHOD_PARTITION = 2,
  SYMSUM_METHOD_CLOSED = 3
} symsum_method;

typedef enum symsum_recurrence_mode {
  SYMSUM_RECURRENCE_CHAR = 0,
  SYMSUM_RECURRENCE_LCM = 1,
  SYMSUM_RECURRENCE_MINIMAL = 2
} symsum_recurrence_mode;

SYMSUM_API const char* symsum_version(void);
SYMSUM_API const char* symsum_status_name(symsum_status status);

/* Message of the most recent failure on the calling thread; never NULL. */
SYMSUM_API const char* symsum_last_error(void);

/* Releases strings returned through char** out parameters. */
SYMSUM_API void symsum_string_free(char* s);

/* "q", "p^r", optionally followed by "/c0,c1,...,cr". */
SYMSUM_API symsum_status symsum_field_create(const char* spec, symsum_field** out);
SYMSUM_API void symsum_field_destroy(symsum_field* field);
SYMSUM_API symsum_status symsum_field_info(const symsum_field* field, char** json_out);

/* "k1:b1,k2:b2,..." with b the integer element code (":b" defaults to 1). */
SYMSUM_API symsum_status symsum_spec_create(const symsum_field* field, const char* text,
                                            symsum_spec** out);
SYMSUM_API void symsum_spec_destroy(symsum_spec* spec);

/* Exponential sum at n. budget caps brute-force tuple evaluations (0 selects
 * the default). */
SYMSUM_API symsum_status symsum_eval(const symsum_field* field, const symsum_spec* spec,
                                     unsigned n, symsum_method method, uint64_t budget,
                                     char** json_out);

SYMSUM_API symsum_status symsum_sequence(const symsum_field* field, const symsum_spec* spec,
                                         unsigned n_min, unsigned n_max, symsum_method method,
                                         uint64_t budget, char** json_out);

/* For SYMSUM_RECURRENCE_MINIMAL the sequence S(1..terms) is used; terms = 0
 * picks 2 deg(P) + 2. */
SYMSUM_API symsum_status symsum_recurrence(const symsum_field* field, const symsum_spec* spec,
                                           symsum_recurrence_mode mode, unsigned terms,
                                           char** json_out);

SYMSUM_API symsum_status symsum_sections(const symsum_field* field, const symsum_spec* spec,
                                         unsigned n, char** json_out);

SYMSUM_API symsum_status symsum_diophantine(const symsum_field* field, const symsum_spec* spec,
                                            unsigned n, char** json_out);

SYMSUM_API symsum_status symsum_closed_form(const symsum_field* field, const symsum_spec* spec,
                                            char** json_out);

/* sum_l C(n,l) i^l (-1)^{sum_j C(l,k_j)} for n in [n_min, n_max]. */
SYMSUM_API symsum_status symsum_twisted_nega_hadamard(const unsigned* degrees, size_t count,
                                                      unsigned n_min, unsigned n_max,
                                                      char** json_out);

/* sum_l C(n,l) xi^{Fib(l) mod m}, xi a primitive pi(m)-th root of unity. */
SYMSUM_API symsum_status symsum_twisted_pisano(unsigned m, unsigned n_min, unsigned n_max,
                                               char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* SYMSUM_SYMSUM_H */
