/* Copyright 2026 The Meadow Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef MEADOW_MEADOW_C_H_
#define MEADOW_MEADOW_C_H_

/* C interface to the meadow library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns a meadow_status; on MEADOW_USAGE_ERROR and
 * MEADOW_INTERNAL_ERROR a message is available from meadow_last_error()
 * (per thread, valid until the next failing call on that thread).
 * Strings returned through char** are released with meadow_string_free.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(MEADOW_BUILDING_LIBRARY)
#define MEADOW_API __attribute__((visibility("default")))
#else
#define MEADOW_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as process exit codes. */
typedef enum meadow_status {
  MEADOW_OK = 0,
  MEADOW_DOMAIN_FAILURE = 1, /* not a meadow / axiom violation; see report */
  MEADOW_USAGE_ERROR = 2,    /* bad descriptor, file, argument or bound */
  MEADOW_INTERNAL_ERROR = 3  /* failed self-check; indicates a bug */
} meadow_status;

typedef enum meadow_format {
  MEADOW_FORMAT_HUMAN = 0,
  MEADOW_FORMAT_MACHINE = 1
} meadow_format;

typedef struct meadow_options {
  uint64_t max_structured_order; /* Z/nZ, GF(p^k), products; default 4096 */
  uint64_t max_table_order;      /* file-backed rings; default 512 */
} meadow_options;

typedef struct meadow_ring meadow_ring;
typedef struct meadow_report meadow_report;

MEADOW_API const char* meadow_version(void);
MEADOW_API const char* meadow_last_error(void);
MEADOW_API void meadow_options_init(meadow_options* options);
MEADOW_API void meadow_string_free(char* s);

/* Rings. `options` may be NULL for defaults. A file ring whose tables are
 * not a commutative ring yields MEADOW_DOMAIN_FAILURE. */
MEADOW_API meadow_status meadow_ring_create(const char* descriptor,
                                            const meadow_options* options,
                                            meadow_ring** out);
MEADOW_API meadow_status meadow_ring_from_spec(const char* spec_text,
                                               const meadow_options* options,
                                               meadow_ring** out);
MEADOW_API void meadow_ring_free(meadow_ring* ring);

MEADOW_API uint32_t meadow_ring_order(const meadow_ring* ring);
MEADOW_API uint32_t meadow_ring_zero(const meadow_ring* ring);
MEADOW_API uint32_t meadow_ring_one(const meadow_ring* ring);
MEADOW_API meadow_status meadow_ring_add(const meadow_ring* ring, uint32_t a,
                                         uint32_t b, uint32_t* out);
MEADOW_API meadow_status meadow_ring_mul(const meadow_ring* ring, uint32_t a,
                                         uint32_t b, uint32_t* out);
MEADOW_API meadow_status meadow_ring_neg(const meadow_ring* ring, uint32_t a,
                                         uint32_t* out);

/* Generalized inverse of x; *exists is set to 0 when there is none. */
MEADOW_API meadow_status meadow_ring_inverse(const meadow_ring* ring,
                                             uint32_t x, uint32_t* out,
                                             int* exists);
/* *is_meadow is 1 or 0; *witness receives the lowest element without a
 * generalized inverse when it is 0. witness may be NULL. */
MEADOW_API meadow_status meadow_ring_is_meadow(const meadow_ring* ring,
                                               int* is_meadow,
                                               uint32_t* witness);
/* Signature as (prime, exponent) pairs, ascending by p^k then p. *count
 * always receives the number of pairs; at most `capacity` are written.
 * MEADOW_DOMAIN_FAILURE if the ring is not a meadow. */
MEADOW_API meadow_status meadow_ring_signature(const meadow_ring* ring,
                                               uint32_t* primes,
                                               uint32_t* exponents,
                                               size_t capacity,
                                               size_t* count);
/* Operation tables in RingSpec text format. */
MEADOW_API meadow_status meadow_ring_dump_spec(const meadow_ring* ring,
                                               char** out_text);

/* Commands behind the CLI. On MEADOW_OK and MEADOW_DOMAIN_FAILURE *out
 * receives a report; otherwise *out is NULL. */
MEADOW_API meadow_status meadow_cmd_check(const char* descriptor,
                                          const meadow_options* options,
                                          meadow_report** out);
MEADOW_API meadow_status meadow_cmd_invtable(const char* descriptor,
                                             const meadow_options* options,
                                             meadow_report** out);
MEADOW_API meadow_status meadow_cmd_decompose(const char* descriptor,
                                              const meadow_options* options,
                                              meadow_report** out);
MEADOW_API meadow_status meadow_cmd_count(const char* descriptor,
                                          const meadow_options* options,
                                          meadow_report** out);
MEADOW_API meadow_status meadow_cmd_classify(const char* order,
                                             meadow_report** out);
MEADOW_API meadow_status meadow_cmd_isomorphic(const char* left,
                                               const char* right,
                                               const meadow_options* options,
                                               meadow_report** out);

MEADOW_API meadow_status meadow_report_status(const meadow_report* report);
/* First value stored under key, or NULL. Owned by the report. */
MEADOW_API const char* meadow_report_get(const meadow_report* report,
                                         const char* key);
MEADOW_API meadow_status meadow_report_render(const meadow_report* report,
                                              meadow_format format,
                                              char** out_text);
MEADOW_API void meadow_report_free(meadow_report* report);

#ifdef __cplusplus
}
#endif

#endif /* MEADOW_MEADOW_C_H_ */
