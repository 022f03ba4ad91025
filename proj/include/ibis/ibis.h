/*
 * Copyright 2026 The ibis-groups Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef IBIS_IBIS_H
#define IBIS_IBIS_H

#include <stddef.h>
#include <stdint.h>

#if defined(IBIS_BUILDING_LIBRARY)
#define IBIS_API __attribute__((visibility("default")))
#else
#define IBIS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Stable C interface. Every call returning ibis_status leaves a message for
 * ibis_last_error() on failure (per thread). Strings handed out through
 * char** are released with ibis_string_free; handles with ibis_group_free.
 * Points in JSON output are 1-indexed. */

typedef enum {
  IBIS_OK = 0,
  IBIS_E_PARSE = 1,
  IBIS_E_INVALID_ARGUMENT = 2,
  IBIS_E_DEGREE_MISMATCH = 3,
  IBIS_E_NOT_A_SUBGROUP = 4,
  IBIS_E_INDEX_TOO_LARGE = 5,
  IBIS_E_BUDGET_EXHAUSTED = 6,
  IBIS_E_NOT_IBIS = 7,
  IBIS_E_UNKNOWN_CASE = 8,
  IBIS_E_IO = 9,
  IBIS_E_SEARCH_EXHAUSTED = 10,
  IBIS_E_VERIFICATION_FAILED = 11,
  IBIS_E_INTERNAL = 12
} ibis_status;

typedef struct ibis_group ibis_group;

typedef enum { IBIS_MODE_EXACT = 0, IBIS_MODE_FAST = 1 } ibis_mode;

typedef struct {
  ibis_mode mode;
  uint64_t budget;
  uint64_t seed;
  size_t samples;
} ibis_check_options;

IBIS_API const char* ibis_version(void);
IBIS_API const char* ibis_last_error(void);
IBIS_API const char* ibis_status_name(ibis_status status);
IBIS_API void ibis_string_free(char* s);

/* Groups in the group file format. */
IBIS_API ibis_status ibis_group_from_json(const char* json, ibis_group** out);
IBIS_API ibis_status ibis_group_load(const char* path, ibis_group** out);
IBIS_API ibis_status ibis_group_to_json(const ibis_group* g, char** out);
IBIS_API void ibis_group_free(ibis_group* g);
IBIS_API size_t ibis_group_degree(const ibis_group* g);
/* Decimal string. */
IBIS_API ibis_status ibis_group_order(ibis_group* g, char** out);
/* {"label","degree","order","generators","transitive","primitive","orbits"} */
IBIS_API ibis_status ibis_group_info(ibis_group* g, char** out);

/* IBIS decision. A NULL options pointer means exact mode with defaults. The
 * verdict JSON carries "status": "exact", "sampled-refutation" or
 * "budget-exhausted"; exhausting the budget is not an error. */
IBIS_API void ibis_check_options_init(ibis_check_options* options);
IBIS_API ibis_status ibis_check(ibis_group* g, const ibis_check_options* options, char** out);

/* Matroid of irredundant bases; IBIS_E_NOT_IBIS when they do not form one. */
IBIS_API ibis_status ibis_matroid(ibis_group* g, size_t degree_bound, char** out);

/* Group catalogue. params_json is an object of string or integer values, or
 * NULL. The built group carries its point labels and expected order.
 * An unknown builder name gives IBIS_E_UNKNOWN_CASE. */
IBIS_API ibis_status ibis_atlas_list(char** out);
IBIS_API ibis_status ibis_atlas_build(const char* name, const char* params_json, ibis_group** out);

/* Verification cases. case_id NULL runs all of them. *failed receives the
 * number of failed cases (documented conflicts are not failures). */
IBIS_API ibis_status ibis_verify_list(char** out);
IBIS_API ibis_status ibis_verify_paper(const char* case_id, uint64_t budget, uint64_t seed,
                                       char** report, size_t* failed);

#ifdef __cplusplus
}
#endif

#endif /* IBIS_IBIS_H */
