/*
Copyright 2026 The proflat Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

/* C interface to the proflat library. Every function returns a status code;
 * on failure proflat_last_error() describes the problem. Strings returned
 * through char** out-parameters are owned by the caller and released with
 * proflat_string_free(). Handles are released with their _free function. */

#ifndef PROFLAT_PROFLAT_H
#define PROFLAT_PROFLAT_H

#include <stddef.h>

#if defined(PROFLAT_BUILDING_LIBRARY)
#define PROFLAT_API __attribute__((visibility("default")))
#else
#define PROFLAT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum proflat_status {
  PROFLAT_OK = 0,
  PROFLAT_ERR_DOMAIN = 1,
  PROFLAT_ERR_PARSE = 2,
  PROFLAT_ERR_RESOURCE = 3,
  PROFLAT_ERR_PRECONDITION = 4,
  PROFLAT_ERR_CONSTRUCTION = 5,
  PROFLAT_ERR_INVALID_ARGUMENT = 6,
  PROFLAT_ERR_INTERNAL = 7
} proflat_status;

typedef struct proflat_catalogue proflat_catalogue;
typedef struct proflat_group proflat_group;
typedef struct proflat_lattice proflat_lattice;
typedef struct proflat_tower proflat_tower;

/* Message for the last failed call on this thread ("" if none). */
PROFLAT_API const char *proflat_last_error(void);
PROFLAT_API const char *proflat_status_name(proflat_status status);
PROFLAT_API void proflat_string_free(char *s);

/* Group order bound (default 2000, or PROFLAT_MAX_ORDER). */
PROFLAT_API size_t proflat_max_order(void);
PROFLAT_API proflat_status proflat_set_max_order(size_t bound);

/* --- catalogue --- */
PROFLAT_API proflat_status proflat_catalogue_builtin(proflat_catalogue **out);
/* Appends the records in `text`; *added (may be NULL) receives the count. */
PROFLAT_API proflat_status proflat_catalogue_add_text(proflat_catalogue *c, const char *text,
                                                      size_t *added);
PROFLAT_API proflat_status proflat_catalogue_add_file(proflat_catalogue *c, const char *path,
                                                      size_t *added);
/* One line per entry: "<name> order <n> <builtin|file>". */
PROFLAT_API proflat_status proflat_catalogue_list(const proflat_catalogue *c, char **out);
PROFLAT_API void proflat_catalogue_free(proflat_catalogue *c);

/* --- groups --- */
/* `spec` is a catalogue name or an inline record "name X; degree n; gens ...". */
PROFLAT_API proflat_status proflat_group_resolve(const proflat_catalogue *c, const char *spec,
                                                 proflat_group **out);
PROFLAT_API proflat_status proflat_group_order(const proflat_group *g, size_t *out);
PROFLAT_API proflat_status proflat_group_name(const proflat_group *g, char **out);
PROFLAT_API void proflat_group_free(proflat_group *g);

/* --- subgroup lattices --- */
PROFLAT_API proflat_status proflat_lattice_compute(const proflat_group *g, proflat_lattice **out);
PROFLAT_API proflat_status proflat_lattice_size(const proflat_lattice *l, size_t *out);
/* format: "hasse" (size/cover lines) or "json". */
PROFLAT_API proflat_status proflat_lattice_emit(const proflat_lattice *l, const char *format,
                                                char **out);
PROFLAT_API void proflat_lattice_free(proflat_lattice *l);

/* Evaluates a named predicate; *out_json is {predicate, group, value, detail}. */
PROFLAT_API proflat_status proflat_check(const proflat_group *g, const char *predicate,
                                         char **out_json);
/* Newline-separated predicate names. */
PROFLAT_API proflat_status proflat_predicate_names(char **out);

/* --- towers --- */
PROFLAT_API proflat_status proflat_tower_builtin(const char *name, size_t depth,
                                                 proflat_tower **out);
PROFLAT_API proflat_status proflat_tower_parse(const char *text, proflat_tower **out);
PROFLAT_API proflat_status proflat_tower_load(const char *path, proflat_tower **out);
PROFLAT_API proflat_status proflat_tower_truncate(const proflat_tower *t, size_t depth,
                                                  proflat_tower **out);
PROFLAT_API proflat_status proflat_tower_depth(const proflat_tower *t, size_t *out);
/* Level-lattice trajectory for width, distributive, modular or decomposable.
 * *out_text (e.g. "[2,3,4,5] monotone-unbounded") and *out_json may be NULL. */
PROFLAT_API proflat_status proflat_tower_trajectory(const proflat_tower *t, const char *predicate,
                                                    char **out_text, char **out_json);
PROFLAT_API proflat_status proflat_tower_names(char **out);
PROFLAT_API void proflat_tower_free(proflat_tower *t);

/* --- verification suites --- */
PROFLAT_API proflat_status proflat_suite_names(char **out);
/* Runs a suite (or "all") over the catalogue. max_order 0 means no extra
 * limit. *all_passed (may be NULL) is set to 1 iff every check passed. */
PROFLAT_API proflat_status proflat_verify(const proflat_catalogue *c, const char *suite,
                                          size_t max_order, unsigned jobs, char **out_report,
                                          int *all_passed);

#ifdef __cplusplus
}
#endif

#endif /* PROFLAT_PROFLAT_H */
