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

/* Exercises the shared library through its C interface only. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "proflat/proflat.h"

static int failures = 0;

#define EXPECT(cond)                                                    \
  do {                                                                  \
    if (!(cond)) {                                                      \
      fprintf(stderr, "%s:%d: expected %s (%s)\n", __FILE__, __LINE__, \
              #cond, proflat_last_error());                             \
      ++failures;                                                       \
    }                                                                   \
  } while (0)

static void test_groups(proflat_catalogue *c) {
  proflat_group *g = NULL;
  size_t order = 0, size = 0;
  char *s = NULL;

  EXPECT(proflat_group_resolve(c, "S4", &g) == PROFLAT_OK);
  EXPECT(proflat_group_order(g, &order) == PROFLAT_OK && order == 24);
  EXPECT(proflat_group_name(g, &s) == PROFLAT_OK && strcmp(s, "S4") == 0);
  proflat_string_free(s);

  proflat_lattice *l = NULL;
  EXPECT(proflat_lattice_compute(g, &l) == PROFLAT_OK);
  EXPECT(proflat_lattice_size(l, &size) == PROFLAT_OK && size == 30);
  EXPECT(proflat_lattice_emit(l, "json", &s) == PROFLAT_OK && strstr(s, "\"covers\"") != NULL);
  proflat_string_free(s);
  EXPECT(proflat_lattice_emit(l, "dot", &s) == PROFLAT_ERR_INVALID_ARGUMENT);
  proflat_lattice_free(l);

  EXPECT(proflat_check(g, "modular", &s) == PROFLAT_OK && strstr(s, "\"value\": false") != NULL);
  proflat_string_free(s);
  EXPECT(proflat_check(g, "no_such_predicate", &s) == PROFLAT_ERR_DOMAIN);
  EXPECT(strlen(proflat_last_error()) > 0);
  proflat_group_free(g);

  g = NULL;
  EXPECT(proflat_group_resolve(c, "missing", &g) == PROFLAT_ERR_DOMAIN && g == NULL);
  EXPECT(proflat_group_resolve(c, "name X; degree 3; gens (1 4)", &g) == PROFLAT_ERR_PARSE);
  EXPECT(proflat_group_resolve(NULL, "S4", &g) == PROFLAT_ERR_INVALID_ARGUMENT);
}

static void test_catalogue(proflat_catalogue *c) {
  size_t added = 0;
  char *s = NULL;
  EXPECT(proflat_catalogue_add_text(c, "name V4; degree 4; gens (1 2)(3 4); (1 3)(2 4)\n",
                                    &added) == PROFLAT_OK && added == 1);
  /* A failing batch adds nothing. */
  EXPECT(proflat_catalogue_add_text(c, "name Y; degree 2; gens (1 2)\nname Z; degree 2; gens (1 9)\n",
                                    &added) == PROFLAT_ERR_PARSE);
  EXPECT(proflat_catalogue_list(c, &s) == PROFLAT_OK);
  EXPECT(strstr(s, "V4 order 4 file\n") != NULL);
  EXPECT(strstr(s, "\nY order") == NULL);
  proflat_string_free(s);
  EXPECT(proflat_catalogue_add_file(c, "/nonexistent/file", NULL) != PROFLAT_OK);
}

static void test_towers(void) {
  proflat_tower *t = NULL, *u = NULL;
  char *text = NULL, *json = NULL;
  size_t depth = 0;

  EXPECT(proflat_tower_builtin("c6k", 4, &t) == PROFLAT_OK);
  EXPECT(proflat_tower_trajectory(t, "width", &text, &json) == PROFLAT_OK);
  EXPECT(strcmp(text, "[2,3,4,5] monotone-unbounded") == 0);
  EXPECT(strstr(json, "\"verdict\": \"monotone-unbounded\"") != NULL);
  proflat_string_free(text);
  proflat_string_free(json);

  EXPECT(proflat_tower_truncate(t, 2, &u) == PROFLAT_OK);
  EXPECT(proflat_tower_depth(u, &depth) == PROFLAT_OK && depth == 2);
  EXPECT(proflat_tower_trajectory(u, "width", &text, NULL) == PROFLAT_OK);
  EXPECT(strcmp(text, "[2,3] monotone-unbounded") == 0);
  proflat_string_free(text);
  proflat_tower_free(u);
  EXPECT(proflat_tower_truncate(t, 9, &u) == PROFLAT_ERR_DOMAIN);
  EXPECT(proflat_tower_trajectory(t, "entropy", &text, NULL) == PROFLAT_ERR_INVALID_ARGUMENT);
  proflat_tower_free(t);

  EXPECT(proflat_tower_builtin("z5xc2", 3, &t) == PROFLAT_OK);
  EXPECT(proflat_tower_trajectory(t, "width", &text, NULL) == PROFLAT_OK);
  EXPECT(strcmp(text, "[2,2,2] stabilized") == 0);
  proflat_string_free(text);
  proflat_tower_free(t);

  EXPECT(proflat_tower_builtin("nope", 3, &t) == PROFLAT_ERR_DOMAIN);
  EXPECT(proflat_tower_parse("tower T; depth 1;\nlevel 1; name C2; degree 2; gens (1 2)\n", &t) ==
         PROFLAT_OK);
  proflat_tower_free(t);
  EXPECT(proflat_tower_parse("tower T; depth 2;\nlevel 1; name C2; degree 2; gens (1 2)\n", &t) ==
         PROFLAT_ERR_PARSE);
}

static void test_verify(proflat_catalogue *c) {
  char *a = NULL, *b = NULL;
  int ok = 0;
  EXPECT(proflat_verify(c, "distributive_iff_cyclic", 12, 1, &a, &ok) == PROFLAT_OK && ok == 1);
  EXPECT(proflat_verify(c, "distributive_iff_cyclic", 12, 3, &b, NULL) == PROFLAT_OK);
  EXPECT(a && b && strcmp(a, b) == 0);
  proflat_string_free(a);
  proflat_string_free(b);
  EXPECT(proflat_verify(c, "unknown_suite", 0, 1, &a, &ok) == PROFLAT_ERR_DOMAIN);
}

int main(void) {
  proflat_catalogue *c = NULL;
  char *s = NULL;
  EXPECT(strcmp(proflat_status_name(PROFLAT_ERR_RESOURCE), "resource error") == 0);
  EXPECT(proflat_catalogue_builtin(&c) == PROFLAT_OK);
  EXPECT(proflat_suite_names(&s) == PROFLAT_OK && strstr(s, "width_theorem") != NULL);
  proflat_string_free(s);
  EXPECT(proflat_predicate_names(&s) == PROFLAT_OK && strstr(s, "modular\n") != NULL);
  proflat_string_free(s);
  EXPECT(proflat_tower_names(&s) == PROFLAT_OK && strstr(s, "c6k") != NULL);
  proflat_string_free(s);

  test_groups(c);
  test_catalogue(c);
  test_towers();
  test_verify(c);
  proflat_catalogue_free(c);

  size_t old = proflat_max_order();
  EXPECT(proflat_set_max_order(0) == PROFLAT_ERR_INVALID_ARGUMENT);
  EXPECT(proflat_set_max_order(old) == PROFLAT_OK);

  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  printf("c api: all checks passed\n");
  return 0;
}
