/* Exercises the shared library through its C header only. */

#include <stdio.h>
#include <string.h>

#include "pjl/pjl.h"

static int failures = 0;

#define EXPECT(cond)                                            \
  do {                                                          \
    if (!(cond)) {                                              \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                               \
    }                                                           \
  } while (0)

static int contains(const char* s, const char* needle) { return s && strstr(s, needle) != NULL; }

int main(void) {
  pjl_poly* f = NULL;
  pjl_poly* g = NULL;
  size_t offset = 0;
  char* out = NULL;

  EXPECT(pjl_poly_parse("y^2 -", &f, &offset) == PJL_ERR_SYNTAX);
  EXPECT(offset == 5);
  EXPECT(contains(pjl_last_error(), "offset 5"));
  EXPECT(f == NULL);

  EXPECT(pjl_poly_parse("x + y^2", &f, NULL) == PJL_OK);
  EXPECT(pjl_poly_parse("y", &g, NULL) == PJL_OK);
  EXPECT(pjl_poly_deg_y(f) == 2);
  EXPECT(pjl_poly_to_string(f, &out) == PJL_OK);
  EXPECT(strcmp(out, "y^2 + x") == 0);
  pjl_string_free(out);

  pjl_config* cfg = pjl_config_new();
  EXPECT(cfg != NULL);
  EXPECT(pjl_config_set_cutoff(cfg, "0") == PJL_ERR_INVALID_ARGUMENT);
  EXPECT(pjl_config_set_ext_budget(cfg, 0) == PJL_ERR_INVALID_ARGUMENT);
  EXPECT(pjl_config_set_xi(cfg, "3") == PJL_OK);

  EXPECT(pjl_intersect_json(f, g, cfg, &out) == PJL_OK);
  EXPECT(contains(out, "\"agree\": true"));
  EXPECT(contains(out, "\"jacobian_pair\": true"));
  pjl_string_free(out);

  pjl_tree* t = NULL;
  pjl_tree* u = NULL;
  EXPECT(pjl_expand(f, cfg, &t) == PJL_OK);
  EXPECT(pjl_tree_to_json(t, &out) == PJL_OK);
  EXPECT(contains(out, "\"schema\": \"pjl/1\""));
  EXPECT(pjl_tree_from_json(out, &u) == PJL_OK);
  pjl_string_free(out);
  char* a = NULL;
  char* b = NULL;
  EXPECT(pjl_tree_summary_json(t, &a) == PJL_OK);
  EXPECT(pjl_tree_summary_json(u, &b) == PJL_OK);
  EXPECT(a && b && strcmp(a, b) == 0);
  EXPECT(contains(a, "\"split_formula\": \"1\""));
  pjl_string_free(a);
  pjl_string_free(b);
  EXPECT(pjl_tree_from_json("{\"schema\": \"other\"}", &u) != PJL_OK);
  EXPECT(pjl_tree_from_json("not json", &u) == PJL_ERR_INVALID_ARGUMENT);
  pjl_tree_free(t);
  pjl_tree_free(u);

  int ruled_out = -1;
  EXPECT(pjl_caselab_analyze_json("99x66", 1, &out, &ruled_out) == PJL_OK);
  EXPECT(ruled_out == 1);
  pjl_string_free(out);
  EXPECT(pjl_caselab_analyze_json("99x66", 0, &out, &ruled_out) == PJL_OK);
  EXPECT(ruled_out == 0);
  pjl_string_free(out);
  EXPECT(pjl_caselab_analyze_json("64x48", 1, &out, &ruled_out) == PJL_ERR_NOT_FOUND);

  long delta[] = {4, 6, 3};
  EXPECT(pjl_semigroup_json(delta, 3, 1, &out) == PJL_OK);
  EXPECT(contains(out, "\"notin_part\": true"));
  pjl_string_free(out);
  long bad[] = {4, 6};
  EXPECT(pjl_semigroup_json(bad, 2, 0, &out) == PJL_ERR_INVALID_ARGUMENT);
  int member = -1;
  long gens[] = {4, 6};
  EXPECT(pjl_semigroup_member(10, gens, 2, &member) == PJL_OK && member == 1);
  EXPECT(pjl_semigroup_member(2, gens, 2, &member) == PJL_OK && member == 0);

  const char* p[] = {"0", "1"};
  EXPECT(pjl_ode_json(p, 2, 2, "1", &out) == PJL_OK);
  EXPECT(contains(out, "\"q\": \"pi^2\""));
  pjl_string_free(out);
  EXPECT(pjl_ode_json(p, 2, 1, "1", &out) == PJL_ERR_PRECONDITION);

  int passed = 0;
  EXPECT(pjl_verify_json("semigroup-lemma", cfg, 10, &out, &passed) == PJL_OK);
  EXPECT(passed == 1);
  pjl_string_free(out);
  EXPECT(pjl_verify_json("nosuch", cfg, 1, &out, &passed) == PJL_ERR_NOT_FOUND);

  EXPECT(strcmp(pjl_status_name(PJL_ERR_CUTOFF_TOO_SMALL), "CutoffTooSmall") == 0);

  pjl_config_free(cfg);
  pjl_poly_free(f);
  pjl_poly_free(g);
  if (failures == 0) printf("C API checks passed\n");
  return failures == 0 ? 0 : 1;
}
