#ifndef PJL_PJL_H
#define PJL_PJL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define PJL_API __attribute__((visibility("default")))
#else
#define PJL_API
#endif

typedef enum pjl_status {
  PJL_OK = 0,
  PJL_ERR_INVALID_ARGUMENT,
  PJL_ERR_SYNTAX,
  PJL_ERR_PRECONDITION,
  PJL_ERR_ZERO_POLYNOMIAL,
  PJL_ERR_ZERO_RESULTANT,
  PJL_ERR_EXTENSION_BUDGET,
  PJL_ERR_CUTOFF_TOO_SMALL,
  PJL_ERR_NOT_SEPARATED,
  PJL_ERR_NOT_JACOBIAN_PAIR,
  PJL_ERR_NOT_SQUAREFREE,
  PJL_ERR_NO_SOLUTION,
  PJL_ERR_RETRIES_EXHAUSTED,
  PJL_ERR_INDEX_OUT_OF_RANGE,
  PJL_ERR_NOT_FOUND,
  PJL_ERR_INTERNAL
} pjl_status;

typedef struct pjl_poly pjl_poly;
typedef struct pjl_config pjl_config;
typedef struct pjl_tree pjl_tree;

/* Message of the last failed call on this thread; never NULL. */
PJL_API const char* pjl_last_error(void);
PJL_API const char* pjl_status_name(pjl_status status);
/* Strings returned through char** out-parameters. */
PJL_API void pjl_string_free(char* s);

/* On PJL_ERR_SYNTAX, *error_offset (if non-NULL) receives the byte offset. */
PJL_API pjl_status pjl_poly_parse(const char* text, pjl_poly** out, size_t* error_offset);
PJL_API void pjl_poly_free(pjl_poly* p);
PJL_API pjl_status pjl_poly_to_string(const pjl_poly* p, char** out);
PJL_API int pjl_poly_deg_y(const pjl_poly* p);

/* Defaults: cutoff chosen from the polynomial, extension budget 48, seed 0, xi picked. */
PJL_API pjl_config* pjl_config_new(void);
PJL_API void pjl_config_free(pjl_config* c);
/* Rationals as "p/q" text. */
PJL_API pjl_status pjl_config_set_cutoff(pjl_config* c, const char* cutoff);
PJL_API pjl_status pjl_config_set_xi(pjl_config* c, const char* xi);
PJL_API pjl_status pjl_config_set_ext_budget(pjl_config* c, int budget);
PJL_API void pjl_config_set_seed(pjl_config* c, uint64_t seed);

PJL_API pjl_status pjl_expand(const pjl_poly* f, const pjl_config* c, pjl_tree** out);
PJL_API void pjl_tree_free(pjl_tree* t);
PJL_API pjl_status pjl_tree_to_json(const pjl_tree* t, char** out);
PJL_API pjl_status pjl_tree_from_json(const char* json, pjl_tree** out);
/* Split nodes, leaves and the split-formula value for every label. */
PJL_API pjl_status pjl_tree_summary_json(const pjl_tree* t, char** out);

PJL_API pjl_status pjl_intersect_json(const pjl_poly* f, const pjl_poly* g, const pjl_config* c, char** out);

/* key: "99x66" style name of a built-in case. *ruled_out receives 1 when no pattern survives. */
PJL_API pjl_status pjl_caselab_analyze_json(const char* key, int apply_obstruction, char** out, int* ruled_out);
/* Same for a user case given as JSON. */
PJL_API pjl_status pjl_caselab_analyze_case_json(const char* case_json, int apply_obstruction, char** out,
                                                 int* ruled_out);
PJL_API pjl_status pjl_caselab_list_json(char** out);

PJL_API pjl_status pjl_semigroup_json(const long* delta, size_t count, int strict, char** out);
/* Membership of target in the semigroup generated by gens. */
PJL_API pjl_status pjl_semigroup_member(long target, const long* gens, size_t count, int* member);

/* p over Q as coefficient strings, constant term first. */
PJL_API pjl_status pjl_ode_json(const char* const* p_coeffs, size_t count, int l, const char* c, char** out);

/* Runs a named property suite; *all_passed receives 1 when every case passed. */
PJL_API pjl_status pjl_verify_json(const char* suite, const pjl_config* c, int count, char** out, int* all_passed);
PJL_API pjl_status pjl_suite_names_json(char** out);

#ifdef __cplusplus
}
#endif

#endif
