/*
 * softgrp C API.
 *
 * Objects are opaque, immutable handles released with the matching *_free
 * function. Every fallible call returns an sg_status; on failure the
 * calling thread's last error message is available from sg_last_error().
 * Strings returned through char** out-parameters are heap allocated and
 * must be released with sg_string_free().
 */
#ifndef SOFTGRP_SOFTGRP_H
#define SOFTGRP_SOFTGRP_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(SOFTGRP_BUILDING_LIBRARY)
#    define SOFTGRP_API __declspec(dllexport)
#  else
#    define SOFTGRP_API __declspec(dllimport)
#  endif
#else
#  define SOFTGRP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sg_status {
  SG_OK = 0,
  SG_ERR_INVALID_ARGUMENT = 1,
  SG_ERR_PARSE = 2,
  SG_ERR_DEGREE_MISMATCH = 3,
  SG_ERR_NOT_SUBGROUP = 4,
  SG_ERR_NOT_HOMOMORPHISM = 5,
  SG_ERR_DIAGRAM_VIOLATION = 6,
  SG_ERR_NOT_COMPOSABLE = 7,
  SG_ERR_SCALE_BOUND = 8,
  SG_ERR_KERNEL_UNDEFINED = 9,
  SG_ERR_INTERNAL = 10
} sg_status;

typedef enum sg_holds {
  SG_HOLDS_FALSE = 0,
  SG_HOLDS_TRUE = 1,
  SG_HOLDS_UNKNOWN_AT_SCALE = 2
} sg_holds;

typedef struct sg_group sg_group;
typedef struct sg_soft_group sg_soft_group;
typedef struct sg_soft_hom sg_soft_hom;

typedef struct sg_bounds {
  size_t max_order;
  size_t max_params;
  size_t max_candidates;
  size_t max_homs;
  size_t max_witness_order;
} sg_bounds;

SOFTGRP_API const char* sg_version(void);
SOFTGRP_API const char* sg_status_name(sg_status status);
SOFTGRP_API const char* sg_last_error(void);
SOFTGRP_API void sg_string_free(char* s);
SOFTGRP_API sg_bounds sg_default_bounds(void);

/* Finite groups of signed permutations. */
SOFTGRP_API sg_status sg_group_hyperoctahedral(int n, sg_group** out);
SOFTGRP_API sg_status sg_group_from_json(const char* json, sg_group** out);
SOFTGRP_API sg_status sg_group_to_json(const sg_group* g, char** out);
SOFTGRP_API size_t sg_group_order(const sg_group* g);
SOFTGRP_API int sg_group_degree(const sg_group* g);
SOFTGRP_API void sg_group_free(sg_group* g);

/* JSON array [{"relation", "holds"}] of the type-B presentation at degree n. */
SOFTGRP_API sg_status sg_presentation_check(int n, char** out_json);

/* kind is "sc" or "bp". Writes one JSON document per line, canonical order. */
SOFTGRP_API sg_status sg_enumerate(const char* kind, int n, char** out_lines, size_t* out_count);

/* Soft groups. */
SOFTGRP_API sg_status sg_soft_group_from_json(const char* json, sg_soft_group** out);
SOFTGRP_API sg_status sg_soft_group_to_json(const sg_soft_group* s, char** out);
SOFTGRP_API size_t sg_soft_group_param_count(const sg_soft_group* s);
SOFTGRP_API int sg_soft_group_is_trivial(const sg_soft_group* s);
SOFTGRP_API int sg_soft_group_is_completely_soft(const sg_soft_group* s);
SOFTGRP_API void sg_soft_group_free(sg_soft_group* s);
SOFTGRP_API sg_status sg_final_object(sg_soft_group** out);

/* Soft product with its projections; proj1/proj2 may be NULL. */
SOFTGRP_API sg_status sg_soft_product(const sg_soft_group* a, const sg_soft_group* b,
                                      sg_soft_group** product, sg_soft_hom** proj1,
                                      sg_soft_hom** proj2);

/* Monoidal sanity report {"ok", "checks": [{"name", "ok"}]}. */
SOFTGRP_API sg_status sg_monoidal_check(const sg_soft_group* a, const sg_soft_group* b,
                                        const sg_soft_group* c, char** out_json);

/* Soft homomorphisms. */
SOFTGRP_API sg_status sg_soft_hom_from_json(const char* json, sg_soft_hom** out);
SOFTGRP_API sg_status sg_soft_hom_to_json(const sg_soft_hom* h, char** out);
SOFTGRP_API sg_status sg_soft_hom_unit(const sg_soft_group* s, sg_soft_hom** out);
SOFTGRP_API sg_status sg_soft_hom_compose(const sg_soft_hom* second, const sg_soft_hom* first,
                                          sg_soft_hom** out);
SOFTGRP_API int sg_soft_hom_equal(const sg_soft_hom* a, const sg_soft_hom* b);
SOFTGRP_API int sg_soft_hom_is_isomorphism(const sg_soft_hom* h);
SOFTGRP_API void sg_soft_hom_free(sg_soft_hom* h);

/* *defined is set to 0 (and *out to NULL) when the soft kernel is undefined. */
SOFTGRP_API sg_status sg_soft_kernel(const sg_soft_hom* h, int* defined, sg_soft_group** out);

/* Kernel report {"defined", "params", "carrier_order", "injective", "trivial", "agree"}. */
SOFTGRP_API sg_status sg_kernel_report(const sg_soft_hom* h, char** out_json);

/* property is "monic", "epic" or "split-monic". bounds may be NULL for the
 * defaults. The verdict is checked against a seeded universe of `universe_size`
 * small soft groups plus the morphism's own endpoints. */
SOFTGRP_API sg_status sg_analyze(const sg_soft_hom* h, const char* property,
                                 const sg_bounds* bounds, unsigned long long seed,
                                 size_t universe_size, sg_holds* holds, char** out_verdict_json);

/* Re-verifies a verdict document (with its embedded witnesses) against h.
 * *ok is 1 when the witness checks out. */
SOFTGRP_API sg_status sg_verify_verdict(const sg_soft_hom* h, const char* verdict_json,
                                        const sg_bounds* bounds, int* ok);

/* (F, SC(n)), (G, BP(n)) over W_n and the morphism (identity, Lambda). */
SOFTGRP_API sg_status sg_hyperoctahedral_example(int n, sg_soft_group** by_composition,
                                                 sg_soft_group** by_bipartition,
                                                 sg_soft_hom** hom);

#ifdef __cplusplus
}
#endif

#endif /* SOFTGRP_SOFTGRP_H */
