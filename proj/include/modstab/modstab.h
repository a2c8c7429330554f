/*
 * modstab: exact symmetric-group characters of the cohomology of configuration
 * spaces of points in the plane and of the moduli spaces M_{0,n}, with
 * representation-stability checks.
 *
 * All functions return a modstab_status. On failure, a message is available
 * through modstab_last_error() on the context that was passed in. Strings
 * handed out by the library must be released with modstab_string_free().
 */
#ifndef MODSTAB_MODSTAB_H
#define MODSTAB_MODSTAB_H

#include <stddef.h>

#if defined(MODSTAB_BUILDING_LIBRARY)
#define MODSTAB_API __attribute__((visibility("default")))
#else
#define MODSTAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum modstab_status {
  MODSTAB_OK = 0,
  MODSTAB_ERR_INVALID_ARGUMENT = 1,
  MODSTAB_ERR_BUDGET = 2,
  MODSTAB_ERR_NOT_GENUINE = 3,
  MODSTAB_ERR_VERIFICATION = 4,
  MODSTAB_ERR_INTERNAL = 5
} modstab_status;

typedef enum modstab_family {
  MODSTAB_FAMILY_F = 0,      /* H^i(F(C, n)) */
  MODSTAB_FAMILY_MSHIFT = 1, /* H^i(M_{0,n+1}) restricted to S_n */
  MODSTAB_FAMILY_M = 2       /* H^i(M_{0,n}) */
} modstab_family;

typedef enum modstab_format {
  MODSTAB_FORMAT_JSON = 0,
  MODSTAB_FORMAT_CSV = 1,
  MODSTAB_FORMAT_TEXT = 2
} modstab_format;

/* Run configuration and last-error slot. Defaults: max_n 13, max_i 2,
 * oracle_max_n 6, stable_margin 2. */
typedef struct modstab_context modstab_context;

/* A computed result: rows of (n, key, value) plus a renderable document. */
typedef struct modstab_table modstab_table;

MODSTAB_API modstab_status modstab_context_create(modstab_context** out);
MODSTAB_API void modstab_context_destroy(modstab_context* ctx);
MODSTAB_API const char* modstab_last_error(const modstab_context* ctx);

MODSTAB_API modstab_status modstab_context_set_budget(modstab_context* ctx, int max_n, int max_i);
MODSTAB_API modstab_status modstab_context_set_oracle_max_n(modstab_context* ctx, int oracle_max_n);
MODSTAB_API modstab_status modstab_context_set_stable_margin(modstab_context* ctx, int margin);

/* Character values per (n, cycle type). */
MODSTAB_API modstab_status modstab_characters(modstab_context* ctx, modstab_family family, int degree,
                                              int n_min, int n_max, modstab_table** out);

/* Irreducible multiplicities keyed by the unpadded partition. */
MODSTAB_API modstab_status modstab_decompose(modstab_context* ctx, modstab_family family, int degree,
                                             int n_min, int n_max, modstab_table** out);

/* Character polynomial of degree <= poly_degree fitted on n_min..n_max, with
 * held-out checks at n_max + 1 and n_max + 2. */
MODSTAB_API modstab_status modstab_charpoly(modstab_context* ctx, modstab_family family, int degree,
                                            int poly_degree, int n_min, int n_max, modstab_table** out);

/* Multiplicity stabilization, bound verdicts and coinvariant characters for a <= a_max. */
MODSTAB_API modstab_status modstab_stability(modstab_context* ctx, modstab_family family, int degree,
                                             int n_min, int n_max, int a_max, modstab_table** out);

/* Runs the full verification suite. The table is always produced when the
 * status is MODSTAB_OK; its passed flag tells whether every check passed. */
MODSTAB_API modstab_status modstab_verify(modstab_context* ctx, modstab_table** out);

MODSTAB_API void modstab_table_destroy(modstab_table* table);
MODSTAB_API size_t modstab_table_row_count(const modstab_table* table);
/* Row n, or -1 when the row is not attached to a specific n. */
MODSTAB_API int modstab_table_row_n(const modstab_table* table, size_t row);
MODSTAB_API const char* modstab_table_row_key(const modstab_table* table, size_t row);
MODSTAB_API const char* modstab_table_row_value(const modstab_table* table, size_t row);
/* 1 when every verdict carried by the table holds, 0 otherwise. */
MODSTAB_API int modstab_table_passed(const modstab_table* table);
MODSTAB_API modstab_status modstab_table_render(const modstab_table* table, modstab_format format, char** out);

/* Exact single queries; values are rendered as "p" or "p/q". cycle_type lists
 * the cycle lengths of a permutation in S_n, in any order. */
MODSTAB_API modstab_status modstab_character_value(modstab_context* ctx, modstab_family family, int degree,
                                                   const int* cycle_type, size_t parts, char** value);
MODSTAB_API modstab_status modstab_irreducible_character(modstab_context* ctx, const int* shape,
                                                         size_t shape_parts, const int* cycle_type,
                                                         size_t cycle_parts, char** value);

MODSTAB_API void modstab_string_free(char* s);

MODSTAB_API const char* modstab_status_string(modstab_status status);

#ifdef __cplusplus
}
#endif

#endif /* MODSTAB_MODSTAB_H */
