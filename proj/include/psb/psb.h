// Copyright 2026 The psb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the psb library.
 *
 * Every object is an opaque handle owned by the caller and released with the
 * matching *_free function. Functions return a psb_status; on failure the
 * message is available from psb_last_error() until the next call on the same
 * thread. Strings returned through char** out-parameters are released with
 * psb_string_free.
 *
 * Chamber and point numbering in text and JSON is 1-based; colors are 0-based.
 */
#ifndef PSB_H
#define PSB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PSB_BUILDING_LIBRARY)
#    define PSB_API __declspec(dllexport)
#  else
#    define PSB_API __declspec(dllimport)
#  endif
#else
#  define PSB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum psb_status {
  PSB_OK = 0,
  PSB_ERR_PARSE = 1,        /* malformed text or JSON */
  PSB_ERR_STRUCTURE = 2,    /* shape or invariant violation */
  PSB_ERR_PRECONDITION = 3, /* operation outside its domain */
  PSB_ERR_CAP = 4,          /* size cap exceeded */
  PSB_ERR_ARGUMENT = 5,     /* null pointer or bad argument */
  PSB_ERR_INTERNAL = 6
} psb_status;

typedef struct psb_tuple psb_tuple;
typedef struct psb_gem psb_gem;
typedef struct psb_bordism psb_bordism;
typedef struct psb_complex psb_complex;
typedef struct psb_state psb_state;
typedef struct psb_matrix psb_matrix;

PSB_API const char* psb_last_error(void);
PSB_API const char* psb_version(void);
PSB_API void psb_string_free(char* s);

/* Permutation tuples ------------------------------------------------------ */

/* "(1 2); e; (2 3)": one cycle string per color. */
PSB_API psb_status psb_tuple_parse(const char* text, psb_tuple** out);
PSB_API psb_status psb_tuple_format(const psb_tuple* g, char** out);
PSB_API psb_status psb_tuple_random(uint32_t size, size_t colors, uint64_t seed, psb_tuple** out);
PSB_API size_t psb_tuple_colors(const psb_tuple* g);
PSB_API uint32_t psb_tuple_degree(const psb_tuple* g);
/* Representative of the double-coset product g o h in K(alpha)\G/K(gamma). */
PSB_API psb_status psb_tuple_product(const psb_tuple* g, const psb_tuple* h, uint32_t alpha,
                                     uint32_t beta, uint32_t gamma, psb_tuple** out);
PSB_API psb_status psb_tuple_involution(const psb_tuple* g, psb_tuple** out);
PSB_API void psb_tuple_free(psb_tuple* g);

/* Gems -------------------------------------------------------------------- */

/* Fully labeled gem with max(degree, min_size) chambers of each sign. */
PSB_API psb_status psb_gem_from_tuple(const psb_tuple* g, uint32_t min_size, psb_gem** out);
PSB_API psb_status psb_gem_from_json(const char* json, psb_gem** out);
PSB_API psb_status psb_gem_to_json(const psb_gem* gem, char** out);
PSB_API psb_status psb_gem_to_dot(const psb_gem* gem, char** out);
/* Requires full labels. */
PSB_API psb_status psb_gem_to_tuple(const psb_gem* gem, psb_tuple** out);
/* Completes missing labels in ascending chamber order first; needs labels of each sign
 * to be contiguous from 1 for the result to extend them. */
PSB_API psb_status psb_gem_complete_to_tuple(const psb_gem* gem, psb_tuple** out);
PSB_API unsigned psb_gem_dimension(const psb_gem* gem);
PSB_API uint32_t psb_gem_size(const psb_gem* gem);
PSB_API void psb_gem_free(psb_gem* gem);

/* Pseudobordisms (morphisms source -> target) ------------------------------ */

/* Double coset K(target) g K(source) as a morphism. */
PSB_API psb_status psb_bordism_from_tuple(const psb_tuple* g, uint32_t target, uint32_t source,
                                          psb_bordism** out);
PSB_API psb_status psb_bordism_from_json(const char* json, psb_bordism** out);
PSB_API psb_status psb_bordism_to_json(const psb_bordism* s, char** out);
PSB_API psb_status psb_bordism_to_tuple(const psb_bordism* s, psb_tuple** out);
PSB_API psb_status psb_bordism_identity(unsigned dimension, uint32_t alpha, psb_bordism** out);
/* sigma o lambda; requires source(sigma) == target(lambda). */
PSB_API psb_status psb_bordism_compose(const psb_bordism* sigma, const psb_bordism* lambda,
                                       psb_bordism** out);
PSB_API psb_status psb_bordism_involution(const psb_bordism* s, psb_bordism** out);
/* Canonical key as lowercase hex. */
PSB_API psb_status psb_bordism_canonical_hex(const psb_bordism* s, char** out);
PSB_API psb_status psb_bordism_equal(const psb_bordism* a, const psb_bordism* b, int* out);
PSB_API uint32_t psb_bordism_source(const psb_bordism* s);
PSB_API uint32_t psb_bordism_target(const psb_bordism* s);
PSB_API psb_status psb_bordism_gem(const psb_bordism* s, psb_gem** out);
PSB_API void psb_bordism_free(psb_bordism* s);

/* Simplicial cell complexes ---------------------------------------------- */

PSB_API psb_status psb_complex_from_gem(const psb_gem* gem, psb_complex** out);
PSB_API psb_status psb_complex_from_json(const char* json, psb_complex** out);
PSB_API psb_status psb_complex_to_json(const psb_complex* cx, char** out);
/* Human-readable f-vector, Euler characteristic, pseudomanifold and normality report. */
PSB_API psb_status psb_complex_report(const psb_complex* cx, char** out);
PSB_API psb_status psb_complex_normalize(const psb_complex* cx, psb_complex** out);
/* Writes up to `capacity` counts; *count receives the full length. */
PSB_API psb_status psb_complex_f_vector(const psb_complex* cx, size_t* counts, size_t capacity,
                                        size_t* count);
PSB_API psb_status psb_complex_euler(const psb_complex* cx, int64_t* out);
PSB_API psb_status psb_complex_is_pseudomanifold(const psb_complex* cx, int* out);
/* Requires a pseudomanifold. */
PSB_API psb_status psb_complex_is_normal(const psb_complex* cx, int* out);
PSB_API void psb_complex_free(psb_complex* cx);

/* States and representations -------------------------------------------- */

/* Coefficients row-major with color 0 slowest; im may be NULL. Normalized on creation. */
PSB_API psb_status psb_state_create(const size_t* dims, size_t colors, const double* re,
                                    const double* im, psb_state** out);
PSB_API psb_status psb_state_uniform(const size_t* dims, size_t colors, psb_state** out);
PSB_API psb_status psb_state_from_json(const char* json, psb_state** out);
PSB_API psb_status psb_state_to_json(const psb_state* xi, char** out);
PSB_API void psb_state_free(psb_state* xi);

PSB_API psb_status psb_spherical_direct(const psb_tuple* g, const psb_state* xi, double* re,
                                        double* im);
PSB_API psb_status psb_spherical_combinatorial(const psb_gem* gem, const psb_state* xi,
                                               uint64_t cap, double* re, double* im);
/* cap 0 selects the default of 10^7 entries. */
PSB_API psb_status psb_rho_bar(const psb_tuple* g, uint32_t alpha, uint32_t beta,
                               const psb_state* xi, uint64_t cap, psb_matrix** out);
PSB_API psb_status psb_rho_bar_bordism(const psb_bordism* s, const psb_state* xi, uint64_t cap,
                                       psb_matrix** out);

PSB_API size_t psb_matrix_rows(const psb_matrix* m);
PSB_API size_t psb_matrix_cols(const psb_matrix* m);
PSB_API psb_status psb_matrix_entry(const psb_matrix* m, size_t row, size_t col, double* re,
                                    double* im);
PSB_API psb_status psb_matrix_to_json(const psb_matrix* m, char** out);
PSB_API psb_status psb_matrix_to_text(const psb_matrix* m, char** out);
PSB_API void psb_matrix_free(psb_matrix* m);

#ifdef __cplusplus
}
#endif

#endif /* PSB_H */
