/*
 *   Copyright 2026 The gea-workbench Authors
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

#ifndef GEA_C_H
#define GEA_C_H

/*
 * C interface to the effect algebra workbench.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a gea_status; on
 * an error status the thread-local message from gea_last_error() says
 * what went wrong. Strings returned through char** out-parameters are
 * heap allocated and must be released with gea_string_free().
 */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(GEA_BUILDING_LIBRARY)
#    define GEA_API __declspec(dllexport)
#  else
#    define GEA_API __declspec(dllimport)
#  endif
#else
#  define GEA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gea_status {
    GEA_OK = 0,
    /* A checked property does not hold; the report says which. */
    GEA_FAILED = 1,
    GEA_ERR_PARSE = 2,
    GEA_ERR_STRUCTURE = 3,
    GEA_ERR_LIMIT = 4,
    GEA_ERR_ARGUMENT = 5,
    GEA_ERR_INTERNAL = 6
} gea_status;

typedef enum gea_kind { GEA_KIND_GEA = 0, GEA_KIND_EA = 1 } gea_kind;

typedef enum gea_direction { GEA_TO_EA = 0, GEA_TO_GEA = 1 } gea_direction;

/* A finite generalized effect algebra, possibly with a declared top. */
typedef struct gea_algebra gea_algebra;
/* A total map between two algebras, of GEA or EA kind. */
typedef struct gea_morphism gea_morphism;

GEA_API const char* gea_last_error(void);
GEA_API void gea_string_free(char* s);
GEA_API const char* gea_status_name(gea_status status);

/* ---- algebras ---------------------------------------------------------- */

GEA_API gea_status gea_algebra_parse(const char* text, gea_algebra** out);
/* Path to an algebra file, or "builtin:NAME". */
GEA_API gea_status gea_algebra_load(const char* location, gea_algebra** out);
GEA_API gea_status gea_algebra_builtin(const char* name, gea_algebra** out);
GEA_API void gea_algebra_free(gea_algebra* algebra);

GEA_API size_t gea_algebra_size(const gea_algebra* algebra);
GEA_API const char* gea_algebra_name(const gea_algebra* algebra);
GEA_API const char* gea_algebra_element_name(const gea_algebra* algebra, size_t index);
GEA_API size_t gea_algebra_zero(const gea_algebra* algebra);
/* 1 and *out set when a top is declared, 0 otherwise. */
GEA_API int gea_algebra_top(const gea_algebra* algebra, size_t* out);
/* 1 and *out set when a ⊕ b is defined, 0 otherwise (also for bad indices). */
GEA_API int gea_algebra_sum(const gea_algebra* algebra, size_t a, size_t b, size_t* out);
/* 1 when a ≤ b in the derived order. */
GEA_API int gea_algebra_leq(const gea_algebra* algebra, size_t a, size_t b);

GEA_API gea_status gea_algebra_serialize(const gea_algebra* algebra, char** out);
GEA_API gea_status gea_algebra_dot(const gea_algebra* algebra, char** out);
/* The unitization F(P), with its top 0* declared. */
GEA_API gea_status gea_algebra_unitize(const gea_algebra* algebra, gea_algebra** out);
GEA_API gea_status gea_algebra_product(const gea_algebra* first, const gea_algebra* second, gea_algebra** out);
GEA_API int gea_algebra_isomorphic(const gea_algebra* a, const gea_algebra* b);

/* ---- morphisms --------------------------------------------------------- */

GEA_API gea_status gea_morphism_unit(const gea_algebra* algebra, gea_morphism** out);
GEA_API gea_status gea_morphism_counit(const gea_algebra* algebra, gea_morphism** out);
GEA_API gea_status gea_morphism_iso_w(const gea_algebra* algebra, gea_morphism** out);
GEA_API gea_status gea_morphism_compose(const gea_morphism* g, const gea_morphism* f, gea_morphism** out);
GEA_API gea_status gea_morphism_unitize(const gea_morphism* f, gea_morphism** out);
GEA_API void gea_morphism_free(gea_morphism* morphism);

GEA_API gea_kind gea_morphism_kind(const gea_morphism* morphism);
GEA_API size_t gea_morphism_source_size(const gea_morphism* morphism);
GEA_API size_t gea_morphism_image(const gea_morphism* morphism, size_t index);
/* GEA_OK when all morphism laws hold, GEA_FAILED otherwise. */
GEA_API gea_status gea_morphism_check(const gea_morphism* morphism, char** report);
GEA_API int gea_morphism_is_full(const gea_morphism* morphism);
GEA_API int gea_morphism_is_isomorphism(const gea_morphism* morphism);
GEA_API gea_status gea_morphism_serialize(const gea_morphism* morphism, char** out);

/* ---- workbench commands -------------------------------------------------
 * Each returns GEA_OK or GEA_FAILED together with a text report, or an
 * error status when the input is malformed. */

GEA_API gea_status gea_check(const gea_algebra* algebra, char** report);
GEA_API gea_status gea_unitize_text(const gea_algebra* algebra, int dot, char** out);
GEA_API gea_status gea_order_text(const gea_algebra* algebra, int dot, char** out);
GEA_API gea_status gea_hom(const gea_algebra* source, const gea_algebra* target, gea_kind kind,
                           int count_only, int full_only, size_t* count, char** out);

typedef struct gea_laws_options {
    const gea_algebra* triangles_with; /* may be NULL */
    int monad;
    int em;
    const char* naturality_path; /* morphism file, may be NULL */
    int json;
} gea_laws_options;

GEA_API gea_status gea_laws(const gea_algebra* algebra, const gea_laws_options* options, char** report);
GEA_API gea_status gea_state_extend(const gea_algebra* algebra, const char* map_path, char** report);
GEA_API gea_status gea_ideals(const gea_algebra* algebra, int probe, char** report);
GEA_API gea_status gea_enumerate(size_t size, gea_kind kind, int up_to_iso, const char* emit_dir, size_t* count,
                                 char** out);
GEA_API gea_status gea_transpose(const gea_algebra* algebra, const char* morphism_path, gea_direction direction,
                                 char** out);

#ifdef __cplusplus
}
#endif

#endif /* GEA_C_H */
