#ifndef MATCHEXT_H
#define MATCHEXT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MxStatus {
  MX_STATUS_OK = 0,
  MX_STATUS_INVALID_ARGUMENT = 1,
  MX_STATUS_PARSE_ERROR = 2,
  MX_STATUS_RESOURCE_LIMIT = 3,
  MX_STATUS_UNDEFINED = 4,
  MX_STATUS_IO = 5,
  MX_STATUS_NULL_POINTER = 6,
  MX_STATUS_PANIC = 7,
} MxStatus;

/**
 * Opaque graph handle.
 */
typedef struct MxGraph MxGraph;

/**
 * Exact rational; `infinite` set means `+∞` and `num`/`den` are zero.
 */
typedef struct MxRational {
  int64_t num;
  int64_t den;
  bool infinite;
} MxRational;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next call into the library from this thread.
 */
const char *mx_last_error(void);

/**
 * # Safety
 * `text` must be a NUL-terminated string; `out` a writable pointer.
 */
enum MxStatus mx_graph_from_graph6(const char *text, struct MxGraph **out);

/**
 * Builds a graph on `n` vertices from `m` edges laid out as
 * `edges[2i], edges[2i+1]`.
 *
 * # Safety
 * `edges` must point to `2 * m` values (may be null when `m == 0`);
 * `out` must be writable.
 */
enum MxStatus mx_graph_from_edges(size_t n, const size_t *edges, size_t m, struct MxGraph **out);

/**
 * # Safety
 * `g` must be null or a handle from this library not yet freed.
 */
void mx_graph_free(struct MxGraph *g);

/**
 * Number of vertices; 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t mx_graph_order(const struct MxGraph *g);

/**
 * # Safety
 * `g` must be a live handle; `out` writable. Free the result with [`mx_string_free`].
 */
enum MxStatus mx_graph_to_graph6(const struct MxGraph *g, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void mx_string_free(char *s);

/**
 * # Safety
 * `g` must be a live handle; `out` writable.
 */
enum MxStatus mx_binding_number(const struct MxGraph *g, struct MxRational *out);

/**
 * # Safety
 * `g` must be a live handle; `out` writable.
 */
enum MxStatus mx_toughness(const struct MxGraph *g, struct MxRational *out);

/**
 * # Safety
 * `g` must be a live handle; `out` writable.
 */
enum MxStatus mx_vertex_connectivity(const struct MxGraph *g, size_t *out);

/**
 * Girth, or 0 for a forest.
 *
 * # Safety
 * `g` must be a live handle; `out` writable.
 */
enum MxStatus mx_girth(const struct MxGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle; `out` writable.
 */
enum MxStatus mx_has_perfect_matching(const struct MxGraph *g, bool *out);

/**
 * Writes the verdict to `holds`. When `certificate_json` is non-null it
 * receives the failure certificate as JSON (null when the property holds).
 *
 * # Safety
 * `g` must be a live handle; `holds` writable; `certificate_json` null or writable.
 */
enum MxStatus mx_is_k_extendable(const struct MxGraph *g,
                                 size_t k,
                                 bool *holds,
                                 char **certificate_json);

/**
 * # Safety
 * As [`mx_is_k_extendable`].
 */
enum MxStatus mx_is_n_factor_critical(const struct MxGraph *g,
                                      size_t n,
                                      bool *holds,
                                      char **certificate_json);

/**
 * # Safety
 * As [`mx_is_k_extendable`].
 */
enum MxStatus mx_is_nk_extendable(const struct MxGraph *g,
                                  size_t n,
                                  size_t k,
                                  bool *holds,
                                  char **certificate_json);

/**
 * `strict_disjoint` additionally requires `M ∪ N` to be a matching.
 *
 * # Safety
 * As [`mx_is_k_extendable`].
 */
enum MxStatus mx_is_emn_extendable(const struct MxGraph *g,
                                   size_t m,
                                   size_t n,
                                   bool strict_disjoint,
                                   bool *holds,
                                   char **certificate_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MATCHEXT_H */
