#ifndef RAINBOW_FFI_H
#define RAINBOW_FFI_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum RbStatus {
  RB_STATUS_OK = 0,
  RB_STATUS_NULL_POINTER = 1,
  RB_STATUS_INVALID_ARGUMENT = 2,
  RB_STATUS_INVALID_VERTEX = 3,
  RB_STATUS_MISSING_EDGE = 4,
  RB_STATUS_COLORING_MISMATCH = 5,
  RB_STATUS_RESOURCE_GUARD = 6,
  RB_STATUS_PARSE = 7,
  RB_STATUS_IO = 8,
  RB_STATUS_PANIC = 9,
} RbStatus;

/**
 * Opaque edge coloring of a specific graph.
 */
typedef struct RbColoring RbColoring;

/**
 * Opaque bipartite graph.
 */
typedef struct RbGraph RbGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. The pointer is
 * owned by the library and valid until the next call on this thread.
 */
const char *rb_last_error_message(void);

/**
 * Frees a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void rb_string_free(char *s);

/**
 * Samples `G(m, n, p)` into `*out`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage.
 */
enum RbStatus rb_graph_sample(size_t m, size_t n, double p, uint64_t seed, struct RbGraph **out);

/**
 * Builds a graph from `len` edges `(us[i], vs[i])`, left index first.
 *
 * # Safety
 * `us` and `vs` must point to `len` readable elements; `out` must be writable.
 */
enum RbStatus rb_graph_from_edges(size_t m,
                                  size_t n,
                                  const size_t *us,
                                  const size_t *vs,
                                  size_t len,
                                  struct RbGraph **out);

/**
 * Parses the edge-list text format.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum RbStatus rb_graph_from_text(const char *text, struct RbGraph **out);

/**
 * Writes the edge-list text of `g` into `*out`; free it with [`rb_string_free`].
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum RbStatus rb_graph_to_text(const struct RbGraph *g, char **out);

/**
 * Releases a graph. NULL is ignored.
 *
 * # Safety
 * `g` must come from this library and not be freed twice.
 */
void rb_graph_free(struct RbGraph *g);

/**
 * Left partite size, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t rb_graph_left_size(const struct RbGraph *g);

/**
 * Right partite size, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t rb_graph_right_size(const struct RbGraph *g);

/**
 * Number of edges, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t rb_graph_edge_count(const struct RbGraph *g);

/**
 * Endpoints of edge `index` in sorted edge order.
 *
 * # Safety
 * `g` must be a live handle; `u` and `v` must be writable.
 */
enum RbStatus rb_graph_edge(const struct RbGraph *g, size_t index, size_t *u, size_t *v);

/**
 * Diameter of `g`. `*connected` is false (and `*out` untouched) when the
 * graph is disconnected.
 *
 * # Safety
 * `g` must be a live handle; `out` and `connected` must be writable.
 */
enum RbStatus rb_graph_diameter(const struct RbGraph *g, size_t *out, bool *connected);

/**
 * Colors every edge of `g` uniformly from `1..=colors`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum RbStatus rb_coloring_random(const struct RbGraph *g,
                                 uint32_t colors,
                                 uint64_t seed,
                                 struct RbColoring **out);

/**
 * Coloring with `colors[i]` on edge `i` (sorted edge order), palette `1..=num_colors`.
 *
 * # Safety
 * `g` must be a live handle, `colors` must point to `len` elements and
 * `out` must be writable.
 */
enum RbStatus rb_coloring_from_colors(const struct RbGraph *g,
                                      uint32_t num_colors,
                                      const uint32_t *colors,
                                      size_t len,
                                      struct RbColoring **out);

/**
 * Color of edge `index`.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum RbStatus rb_coloring_color(const struct RbColoring *c, size_t index, uint32_t *out);

/**
 * Releases a coloring. NULL is ignored.
 *
 * # Safety
 * `c` must come from this library and not be freed twice.
 */
void rb_coloring_free(struct RbColoring *c);

/**
 * Whether every vertex pair of `g` has `k` internally disjoint rainbow
 * paths of length at most `max_len` (0 means unbounded).
 *
 * # Safety
 * `g` and `c` must be live handles; `out` must be writable.
 */
enum RbStatus rb_is_rainbow_k_connected(const struct RbGraph *g,
                                        const struct RbColoring *c,
                                        size_t k,
                                        size_t max_len,
                                        bool *out);

/**
 * Threshold for odd `d`.
 *
 * # Safety
 * `out` must be writable.
 */
enum RbStatus rb_p1(size_t m, size_t n, size_t d, double *out);

/**
 * Threshold for even `d`.
 *
 * # Safety
 * `out` must be writable.
 */
enum RbStatus rb_p2(size_t m, size_t n, size_t d, double *out);

/**
 * `rb_p1` or `rb_p2` according to the parity of `d`.
 *
 * # Safety
 * `out` must be writable.
 */
enum RbStatus rb_threshold(size_t m, size_t n, size_t d, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RAINBOW_FFI_H */
