#ifndef BIPAN_H
#define BIPAN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BipanStatus {
  BIPAN_STATUS_OK = 0,
  BIPAN_STATUS_NULL_POINTER = 1,
  BIPAN_STATUS_INVALID_UTF8 = 2,
  BIPAN_STATUS_PARSE_ERROR = 3,
  BIPAN_STATUS_INVALID_ARGUMENT = 4,
  BIPAN_STATUS_NOT_BIPARTITE = 5,
  BIPAN_STATUS_TOO_LARGE = 6,
  BIPAN_STATUS_BUFFER_TOO_SMALL = 7,
  BIPAN_STATUS_PANIC = 8,
} BipanStatus;

typedef enum BipanOutcome {
  BIPAN_OUTCOME_CONFIRMED = 0,
  BIPAN_OUTCOME_HYPOTHESES_NOT_MET = 1,
  BIPAN_OUTCOME_VIOLATION = 2,
} BipanOutcome;

/**
 * Opaque digraph handle.
 */
typedef struct BipanDigraph BipanDigraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Valid until the
 * next call into the library from the same thread.
 */
const char *bipan_last_error(void);

/**
 * Parses the canonical text format.
 */
enum BipanStatus bipan_digraph_parse(const char *text_in, struct BipanDigraph **out);

/**
 * Builds a family member. `param` is `a` for `cycle` and `complete`, `m`
 * for the H-families, and ignored otherwise; `flag` selects `both_arcs`
 * for `h2m` and `out_orientation` for `hm-m1-1`.
 */
enum BipanStatus bipan_digraph_family(const char *name,
                                      uint32_t param,
                                      bool flag,
                                      struct BipanDigraph **out);

/**
 * Seeded random balanced bipartite digraph; identical to
 * `bipan gen --family random`.
 */
enum BipanStatus bipan_digraph_random(uint32_t a,
                                      double p,
                                      uint64_t seed,
                                      struct BipanDigraph **out);

/**
 * Releases a handle; NULL is ignored.
 */
void bipan_digraph_free(struct BipanDigraph *d);

/**
 * Number of vertices, or 0 for NULL.
 */
size_t bipan_digraph_order(const struct BipanDigraph *d);

/**
 * Number of arcs, or 0 for NULL.
 */
size_t bipan_digraph_arc_count(const struct BipanDigraph *d);

/**
 * Canonical serialization; free the result with `bipan_string_free`.
 */
enum BipanStatus bipan_digraph_serialize(const struct BipanDigraph *d, char **out);

void bipan_string_free(char *s);

/**
 * Condition `B_k`. `pairs_checked` may be NULL.
 */
enum BipanStatus bipan_check_bk(const struct BipanDigraph *d,
                                int64_t k,
                                bool *holds,
                                size_t *pairs_checked);

enum BipanStatus bipan_is_strong(const struct BipanDigraph *d, bool *strong);

/**
 * Lexicographically smallest cycle of length `m`. On success `*found`
 * tells whether one exists; its vertices are written to `buf`, which must
 * hold at least `m` entries.
 */
enum BipanStatus bipan_find_cycle(const struct BipanDigraph *d,
                                  size_t m,
                                  uint32_t *buf,
                                  size_t buf_len,
                                  bool *found);

/**
 * Achievable cycle lengths as a bitmask: bit `m` is set when a cycle of
 * length `m` exists; a 64-cycle cannot be represented. `max_n` bounds the
 * order (0 selects the default).
 */
enum BipanStatus bipan_cycle_spectrum(const struct BipanDigraph *d, size_t max_n, uint64_t *mask);

/**
 * Evaluates theorem `"1.7"`, `"1.8"`, `"1.9"` or `"1.10"`. `report`, if not
 * NULL, receives the key-value certificate (free with `bipan_string_free`).
 */
enum BipanStatus bipan_certify(const struct BipanDigraph *d,
                               const char *theorem,
                               enum BipanOutcome *outcome,
                               char **report);

/**
 * Isomorphism with D(8). When one exists, `mapping` (8 entries, may be
 * NULL) receives for each vertex of `d` its image in D(8).
 */
enum BipanStatus bipan_iso_d8(const struct BipanDigraph *d, bool *isomorphic, uint32_t *mapping);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BIPAN_H */
