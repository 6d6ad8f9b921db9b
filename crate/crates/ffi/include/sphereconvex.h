#ifndef SPHERECONVEX_H
#define SPHERECONVEX_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Counting semantics for `sc_polytope_count_fp`.
typedef enum ScCountMode {
  SC_COUNT_MODE_BY_FACE = 0,
  SC_COUNT_MODE_BY_PARTITION = 1,
} ScCountMode;

// Result codes.
typedef enum ScStatus {
  SC_STATUS_OK = 0,
  SC_STATUS_NULL_POINTER = 1,
  SC_STATUS_INVALID_UTF8 = 2,
  SC_STATUS_PARSE = 3,
  SC_STATUS_INVALID_PARAMETER = 4,
  SC_STATUS_DIMENSION_MISMATCH = 5,
  SC_STATUS_NOT_HEMISPHERICAL = 6,
  SC_STATUS_NOT_FULL_DIMENSIONAL = 7,
  SC_STATUS_NOT_SIMPLE = 8,
  SC_STATUS_CEILING_EXCEEDED = 9,
  SC_STATUS_BUFFER_TOO_SMALL = 10,
  SC_STATUS_OVERFLOW = 11,
  SC_STATUS_GEOMETRY = 12,
  SC_STATUS_PANIC = 13,
} ScStatus;

// Opaque polytope handle.
typedef struct ScPolytope ScPolytope;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses a polytope file (`{"dim", "vertices", "facet_normals"?}`).
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum ScStatus sc_polytope_from_json(const char *json, struct ScPolytope **out);

// Generates an instance; `kind` is one of `simplex`, `cube`, `cyclic`,
// `stacked`, `random_simplicial_dual`, `random_points`.
//
// # Safety
// `kind` must be a NUL-terminated string; `out` must be writable.
enum ScStatus sc_polytope_generate(const char *kind,
                                   uintptr_t d,
                                   uintptr_t p,
                                   uint64_t seed,
                                   struct ScPolytope **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `p` must come from this library and not be used afterwards.
void sc_polytope_free(struct ScPolytope *p);

// The polar polytope as a new handle.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum ScStatus sc_polytope_polar(const struct ScPolytope *p, struct ScPolytope **out);

// Writes the f-vector `(f_0, ..., f_{d-1})` into `buf`. `*len` receives the
// length; if `cap` is smaller nothing is written and the status is
// `BUFFER_TOO_SMALL`. `buf` may be null when `cap` is 0.
//
// # Safety
// `buf` must hold `cap` entries; `len` must be writable.
enum ScStatus sc_polytope_f_vector(const struct ScPolytope *p,
                                   uintptr_t *buf,
                                   uintptr_t cap,
                                   uintptr_t *len);

// Face-partition-pair count.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum ScStatus sc_polytope_count_fp(const struct ScPolytope *p,
                                   enum ScCountMode mode,
                                   uintptr_t *out);

// Serializes to a polytope file. Free the result with `sc_string_free`.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum ScStatus sc_polytope_to_json(const struct ScPolytope *p, char **out);

// Releases a string from `sc_polytope_to_json`. Null is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void sc_string_free(char *s);

// The lower-bound function `phi_j(d, p)`.
//
// # Safety
// `out` must be writable.
enum ScStatus sc_phi(uintptr_t j, uintptr_t d, uintptr_t p, int64_t *out);

// Message for the last failed call on this thread, empty after a success.
// Valid until the next call on the same thread.
const char *sc_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPHERECONVEX_H */
