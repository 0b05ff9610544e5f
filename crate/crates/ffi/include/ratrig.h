/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef RATRIG_H
#define RATRIG_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes; the first four match the command-line exit codes.
typedef enum {
  RATRIG_STATUS_OK = 0,
  // A law check failed or a pinned value deviated; the report is still returned.
  RATRIG_STATUS_LAW_FAILED = 1,
  // Malformed input or configuration.
  RATRIG_STATUS_INVALID_INPUT = 2,
  // Degenerate geometric input (null vector, dependent points, singular form, ...).
  RATRIG_STATUS_DEGENERATE_INPUT = 3,
  // A required pointer argument was null.
  RATRIG_STATUS_NULL_POINTER = 4,
  // A panic or other unexpected failure inside the library.
  RATRIG_STATUS_INTERNAL = 5,
} RatrigStatus;

// A field together with a bilinear form over it.
typedef struct RatrigContext RatrigContext;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Creates a context from a field (`rational` or `prime:<p>`) and a form.
// Release it with [`ratrig_context_free`].
//
// # Safety
// `field` and `form` must be NUL-terminated strings; `out` must be writable.
RatrigStatus ratrig_context_new(const char *field, const char *form, RatrigContext **out);

// # Safety
// `ctx` must come from [`ratrig_context_new`] and not be used afterwards. Null is ignored.
void ratrig_context_free(RatrigContext *ctx);

// Triangle report for `v1`, `v2` and `v3`; a null `v3` means `-v1 - v2`.
//
// # Safety
// Pointer arguments must be valid; `v3` may be null.
RatrigStatus ratrig_triangle(const RatrigContext *ctx,
                             const char *v1,
                             const char *v2,
                             const char *v3,
                             char **out_json);

// Tripod report for a JSON array of three representatives.
//
// # Safety
// Pointer arguments must be valid.
RatrigStatus ratrig_tripod(const RatrigContext *ctx, const char *points, char **out_json);

// The quadrance of a vector, as a scalar string.
//
// # Safety
// Pointer arguments must be valid.
RatrigStatus ratrig_quadrance(const RatrigContext *ctx, const char *v, char **out_scalar);

// The spread between two vectors, as a scalar string.
//
// # Safety
// Pointer arguments must be valid.
RatrigStatus ratrig_spread(const RatrigContext *ctx,
                           const char *v,
                           const char *w,
                           char **out_scalar);

// Random identity sweep; the summary is JSON. `RATRIG_STATUS_LAW_FAILED`
// if any identity failed.
//
// # Safety
// Pointer arguments must be valid.
RatrigStatus ratrig_verify(const RatrigContext *ctx,
                           uint64_t seed,
                           uint64_t cases,
                           char **out_json);

// Exhaustive identity sweep; the context field must be `prime:<prime>`.
//
// # Safety
// Pointer arguments must be valid.
RatrigStatus ratrig_verify_exhaustive(const RatrigContext *ctx, uint64_t prime, char **out_json);

// Replays a worked example. `q` is the methane edge quadrance and may be null.
//
// # Safety
// `name` must be valid; `q` may be null.
RatrigStatus ratrig_example(const char *name, const char *q, char **out_json);

// The last error message on this thread, or null. Release with [`ratrig_string_free`].
char *ratrig_last_error(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void ratrig_string_free(char *s);

// Library version, static storage.
const char *ratrig_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RATRIG_H */
