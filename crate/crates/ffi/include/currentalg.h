#ifndef CURRENTALG_H
#define CURRENTALG_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  CA_STATUS_OK = 0,
  CA_STATUS_NULL_POINTER = 1,
  CA_STATUS_INVALID_UTF8 = 2,
  CA_STATUS_PARSE = 3,
  CA_STATUS_INVALID_PARAMETER = 4,
  CA_STATUS_UNKNOWN_ALGEBRA = 5,
  CA_STATUS_DIMENSION_MISMATCH = 6,
  CA_STATUS_FIELD_MISMATCH = 7,
  CA_STATUS_KIND_MISMATCH = 8,
  CA_STATUS_IDENTITY_FAILURE = 9,
  CA_STATUS_UNSUPPORTED_DEGREE = 10,
  CA_STATUS_SINGULAR = 11,
  CA_STATUS_NOT_IDEMPOTENT = 12,
  CA_STATUS_NILALGEBRA = 13,
  CA_STATUS_SEARCH_BOUND = 14,
  CA_STATUS_INCONSISTENT = 15,
  CA_STATUS_IO = 16,
  CA_STATUS_PANIC = 99,
} CaStatus;

typedef enum {
  CA_VERDICT_RIGID_BY_H2_ZERO = 0,
  CA_VERDICT_INCONCLUSIVE = 1,
} CaVerdict;

/**
 * Opaque algebra handle.
 */
typedef struct CaAlgebra CaAlgebra;

typedef struct {
  size_t dim_z;
  size_t dim_b;
  size_t dim_h;
} CaCohomologyDims;

typedef struct {
  CaVerdict verdict;
  CaCohomologyDims h2;
  size_t orbit_dim;
} CaRigidity;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL after a
 * successful call. Valid until the next call on the same thread.
 */
const char *ca_last_error(void);

/**
 * Parses an algebra file (JSON text).
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
CaStatus ca_algebra_from_json(const char *json, CaAlgebra **out);

/**
 * Builds a catalog algebra from `name` or `name(p1,p2,...)`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string; `out` must be writable.
 */
CaStatus ca_algebra_from_catalog(const char *spec, CaAlgebra **out);

/**
 * Releases a handle. NULL is ignored.
 *
 * # Safety
 * `alg` must come from this library and not be used afterwards.
 */
void ca_algebra_free(CaAlgebra *alg);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void ca_string_free(char *s);

/**
 * # Safety
 * `alg` must be a live handle; `out` must be writable.
 */
CaStatus ca_algebra_dim(const CaAlgebra *alg, size_t *out);

/**
 * Canonical algebra file text.
 *
 * # Safety
 * `alg` must be a live handle; `out` must be writable.
 */
CaStatus ca_algebra_to_json(const CaAlgebra *alg, char **out);

/**
 * Jacobi (Lie) or associativity (commutative) check on basis triples.
 *
 * # Safety
 * `alg` must be a live handle; `pass` and `violations` must be writable.
 */
CaStatus ca_algebra_check_identities(const CaAlgebra *alg, bool *pass, size_t *violations);

/**
 * `g ⊗ A`.
 *
 * # Safety
 * `g` and `a` must be live handles; `out` must be writable.
 */
CaStatus ca_current_algebra(const CaAlgebra *g, const CaAlgebra *a, CaAlgebra **out);

/**
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
CaStatus ca_direct_sum(const CaAlgebra *a, const CaAlgebra *b, CaAlgebra **out);

/**
 * Chevalley–Eilenberg cohomology dimensions with adjoint coefficients,
 * degree 0, 1 or 2.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
CaStatus ca_chevalley_dims(const CaAlgebra *g, size_t degree, CaCohomologyDims *out);

/**
 * Harrison `H²` of a commutative associative algebra.
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
CaStatus ca_harrison_h2(const CaAlgebra *a, CaCohomologyDims *out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
CaStatus ca_rigidity_certificate(const CaAlgebra *g, CaRigidity *out);

/**
 * Basis-independent invariants as a JSON object.
 *
 * # Safety
 * `alg` must be a live handle; `out` must be writable.
 */
CaStatus ca_fingerprint_json(const CaAlgebra *alg, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CURRENTALG_H */
