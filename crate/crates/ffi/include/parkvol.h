#ifndef PARKVOL_H
#define PARKVOL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PvStatus {
  PV_STATUS_OK = 0,
  PV_STATUS_NULL_POINTER = 1,
  PV_STATUS_INVALID_ARGUMENT = 2,
  PV_STATUS_CAP_EXCEEDED = 3,
  PV_STATUS_VERIFICATION_FAILED = 4,
  PV_STATUS_INTERNAL = 5,
} PvStatus;

// A univariate polynomial with integer coefficients.
typedef struct PvUniPoly PvUniPoly;

// A validated `Z_S(d)` polytope.
typedef struct PvVolumeSpec PvVolumeSpec;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null. The pointer is
// valid until the next `pv_*` call on the same thread.
const char *pv_last_error(void);

// Release a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void pv_string_free(char *s);

// The Euler number `E_n` as decimal text.
//
// # Safety
// `out` must be valid for writes.
enum PvStatus pv_euler_number(size_t n, char **out);

// Number of permutations of `1..=n` with descent set `{members}`.
//
// # Safety
// `members` must point to `len` values (may be null when `len` is 0); `out`
// must be valid for writes.
enum PvStatus pv_beta(size_t n, const size_t *members, size_t len, char **out);

// Sum enumerator `I_a(q)` for a non-decreasing `a`. `cap` 0 selects the
// default cap.
//
// # Safety
// `a` must point to `len` values; `out` must be valid for writes.
enum PvStatus pv_sum_enumerator_new(const uint32_t *a,
                                    size_t len,
                                    size_t cap,
                                    struct PvUniPoly **out);

// Inversion enumerator `I_n(q)`.
//
// # Safety
// `out` must be valid for writes.
enum PvStatus pv_inversion_enumerator_new(size_t n, size_t cap, struct PvUniPoly **out);

// Degree of the polynomial, or -1 for zero.
//
// # Safety
// `poly` must be a live handle or null.
enum PvStatus pv_unipoly_degree(const struct PvUniPoly *poly, ptrdiff_t *out);

// Coefficient of `q^k` as decimal text.
//
// # Safety
// `poly` must be a live handle; `out` must be valid for writes.
enum PvStatus pv_unipoly_coeff(const struct PvUniPoly *poly, size_t k, char **out);

// Value at `q = -1`.
//
// # Safety
// `poly` must be a live handle; `out` must be valid for writes.
enum PvStatus pv_unipoly_eval_minus_one(const struct PvUniPoly *poly, char **out);

// Value at a rational `q` given as `"p/q"` or an integer.
//
// # Safety
// `poly` must be a live handle, `q` a NUL-terminated string, `out` valid for
// writes.
enum PvStatus pv_unipoly_eval(const struct PvUniPoly *poly, const char *q, char **out);

// Text form, e.g. `"2 + q"`.
//
// # Safety
// `poly` must be a live handle; `out` must be valid for writes.
enum PvStatus pv_unipoly_to_string(const struct PvUniPoly *poly, char **out);

// # Safety
// `poly` must come from this library and not have been freed. Null is ignored.
void pv_unipoly_free(struct PvUniPoly *poly);

// Build `Z_S(d)` for `S ⊆ {2, …, n-1}` and bounds given as text (`"p/q"` or
// integers).
//
// # Safety
// `members` must point to `members_len` values and `d` to `d_len` NUL-terminated
// strings; `out` must be valid for writes.
enum PvStatus pv_volume_spec_new(size_t n,
                                 const size_t *members,
                                 size_t members_len,
                                 const char *const *d,
                                 size_t d_len,
                                 struct PvVolumeSpec **out);

// # Safety
// `spec` must come from this library and not have been freed. Null is ignored.
void pv_volume_spec_free(struct PvVolumeSpec *spec);

// Volume from the signed multinomial sum.
//
// # Safety
// `spec` must be a live handle; `out` must be valid for writes.
enum PvStatus pv_volume_formula(const struct PvVolumeSpec *spec, char **out);

// Volume from the parking function sum.
//
// # Safety
// `spec` must be a live handle; `out` must be valid for writes.
enum PvStatus pv_volume_parking_sum(const struct PvVolumeSpec *spec, size_t cap, char **out);

// Volume from symbolic iterated integration.
//
// # Safety
// `spec` must be a live handle; `out` must be valid for writes.
enum PvStatus pv_volume_integral(const struct PvVolumeSpec *spec, size_t cap, char **out);

// `n! · Vol` as a polynomial in `d1, …, dk`, in canonical text form.
//
// # Safety
// `spec` must be a live handle; `out` must be valid for writes.
enum PvStatus pv_volume_polynomial(const struct PvVolumeSpec *spec, char **out);

// The JSON record `{"n", "S", "d", "volume", "n_factorial_volume_polynomial"}`.
//
// # Safety
// `spec` must be a live handle; `out` must be valid for writes.
enum PvStatus pv_volume_json(const struct PvVolumeSpec *spec, char **out);

// Run the involution checks for `a`. Returns `VerificationFailed` with the
// first failure in [`pv_last_error`] when a check does not hold.
//
// # Safety
// `a` must point to `len` values.
enum PvStatus pv_verify_involution(const uint32_t *a, size_t len, size_t cap);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PARKVOL_H */
