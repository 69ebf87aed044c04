#ifndef ANISOKIN_H
#define ANISOKIN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum AnisokinStatus {
  ANISOKIN_STATUS_OK = 0,
  /**
   * A positivity condition failed; the message names the inequality.
   */
  ANISOKIN_STATUS_DOMAIN = 1,
  /**
   * Inversion pole or vanishing denominator.
   */
  ANISOKIN_STATUS_SINGULAR = 2,
  ANISOKIN_STATUS_NULL_POINTER = 3,
  ANISOKIN_STATUS_INVALID_ARGUMENT = 4,
  ANISOKIN_STATUS_UNKNOWN_IDENTITY = 5,
  ANISOKIN_STATUS_PANIC = 6,
} AnisokinStatus;

typedef enum AnisokinVerdict {
  ANISOKIN_VERDICT_HOLDS_EXACTLY = 0,
  ANISOKIN_VERDICT_HOLDS_AFTER_STATED_CORRECTION = 1,
  ANISOKIN_VERDICT_FAILS = 2,
} AnisokinVerdict;

/**
 * Opaque ledger handle. Strings handed out stay valid until it is freed.
 */
typedef struct AnisokinLedger AnisokinLedger;

/**
 * Opaque velocity handle.
 */
typedef struct AnisokinVelocity AnisokinVelocity;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. Valid until the
 * next call into the library from the same thread.
 */
const char *anisokin_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *anisokin_version(void);

/**
 * New velocity inside the open domain.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum AnisokinStatus anisokin_velocity_new(double s1,
                                          double s2,
                                          double s3,
                                          struct AnisokinVelocity **out);

/**
 * New velocity without the domain check, for boundary studies.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum AnisokinStatus anisokin_velocity_new_unchecked(double s1,
                                                    double s2,
                                                    double s3,
                                                    struct AnisokinVelocity **out);

/**
 * Releases a velocity. NULL is ignored.
 *
 * # Safety
 * `v` must come from this library and not be used afterwards.
 */
void anisokin_velocity_free(struct AnisokinVelocity *v);

/**
 * Writes the three components to `out[0..3]`.
 *
 * # Safety
 * `v` must be a live handle, `out` valid for three doubles.
 */
enum AnisokinStatus anisokin_velocity_components(const struct AnisokinVelocity *v, double *out);

/**
 * a ⊕ b as a new handle.
 *
 * # Safety
 * `a`, `b` must be live handles, `out` valid for writes.
 */
enum AnisokinStatus anisokin_compose(const struct AnisokinVelocity *a,
                                     const struct AnisokinVelocity *b,
                                     struct AnisokinVelocity **out);

/**
 * ⊖s as a new handle.
 *
 * # Safety
 * `s` must be a live handle, `out` valid for writes.
 */
enum AnisokinStatus anisokin_invert(const struct AnisokinVelocity *s,
                                    struct AnisokinVelocity **out);

/**
 * a ⊖ b as a new handle.
 *
 * # Safety
 * `a`, `b` must be live handles, `out` valid for writes.
 */
enum AnisokinStatus anisokin_subtract(const struct AnisokinVelocity *a,
                                      const struct AnisokinVelocity *b,
                                      struct AnisokinVelocity **out);

/**
 * # Safety
 * `s` must be a live handle, `out` valid for writes.
 */
enum AnisokinStatus anisokin_a_factor(const struct AnisokinVelocity *s, double *out);

/**
 * # Safety
 * `s` must be a live handle, `out` valid for writes.
 */
enum AnisokinStatus anisokin_k_factor(const struct AnisokinVelocity *s, double *out);

/**
 * Y' = Λ(s)Y for `y[0..4]`, written to `out[0..4]`.
 *
 * # Safety
 * `s` must be a live handle, `y` and `out` valid for four doubles.
 */
enum AnisokinStatus anisokin_transform(const struct AnisokinVelocity *s,
                                       const double *y,
                                       double *out);

/**
 * Λ(s) row-major into `out[0..16]`.
 *
 * # Safety
 * `s` must be a live handle, `out` valid for sixteen doubles.
 */
enum AnisokinStatus anisokin_boost_matrix(const struct AnisokinVelocity *s, double *out);

/**
 * F(Y) for `y[0..4]`.
 *
 * # Safety
 * `y` valid for four doubles, `out` valid for writes.
 */
enum AnisokinStatus anisokin_kinematic_length(const double *y, double *out);

/**
 * H(P) for `p[0..4]`.
 *
 * # Safety
 * `p` valid for four doubles, `out` valid for writes.
 */
enum AnisokinStatus anisokin_hamiltonian(const double *p, double *out);

/**
 * Mass-shell energy for spatial momentum `momentum[0..3]`.
 *
 * # Safety
 * `momentum` valid for three doubles, `out` valid for writes.
 */
enum AnisokinStatus anisokin_dispersion_energy(double mass, const double *momentum, double *out);

/**
 * Verdict of one registered identity over `samples` exact samples.
 *
 * # Safety
 * `id` must be a NUL-terminated string, `out` valid for writes.
 */
enum AnisokinStatus anisokin_verify_identity(const char *id,
                                             uintptr_t samples,
                                             uint64_t seed,
                                             enum AnisokinVerdict *out);

/**
 * Full ledger. `samples == 0` selects the default sample count.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum AnisokinStatus anisokin_ledger_new(uint64_t seed,
                                        uintptr_t samples,
                                        struct AnisokinLedger **out);

/**
 * Releases a ledger. NULL is ignored.
 *
 * # Safety
 * `l` must come from this library and not be used afterwards.
 */
void anisokin_ledger_free(struct AnisokinLedger *l);

/**
 * Number of entries; 0 for NULL.
 *
 * # Safety
 * `l` must be a live handle or NULL.
 */
uintptr_t anisokin_ledger_len(const struct AnisokinLedger *l);

/**
 * Identity id of entry `index`, or NULL when out of range.
 *
 * # Safety
 * `l` must be a live handle or NULL.
 */
const char *anisokin_ledger_identity_id(const struct AnisokinLedger *l, uintptr_t index);

/**
 * # Safety
 * `l` must be a live handle, `out` valid for writes.
 */
enum AnisokinStatus anisokin_ledger_verdict(const struct AnisokinLedger *l,
                                            uintptr_t index,
                                            enum AnisokinVerdict *out);

/**
 * The whole ledger as JSON, or NULL for a NULL handle.
 *
 * # Safety
 * `l` must be a live handle or NULL.
 */
const char *anisokin_ledger_json(const struct AnisokinLedger *l);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ANISOKIN_H */
