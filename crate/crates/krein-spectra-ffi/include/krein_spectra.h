#ifndef KREIN_SPECTRA_H
#define KREIN_SPECTRA_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum KsStatus {
  KS_STATUS_OK = 0,
  KS_STATUS_NULL_POINTER = 1,
  KS_STATUS_INVALID_INPUT = 2,
  KS_STATUS_NUMERICAL_FAILURE = 3,
  KS_STATUS_BUFFER_TOO_SMALL = 4,
  KS_STATUS_PANIC = 5,
} KsStatus;

typedef enum KsModelKind {
  KS_MODEL_KIND_OSCILLATOR = 0,
  KS_MODEL_KIND_INTERVAL = 1,
  KS_MODEL_KIND_DIRAC = 2,
  KS_MODEL_KIND_AHARONOV_BOHM = 3,
  KS_MODEL_KIND_SUSY = 4,
} KsModelKind;

/**
 * Opaque operator handle.
 */
typedef struct KsOperator KsOperator;

/**
 * A spectral function value with its truncation bound.
 */
typedef struct KsSample {
  double value;
  double bound;
  size_t terms;
} KsSample;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates an operator. `param` is ν (oscillator, interval), α (Dirac,
 * supercharge) or κ (Aharonov–Bohm). A non-finite `extension` selects the
 * extension at infinity.
 *
 * # Safety
 * `out` must be valid for writing one pointer.
 */
enum KsStatus ks_operator_new(enum KsModelKind kind,
                              double param,
                              double extension,
                              struct KsOperator **out);

/**
 * Releases a handle from `ks_operator_new`. Null is ignored.
 *
 * # Safety
 * `op` must come from `ks_operator_new` and not be used afterwards.
 */
void ks_operator_free(struct KsOperator *op);

/**
 * Writes the first `count` eigenvalues of the positive (`negative` = 0) or
 * negative branch into `buffer`, which must hold `capacity` values.
 *
 * # Safety
 * `op` must be a live handle and `buffer` valid for `capacity` writes.
 */
enum KsStatus ks_eigenvalues(const struct KsOperator *op,
                             bool negative,
                             size_t count,
                             double *buffer,
                             size_t capacity);

/**
 * Heat trace at `t`.
 *
 * # Safety
 * `op` must be a live handle and `out` valid for writing.
 */
enum KsStatus ks_heat_trace(const struct KsOperator *op,
                            double t,
                            double tol,
                            struct KsSample *out);

/**
 * Zeta function at `s`. `order` = 0 sums the spectrum directly; a positive
 * order uses the continued form where available.
 *
 * # Safety
 * `op` must be a live handle and `out` valid for writing.
 */
enum KsStatus ks_zeta(const struct KsOperator *op,
                      double s,
                      size_t order,
                      double tol,
                      struct KsSample *out);

/**
 * Eta function at `s` (Dirac and supercharge).
 *
 * # Safety
 * `op` must be a live handle and `out` valid for writing.
 */
enum KsStatus ks_eta(const struct KsOperator *op, double s, struct KsSample *out);

/**
 * Resolvent trace by spectral summation at `x`, on the imaginary axis when
 * `imaginary` is set.
 *
 * # Safety
 * `op` must be a live handle and `out` valid for writing.
 */
enum KsStatus ks_resolvent_trace(const struct KsOperator *op,
                                 double x,
                                 bool imaginary,
                                 double tol,
                                 struct KsSample *out);

/**
 * Message of the last failure on this thread, valid until the next call
 * on the same thread. Never null.
 */
const char *ks_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KREIN_SPECTRA_H */
