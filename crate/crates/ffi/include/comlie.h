#ifndef COMLIE_H
#define COMLIE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define COMLIE_FAMILY_U 0

#define COMLIE_FAMILY_SU 1

#define COMLIE_FAMILY_SP 2

typedef enum {
  COMLIE_STATUS_OK = 0,
  COMLIE_STATUS_NULL_POINTER = 1,
  COMLIE_STATUS_INVALID_ARGUMENT = 2,
  COMLIE_STATUS_SIZE_CAP = 3,
  COMLIE_STATUS_OUT_OF_RANGE = 4,
  COMLIE_STATUS_BUFFER_TOO_SMALL = 5,
  COMLIE_STATUS_OVERFLOW = 6,
  COMLIE_STATUS_INTERNAL = 7,
} ComlieStatus;

/**
 * A truncated power series in `t` with integer coefficients.
 */
typedef struct ComlieSeries ComlieSeries;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The `E_com` Poincaré polynomial, truncated at its top degree.
 *
 * # Safety
 * `out` must be null or point to writable storage for one handle.
 */
ComlieStatus comlie_ecom_series(uint32_t family, size_t rank, bool use_oracle, ComlieSeries **out);

/**
 * The `B_com` Poincaré series through `t^maxdeg`.
 *
 * # Safety
 * `out` must be null or point to writable storage for one handle.
 */
ComlieStatus comlie_bcom_series(uint32_t family,
                                size_t rank,
                                size_t maxdeg,
                                bool use_oracle,
                                ComlieSeries **out);

/**
 * The stable `B_com` series of a family through `t^maxdeg`.
 *
 * # Safety
 * `out` must be null or point to writable storage for one handle.
 */
ComlieStatus comlie_stable_series(uint32_t family, size_t maxdeg, ComlieSeries **out);

/**
 * Highest degree stored in the series.
 *
 * # Safety
 * `series` must be null or a live handle; `out` must be null or writable.
 */
ComlieStatus comlie_series_trunc(const ComlieSeries *series, size_t *out);

/**
 * Coefficient of `t^degree` as an `int64_t`.
 *
 * # Safety
 * `series` must be null or a live handle; `out` must be null or writable.
 */
ComlieStatus comlie_series_coeff_i64(const ComlieSeries *series, size_t degree, int64_t *out);

/**
 * Coefficient of `t^degree` as a NUL-terminated decimal string.
 *
 * `needed` receives the buffer size required, including the terminator,
 * whether or not `buf` was large enough. `buf` may be null when `len` is 0.
 *
 * # Safety
 * `series` must be a live handle; `buf` must be writable for `len` bytes.
 */
ComlieStatus comlie_series_coeff_string(const ComlieSeries *series,
                                        size_t degree,
                                        char *buf,
                                        size_t len,
                                        size_t *needed);

/**
 * Releases a series handle. Null is ignored.
 *
 * # Safety
 * `series` must be null or a handle not yet freed.
 */
void comlie_series_free(ComlieSeries *series);

/**
 * Message for the last failure on this thread, or null. Valid until the
 * next failing call on the same thread.
 */
const char *comlie_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *comlie_version(void);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* COMLIE_H */
