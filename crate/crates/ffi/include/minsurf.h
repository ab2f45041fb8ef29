#ifndef MINSURF_H
#define MINSURF_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stddef.h>
#include <stdint.h>

// Result code of every fallible call.
typedef enum MsStatus {
  MS_STATUS_OK = 0,
  // A required pointer argument was NULL.
  MS_STATUS_NULL_POINTER = 1,
  // A string argument was not valid UTF-8.
  MS_STATUS_INVALID_UTF8 = 2,
  // A numeric or enum argument is out of range.
  MS_STATUS_INVALID_ARGUMENT = 3,
  // The surface name is not in the catalog.
  MS_STATUS_UNKNOWN_SURFACE = 4,
  // The engine failed before producing any result.
  MS_STATUS_ENGINE = 5,
  // A run stopped early; the handle holds the steps that succeeded.
  MS_STATUS_PARTIAL = 6,
  // JSON input could not be parsed or failed its integrity check.
  MS_STATUS_MALFORMED = 7,
  // An index is past the end of the run.
  MS_STATUS_OUT_OF_RANGE = 8,
  // The output buffer is too small; the required length was stored.
  MS_STATUS_BUFFER_TOO_SMALL = 9,
  MS_STATUS_PANIC = 10,
} MsStatus;

// Mean-curvature factor used by the first layer(s) of a run.
typedef enum MsHMode {
  MS_H_MODE_TRUE_H = 0,
  MS_H_MODE_UNIT_H_FIRST_STEP = 1,
  MS_H_MODE_UNIT_H_EVERY_STEP = 2,
} MsHMode;

typedef enum MsCurveFunctional {
  MS_CURVE_FUNCTIONAL_SLOPE = 0,
  MS_CURVE_FUNCTIONAL_CURVATURE = 1,
} MsCurveFunctional;

// Result of a curve run.
typedef struct MsCurve MsCurve;

// Result of a surface run.
typedef struct MsReport MsReport;

// A surface description: catalog entry plus any variational layers.
typedef struct MsSurface MsSurface;

// One row of a surface run.
typedef struct MsRecord {
  size_t n;
  double t_min;
  double mu_sq_min;
  double nu;
  double area;
  double ratio;
  double p_pct;
  double p_total_pct;
  double q_pct;
  double q_total_pct;
  double mu_rms_decrease_pct;
} MsRecord;

// One row of a curve run.
typedef struct MsCurveRecord {
  size_t n;
  double t_min;
  double length;
  double length_pct;
  double length_total_pct;
} MsCurveRecord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string.
const char *ms_version(void);

// Copies the last error message of this thread into `buf`.
//
// Returns the message length excluding the terminator. At most `len - 1`
// bytes are copied and the result is always NUL-terminated when `len > 0`.
//
// # Safety
// `buf` must be NULL or point to `len` writable bytes.
size_t ms_last_error_message(char *buf, size_t len);

// Frees a string returned by this library.
//
// # Safety
// `s` must be NULL or a pointer returned by a `*_to_json` function, not yet freed.
void ms_string_free(char *s);

// Creates a catalog surface. `keys` and `values` hold `n_params` parameters.
//
// # Safety
// `name` must be a NUL-terminated string; `keys` and `values` must point to
// `n_params` elements (or may be NULL when `n_params` is 0); `out` must be writable.
enum MsStatus ms_surface_new(const char *name,
                             const char *const *keys,
                             const double *values,
                             size_t n_params,
                             struct MsSurface **out);

// Creates a surface from a custom-surface JSON description.
//
// # Safety
// `json` must be a NUL-terminated string and `out` writable.
enum MsStatus ms_surface_from_json(const char *json, struct MsSurface **out);

// # Safety
// `s` must be a live surface handle.
enum MsStatus ms_surface_set_h_mode(struct MsSurface *s, enum MsHMode mode);

// Sets the reference minimal area; a NaN clears it.
//
// # Safety
// `s` must be a live surface handle.
enum MsStatus ms_surface_set_reference_area(struct MsSurface *s, double area);

// Writes the point `x(u, v)` to `out[0..3]`.
//
// # Safety
// `s` must be a live surface handle and `out` must point to 3 writable doubles.
enum MsStatus ms_surface_position(const struct MsSurface *s, double u, double v, double *out);

// # Safety
// `s` must be NULL or a surface handle not yet freed.
void ms_surface_free(struct MsSurface *s);

// Iterates `steps` times from the surface.
//
// `quad_order` 0 selects the default. A bracket with `t_lo >= t_hi` or a NaN
// bound selects the default `[-1, 1]`. On `MS_STATUS_PARTIAL` the handle
// is still stored in `out` and holds the completed steps.
//
// # Safety
// `s` must be a live surface handle and `out` writable.
enum MsStatus ms_run(const struct MsSurface *s,
                     size_t steps,
                     size_t quad_order,
                     double t_lo,
                     double t_hi,
                     struct MsReport **out);

// Appends `steps` more steps to a finished run.
//
// # Safety
// `r` must be a live report handle.
enum MsStatus ms_report_continue(struct MsReport *r, size_t steps);

// Number of records, including the initial surface. Returns 0 for NULL.
//
// # Safety
// `r` must be NULL or a live report handle.
size_t ms_report_record_count(const struct MsReport *r);

// # Safety
// `r` must be a live report handle and `out` writable.
enum MsStatus ms_report_record(const struct MsReport *r, size_t index, struct MsRecord *out);

// Copies the `t`-coefficients of record `index`'s mean-square polynomial.
//
// `*len` receives the coefficient count. When `cap` is smaller, nothing is
// copied and `MS_STATUS_BUFFER_TOO_SMALL` is returned.
//
// # Safety
// `r` must be a live report handle, `coeffs` must point to `cap` writable
// doubles (or be NULL when `cap` is 0) and `len` must be writable.
enum MsStatus ms_report_mu_sq_coeffs(const struct MsReport *r,
                                     size_t index,
                                     double *coeffs,
                                     size_t cap,
                                     size_t *len);

// Writes the point `x_step(u, v)` of a run to `out[0..3]`.
//
// # Safety
// `r` must be a live report handle and `out` must point to 3 writable doubles.
enum MsStatus ms_report_position(const struct MsReport *r,
                                 size_t step,
                                 double u,
                                 double v,
                                 double *out);

// Serializes the run as a report document. Free with `ms_string_free`.
// Returns NULL for a NULL handle.
//
// # Safety
// `r` must be NULL or a live report handle.
char *ms_report_to_json(const struct MsReport *r);

// Loads a surface report document, checking its version and hash.
//
// # Safety
// `json` must be a NUL-terminated string and `out` writable.
enum MsStatus ms_report_from_json(const char *json, struct MsReport **out);

// # Safety
// `r` must be NULL or a report handle not yet freed.
void ms_report_free(struct MsReport *r);

// Runs the curve analogue from `u - u^8`.
//
// # Safety
// `out` must be writable.
enum MsStatus ms_curve_run(size_t steps, enum MsCurveFunctional functional, struct MsCurve **out);

// # Safety
// `c` must be NULL or a live curve handle.
size_t ms_curve_record_count(const struct MsCurve *c);

// # Safety
// `c` must be a live curve handle and `out` writable.
enum MsStatus ms_curve_record(const struct MsCurve *c, size_t index, struct MsCurveRecord *out);

// Serializes the curve run as a report document. Free with `ms_string_free`.
//
// # Safety
// `c` must be NULL or a live curve handle.
char *ms_curve_to_json(const struct MsCurve *c);

// # Safety
// `c` must be NULL or a curve handle not yet freed.
void ms_curve_free(struct MsCurve *c);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MINSURF_H */
