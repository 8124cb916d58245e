#ifndef MORDELL_H
#define MORDELL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MordellStatus {
  MORDELL_STATUS_OK = 0,
  MORDELL_STATUS_NULL_POINTER = 1,
  MORDELL_STATUS_INVALID_UTF8 = 2,
  MORDELL_STATUS_PARSE = 3,
  MORDELL_STATUS_NOT_ON_CURVE = 4,
  MORDELL_STATUS_SINGULAR_CURVE = 5,
  MORDELL_STATUS_DOMAIN = 6,
  MORDELL_STATUS_BUDGET_EXHAUSTED = 7,
  MORDELL_STATUS_INFINITY_OPERAND = 8,
  MORDELL_STATUS_NON_INTEGRAL_MODEL = 9,
  MORDELL_STATUS_NO_WITNESS = 10,
  MORDELL_STATUS_PANIC = 11,
} MordellStatus;

/**
 * An elliptic curve in long Weierstrass form with integer coefficients.
 */
typedef struct MordellCurve MordellCurve;

/**
 * A rational point or the point at infinity.
 */
typedef struct MordellPoint MordellPoint;

/**
 * The outcome of a lattice search.
 */
typedef struct MordellReport MordellReport;

/**
 * Parameters for [`mordell_search`]; start from [`mordell_search_options_default`].
 */
typedef struct MordellSearchOptions {
  uint32_t range;
  uint32_t k;
  bool exact_length;
  bool strict_prime;
  /**
   * 0 uses all cores.
   */
  uint32_t threads;
  uint64_t trial_bound;
  uint64_t rho_iterations;
  uint32_t mr_rounds;
} MordellSearchOptions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or NULL. Owned by the
 * library; valid until the next call on this thread.
 */
const char *mordell_last_error(void);

/**
 * Release a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void mordell_string_free(char *s);

/**
 * Parse `[a1,a2,a3,a4,a6]`.
 *
 * # Safety
 * `literal` must be a valid C string and `out` writable.
 */
enum MordellStatus mordell_curve_parse(const char *literal, struct MordellCurve **out);

/**
 * # Safety
 * `curve` must come from [`mordell_curve_parse`] or be NULL.
 */
void mordell_curve_free(struct MordellCurve *curve);

/**
 * The discriminant as a decimal string (free with [`mordell_string_free`]).
 *
 * # Safety
 * `curve` must be a live handle and `out` writable.
 */
enum MordellStatus mordell_curve_discriminant(const struct MordellCurve *curve, char **out);

/**
 * `log |discriminant|`.
 *
 * # Safety
 * `curve` must be a live handle and `out` writable.
 */
enum MordellStatus mordell_curve_log_discriminant(const struct MordellCurve *curve, double *out);

/**
 * Parse `(x,y)` with integer or `num/den` coordinates, or `inf`.
 *
 * # Safety
 * `literal` must be a valid C string and `out` writable.
 */
enum MordellStatus mordell_point_parse(const char *literal, struct MordellPoint **out);

/**
 * # Safety
 * `point` must come from this library or be NULL.
 */
void mordell_point_free(struct MordellPoint *point);

/**
 * Render a point as `(x, y)` or `inf`.
 *
 * # Safety
 * `point` must be a live handle and `out` writable.
 */
enum MordellStatus mordell_point_to_string(const struct MordellPoint *point, char **out);

/**
 * Whether `point` lies on `curve`.
 *
 * # Safety
 * Handles must be live and `out` writable.
 */
enum MordellStatus mordell_curve_contains(const struct MordellCurve *curve,
                                          const struct MordellPoint *point,
                                          bool *out);

/**
 * `p + q`; both must lie on the curve.
 *
 * # Safety
 * Handles must be live and `out` writable.
 */
enum MordellStatus mordell_curve_add(const struct MordellCurve *curve,
                                     const struct MordellPoint *p,
                                     const struct MordellPoint *q,
                                     struct MordellPoint **out);

/**
 * `m p`; `p` must lie on the curve.
 *
 * # Safety
 * Handles must be live and `out` writable.
 */
enum MordellStatus mordell_curve_scalar_mul(const struct MordellCurve *curve,
                                            int64_t m,
                                            const struct MordellPoint *p,
                                            struct MordellPoint **out);

/**
 * Number of distinct primes dividing the denominator root `B` of `point`,
 * under the default factoring budget. `exact` is false when `count` is
 * only a lower bound.
 *
 * # Safety
 * `point` must be live; `count` and `exact` writable.
 */
enum MordellStatus mordell_point_length(const struct MordellPoint *point,
                                        uint32_t *count,
                                        bool *exact);

/**
 * Logarithmic distance of `point` from `reference` (which may be `inf`).
 * When the two share an `x`-coordinate, `infinite` is set and `out` is +inf.
 *
 * # Safety
 * Handles must be live; `out` and `infinite` writable.
 */
enum MordellStatus mordell_log_distance(const struct MordellPoint *reference,
                                        const struct MordellPoint *point,
                                        double *out,
                                        bool *infinite);

/**
 * `log x` and `log x / (2 log |d|)` for an integral point of `y^2 = x^3 + d`,
 * with `d`, `x` as decimal strings.
 *
 * # Safety
 * Strings must be valid C strings; `log_x` and `ratio` writable.
 */
enum MordellStatus mordell_hall_ratio(const char *d, const char *x, double *log_x, double *ratio);

/**
 * Defaults: range 30, length at most 1, default factoring budget.
 */
struct MordellSearchOptions mordell_search_options_default(void);

/**
 * Lattice search over `m p + n q`; `reference` may be `inf`. The
 * `n_cosets` torsion points in `cosets` (may be NULL when 0) add the
 * translates `m p + n q + t` to the grid.
 *
 * # Safety
 * Handles must be live, `cosets` must point to `n_cosets` live handles,
 * `options` readable and `out` writable.
 */
enum MordellStatus mordell_search(const struct MordellCurve *curve,
                                  const struct MordellPoint *p,
                                  const struct MordellPoint *q,
                                  const struct MordellPoint *reference,
                                  const struct MordellPoint *const *cosets,
                                  size_t n_cosets,
                                  const struct MordellSearchOptions *options,
                                  struct MordellReport **out);

/**
 * # Safety
 * `report` must come from [`mordell_search`] or be NULL.
 */
void mordell_report_free(struct MordellReport *report);

/**
 * Largest distance over counted rows and its ratio to `log |discriminant|`.
 * `found` is false (and the values NaN) when no row qualified.
 *
 * # Safety
 * `report` must be live; out-pointers writable.
 */
enum MordellStatus mordell_report_h_bar(const struct MordellReport *report,
                                        double *h_bar,
                                        double *ratio,
                                        bool *found);

/**
 * Rows whose length was left undecided by the factoring budget.
 *
 * # Safety
 * `report` must be live and `out` writable.
 */
enum MordellStatus mordell_report_unresolved(const struct MordellReport *report, size_t *out);

/**
 * JSON summary (free with [`mordell_string_free`]).
 *
 * # Safety
 * `report` must be live and `out` writable.
 */
enum MordellStatus mordell_report_json(const struct MordellReport *report, char **out);

/**
 * Per-row CSV (free with [`mordell_string_free`]).
 *
 * # Safety
 * `report` must be live and `out` writable.
 */
enum MordellStatus mordell_report_csv(const struct MordellReport *report, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MORDELL_H */
