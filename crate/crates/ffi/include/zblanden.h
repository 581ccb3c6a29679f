#ifndef ZBLANDEN_H
#define ZBLANDEN_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum ZblStatus {
  ZBL_STATUS_OK = 0,
  ZBL_STATUS_DOMAIN = 1,
  ZBL_STATUS_NON_CONVERGENCE = 2,
  ZBL_STATUS_REGION_MISMATCH = 3,
  ZBL_STATUS_AMBIGUOUS_PROFILE = 4,
  ZBL_STATUS_WITNESS_NOT_FOUND = 5,
  ZBL_STATUS_NULL_POINTER = 6,
  ZBL_STATUS_INVALID_ENUM = 7,
  ZBL_STATUS_PANIC = 8,
} ZblStatus;

typedef enum ZblMethod {
  ZBL_METHOD_SERIES = 0,
  ZBL_METHOD_CONNECTION_SERIES = 1,
  ZBL_METHOD_RAMANUJAN_ASYMPTOTIC = 2,
  ZBL_METHOD_CLOSED_FORM = 3,
  ZBL_METHOD_AGM = 4,
} ZblMethod;

// Inequality selector for [`zbl_check`].
typedef enum ZblTheorem {
  ZBL_THEOREM_FIRST_LANDEN_D1 = 0,
  ZBL_THEOREM_FIRST_LANDEN_D2 = 1,
  ZBL_THEOREM_RATIO_D1 = 2,
  ZBL_THEOREM_RATIO_D2 = 3,
  ZBL_THEOREM_ELLIPTIC_D1 = 4,
  ZBL_THEOREM_ELLIPTIC_D2 = 5,
  ZBL_THEOREM_DIFFERENCE_D3 = 6,
  ZBL_THEOREM_DIFFERENCE_D2 = 7,
  ZBL_THEOREM_SECOND_LANDEN_RATIO_D1 = 8,
  ZBL_THEOREM_SECOND_LANDEN_DIFFERENCE_D3 = 9,
  ZBL_THEOREM_SECOND_LANDEN_RATIO_D2 = 10,
  ZBL_THEOREM_SECOND_LANDEN_DIFFERENCE_D2 = 11,
} ZblTheorem;

typedef enum ZblVerdict {
  ZBL_VERDICT_HOLDS = 0,
  ZBL_VERDICT_FAILS = 1,
  ZBL_VERDICT_WITHIN_TOLERANCE = 2,
} ZblVerdict;

typedef enum ZblProfileKind {
  ZBL_PROFILE_KIND_INCREASING = 0,
  ZBL_PROFILE_KIND_DECREASING = 1,
  ZBL_PROFILE_KIND_INCREASING_THEN_DECREASING = 2,
  ZBL_PROFILE_KIND_DECREASING_THEN_INCREASING = 3,
  ZBL_PROFILE_KIND_CONSTANT = 4,
} ZblProfileKind;

typedef enum ZblSeries {
  // `F(a,b;a+b;x)` against `F(1/2,1/2;1;x)`.
  ZBL_SERIES_F = 0,
  // `F(a,b;a+b+1;x)` against `F(1/2,1/2;2;x)`.
  ZBL_SERIES_G = 1,
} ZblSeries;

// Opaque evaluation settings.
typedef struct ZblContext ZblContext;

typedef struct ZblEval {
  double value;
  double abs_error_est;
  size_t terms_used;
  enum ZblMethod method;
} ZblEval;

typedef struct ZblMembership {
  bool in_d1;
  bool in_d2;
  bool in_d3;
  bool is_equality_point;
  bool in_neither;
} ZblMembership;

// `lower ≤ value ≤ upper`. A missing bound is NaN with its `has_` flag false.
typedef struct ZblReport {
  double a;
  double b;
  double r;
  enum ZblTheorem theorem;
  bool has_lower;
  double lower;
  double value;
  bool has_upper;
  double upper;
  double margin;
  enum ZblVerdict verdict;
} ZblReport;

typedef struct ZblWitnesses {
  double r_minus;
  double r_plus;
  double gap_minus;
  double gap_plus;
} ZblWitnesses;

// `turning_index` is -1 unless the kind is unimodal.
typedef struct ZblProfile {
  enum ZblProfileKind kind;
  int64_t turning_index;
  size_t n_examined;
} ZblProfile;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Creates a context. Returns NULL if a setting is out of range; the reason
// is then available from [`zbl_last_error`].
struct ZblContext *zbl_context_new(double rel_tol,
                                   size_t max_terms,
                                   double asymptotic_switch_delta,
                                   double verdict_tol);

// A context with the library defaults.
struct ZblContext *zbl_context_default(void);

// Releases a context. NULL is ignored.
//
// # Safety
// `ctx` must come from `zbl_context_new` or `zbl_context_default` and not be
// used afterwards.
void zbl_context_free(struct ZblContext *ctx);

// Message for the last failed call on this thread, or NULL. Valid until the
// next call into the library from the same thread.
const char *zbl_last_error(void);

// Static description of a status code.
const char *zbl_status_str(enum ZblStatus status);

// `F(a, b; a+b; x)` for `0 ≤ x < 1`.
//
// # Safety
// `ctx` must be a live context and `out` writable.
enum ZblStatus zbl_eval(const struct ZblContext *ctx,
                        double a,
                        double b,
                        double x,
                        struct ZblEval *out);

// As [`zbl_eval`] with `1 - x` supplied separately, for arguments close to 1.
//
// # Safety
// `ctx` must be a live context and `out` writable.
enum ZblStatus zbl_eval_complement(const struct ZblContext *ctx,
                                   double a,
                                   double b,
                                   double x,
                                   double one_minus_x,
                                   struct ZblEval *out);

// `d/dx F(a, b; a+b; x)`.
//
// # Safety
// `ctx` must be a live context and `out` writable.
enum ZblStatus zbl_derivative(const struct ZblContext *ctx,
                              double a,
                              double b,
                              double x,
                              struct ZblEval *out);

// Complete elliptic integral of the first kind, modulus `k`.
//
// # Safety
// `ctx` must be a live context and `out` writable.
enum ZblStatus zbl_elliptic_k(const struct ZblContext *ctx, double k, struct ZblEval *out);

// The same integral by the arithmetic-geometric mean.
//
// # Safety
// `out` must be writable.
enum ZblStatus zbl_agm_elliptic_k(double k, struct ZblEval *out);

// # Safety
// `out` must be writable.
enum ZblStatus zbl_gamma_ln(double x, double *out);

// # Safety
// `out` must be writable.
enum ZblStatus zbl_digamma(double x, double *out);

// # Safety
// `out` must be writable.
enum ZblStatus zbl_beta(double a, double b, double *out);

// `-ψ(a) - ψ(b) - 2γ`.
//
// # Safety
// `out` must be writable.
enum ZblStatus zbl_ramanujan_r(double a, double b, double *out);

// # Safety
// `out` must be writable.
enum ZblStatus zbl_classify(double a, double b, struct ZblMembership *out);

// `(1+r) F(r²) - F(4r/(1+r)²)`.
//
// # Safety
// `ctx` must be a live context and `out` writable.
enum ZblStatus zbl_landen_gap(const struct ZblContext *ctx,
                              double a,
                              double b,
                              double r,
                              double *out);

// `(1+√r) F(r) - F(4√r/(1+√r)²)`.
//
// # Safety
// `ctx` must be a live context and `out` writable.
enum ZblStatus zbl_s_diff(const struct ZblContext *ctx, double a, double b, double r, double *out);

// Evaluates one inequality chain at `(a, b)` and argument `r`.
//
// `theorem` is a `ZblTheorem` value.
//
// # Safety
// `ctx` must be a live context and `out` writable.
enum ZblStatus zbl_check(const struct ZblContext *ctx,
                         int theorem,
                         double a,
                         double b,
                         double r,
                         struct ZblReport *out);

// Searches for arguments where the Landen gap takes both signs. Only pairs
// outside D1 and D2 are accepted.
//
// # Safety
// `ctx` must be a live context and `out` writable.
enum ZblStatus zbl_falsify_neither(const struct ZblContext *ctx,
                                   double a,
                                   double b,
                                   size_t grid_size,
                                   struct ZblWitnesses *out);

// Monotonicity profile of the coefficient ratio over `n < n_max`. `series`
// is a `ZblSeries` value.
//
// # Safety
// `out` must be writable.
enum ZblStatus zbl_profile(double a, double b, int series, size_t n_max, struct ZblProfile *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ZBLANDEN_H */
