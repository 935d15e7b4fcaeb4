/* trigspline C API: trigonometric interpolation splines on uniform
 * periodic grids, behind opaque handles and status codes.
 *
 * Every function that can fail returns a ts_status; TS_OK is 0. On failure
 * ts_last_error() returns a thread-local message describing the problem.
 * Objects returned through out-parameters are owned by the caller and must
 * be released with the matching *_free function; strings with ts_string_free.
 */
#ifndef TRIGSPLINE_H
#define TRIGSPLINE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ts_status {
  TS_OK = 0,
  TS_ERR_INVALID_ARGUMENT = 1,
  TS_ERR_INVALID_GRID = 2,
  TS_ERR_PARSE = 3,
  TS_ERR_SAMPLING = 4,
  TS_ERR_ORDER_RANGE = 5,
  TS_ERR_INCOMPATIBLE = 6,
  TS_ERR_CONVERGENCE = 7,
  TS_ERR_DEGENERATE_FACTOR = 8,
  TS_ERR_NONCONVERGENT_DERIVATIVE = 9,
  TS_ERR_INVALID_STATE = 10,
  TS_ERR_INVALID_FILTER = 11,
  TS_ERR_QUADRATURE = 12,
  TS_ERR_IO = 13,
  TS_ERR_UNKNOWN = 99
} ts_status;

typedef enum ts_format { TS_FORMAT_AUTO = 0, TS_FORMAT_CSV = 1, TS_FORMAT_JSON = 2 } ts_format;

typedef struct ts_samples ts_samples;
typedef struct ts_spectrum ts_spectrum;
typedef struct ts_spline ts_spline;

/* Spline parameters. n_points = 0 means "take N from the samples".
 * tolerance <= 0 and max_terms <= 0 select the defaults (1e-12, 1e6). */
typedef struct ts_spline_params {
  double gamma[3];
  double eta[3];
  int r;
  int i1;
  int i2;
  int n_points;
  double tolerance;
  long max_terms;
} ts_spline_params;

/* Fills in the defaults: gamma = eta = (1,1,1), r = 1, i1 = i2 = 0. */
void ts_spline_params_init(ts_spline_params* params);

const char* ts_last_error(void);
const char* ts_status_name(ts_status status);
const char* ts_version(void);
void ts_string_free(char* s);

/* ---- samples ---------------------------------------------------------- */

ts_status ts_samples_create(int n_points, int variant, const double* values, ts_samples** out);
ts_status ts_samples_load(const char* path, ts_format format, ts_samples** out); /* "-" = stdin */
ts_status ts_samples_parse(const char* data, size_t len, ts_format format, ts_samples** out);
ts_status ts_samples_save(const ts_samples* s, const char* path, ts_format format); /* "-" = stdout */
ts_status ts_samples_to_string(const ts_samples* s, ts_format format, char** out);
int ts_samples_size(const ts_samples* s);
int ts_samples_variant(const ts_samples* s);
ts_status ts_samples_values(const ts_samples* s, double* out); /* size() doubles */
ts_status ts_samples_nodes(const ts_samples* s, double* out);
/* Circular convolution with an odd-length filter whose weights sum to 1. */
ts_status ts_samples_smooth(const ts_samples* s, const double* weights, int len, ts_samples** out);
void ts_samples_free(ts_samples* s);

/* ---- discrete spectra -------------------------------------------------- */

ts_status ts_spectrum_from_samples(const ts_samples* s, ts_spectrum** out);
int ts_spectrum_harmonics(const ts_spectrum* spec);
/* a and b receive harmonics() doubles each; any pointer may be NULL. */
ts_status ts_spectrum_get(const ts_spectrum* spec, double* a0, double* a, double* b);
ts_status ts_spectrum_eval(const ts_spectrum* spec, int m, double x, double* out);
ts_status ts_spectrum_truncate(const ts_spectrum* spec, int m, ts_spectrum** out);
ts_status ts_spectrum_residual(const ts_spectrum* spec, int m, const ts_samples* s, double* out);
ts_status ts_spectrum_to_json(const ts_spectrum* spec, char** out);
void ts_spectrum_free(ts_spectrum* spec);

/* ---- splines ----------------------------------------------------------- */

ts_status ts_spline_build(const ts_samples* s, const ts_spline_params* params, ts_spline** out);
ts_status ts_spline_eval(const ts_spline* sp, double x, double* out);
ts_status ts_spline_eval_many(const ts_spline* sp, const double* xs, int count, double* out);
ts_status ts_spline_derivative(const ts_spline* sp, int d, double x, double* out);
/* Least-squares truncation to order m. */
ts_status ts_spline_truncate(const ts_spline* sp, int m, ts_spline** out);
ts_status ts_spline_regularize(const ts_spline* sp, double lambda, int p, ts_spline** out);
/* Modified Fejer smoothing with exponent alpha. */
ts_status ts_spline_smooth(const ts_spline* sp, double alpha, ts_spline** out);
int ts_spline_harmonics(const ts_spline* sp);
ts_status ts_spline_coefficients(const ts_spline* sp, double* a0, double* a, double* b);
ts_status ts_spline_factors(const ts_spline* sp, double* hc, double* hs);
ts_status ts_spline_to_json(const ts_spline* sp, char** out);
ts_status ts_spline_from_json(const char* data, size_t len, ts_spline** out);
void ts_spline_free(ts_spline* sp);

/* ---- scalar tables ------------------------------------------------------ */

/* tau_k(lambda, p) = 1/(1 + (lambda k)^(2p)). */
ts_status ts_tau(int k, double lambda, int p, double* out);
/* Modified Fejer factor (1 - k/(n+1))^alpha, 0 <= k <= n. */
ts_status ts_modified_fejer(int k, double alpha, int n, double* out);
/* v_k(r) = k^-(1+r). */
ts_status ts_convergence_factor(long k, int r, double* out);
/* Interpolation factors hc_k, hs_k for k = 1..n of params->n_points. */
ts_status ts_interp_factors(const ts_spline_params* params, double* hc, double* hs);

/* ---- verification ------------------------------------------------------- */

/* Called once per check with the check name, pass flag and detail text.
 * Return nonzero to abort the run early. */
typedef int (*ts_verify_cb)(const char* name, int passed, const char* detail, void* user_data);

/* level: 0 = quick, 1 = full. series_tolerance <= 0 selects the default
 * 1e-12. On return *failures holds the number of failed checks. */
ts_status ts_verify(int level, double series_tolerance, ts_verify_cb cb, void* user_data,
                    int* failures);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TRIGSPLINE_H */
