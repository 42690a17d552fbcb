#ifndef MINKOWSKI_H
#define MINKOWSKI_H

#include <stddef.h>

#if defined(MINK_BUILDING_LIBRARY)
#define MINK_API __attribute__((visibility("default")))
#else
#define MINK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mink_status {
  MINK_OK = 0,
  MINK_ERR_DOMAIN = 1,
  MINK_ERR_LIMIT = 2,
  MINK_ERR_POLE = 3,
  MINK_ERR_PRECISION = 4,
  MINK_ERR_CONVERGENCE = 5,
  MINK_ERR_PARSE = 6,
  MINK_ERR_ARGUMENT = 7, /* null handle or output pointer */
  MINK_ERR_INTERNAL = 8
} mink_status;

/* Holds configuration, the last error message and the last text result.
   One context per thread. */
typedef struct mink_context mink_context;

/* Rows of preformatted cells; floating cells carry 17 significant digits. */
typedef struct mink_table mink_table;

MINK_API const char* mink_version(void);
MINK_API const char* mink_status_name(mink_status status);

MINK_API mink_status mink_context_create(mink_context** out);
MINK_API void mink_context_destroy(mink_context* ctx);
/* Message for the last failed call on ctx, "" after a success. */
MINK_API const char* mink_last_error(const mink_context* ctx);

/* Keys: digits, depth, dim, coeff_dim, lmax, truncation_eps.
   The value is validated against the library limits before it is stored. */
MINK_API mink_status mink_config_set(mink_context* ctx, const char* key, const char* value);
/* Current value as text in a buffer owned by ctx. */
MINK_API mink_status mink_config_get(mink_context* ctx, const char* key, const char** value);

/* Question mark function and relatives. */
MINK_API mink_status mink_qm(mink_context* ctx, double x, double* out);
MINK_API mink_status mink_F(mink_context* ctx, double x, double* out);
MINK_API mink_status mink_psi(mink_context* ctx, double x, double* out);
/* Exact ?(r) for a rational r in [0,1] given as text; result like "3/8". */
MINK_API mink_status mink_qm_exact(mink_context* ctx, const char* rational, const char** out);
MINK_API mink_status mink_F_exact(mink_context* ctx, const char* rational, const char** out);
/* Inverse on dyadic rationals of [0,1]. */
MINK_API mink_status mink_qm_inverse(mink_context* ctx, const char* dyadic, const char** out);

/* int_0^1 x^p dF with the depth-r midpoint rule, and int_0^inf x^p dF. */
MINK_API mink_status mink_integrate_power(mink_context* ctx, double p, int depth, double* unit, double* halfline);

/* G at complex z off the cut [1, inf). */
MINK_API mink_status mink_G(mink_context* ctx, double re, double im, double* out_re, double* out_im);
MINK_API mink_status mink_fourier_coeff(mink_context* ctx, int n, double* out_re, double* out_im);
/* zeta_M(s) by the default method. */
MINK_API mink_status mink_zeta(mink_context* ctx, double re, double im, double* out_re, double* out_im);
MINK_API mink_status mink_critical_Z(mink_context* ctx, double t, double* out);

/* Table builders; the caller frees the result with mink_table_free. */
MINK_API mink_status mink_table_tree(mink_context* ctx, int generation, mink_table** out);
/* which: "qm", "F" or "psi" on points + 1 equispaced points of [x0, x1]. */
MINK_API mink_status mink_table_grid(mink_context* ctx, const char* which, double x0, double x1, int points,
                                     mink_table** out);
MINK_API mink_status mink_table_moments(mink_context* ctx, int lmax, mink_table** out);
MINK_API mink_status mink_table_spectrum(mink_context* ctx, int dim, mink_table** out);
/* index 0 is G itself; index i >= 1 is the i-th eigenfunction. */
MINK_API mink_status mink_table_periodfn(mink_context* ctx, int index, double z0, double z1, double step,
                                         mink_table** out);
MINK_API mink_status mink_table_fourier(mink_context* ctx, int nmax, mink_table** out);
MINK_API mink_status mink_table_zeta(mink_context* ctx, double t0, double t1, double step, mink_table** out);
MINK_API mink_status mink_table_zeros(mink_context* ctx, double t0, double t1, double step, mink_table** out);

MINK_API size_t mink_table_rows(const mink_table* t);
MINK_API size_t mink_table_cols(const mink_table* t);
MINK_API const char* mink_table_header(const mink_table* t, size_t col);
/* NULL when out of range. */
MINK_API const char* mink_table_cell(const mink_table* t, size_t row, size_t col);
/* Header line and rows, each terminated by '\n'. */
MINK_API const char* mink_table_csv(mink_table* t);
MINK_API void mink_table_free(mink_table* t);

/* suite: "core" or "full". Writes the JSON report into a buffer owned by ctx;
   failed receives the number of failing checks. */
MINK_API mink_status mink_verify(mink_context* ctx, const char* suite, const char** json, int* failed);

#ifdef __cplusplus
}
#endif

#endif
