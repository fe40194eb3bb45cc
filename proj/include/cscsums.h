/*
 * Copyright (c) 2026 The cscsums developers
 * Licensed under the Apache License, Version 2.0 (see LICENSE).
 *
 * C interface of the cscsums shared library: exact cosecant power sums,
 * generalized Bernoulli / Euler polynomial identities, dyadic transfer
 * matrices and the zeta-facing approximations built on them.
 *
 * Conventions:
 *   - a csc_session is an opaque handle owning error state; sessions are not
 *     thread-safe, use one per thread,
 *   - every operation returns a csc_status; on failure the message is
 *     available via csc_session_last_error until the next call,
 *   - results are returned as UTF-8 JSON documents (CSV for tables when
 *     format = "csv") in *out; release them with csc_string_free.
 */
#ifndef CSCSUMS_H
#define CSCSUMS_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum csc_status {
  CSC_OK = 0,
  CSC_ERROR_INVALID_ARGUMENT = 1,
  CSC_ERROR_PRECISION_TOO_LOW = 2,
  CSC_ERROR_RANGE = 3,
  CSC_ERROR_POLE = 4,
  CSC_ERROR_DOMAIN = 5,
  CSC_ERROR_UNKNOWN_IDENTITY = 6,
  CSC_ERROR_INTERNAL = 7
} csc_status;

typedef struct csc_session csc_session;

const char* csc_version(void);

csc_session* csc_session_new(void);
void csc_session_free(csc_session* session);
const char* csc_session_last_error(const csc_session* session);
void csc_string_free(char* text);

/* S(s,n) by direct high-precision summation (numeric oracle). */
csc_status csc_direct_sum(csc_session* session, int s, int n, long precision_bits, char** out);

/* Combined report for one exponent: numeric value, and exact data (closed
 * form for even s, coefficient row for odd s). */
csc_status csc_sum_summary(csc_session* session, int s, int n, long precision_bits, char** out);

/* Exact S(2k,n) by the even closed form. */
csc_status csc_even_sum_exact(csc_session* session, int k, int n, char** out);

/* Exact expansion row of S(2m+1,n) over csc((2j-1)pi/2^n). */
csc_status csc_odd_coeff_row(csc_session* session, int m, int n, char** out);

/* Transfer-matrix first row / full matrix for power 2m+1. */
csc_status csc_matrix_first_row(csc_session* session, int m, int n, char** out);
csc_status csc_matrix_full(csc_session* session, int m, int n, char** out);

/* First row for power 2m+2 over the half-sine basis. */
csc_status csc_even_row(csc_session* session, int m, int n, char** out);

/* zeta(2k) as an exact rational multiple of pi^{2k}. */
csc_status csc_zeta_even_exact(csc_session* session, int k, char** out);

/* zeta(s), s > 1 in decimal text, by the Dirichlet/Euler-Maclaurin oracle. */
csc_status csc_zeta_reference(csc_session* session, const char* s_decimal, long precision_bits,
                              char** out);

/* Prelimit Z(m,n) and the exact error term R(2k,n). */
csc_status csc_z_approx(csc_session* session, int m, int n, long precision_bits, char** out);
csc_status csc_r_error(csc_session* session, int k, int n, char** out);

/* zeta(2j+1) via the Euler-polynomial integral; abs_tol in decimal text
 * (NULL for the default), method "simpson" or "gauss" (NULL for simpson). */
csc_status csc_zeta_odd_integral(csc_session* session, int j, const char* abs_tol,
                                 const char* method, long precision_bits, char** out);

/* Convergence table of the odd prelimit against the reference. */
csc_status csc_zeta_odd_limit_table(csc_session* session, int m, int n_lo, int n_hi,
                                    long precision_bits, char** out);

/* One verification instance. identity names the check (e.g. "REFLECTION",
 * "COLUMN_SUMS"); params_json is a flat JSON object of integer parameters. */
csc_status csc_check(csc_session* session, const char* identity, const char* params_json,
                     long precision_bits, char** out);

/* Verification sweeps. suite is one of "all", "identities", "trig";
 * *fail_count receives the number of FAIL reports. */
csc_status csc_verify_suite(csc_session* session, const char* suite, int max_m, int max_n,
                            long precision_bits, int* fail_count, char** out);

/* Table emission. kind is "even_sums" (k, n in [n_lo,n_hi]; closed form, n
 * unbounded), "odd_rows" (m, n bounded by 14) or "z_convergence" (m, n
 * bounded by 14); format "json" or "csv". */
csc_status csc_emit_table(csc_session* session, const char* kind, int k, int m, int n_lo,
                          int n_hi, long precision_bits, const char* format, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CSCSUMS_H */
