/*
 * C interface to the para-Racah polynomial library.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Every function that can fail returns a pr_status; on failure
 * pr_last_error() carries a human-readable description (thread-local).
 *
 * Exact values cross this boundary as canonical rational strings "p/q"
 * (or "p" for integers). Strings returned through char** out-parameters are
 * heap-allocated and must be released with pr_string_free().
 *
 * Handles cache derived data lazily and are not synchronized: share a handle
 * across threads only with external locking, or give each thread its own.
 */
#ifndef PARA_RACAH_H
#define PARA_RACAH_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pr_status {
    PR_OK = 0,
    PR_ERR_NULL_ARGUMENT,
    PR_ERR_PARSE,
    PR_ERR_REGIME,
    PR_ERR_DEGENERATE,
    PR_ERR_INDEX,
    PR_ERR_POLE,
    PR_ERR_ALPHA_BRANCH,
    PR_ERR_NOT_BLOCK_DEGENERATE,
    PR_ERR_COLLIDING_NODES,
    PR_ERR_CONVERGENCE,
    PR_ERR_ZERO_AT_NODE,
    PR_ERR_NEGATIVE_OFFDIAGONAL,
    PR_ERR_CHECK_FAILED,
    PR_ERR_BUFFER,
    PR_ERR_INTERNAL
} pr_status;

typedef enum pr_family_label {
    PR_FAMILY_A = 0, /* nodes -(s+a)^2 */
    PR_FAMILY_C = 1  /* nodes -(s+c)^2 */
} pr_family_label;

typedef struct pr_family pr_family;         /* one validated polynomial family */
typedef struct pr_certify pr_certify;       /* named check results */
typedef struct pr_pk_study pr_pk_study;     /* para-Krawtchouk convergence study */
typedef struct pr_dual_hahn pr_dual_hahn;   /* dual-Hahn comparison report */

const char* pr_status_name(pr_status status);
const char* pr_last_error(void);
void pr_string_free(char* s);

/* ---- family construction and basic data ---- */

/* a, c, alpha are exact rational strings. Fails with PR_ERR_REGIME or
 * PR_ERR_DEGENERATE when (N, a, c, alpha) is not an admissible set. */
pr_status pr_family_create(long n, const char* a, const char* c, const char* alpha,
                           pr_family** out);
void pr_family_destroy(pr_family* f);

long pr_family_n(const pr_family* f);
long pr_family_j(const pr_family* f);
int pr_family_is_odd(const pr_family* f);
int pr_family_alpha_degenerate(const pr_family* f);
const char* pr_family_regime(const pr_family* f); /* static string */

/* ---- recurrence coefficients ---- */

pr_status pr_family_coeff_b(pr_family* f, long n, char** out);           /* 0 <= n <= N */
pr_status pr_family_coeff_u(pr_family* f, long n, char** out);           /* 1 <= n <= N */
pr_status pr_family_wilson_a(pr_family* f, long n, char** out);          /* 0 <= n <= N */
pr_status pr_family_wilson_c(pr_family* f, long n, char** out);          /* 0 <= n <= N+1 */

/* ---- evaluation ---- */

/* Monic P_n(lambda), recurrence path; n = N+1 gives the characteristic
 * polynomial. */
pr_status pr_family_eval(pr_family* f, long n, const char* lambda, char** out);
/* Hypergeometric-series path; PR_ERR_ALPHA_BRANCH when n > j and alpha = 0. */
pr_status pr_family_eval_explicit(pr_family* f, long n, const char* lambda, char** out);
/* Characteristic polynomial as the bi-lattice product. */
pr_status pr_family_char_poly(pr_family* f, const char* lambda, char** out);

/* ---- spectral data ---- */

/* Node s in interleaved index order (a-family at even slots), s = 0..N.
 * pr_family_sorted_node maps a sorted rank (increasing lambda) to the node
 * index. */
pr_status pr_family_node(pr_family* f, long s, pr_family_label* label, long* sublattice_index,
                         char** lambda);
pr_status pr_family_sorted_node(pr_family* f, long rank, long* node_index);
pr_status pr_family_weight_closed(pr_family* f, long s, char** out);
/* Spectral-formula weight; PR_ERR_ZERO_AT_NODE at alpha in {0,1}. */
pr_status pr_family_weight_spectral(pr_family* f, long s, char** out);

/* Exact Gram entry sum_s P_n P_m w_s and its expected value u_1...u_n. */
pr_status pr_family_gram_entry(pr_family* f, long n, long m, char** out);
pr_status pr_family_gram_expected(pr_family* f, long n, char** out);

/* ---- difference equation ---- */

/* Residual of the bispectral difference equation at real rational x
 * (exactly "0" in both components for admissible inputs). */
pr_status pr_family_difference_residual(pr_family* f, long n, const char* x, char** re,
                                        char** im);

/* ---- Jacobi matrix spectrum ---- */

/* Fills eig[0..N] with the eigenvalues in increasing order. */
pr_status pr_family_eigenvalues(pr_family* f, double* eig, size_t capacity);
/* Block sizes of the split matrix; PR_ERR_NOT_BLOCK_DEGENERATE unless
 * alpha is 0 or 1. */
pr_status pr_family_block_split(pr_family* f, long* first, long* second);
/* Difference-equation eigenvalues -n(N-n) with multiplicities; *count is set
 * to the number of distinct levels (capacity permitting). */
pr_status pr_family_degeneracy(pr_family* f, long* eigenvalue, long* multiplicity,
                               size_t capacity, size_t* count);

/* ---- certification ---- */

pr_status pr_family_certify(pr_family* f, pr_certify** out);
/* Certify against an externally supplied coefficient table: b has N+1
 * entries, u has N entries (u_1..u_N), all exact rational strings. */
pr_status pr_family_certify_table(pr_family* f, const char* const* b, size_t b_len,
                                  const char* const* u, size_t u_len, pr_certify** out);
void pr_certify_destroy(pr_certify* c);
size_t pr_certify_count(const pr_certify* c);
const char* pr_certify_name(const pr_certify* c, size_t i);
int pr_certify_passed(const pr_certify* c, size_t i);
const char* pr_certify_detail(const pr_certify* c, size_t i);
int pr_certify_all_passed(const pr_certify* c);
/* Name of the first failing check, or NULL when everything passed. */
const char* pr_certify_first_failure(const pr_certify* c);

/* ---- para-Krawtchouk limit ---- */

/* Exact limit coefficients (delta is a rational string, 0 < delta < 1). */
pr_status pr_pk_limit_b(long n, const char* delta, long m, char** out); /* 0 <= m <= N */
pr_status pr_pk_limit_u(long n, const char* delta, long m, char** out); /* 1 <= m <= N */

/* Convergence study over theta = theta_min, 2 theta_min, ..., theta_max. */
pr_status pr_pk_study_create(long n, const char* delta, long theta_min, long theta_max,
                             pr_pk_study** out);
void pr_pk_study_destroy(pr_pk_study* s);
size_t pr_pk_study_rows(const pr_pk_study* s);
pr_status pr_pk_study_row(const pr_pk_study* s, size_t i, double* theta, double* coeff_b_error,
                          double* coeff_u_error, double* grid_error, double* weight_error);
/* Empirical orders in 1/theta (least-squares slopes). */
pr_status pr_pk_study_orders(const pr_pk_study* s, double* order_b, double* order_u,
                             double* order_grid, double* order_weights);

/* ---- dual-Hahn specialization ---- */

/* c = a + 1/2 and alpha = 1/2 are fixed internally. */
pr_status pr_dual_hahn_create(long n, const char* a, pr_dual_hahn** out);
void pr_dual_hahn_destroy(pr_dual_hahn* d);
int pr_dual_hahn_match(const pr_dual_hahn* d);
long pr_dual_hahn_first_mismatch(const pr_dual_hahn* d); /* -1 when matching */
/* Transformed para-Racah and reference dual-Hahn coefficients at degree m.
 * b_* valid for 0 <= m <= N, u_* for 1 <= m <= N (pass NULL for unused). */
pr_status pr_dual_hahn_entry(const pr_dual_hahn* d, long m, char** b_transformed,
                             char** b_reference, char** u_transformed, char** u_reference);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PARA_RACAH_H */
