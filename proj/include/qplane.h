/* C interface to the quantum-plane symbolic engine.
 *
 * Conventions:
 *   - Every function that can fail returns qpl_status; QPL_OK is zero.
 *   - On failure, qpl_last_error() returns a message for the calling
 *     thread, valid until that thread's next library call.
 *   - Out-parameters are written only on QPL_OK.
 *   - Objects are opaque; release them with the matching _free function.
 *     Strings returned through char** are released with qpl_string_free.
 */

#ifndef QPLANE_H
#define QPLANE_H

#if defined(_WIN32)
#define QPLANE_API __declspec(dllexport)
#else
#define QPLANE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qpl_status {
  QPL_OK = 0,
  QPL_ERR_SYNTAX = 1,           /* qpl_last_error_offset() gives the byte */
  QPL_ERR_EXPONENT_TOO_LARGE = 2,
  QPL_ERR_DIVISION_BY_ZERO = 3,
  QPL_ERR_NOT_DIVISIBLE = 4,
  QPL_ERR_OUT_OF_RANGE = 5,
  QPL_ERR_ORACLE_BOUND = 6,
  QPL_ERR_NONZERO_CONSTANT_TERM = 7,
  QPL_ERR_MISSING_ORDER = 8,
  QPL_ERR_POLE = 9,             /* denominator vanishes at the given q */
  QPL_ERR_INVALID_ARGUMENT = 10,
  QPL_ERR_CROSS_CHECK = 11,     /* independent algorithms disagreed */
  QPL_ERR_INTERNAL = 12
} qpl_status;

typedef enum qpl_format {
  QPL_FORMAT_TEXT = 0,
  QPL_FORMAT_JSON = 1
} qpl_format;

/* Parsed expression tree. */
typedef struct qpl_expr qpl_expr;
/* Normal-ordered element or truncated series. */
typedef struct qpl_value qpl_value;
/* Univariate polynomial in q with integer coefficients. */
typedef struct qpl_poly qpl_poly;

/* Message and (for syntax errors) byte offset of the calling thread's most
 * recent failure; offset is -1 otherwise. */
QPLANE_API const char *qpl_last_error(void);
QPLANE_API long qpl_last_error_offset(void);

QPLANE_API qpl_status qpl_parse(const char *input, qpl_expr **out);
QPLANE_API int qpl_expr_has_exp_q(const qpl_expr *expr);
QPLANE_API void qpl_expr_free(qpl_expr *expr);

/* Normal-order an expression. order is the series truncation order;
 * pass -1 for none (required to be >= 0 when the expression contains
 * exp_q, rejected with QPL_ERR_MISSING_ORDER otherwise). */
QPLANE_API qpl_status qpl_expr_evaluate(const qpl_expr *expr, long order,
                                        qpl_value **out);

/* Canonical text or JSON {"terms":[...]} rendering. */
QPLANE_API qpl_status qpl_value_render(const qpl_value *value,
                                       qpl_format format, char **out);
/* Evaluate every coefficient at q = r, given as a rational string such as
 * "2", "-1" or "1/3". Fails with QPL_ERR_POLE when a denominator vanishes. */
QPLANE_API qpl_status qpl_value_specialize(const qpl_value *value,
                                           const char *q, qpl_value **out);
QPLANE_API void qpl_value_free(qpl_value *value);

/* Gaussian binomial coefficient, computed by the factorial-quotient and
 * recurrence algorithms independently; any disagreement is reported as
 * QPL_ERR_CROSS_CHECK instead of returning a value. */
QPLANE_API qpl_status qpl_qbinomial(unsigned n, unsigned k, qpl_poly **out);
QPLANE_API qpl_status qpl_poly_render(const qpl_poly *poly, char **out);
/* Value at q = r (rational string), itself a rational string. */
QPLANE_API qpl_status qpl_poly_eval(const qpl_poly *poly, const char *q,
                                    char **out);
QPLANE_API void qpl_poly_free(qpl_poly *poly);

/* Right side of the binomial expansion: sum of C(n,k)_q x^k y^(n-k). */
QPLANE_API qpl_status qpl_expand_binomial(unsigned n, qpl_value **out);

/* Invoked once per completed check with its index and pass flag. */
typedef void (*qpl_progress_fn)(unsigned index, int pass, void *user);

/* Verify (x+y)^n against the binomial expansion for n <= n_max, with the
 * brute-force word oracle joining for n <= oracle_max (capped at
 * oracle_bound). Writes the JSON report and sets *verified to 0/1; a
 * failed verification is still QPL_OK. */
QPLANE_API qpl_status qpl_verify_theorem1(unsigned n_max, unsigned oracle_max,
                                          unsigned oracle_bound,
                                          qpl_progress_fn progress, void *user,
                                          char **report_json, int *verified);

/* Verify exp_q(x+y) = exp_q(x) exp_q(y) through the given truncation
 * order, same reporting contract as qpl_verify_theorem1. */
QPLANE_API qpl_status qpl_verify_theorem2(unsigned order,
                                          qpl_progress_fn progress, void *user,
                                          char **report_json, int *verified);

/* Default cap on the word oracle's exponent (the expansion walks 2^n
 * words). */
QPLANE_API unsigned qpl_default_oracle_bound(void);

QPLANE_API void qpl_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif /* QPLANE_H */
