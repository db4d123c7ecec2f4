/* seaweed: index and coadjoint structure of seaweed subalgebras of the
 * classical and exceptional simple Lie algebras, over exact rationals.
 *
 * C interface to the shared library. All computations are exact; randomized
 * ones are deterministic for a fixed seed. Functions return sw_status;
 * sw_last_error() carries a human-readable message for the most recent
 * failure on the calling thread. Strings returned through char** are
 * heap-allocated and must be released with sw_string_free().
 */
#ifndef SEAWEED_H
#define SEAWEED_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sw_status {
  SW_OK = 0,
  SW_ERROR_INVALID_ARGUMENT = 1,
  SW_ERROR_DISAGREEMENT = 2, /* the two index routes produced different values */
  SW_NOT_APPLICABLE = 3,     /* inductive method does not cover this input */
  SW_ERROR_INTERNAL = 4      /* a mathematical self-check failed; a library bug */
} sw_status;

typedef struct sw_root_system sw_root_system;
typedef struct sw_algebra sw_algebra;

typedef struct sw_oracle_options {
  uint64_t seed;
  int32_t trials;
  int64_t coeff_bound;
} sw_oracle_options;

const char *sw_status_name(sw_status status);
const char *sw_last_error(void);
void sw_string_free(char *s);

/* seed = 1, trials = 8, coeff_bound = 10000 */
void sw_oracle_options_init(sw_oracle_options *opts);

/* ---- root systems ------------------------------------------------------ */

/* series is one of 'A'..'G'; rank per the usual constraints */
sw_status sw_root_system_new(char series, int32_t rank, sw_root_system **out);
void sw_root_system_free(sw_root_system *rs);
int32_t sw_root_system_rank(const sw_root_system *rs);
int32_t sw_root_system_positive_roots(const sw_root_system *rs);
/* length of Kostant's cascade of strongly orthogonal roots */
int32_t sw_root_system_cascade_size(const sw_root_system *rs);

/* ---- structure-constant algebras --------------------------------------- */

sw_status sw_algebra_new(const sw_root_system *rs, sw_algebra **out);
void sw_algebra_free(sw_algebra *alg);
int32_t sw_algebra_dim(const sw_algebra *alg);
/* index of the Borel subalgebra by the exact rank oracle */
sw_status sw_borel_index_oracle(const sw_algebra *alg, const sw_oracle_options *opts, int64_t *out);

/* ---- index computations ------------------------------------------------ */

/* seaweed s(a|b) of gl_n given by two compositions of n */
sw_status sw_index_gl_inductive(const int32_t *a, int32_t alen, const int32_t *b, int32_t blen,
                                int64_t *out);
sw_status sw_index_gl_oracle(const int32_t *a, int32_t alen, const int32_t *b, int32_t blen,
                             const sw_oracle_options *opts, int64_t *out);

/* Standard seaweed of a simple algebra: `marked` are the 1-based simple roots
 * outside the Levi of the upper parabolic; lower_levi (may be NULL with
 * llen = 0 for "all", i.e. a parabolic) is the Levi of the lower parabolic.
 * The inductive route returns SW_NOT_APPLICABLE where no formula applies
 * (non-parabolic sp/so, odd so markings, exceptional series). */
sw_status sw_index_standard_inductive(char series, int32_t rank, const int32_t *marked, int32_t mlen,
                                      const int32_t *lower_levi, int32_t llen, int64_t *out);
sw_status sw_index_standard_oracle(char series, int32_t rank, const int32_t *marked, int32_t mlen,
                                   const int32_t *lower_levi, int32_t llen,
                                   const sw_oracle_options *opts, int64_t *out);

/* ---- reports ------------------------------------------------------------ */

/* method: "inductive" | "oracle" | "both"; format: "text" | "json".
 * *agree is 1 unless both routes ran and differ (then 0 and
 * SW_ERROR_DISAGREEMENT). */
sw_status sw_index_report_gl(const int32_t *a, int32_t alen, const int32_t *b, int32_t blen,
                             const char *method, const sw_oracle_options *opts, const char *format,
                             char **out, int32_t *agree);
sw_status sw_index_report_standard(char series, int32_t rank, const int32_t *marked, int32_t mlen,
                                   const int32_t *lower_levi, int32_t llen, const char *method,
                                   const sw_oracle_options *opts, const char *format, char **out,
                                   int32_t *agree);

/* format: "text" | "json" | "dot" */
sw_status sw_cascade_report(char series, int32_t rank, const char *format, char **out);

/* Verifies the no-generic-stabiliser counterexample for the minimal parabolic
 * at the attachment root (series B, D, E, F, G). samples = number of a-values
 * (>= 1; 0 picks the default 8). *confirmed is 1 iff every check passed. */
sw_status sw_counterexample_report(char series, int32_t rank, int32_t samples,
                                   const sw_oracle_options *opts, const char *format, char **out,
                                   int32_t *confirmed);

/* All composition pairs of n (n <= 8): inductive vs oracle index.
 * *disagreements counts pairs where the routes differ (0 expected). */
sw_status sw_enumerate_gl(int32_t n, const sw_oracle_options *opts, const char *format,
                          int32_t include_entries, char **out, int32_t *disagreements);

#ifdef __cplusplus
}
#endif

#endif /* SEAWEED_H */
