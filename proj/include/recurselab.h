/* C interface to the recursion-schema laboratory.
 *
 * All functions are thread-compatible: distinct threads may operate on
 * distinct handles concurrently. Strings returned through `char **` out
 * parameters are heap-allocated; release them with rl_string_free. Counters
 * are exchanged as exact decimal strings because they routinely exceed 64
 * bits. On failure every function returns a nonzero error code and leaves a
 * description retrievable via rl_last_error (thread-local).
 */
#ifndef RECURSELAB_H
#define RECURSELAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Error codes. */
#define RL_OK 0
#define RL_ERR_USAGE 1    /* unknown name, bad arity, malformed argument */
#define RL_ERR_DOMAIN 2   /* precondition violated (e.g. non-total params) */
#define RL_ERR_OVERFLOW 3 /* evaluation guard exceeded */
#define RL_ERR_IO 4       /* file not readable / malformed */
#define RL_ERR_INTERNAL 5

/* Outcome kinds (rl_outcome_kind). */
#define RL_VALUE 0
#define RL_FUEL_EXHAUSTED 1
#define RL_CYCLE_DETECTED 2

typedef struct rl_outcome rl_outcome;

/* Schema names: "m91", "m91mod", "tak3", "gabriel", "boolb", "k",
 * "gen91:a,b,c,d", "takm:m", "vh:<default-rule>", "vh@<hspec-file>".
 * Strategies: "full", "memo", "lazy". `fuel_decimal` is a nonnegative
 * decimal integer. */
int rl_evaluate(const char *schema, const int64_t *args, size_t nargs,
                const char *strategy, const char *fuel_decimal,
                rl_outcome **out);

/* Cost of the m-dimensional full-expansion recurrence at `args`
 * (nargs = m >= 3). raw = 0 computes the memoized cost recurrence; raw != 0
 * performs genuinely nested expansion. */
int rl_takm_cost(const int64_t *args, size_t nargs, const char *fuel_decimal,
                 int raw, rl_outcome **out);

int rl_outcome_kind(const rl_outcome *o);
/* Fails with RL_ERR_DOMAIN unless the outcome kind is RL_VALUE. */
int rl_outcome_value(const rl_outcome *o, int64_t *value);
/* counter: "else", "total", or "fuel"; returns a decimal string or NULL. */
char *rl_outcome_counter(const rl_outcome *o, const char *counter);
/* Witness chain of a cycle (possibly empty): tuple i as "a,b,c". */
size_t rl_outcome_witness_size(const rl_outcome *o);
char *rl_outcome_witness_tuple(const rl_outcome *o, size_t i);
void rl_outcome_free(rl_outcome *o);

/* Runs every strategy applicable to the schema; on success stores a JSON
 * array of {strategy, kind, value?, else, total, fuel} objects. */
int rl_compare_strategies(const char *schema, const int64_t *args, size_t nargs,
                          const char *fuel_decimal, char **json);

/* Cost report at a point, as a JSON object of decimal strings:
 * nargs = 1 -> {"F": ...} (91-function expansion cost);
 * nargs = 3 -> {"T": ..., "V": ..., "K": ...}. */
int rl_cost(const int64_t *args, size_t nargs, char **json);

/* name: "Vn" or "Tn"; stores "v1,v2,...,v<max>". */
int rl_sequence(const char *name, int64_t max, char **csv);

/* name: "catalan", "central", "gf-residual", "v-residual"; stores the
 * truncated coefficients "c0,c1,...". */
int rl_series(const char *name, int64_t order, char **csv);

/* Runs a named verification suite (lemma1, theorem1, theorem3, theorem4,
 * lemma4, gf, bounds, kclosed, vclosed). has_range selects the optional
 * range override. Stores JSON {suite, ok, checked, witness}. Returns RL_OK
 * even when the suite fails its checks; `ok` carries the verdict. */
int rl_verify(const char *suite, int has_range, int64_t range_lo,
              int64_t range_hi, const char *fuel_decimal, int64_t order,
              char **json);

/* Lemma-4 classification of the h table in an hspec JSON file. Stores one of
 * "total", "diverges-case-i", "diverges-case-ii", "diverges-case-iii". */
int rl_classify_hspec(const char *path, char **verdict);

/* Bounded exploration of auxiliary functions h < max for the v_h scheme.
 * Stores a JSON report {consistent, inconsistent, inconclusive, entries}. */
int rl_explore_op3(int64_t max_val, int64_t box_size, char **json);

/* Darboux check: |V_n 4^-n / (4 n^(-3/2) / (3 sqrt(pi))) - 1|. */
int rl_darboux_error(int64_t n, double *error);

void rl_string_free(char *s);

/* Description of the most recent failure on this thread ("" if none). */
const char *rl_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* RECURSELAB_H */
