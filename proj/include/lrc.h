/* lrc - binary codes with locality for multiple erasures.
 *
 * C interface to the construction, verification and bound-evaluation
 * engine. Codes are held behind opaque handles; every call returns a
 * status code and leaves a thread-local message readable through
 * lrc_last_error(). Strings returned through char** are owned by the
 * caller and released with lrc_string_free().
 */

#ifndef LRC_H
#define LRC_H

#include <stdint.h>
#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined _WIN32
#define LRC_API __declspec(dllexport)
#else
#define LRC_API __attribute__((visibility("default")))
#endif

typedef enum lrc_status {
  LRC_OK = 0,
  LRC_ERR_PARSE = 1,
  LRC_ERR_IO = 2,
  LRC_ERR_UNSUPPORTED_ORDER = 3,
  LRC_ERR_TOO_MANY_SQUARES = 4,
  LRC_ERR_INFEASIBLE_DEGREES = 5,
  LRC_ERR_PARAMETER = 6,
  LRC_ERR_UNKNOWN_FIXTURE = 7,
  LRC_ERR_CAP_EXCEEDED = 8,
  LRC_ERR_ENUMERATION_INFEASIBLE = 9,
  LRC_ERR_PATTERN_SPACE = 10,
  LRC_ERR_INVALID_ARGUMENT = 11,
  LRC_ERR_INTERNAL = 12
} lrc_status;

typedef struct lrc_code lrc_code;

LRC_API const char* lrc_version(void);

/* Message for the most recent failure on this thread. */
LRC_API const char* lrc_last_error(void);

LRC_API void lrc_string_free(char* s);

/* Construction. A spec-string names a code family and its parameters,
 * e.g. "hypergraph:beta=2", "pg:s=2", "r2chain:t=5,k=8", "mols:r=3,t=2",
 * "product:(spc:n=3)x(spc:n=3)", "stack:r=2,inner=(spc:n=3)",
 * "fixture:eq3_14_8". */
LRC_API lrc_status lrc_code_from_spec(const char* spec, lrc_code** out);

/* Parity-check input in pchk-v1 text: "rows cols" then one 0/1 line per row. */
LRC_API lrc_status lrc_code_from_pchk_text(const char* text, lrc_code** out);
LRC_API lrc_status lrc_code_from_pchk_file(const char* path, lrc_code** out);

LRC_API void lrc_code_free(lrc_code* code);

LRC_API size_t lrc_code_n(const lrc_code* code);
LRC_API size_t lrc_code_k(const lrc_code* code);
LRC_API size_t lrc_code_rank(const lrc_code* code);
/* Claimed recovery capability when the code came from a spec-string; 0 otherwise. */
LRC_API uint32_t lrc_code_r_claimed(const lrc_code* code);
LRC_API uint32_t lrc_code_t_claimed(const lrc_code* code);

LRC_API lrc_status lrc_code_pchk_text(const lrc_code* code, char** out);
LRC_API lrc_status lrc_code_write_pchk(const lrc_code* code, const char* path);

/* Flat JSON report of the code parameters. */
LRC_API lrc_status lrc_code_report_json(const lrc_code* code, char** out);

/* Exact minimum distance by codeword sweep; fails with
 * LRC_ERR_CAP_EXCEEDED when k exceeds cap (pass 0 for the default 26). */
LRC_API lrc_status lrc_code_min_distance(const lrc_code* code, uint32_t cap, uint32_t* out);

typedef enum lrc_verify_mode {
  LRC_VERIFY_SEQUENTIAL = 0,
  LRC_VERIFY_SAMPLED = 1,
  LRC_VERIFY_PARALLEL = 2
} lrc_verify_mode;

typedef struct lrc_verify_opts {
  lrc_verify_mode mode;
  uint32_t r;
  uint32_t t;
  uint32_t workers;      /* 0 = available parallelism */
  uint64_t pattern_cap;  /* 0 = default 1e8 */
  uint64_t samples;      /* sampled mode */
  uint64_t seed;         /* sampled mode */
} lrc_verify_opts;

/* Runs the requested verification. *passed reports the outcome; the JSON
 * report (counts, counterexamples as 1-based index lists, timing) lands in
 * *report_json when non-NULL. */
LRC_API lrc_status lrc_verify(const lrc_code* code, const lrc_verify_opts* opts, int* passed,
                              char** report_json);

/* Bound evaluation; pass -1 for parameters that do not apply. */
LRC_API lrc_status lrc_bounds_json(int64_t k, int64_t r, int64_t t, char** out);

/* Comparison tables as CSV. kind is one of "table1", "t3bounds", "pg_rate",
 * "sts_rate", "fig2_gap"; limit bounds the sweep (0 = per-kind default:
 * r_max for t3bounds, max s for pg_rate/sts_rate, max beta for fig2_gap).
 * k_rule applies to t3bounds only: a decimal exponent such as "1.8" for the
 * window k <= r^e - 1 (NULL or "" = the default 1.8). */
LRC_API lrc_status lrc_compare_csv(const char* kind, uint64_t limit, const char* k_rule,
                                   char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LRC_H */
