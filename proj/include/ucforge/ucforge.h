/* SPDX-License-Identifier: Apache-2.0 */

#ifndef UCFORGE_H
#define UCFORGE_H

#if defined(__GNUC__)
#define UCF_API __attribute__((visibility("default")))
#else
#define UCF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as CLI exit codes. */
typedef enum {
	UCF_OK = 0,
	UCF_FAILED = 1,           /* a property, classification or acceptance check failed */
	UCF_INPUT_ERROR = 2,      /* malformed or invalid input */
	UCF_BOUNDS_EXHAUSTED = 3, /* N_max or K_max too small for the request */
	UCF_INTERNAL_ERROR = 4,
} ucf_status;

typedef enum {
	UCF_FAULT_NONE = 0,
	UCF_FAULT_CLOSE_U_ENDPOINT = 1,
} ucf_fault;

typedef struct ucf_scenario ucf_scenario;
typedef struct ucf_ladder ucf_ladder;

/* Message for the last non-OK status on this thread; never NULL. */
UCF_API const char *ucf_last_error(void);
UCF_API const char *ucf_version(void);

/* Strings returned through char** out-parameters are owned by the caller. */
UCF_API void ucf_string_free(char *s);

UCF_API ucf_status ucf_scenario_load(const char *path, ucf_scenario **out);
UCF_API ucf_status ucf_scenario_parse(const char *json_text, ucf_scenario **out);
UCF_API void ucf_scenario_free(ucf_scenario *s);
/* "in_A", "not_in_A" or "inconclusive"; exit_level is set for "not_in_A". */
UCF_API ucf_status ucf_scenario_membership(const ucf_scenario *s, const char *x, int depth, char **kind, int *exit_level);

UCF_API ucf_status ucf_ladder_build(const ucf_scenario *s, int n_max, int k_max, ucf_fault fault, ucf_ladder **out);
UCF_API void ucf_ladder_free(ucf_ladder *l);

/* Property report as JSON. UCF_FAILED when any check fails; the report is still produced. */
UCF_API ucf_status ucf_check_properties(const ucf_ladder *l, char **report_json);

/* f_k(x) and f(x) as "p/q". */
UCF_API ucf_status ucf_eval(const ucf_ladder *l, const char *x, int k, char **fk, char **f);

/* CSV over a comma-separated point list, k = 1..K_max per point. */
UCF_API ucf_status ucf_eval_csv(const ucf_ladder *l, const char *points, char **csv);

/* Points to scan when the caller gives none: G_n endpoints, midpoints of A, random fill. */
UCF_API ucf_status ucf_sample_points(const ucf_ladder *l, int count, char **points);

/* Exact sup of |f - f_k| over a set given as JSON 4-tuples; result as JSON. */
UCF_API ucf_status ucf_sup_deviation(const ucf_ladder *l, int k, const char *set_json, char **result_json);

UCF_API ucf_status ucf_certify(const ucf_ladder *l, const char *x, const char *epsilon, char **certificate_json);
UCF_API ucf_status ucf_witness(const ucf_ladder *l, const char *x, int basis_level, char **witness_json);

/* Scan report as JSON. UCF_OK iff every point is classified and agrees with membership in A;
 * UCF_BOUNDS_EXHAUSTED when some point ran out of bounds; UCF_FAILED otherwise.
 * grid_denominator > 0 adds a grid cross-check of each certificate. */
UCF_API ucf_status ucf_scan(const ucf_ladder *l, const char *points, const char *epsilon, int basis_depth,
                    long grid_denominator, char **report_json);

/* Acceptance suite over a corpus directory. UCF_INPUT_ERROR when the corpus is incomplete. */
UCF_API ucf_status ucf_suite_run(const char *corpus_dir, ucf_fault fault, char **summary_json);

#ifdef __cplusplus
}
#endif

#endif
