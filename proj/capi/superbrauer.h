/* C interface to the superbrauer exact invariant-theory engine.
 *
 * All functions return a status code; SBR_OK means the call itself
 * succeeded (a verification that ran to completion and falsified its claim
 * is still SBR_OK; inspect the report). Strings returned through out
 * parameters are heap-allocated and must be released with sbr_free_string.
 * Reports are opaque handles released with sbr_report_free.
 */
#ifndef SUPERBRAUER_H
#define SUPERBRAUER_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sbr_status {
  SBR_OK = 0,
  SBR_ERR_INVALID_ARGUMENT = 1,
  SBR_ERR_ARITY_MISMATCH = 2,
  SBR_ERR_BUDGET_EXCEEDED = 3,
  SBR_ERR_BAD_JSON = 4,
  SBR_ERR_INTERNAL = 5
} sbr_status;

typedef struct sbr_report sbr_report;

/* Library version, e.g. "1.0.0". Static storage; do not free. */
const char* sbr_version(void);

/* Message for the most recent failing call on this thread. Static storage. */
const char* sbr_last_error(void);

void sbr_free_string(char* text);

/* ---- diagram calculus ---------------------------------------------- */

/* JSON array of all diagrams p -> q in canonical order. */
sbr_status sbr_enumerate_diagrams(int p, int q, char** out_json);

/* Composes two hom elements (top * bottom, bottom acts first) with the given
 * loop parameter. Inputs may be bare diagram objects or hom elements; an
 * explicit "delta" in an input must match the parameter. */
sbr_status sbr_compose(long long delta, const char* top_json,
                       const char* bottom_json, char** out_json);

/* ---- kernels and verification --------------------------------------- */

/* Null space of the pairing-functional evaluation in diagram coordinates.
 * include_basis != 0 embeds the basis vectors and diagram order. */
sbr_status sbr_kernel_kappa(int m, int n, int d, int include_basis,
                            sbr_report** out);

/* Null space of the Brauer algebra action in d -> d diagram coordinates. */
sbr_status sbr_kernel_eta(int m, int n, int d, sbr_report** out);

/* Relations among the pairing functionals: sampled membership plus span
 * versus kernel dimension. */
sbr_status sbr_verify_sft(int m, int n, int d, uint64_t seed, int samples,
                          sbr_report** out);

/* Cross-formulation check through the bending isomorphism. */
sbr_status sbr_verify_sft_eta(int m, int n, int d, uint64_t seed,
                              sbr_report** out);

/* Symmetric group action rank/kernel on the r-th power of an (m|ell) space
 * against the rectangle-ideal prediction. */
sbr_status sbr_verify_fft_gl(int m, int ell, int r, sbr_report** out);

/* Classical relation families; family is "orth" or "symp", mn is m resp. n. */
sbr_status sbr_classical(const char* family, int mn, int d, uint64_t seed,
                         sbr_report** out);

/* Kernel dimension sweep d = 1..d_max; observational, no claim. */
sbr_status sbr_experiment_min_kernel(int m, int n, int d_max, char** out_json);

/* ---- report access --------------------------------------------------- */

/* 1 verified, 0 anything else. */
int sbr_report_verified(const sbr_report* report);
/* "verified", "falsified", "skipped" or "verified-probabilistic". */
const char* sbr_report_status(const sbr_report* report);
/* Full report as JSON. */
sbr_status sbr_report_json(const sbr_report* report, char** out_json);
void sbr_report_free(sbr_report* report);

#ifdef __cplusplus
}
#endif

#endif /* SUPERBRAUER_H */
