#ifndef STIEFEL_H
#define STIEFEL_H

/* Generated by cbindgen from stiefel-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

#define STIEFEL_OK 0

#define STIEFEL_ERR_NULL_ARGUMENT -1

#define STIEFEL_ERR_INVALID_SPEC -2

#define STIEFEL_ERR_DIM_CAP -3

#define STIEFEL_ERR_INTERNAL -4

/*
 Opaque verification report handle.
 */
typedef struct StiefelReport StiefelReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Verify one spec.

 `family` is one of "orth-rr", "unitary-c", "unitary-h", "symp-r",
 "symp-c", "orth-c"; `params`/`params_len` carry the family's counts
 (orth-rr: p,q,k,l; unitary: n1,n2,m1,m2; symplectic and orth-c: n,m).
 On success writes a handle to `out`; free it with `stiefel_report_free`.

 # Safety
 `family` must be a valid NUL-terminated string, `params` must point to
 `params_len` readable usize values, and `out` must be a valid pointer.
 */
int32_t stiefel_verify(const char *family,
                       const uintptr_t *params,
                       uintptr_t params_len,
                       uint32_t max_dim,
                       struct StiefelReport **out);

/*
 1 when every in-scope check passed (out-of-scope specs always pass), else 0.

 # Safety
 `report` must be a live handle from `stiefel_verify`.
 */
int32_t stiefel_report_passes(const struct StiefelReport *report);

/*
 1 when the spec satisfies the theorem hypotheses, else 0.

 # Safety
 `report` must be a live handle from `stiefel_verify`.
 */
int32_t stiefel_report_in_scope(const struct StiefelReport *report);

/*
 Exact rank of Der(m); -1 on a null handle.

 # Safety
 `report` must be a live handle from `stiefel_verify`.
 */
int64_t stiefel_report_der_rank(const struct StiefelReport *report);

/*
 Exact rank of ad(g + l) restricted to m; -1 on a null handle.

 # Safety
 `report` must be a live handle from `stiefel_verify`.
 */
int64_t stiefel_report_ad_rank(const struct StiefelReport *report);

/*
 dim m; -1 on a null handle.

 # Safety
 `report` must be a live handle from `stiefel_verify`.
 */
int64_t stiefel_report_m_dim(const struct StiefelReport *report);

/*
 1 when a non-derivation witness triple exists, else 0.

 # Safety
 `report` must be a live handle from `stiefel_verify`.
 */
int32_t stiefel_report_witness_found(const struct StiefelReport *report);

/*
 The full JSON report as a newly allocated string; free it with
 `stiefel_string_free`. NULL on a null handle.

 # Safety
 `report` must be a live handle from `stiefel_verify`.
 */
char *stiefel_report_json(const struct StiefelReport *report);

/*
 Release a report handle. NULL is a no-op.

 # Safety
 `report` must be NULL or a handle from `stiefel_verify`, not yet freed.
 */
void stiefel_report_free(struct StiefelReport *report);

/*
 Release a string returned by `stiefel_report_json`. NULL is a no-op.

 # Safety
 `s` must be NULL or a pointer returned by `stiefel_report_json`, not yet
 freed.
 */
void stiefel_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STIEFEL_H */
