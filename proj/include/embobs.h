/*
 * embobs - embedding obstruction toolkit
 *
 * C interface to the computation core: dual Stiefel-Whitney classes and the
 * double-point invariant D, Z/2-indices of combinatorial deleted products,
 * van Kampen-Flores cover verification, exact coincidence witnesses for
 * piecewise-linear maps, and the K-theory gamma-operation calculus.
 *
 * Conventions:
 *   - every function returns an embobs_status; results are written through
 *     out parameters
 *   - reports are JSON strings allocated by the library; release them with
 *     embobs_string_free
 *   - handles are opaque; release them with the matching *_free function
 *   - embobs_last_error() describes the most recent failure on the calling
 *     thread
 */

#ifndef EMBOBS_H
#define EMBOBS_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum embobs_status {
    EMBOBS_OK = 0,
    EMBOBS_ERR_INVALID = 1,  /* invalid argument or precondition violation */
    EMBOBS_ERR_PARSE = 2,    /* malformed input */
    EMBOBS_ERR_LIMIT = 3,    /* resource cap exceeded */
    EMBOBS_ERR_INTERNAL = 4  /* internal consistency failure */
} embobs_status;

/* Finite abstract simplicial complex. */
typedef struct embobs_complex embobs_complex;
/* Quotient of a deleted product by the swap involution. */
typedef struct embobs_quotient embobs_quotient;

const char* embobs_version(void);
const char* embobs_last_error(void);
void embobs_string_free(char* s);

/* ---- simplicial complexes ---------------------------------------------- */

/* JSON: {"vertices": [...], "facets": [[...], ...]}; closure computed. */
embobs_status embobs_complex_from_json(const char* json, embobs_complex** out);
embobs_status embobs_complex_boundary_simplex(int n, embobs_complex** out);
embobs_status embobs_complex_minimal_rp2(embobs_complex** out);
embobs_status embobs_complex_skeleton(const embobs_complex* k, int q, embobs_complex** out);
embobs_status embobs_complex_to_json(const embobs_complex* k, char** json_out);
int embobs_complex_num_vertices(const embobs_complex* k);
int embobs_complex_dim(const embobs_complex* k);
void embobs_complex_free(embobs_complex* k);

/* ---- characteristic classes -------------------------------------------- */

/* Dual Stiefel-Whitney classes and the invariant D for RP^d, or for a
 * presented total tangent class (see the README for the JSON schema). */
embobs_status embobs_dualsw_rp(int d, char** json_out);
embobs_status embobs_dualsw_total(const char* presentation_json, char** json_out);
embobs_status embobs_capd_rp(int d, char** json_out);
embobs_status embobs_capd_total(const char* presentation_json, char** json_out);
embobs_status embobs_division_rp(int d, int m, char** json_out);
embobs_status embobs_division_total(const char* presentation_json, int m, char** json_out);

/* Frick-Harrison admissibility; *admissible_out is 0 or 1. */
embobs_status embobs_fh_admissible(long long l, long long m, long long k, long long r,
                                   long long cap_d, int* admissible_out, char** json_out);

/* ---- deleted products and the Z/2-index -------------------------------- */

/* mode: "full" | "cap:M" | "family" (family JSON required for the latter).
 * max_degree < 0 means no extra degree cap. */
embobs_status embobs_quotient_build(const embobs_complex* k, const char* mode,
                                    const char* family_json, int max_degree,
                                    embobs_quotient** out);
embobs_status embobs_quotient_euler_power_nonzero(const embobs_quotient* y, int m,
                                                  int* nonzero_out);
embobs_status embobs_quotient_z2_index(const embobs_quotient* y, int* index_out);
void embobs_quotient_free(embobs_quotient* y);

/* One-call report combining the build and index computation. */
embobs_status embobs_index_report(const embobs_complex* k, const char* mode,
                                  const char* family_json, int max_degree,
                                  int emit_cocycles, char** json_out);

/* ---- cover families ----------------------------------------------------- */

/* *holds_out is 1 when the hypothesis holds, 0 with a counterexample in the
 * report otherwise. */
embobs_status embobs_cover_check(const embobs_complex* k, const char* family_json, int m,
                                 int r, int threads, int* holds_out, char** json_out);

/* ---- coincidence witnesses ---------------------------------------------- */

/* points JSON: {"dimension": m, "images": {"vertex": ["p/q", ...], ...}};
 * cap < 0 disables the pair dimension cap. */
embobs_status embobs_coincide(const embobs_complex* k, const char* points_json, int cap,
                              int threads, char** json_out);

/* Reproducible random rational vertex images, emitted as a points JSON. */
embobs_status embobs_random_plmap(const embobs_complex* k, int target_dim,
                                  unsigned long long seed, long denom_bound,
                                  char** json_out);

/* ---- K-theory ------------------------------------------------------------ */

/* gamma^0..gamma^n of R^d - tau RP^d over SpecialKRing(f), plus the least
 * non-embedding bound. */
embobs_status embobs_ktheory(int d, unsigned f, int n, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* EMBOBS_H */
