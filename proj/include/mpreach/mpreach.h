#ifndef MPREACH_MPREACH_H
#define MPREACH_MPREACH_H

/*
 * Backward reachability for max-plus linear systems
 *   x_k = A x_{k-1} (+) B u_k,  u_k in U,
 * with targets built from tropical half-spaces. Results are unions of closed
 * tropical polyhedra.
 *
 * Handles are opaque. Every call that can fail returns an mpr_status;
 * mpr_last_error() then describes the failure (per thread). Strings handed
 * out by the library are released with mpr_string_free.
 *
 * Points are text: comma-separated entries, each an integer, "p/q", a
 * decimal such as "0.5", or "-inf".
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MPR_API __declspec(dllexport)
#else
#define MPR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mpr_problem mpr_problem;
typedef struct mpr_result mpr_result;

typedef enum mpr_status {
  MPR_OK = 0,
  MPR_ERR_USAGE = 1,      /* null handle or argument out of range */
  MPR_ERR_INPUT = 2,      /* malformed or inconsistent input */
  MPR_ERR_ORACLE_CAP = 3, /* oracle size limits exceeded */
  MPR_ERR_INTERNAL = 4
} mpr_status;

typedef enum mpr_mode { MPR_ONE_SHOT = 0, MPR_ITERATED = 1 } mpr_mode;

MPR_API const char* mpr_version(void);
MPR_API const char* mpr_last_error(void);
MPR_API void mpr_string_free(char* s);

MPR_API mpr_status mpr_problem_load(const char* path, mpr_problem** out);
MPR_API mpr_status mpr_problem_parse(const char* json, mpr_problem** out);
/* Small random instance; closed_only != 0 leaves out complemented literals. */
MPR_API mpr_status mpr_problem_random(uint64_t seed, int closed_only, mpr_problem** out);
MPR_API void mpr_problem_free(mpr_problem* p);
MPR_API mpr_status mpr_problem_to_json(const mpr_problem* p, char** out);
MPR_API size_t mpr_problem_dim(const mpr_problem* p);
MPR_API int mpr_problem_has_dynamics(const mpr_problem* p);
MPR_API mpr_status mpr_problem_set_steps(mpr_problem* p, unsigned steps, mpr_mode mode);

/* Closure of the target set; conic != 0 reads the half-spaces as cones. */
MPR_API mpr_status mpr_approx(const mpr_problem* p, int conic, mpr_result** out);
/* Backward reachable set with the problem's step count and mode. */
MPR_API mpr_status mpr_reach(const mpr_problem* p, mpr_result** out);

MPR_API void mpr_result_free(mpr_result* r);
MPR_API mpr_status mpr_result_to_json(const mpr_result* r, char** out);
MPR_API mpr_status mpr_result_parse(const char* json, mpr_result** out);
MPR_API int mpr_result_is_exact(const mpr_result* r);
MPR_API size_t mpr_result_dim(const mpr_result* r);
MPR_API mpr_status mpr_result_member(const mpr_result* r, const char* point, int* inside);

/*
 * Control u with A x (+) B u in the target, read off the computed
 * generators. *control is NULL when x is outside the set. *guaranteed is 0
 * when complemented literals were closed off, in which case u only reaches
 * the closure of the target. Needs a result from mpr_reach in one-shot mode
 * (or a single step).
 */
MPR_API mpr_status mpr_extract_control(const mpr_result* r, const char* point, char** control,
                                       int* guaranteed);

typedef struct mpr_sample_options {
  const char* lo;
  const char* hi;
  unsigned res;
  int with_eps;
  int with_oracle;
} mpr_sample_options;

/* Grid over [lo, hi]^n as CSV: x1..xn, in_set, on_boundary[, in_oracle]. */
MPR_API mpr_status mpr_sample(const mpr_problem* p, const mpr_result* r, const mpr_sample_options* opt,
                              char** csv);

/* Compares r against the exact DBM oracle on random points; JSON report. */
MPR_API mpr_status mpr_compare_oracle(const mpr_problem* p, const mpr_result* r, uint64_t samples,
                                      uint64_t seed, char** report);

#ifdef __cplusplus
}
#endif

#endif
