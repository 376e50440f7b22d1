/*
 * C interface to the rde6 solver for
 *
 *   x_{n+1} = x_{n-5} x_{n-3} / (x_{n-1} (a_n + b_n x_{n-5} x_{n-3})).
 *
 * Problems are opaque handles built from JSON spec files. Strings returned
 * through `char**` out-parameters are owned by the caller and must be released
 * with rde6_string_free. On any status other than RDE6_OK the thread-local
 * message from rde6_last_error describes the failure; RDE6_SINGULAR and
 * RDE6_MISMATCH still fill their output.
 */
#ifndef RDE6_RDE6_H
#define RDE6_RDE6_H

#include <stdint.h>

#if defined(_WIN32)
#define RDE6_API __declspec(dllexport)
#elif defined(__GNUC__)
#define RDE6_API __attribute__((visibility("default")))
#else
#define RDE6_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status values double as CLI exit codes, except RDE6_ERR_INTERNAL. */
typedef enum rde6_status {
  RDE6_OK = 0,
  RDE6_SINGULAR = 2,      /* orbit or closed form hit a zero denominator */
  RDE6_MISMATCH = 3,      /* engines disagree, or a symmetry check failed */
  RDE6_ERR_PARSE = 64,    /* malformed spec */
  RDE6_ERR_USAGE = 65,    /* bad arguments, engine/kind mismatch */
  RDE6_ERR_INTERNAL = 70
} rde6_status;

typedef enum rde6_engine {
  RDE6_ENGINE_GENERAL = 0,
  RDE6_ENGINE_AUTO = 1,   /* dedicated constant / 2- / 4-periodic formulas */
  RDE6_ENGINE_ORACLE = 2  /* direct iteration */
} rde6_engine;

typedef struct rde6_problem rde6_problem;

RDE6_API const char* rde6_version(void);
RDE6_API const char* rde6_last_error(void);
RDE6_API void rde6_string_free(char* s);

RDE6_API rde6_status rde6_problem_from_json(const char* json, rde6_problem** out);
RDE6_API rde6_status rde6_problem_from_file(const char* path, rde6_problem** out);
RDE6_API void rde6_problem_free(rde6_problem* problem);
RDE6_API long rde6_problem_horizon(const rde6_problem* problem);
/* Canonical JSON form of the problem; parsing it yields an equal problem. */
RDE6_API rde6_status rde6_problem_to_json(const rde6_problem* problem, char** out);

/* Exact "p/q" value of x_m from the chosen engine. */
RDE6_API rde6_status rde6_term(const rde6_problem* problem, long m, rde6_engine engine,
                               char** out);

/* CSV `m,exact,float` for x_{-5}..x_n. RDE6_SINGULAR if the orbit stopped early. */
RDE6_API rde6_status rde6_iterate_csv(const rde6_problem* problem, long n, char** out);

/* CSV of closed-form values for m in [lo, hi]. RDE6_SINGULAR names (j, s) in
 * rde6_last_error; rows before the failure are still returned. */
RDE6_API rde6_status rde6_solve_csv(const rde6_problem* problem, long lo, long hi,
                                    rde6_engine engine, char** out);

/* JSON comparison report over x_{-5}..x_n; RDE6_MISMATCH if any row differs.
 * A nonzero `corrupt` perturbs one closed-form value (test hook). */
RDE6_API rde6_status rde6_compare_json(const rde6_problem* problem, long n, int corrupt,
                                       char** out);

/* Symmetry suite summary text; RDE6_MISMATCH on any nonzero residual or
 * failed identity. A nonzero `counterfeit` swaps in Q(n, u) = u. */
RDE6_API rde6_status rde6_verify_symmetry(long samples, uint64_t seed, int counterfeit,
                                          char** out);

#ifdef __cplusplus
}
#endif

#endif /* RDE6_RDE6_H */
