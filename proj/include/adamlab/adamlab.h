/* adamlab C API. Every call returns an adamlab_status; on anything other than
 * ADAMLAB_OK the message is available from adamlab_last_error() on the same
 * thread. Strings handed out through char** belong to the caller and are
 * released with adamlab_string_free. */
#ifndef ADAMLAB_H
#define ADAMLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ADAMLAB_API __declspec(dllexport)
#else
#define ADAMLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum adamlab_status {
  ADAMLAB_OK = 0,
  ADAMLAB_VERDICT_FAILED = 1, /* call succeeded, some verdict is red */
  ADAMLAB_ERR_VALIDATION = 2,
  ADAMLAB_ERR_DOMAIN = 3,
  ADAMLAB_ERR_RANGE = 4,
  ADAMLAB_ERR_DIVISION_HAZARD = 5,
  ADAMLAB_ERR_STATE = 6,
  ADAMLAB_ERR_CERTIFICATION = 7,
  ADAMLAB_ERR_LOOKUP = 8,
  ADAMLAB_ERR_IO = 9,
  ADAMLAB_ERR_INTERNAL = 10
} adamlab_status;

typedef struct adamlab_problem adamlab_problem;
typedef struct adamlab_state adamlab_state;

typedef struct adamlab_constants {
  double L_hat;
  double G_hat;
  double M;        /* G_hat + sigma */
  double pl_v_hat; /* 0 when the problem claims no PL constant */
  int has_pl;
  int exact;
} adamlab_constants;

ADAMLAB_API const char* adamlab_version(void);
ADAMLAB_API const char* adamlab_last_error(void);
ADAMLAB_API void adamlab_string_free(char* s);

/* noise_kind: "uniform-ball" or "rademacher" (NULL means uniform-ball). */
ADAMLAB_API adamlab_status adamlab_problem_create(const char* id, int dim, double box_radius,
                                                  const char* noise_kind, double sigma,
                                                  adamlab_problem** out);
ADAMLAB_API void adamlab_problem_free(adamlab_problem* p);
ADAMLAB_API adamlab_status adamlab_problem_dim(const adamlab_problem* p, int* out);
ADAMLAB_API adamlab_status adamlab_problem_value(const adamlab_problem* p, const double* x,
                                                 size_t n, double* out);
ADAMLAB_API adamlab_status adamlab_problem_gradient(const adamlab_problem* p, const double* x,
                                                    size_t n, double* grad_out);
ADAMLAB_API adamlab_status adamlab_problem_constants(const adamlab_problem* p,
                                                     adamlab_constants* out);
ADAMLAB_API adamlab_status adamlab_problem_finite_diff_check(const adamlab_problem* p,
                                                             const double* x, size_t n, double h,
                                                             double* out);

/* spec_json: e.g. {"kind":"power_eta","scale":1,"exponent":0.5}. */
ADAMLAB_API adamlab_status adamlab_schedule_eval(const char* spec_json, int64_t k, double* out);

ADAMLAB_API adamlab_status adamlab_state_create(const double* x1, size_t n, adamlab_state** out);
ADAMLAB_API void adamlab_state_free(adamlab_state* s);
ADAMLAB_API adamlab_status adamlab_state_step(adamlab_state* s, const double* g, size_t n,
                                              double eta, double beta, double theta,
                                              double epsilon);
/* Any of x, m, v may be NULL; each non-NULL buffer must hold n doubles. */
ADAMLAB_API adamlab_status adamlab_state_get(const adamlab_state* s, double* x, double* m,
                                             double* v, size_t n, int64_t* k);

/* High-level calls. JSON results are written to *json_out (may be NULL when
 * not wanted). Return ADAMLAB_VERDICT_FAILED when the work completed but a
 * verdict failed. */
ADAMLAB_API adamlab_status adamlab_check_schedule(const char* config_path, char** json_out);
ADAMLAB_API adamlab_status adamlab_run(const char* config_path, char** json_out);
ADAMLAB_API adamlab_status adamlab_audit(const char* manifest_path, char** json_out);
ADAMLAB_API adamlab_status adamlab_rates(const char* manifest_path, char** json_out);
/* format: "csv", "json" or "table". */
ADAMLAB_API adamlab_status adamlab_report(const char* manifest_path, const char* format,
                                          char** json_out);
ADAMLAB_API adamlab_status adamlab_lemmas(int instances, uint64_t seed, char** json_out);

#ifdef __cplusplus
}
#endif

#endif
