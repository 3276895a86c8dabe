/*
 * addlab C API: constructions, bound verdicts, region scans and numerical
 * oracles for additivity-of-minimum-output-entropy experiments, behind a
 * flat handle-and-error-code surface.
 *
 * Conventions:
 *   - Every fallible call returns an addlab_status; ADDLAB_OK is 0.
 *   - On failure, addlab_last_error() returns a thread-local message valid
 *     until the next failing call on the same thread.
 *   - Strings returned through char** are heap-allocated JSON or CSV
 *     payloads; release them with addlab_string_free().
 *   - Families: "antisym", "antisym-subspace", "bell-extension",
 *     "parthasarathy". Oracle targets: "antisym-sup", "subspace-sup", "md".
 */
#ifndef ADDLAB_H
#define ADDLAB_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum addlab_status {
  ADDLAB_OK = 0,
  ADDLAB_ERR_ARGUMENT = 1,
  ADDLAB_ERR_DOMAIN = 2,
  ADDLAB_ERR_RESOURCE = 3,
  ADDLAB_ERR_INTERNAL = 4
} addlab_status;

typedef struct addlab_oracle_config {
  int32_t restarts;       /* default 64 */
  int32_t max_iterations; /* default 500 */
  double tolerance;       /* default 1e-10 */
  uint64_t seed;          /* default 0 */
} addlab_oracle_config;

const char* addlab_version(void);
const char* addlab_last_error(void);
void addlab_string_free(char* s);
void addlab_oracle_config_defaults(addlab_oracle_config* cfg);

/* Opaque handle to an orthonormal construction basis. `n` is ignored by
 * families that do not take a size parameter. */
typedef struct addlab_subspace addlab_subspace;

addlab_status addlab_subspace_create(const char* family, int32_t d, int32_t n,
                                     addlab_subspace** out);
void addlab_subspace_free(addlab_subspace* w);
int32_t addlab_subspace_dim(const addlab_subspace* w);
addlab_status addlab_subspace_ambient_dims(const addlab_subspace* w, int32_t* dim_k,
                                           int32_t* dim_e);
double addlab_subspace_orthonormality_residual(const addlab_subspace* w);
addlab_status addlab_subspace_max_schmidt(const addlab_subspace* w,
                                          const addlab_oracle_config* cfg, double* value);

/* Construction summary (dimension, ambient dims, residual, max-Schmidt
 * oracle value) as a JSON payload. */
addlab_status addlab_construct_json(const addlab_subspace* w, const addlab_oracle_config* cfg,
                                    char** json);

/* Full witness report for one construction; breaks (0/1) mirrors the
 * payload's analytic verdict. m is the assumed M_d lower bound and is only
 * read by the parthasarathy family (pass 0.5 otherwise). */
addlab_status addlab_verify_json(const char* family, int32_t d, int32_t n, double p, double m,
                                 const addlab_oracle_config* cfg, int32_t* breaks, char** json);

/* Region scan over p_grid x d_grid; JSON or CSV payload. */
addlab_status addlab_scan_json(const char* family, const double* p_grid, int32_t p_count,
                               const int32_t* d_grid, int32_t d_count, double m, char** json);
addlab_status addlab_scan_csv(const char* family, const double* p_grid, int32_t p_count,
                              const int32_t* d_grid, int32_t d_count, double m, char** csv);

/* Named oracle runs: target "antisym-sup" (needs d), "subspace-sup"
 * (needs d and n), "md" (needs d). */
addlab_status addlab_oracle_json(const char* target, int32_t d, int32_t n,
                                 const addlab_oracle_config* cfg, char** json);

#ifdef __cplusplus
}
#endif

#endif /* ADDLAB_H */
