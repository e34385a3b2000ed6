/*
 * cogdof C API.
 *
 * Degrees-of-freedom analysis of the two-user MIMO interference channel with
 * cognitive message sharing and with cooperation. Every function returns a
 * cogdof_status; on failure cogdof_last_error() describes the problem for the
 * calling thread. Handles are opaque and released with the matching *_free.
 * Strings handed out by the library are released with cogdof_string_free.
 */
#ifndef COGDOF_COGDOF_H
#define COGDOF_COGDOF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(COGDOF_BUILDING)
#    define COGDOF_API __declspec(dllexport)
#  else
#    define COGDOF_API __declspec(dllimport)
#  endif
#else
#  define COGDOF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cogdof_status {
  COGDOF_OK = 0,
  COGDOF_ERR_INVALID_ARGUMENT = 1,
  COGDOF_ERR_NOT_ACHIEVABLE = 2,
  COGDOF_ERR_PRECONDITION = 3,
  COGDOF_ERR_UNDECODABLE = 4,
  COGDOF_ERR_DEGENERATE_CHANNEL = 5,
  COGDOF_ERR_INTERNAL = 6
} cogdof_status;

/* Antenna counts (M1, M2, N1, N2). */
typedef struct cogdof_config {
  int m1;
  int m2;
  int n1;
  int n2;
} cogdof_config;

/* Cognition indicators [T1, T2, R1, R2], each 0 or 1. */
typedef struct cogdof_scenario {
  int t1;
  int t2;
  int r1;
  int r2;
} cogdof_scenario;

typedef struct cogdof_channel cogdof_channel;
typedef struct cogdof_scheme cogdof_scheme;
typedef struct cogdof_region cogdof_region;

typedef enum cogdof_region_kind {
  COGDOF_REGION_INNER = 0, /* hull of the achievable integer points */
  COGDOF_REGION_OUTER = 1  /* converse halfspaces */
} cogdof_region_kind;

typedef enum cogdof_verify_which {
  COGDOF_VERIFY_REGIONS = 1,
  COGDOF_VERIFY_CLIP_IDENTITY = 2,
  COGDOF_VERIFY_ORDERING = 4,
  COGDOF_VERIFY_ALL = 7
} cogdof_verify_which;

typedef struct cogdof_diagnostics {
  int signal_dim_rx1;
  int interference_dim_rx1;
  int intersection_dim_rx1;
  int signal_dim_rx2;
  int interference_dim_rx2;
  int intersection_dim_rx2;
  int decodable_w1;
  int decodable_w2;
  double worst_null_residual;
  int transmit_rank;
} cogdof_diagnostics;

COGDOF_API const char* cogdof_version(void);
COGDOF_API const char* cogdof_status_string(cogdof_status status);
COGDOF_API const char* cogdof_last_error(void);
COGDOF_API void cogdof_string_free(char* s);

/* Configs and scenarios. */
COGDOF_API cogdof_status cogdof_config_validate(int m1, int m2, int n1, int n2, cogdof_config* out);
/* "m1,m2,n1,n2" */
COGDOF_API cogdof_status cogdof_config_parse(const char* text, cogdof_config* out);
/* "t1,t2,r1,r2" */
COGDOF_API cogdof_status cogdof_scenario_parse(const char* text, cogdof_scenario* out);
/* {"m1":..,"m2":..,"n1":..,"n2":..} */
COGDOF_API cogdof_status cogdof_config_from_json(const char* json, cogdof_config* out);
COGDOF_API cogdof_status cogdof_swap_users(cogdof_config config, cogdof_scenario scenario,
                                           cogdof_config* config_out, cogdof_scenario* scenario_out);

/* Channel realizations. */
COGDOF_API cogdof_status cogdof_channel_sample(cogdof_config config, uint64_t seed, int extended,
                                               cogdof_channel** out);
COGDOF_API void cogdof_channel_free(cogdof_channel* channel);
/* Copies H^[rx tx] row-major into buf. Pass buf = NULL to query the shape. */
COGDOF_API cogdof_status cogdof_channel_link(const cogdof_channel* channel, int rx_node, int tx_node,
                                             double* buf, size_t buf_len, int* rows, int* cols);

/* Closed forms. */
COGDOF_API cogdof_status cogdof_dof_formula(cogdof_config config, cogdof_scenario scenario, int* eta);
/* eta with cooperation and the pair (max(M1,N2), max(M2,N1)); bounds may be NULL. */
COGDOF_API cogdof_status cogdof_dof_cooperation(cogdof_config config, int* eta, int* bound1, int* bound2);
COGDOF_API cogdof_status cogdof_in_achievable_set(cogdof_config config, cogdof_scenario scenario,
                                                  int d1, int d2, int* member);

/* Exact regions. Rationals are returned as numerator/denominator pairs. */
COGDOF_API cogdof_status cogdof_region_build(cogdof_config config, cogdof_scenario scenario,
                                             cogdof_region_kind kind, cogdof_region** out);
/* Region from the "halfspaces" array of a region JSON document. */
COGDOF_API cogdof_status cogdof_region_from_json(const char* json, cogdof_region** out);
COGDOF_API void cogdof_region_free(cogdof_region* region);
COGDOF_API cogdof_status cogdof_region_vertex_count(const cogdof_region* region, size_t* count);
COGDOF_API cogdof_status cogdof_region_vertex(const cogdof_region* region, size_t index,
                                              int64_t* d1_num, int64_t* d1_den,
                                              int64_t* d2_num, int64_t* d2_den);
COGDOF_API cogdof_status cogdof_region_sum_dof(const cogdof_region* region, int64_t* num, int64_t* den);
COGDOF_API cogdof_status cogdof_regions_equal(const cogdof_region* a, const cogdof_region* b, int* equal);
COGDOF_API cogdof_status cogdof_region_to_json(const cogdof_region* region, char** json);

/* Identities and exhaustive sweeps. */
COGDOF_API cogdof_status cogdof_clip_identity_holds(int c, int d, int box, int* holds);
COGDOF_API cogdof_status cogdof_ordering_holds(cogdof_config config, int* holds);
/* max_antennas in 1..5; which is a cogdof_verify_which mask. */
COGDOF_API cogdof_status cogdof_verify(int max_antennas, int which, int* passed, char** report_json);

/* Zero-forcing schemes. */
COGDOF_API cogdof_status cogdof_scheme_build(cogdof_config config, cogdof_scenario scenario, int d1, int d2,
                                             const cogdof_channel* channel, uint64_t seed,
                                             cogdof_scheme** out);
COGDOF_API void cogdof_scheme_free(cogdof_scheme* scheme);
COGDOF_API cogdof_status cogdof_scheme_verify(const cogdof_scheme* scheme, const cogdof_channel* channel,
                                              cogdof_diagnostics* out);
/* Builds and verifies over `trials` random channels. report_json may be NULL. */
COGDOF_API cogdof_status cogdof_achieve(cogdof_config config, cogdof_scenario scenario, int d1, int d2,
                                        int trials, uint64_t seed, int* passes, char** report_json);
COGDOF_API cogdof_status cogdof_achievability_sweep(int max_antennas, int trials, uint64_t seed,
                                                    long long* passes, long long* total,
                                                    char** report_json);

/* Rates. */
COGDOF_API cogdof_status cogdof_achievable_rates(const cogdof_scheme* scheme, const cogdof_channel* channel,
                                                 double rho, double* r1, double* r2);
/* Rate sweep over `points` log-spaced values in [rho_min, rho_max], averaged
 * over `trials` channels. csv and sidecar_json may be NULL. */
COGDOF_API cogdof_status cogdof_simulate(cogdof_config config, cogdof_scenario scenario, int d1, int d2,
                                         double rho_min, double rho_max, int points, int trials,
                                         uint64_t seed, double* slope, char** csv, char** sidecar_json);
/* Writes up to `len` per-antenna terms; *count receives M1. */
COGDOF_API cogdof_status cogdof_cooperation_bound_term(const cogdof_channel* channel, double rho,
                                                       double* terms, size_t len, size_t* count);
COGDOF_API cogdof_status cogdof_coop_gap_check(cogdof_config config, int trials, uint64_t seed,
                                               int* passed, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* COGDOF_COGDOF_H */
