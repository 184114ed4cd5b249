/* C interface to the padnet library. All functions return a padnet_status;
 * on failure padnet_last_error() describes the cause for the calling thread. */
#ifndef PADNET_PADNET_H
#define PADNET_PADNET_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PADNET_API __declspec(dllimport)
#elif defined(PADNET_BUILDING_LIBRARY)
#define PADNET_API __attribute__((visibility("default")))
#else
#define PADNET_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum padnet_status {
  PADNET_OK = 0,
  PADNET_ERR_CONFIG = 1,
  PADNET_ERR_NUMERIC = 2,
  PADNET_ERR_IO = 3,
  PADNET_ERR_INVALID_ARGUMENT = 4,
  PADNET_ERR_INTERNAL = 5
} padnet_status;

typedef enum padnet_scenario { PADNET_SCENARIO_ONE = 1, PADNET_SCENARIO_TWO = 2 } padnet_scenario;
typedef enum padnet_mode { PADNET_MODE_EXACT = 0, PADNET_MODE_UPPER_BOUND = 1 } padnet_mode;
typedef enum padnet_interferers {
  PADNET_INTERFERERS_ANALYSIS_MATCHED = 0,
  PADNET_INTERFERERS_PAIR_CONSISTENT = 1
} padnet_interferers;

typedef struct padnet_config padnet_config;

typedef struct padnet_coverage {
  double uav_los;
  double uav_nlos;
  double tbs;
  double total;
  double lambda_u;
  double truncation_tail;
} padnet_coverage;

typedef struct padnet_energy {
  double se;
  double p_tot;
  double ee;
  double lambda_u;
  double mean_l;
  double travel_fraction;
} padnet_energy;

typedef struct padnet_sim_coverage {
  double total;
  double ci_lo;
  double ci_hi;
  double uav_los;
  double uav_nlos;
  double tbs;
  double lambda_u;
  uint64_t drops;
} padnet_sim_coverage;

typedef struct padnet_run_options {
  const char* out_dir;        /* NULL: current directory */
  int64_t drops;              /* negative: recipe default */
  int has_seed;               /* nonzero: use seed instead of master_seed */
  uint64_t seed;
  const char* sweep_key;      /* custom_sweep only */
  const double* sweep_values; /* custom_sweep only */
  size_t sweep_count;
} padnet_run_options;

typedef struct padnet_run_result {
  size_t rows;
  double wall_time_s;
} padnet_run_result;

PADNET_API const char* padnet_version(void);
PADNET_API const char* padnet_last_error(void);

PADNET_API padnet_status padnet_config_default(padnet_config** out);
PADNET_API padnet_status padnet_config_load(const char* path, padnet_config** out);
PADNET_API padnet_status padnet_config_parse(const char* text, padnet_config** out);
PADNET_API void padnet_config_free(padnet_config* config);
PADNET_API padnet_status padnet_config_set(padnet_config* config, const char* key, double value);
PADNET_API padnet_status padnet_config_get(const padnet_config* config, const char* key,
                                           double* out);

PADNET_API padnet_status padnet_coverage_analytic(const padnet_config* config,
                                                  padnet_scenario scenario, padnet_mode mode,
                                                  padnet_coverage* out);
PADNET_API padnet_status padnet_energy_efficiency(const padnet_config* config,
                                                  padnet_scenario scenario, padnet_energy* out);
PADNET_API padnet_status padnet_simulate_coverage(const padnet_config* config,
                                                  padnet_scenario scenario,
                                                  padnet_interferers interferers, uint64_t drops,
                                                  uint64_t seed, padnet_sim_coverage* out);
PADNET_API padnet_status padnet_travel_cdf(const padnet_config* config, double r_mm,
                                           double theta_1, double l, double* out);
PADNET_API padnet_status padnet_mean_travel_distance(const padnet_config* config, double* out);
PADNET_API padnet_status padnet_uav_density_s2(const padnet_config* config, double* out);

/* Recipe table as printed by `padnet list`; the string is static. */
PADNET_API const char* padnet_experiment_table(void);
PADNET_API size_t padnet_experiment_count(void);
PADNET_API const char* padnet_experiment_name(size_t index);
PADNET_API padnet_status padnet_run_experiment(const padnet_config* config, const char* name,
                                               const padnet_run_options* options,
                                               padnet_run_result* result);

#ifdef __cplusplus
}
#endif

#endif
