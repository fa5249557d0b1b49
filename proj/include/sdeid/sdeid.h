/* C interface to the SDE identification pipeline.
 *
 * All functions return SDEID_OK (0) on success; on failure they return a
 * nonzero status and sdeid_last_error() carries a message for the calling
 * thread. Handles are opaque and must be released with the matching _free.
 */
#ifndef SDEID_H
#define SDEID_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sdeid_status {
  SDEID_OK = 0,
  SDEID_ERR_INVALID_ARGUMENT = 1,
  SDEID_ERR_SIMULATION_BLOWUP = 2,
  SDEID_ERR_INSUFFICIENT_RESOLUTION = 3,
  SDEID_ERR_DEGENERATE_DIFFUSION = 4,
  SDEID_ERR_SINGULAR_DIFFUSION = 5,
  SDEID_ERR_RANK_DEFICIENCY = 6,
  SDEID_ERR_UNSUPPORTED_MODEL = 7,
  SDEID_ERR_CONVERGENCE_FAILURE = 8,
  SDEID_ERR_EMPTY_MODEL = 9,
  SDEID_ERR_IO = 10,
  SDEID_ERR_CONFIG = 11,
  SDEID_ERR_INTERNAL = 12,
} sdeid_status;

typedef struct sdeid_config sdeid_config;
typedef struct sdeid_report sdeid_report;

const char* sdeid_version(void);

/* Message for the last failing call on this thread ("" if none). */
const char* sdeid_last_error(void);

sdeid_config* sdeid_config_new(void);
void sdeid_config_free(sdeid_config* config);

/* Flat key = value file; see the config key list in the README. */
sdeid_status sdeid_config_load_file(sdeid_config* config, const char* path);
sdeid_status sdeid_config_set(sdeid_config* config, const char* key,
                              const char* value);
sdeid_status sdeid_config_get(const sdeid_config* config, const char* key,
                              char* buffer, size_t buffer_size);

/* Run the configured pipeline (mode simulate | identify | full). The report
 * handle is set on success and must be freed by the caller. */
sdeid_status sdeid_run(const sdeid_config* config, sdeid_report** report);

/* Emit the four plot-ready CSV panels from a completed run's artifacts. */
sdeid_status sdeid_plot_data(const sdeid_config* config);

void sdeid_report_free(sdeid_report* report);

/* 1 when the run produced identified models (identify/full mode). */
int sdeid_report_has_models(const sdeid_report* report);
double sdeid_report_mse(const sdeid_report* report);
double sdeid_report_alpha(const sdeid_report* report);
double sdeid_report_rho(const sdeid_report* report);

/* JSON of the recovered model; which = 0 for mu, 1 for sigma. The returned
 * string lives as long as the report. */
const char* sdeid_report_model_json(const sdeid_report* report, int which);
/* Human-readable model, e.g. "0.5*x". */
const char* sdeid_report_model_text(const sdeid_report* report, int which);
/* Full report JSON (models, selection, manifest). */
const char* sdeid_report_json(const sdeid_report* report);

size_t sdeid_report_manifest_size(const sdeid_report* report);
const char* sdeid_report_manifest_entry(const sdeid_report* report,
                                        size_t index);

size_t sdeid_report_stage_count(const sdeid_report* report);
const char* sdeid_report_stage_name(const sdeid_report* report, size_t index);
double sdeid_report_stage_seconds(const sdeid_report* report, size_t index);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SDEID_H */
