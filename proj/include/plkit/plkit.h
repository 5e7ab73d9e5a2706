/* SPDX-License-Identifier: Apache-2.0
 *
 * plkit - path loss modelling, fitting and validation toolkit
 * Copyright (C) 2026 The plkit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of libplkit.
 *
 * Every function that can fail returns a plkit_status. On failure the
 * message is available from plkit_last_error() until the next call on the
 * same thread. Objects behind opaque pointers are created by *_create /
 * *_load / producing functions and released with the matching *_free.
 * Borrowed pointers (strings, partition groups) stay valid until their
 * owner is freed.
 */

#ifndef PLKIT_H
#define PLKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(PLKIT_BUILDING_LIBRARY)
#define PLKIT_API __attribute__((visibility("default")))
#else
#define PLKIT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum plkit_status
{
    PLKIT_OK = 0,
    PLKIT_E_INVALID_ARGUMENT = 1,
    PLKIT_E_DOMAIN = 2,
    PLKIT_E_RANK_DEFICIENT = 3,
    PLKIT_E_EMPTY_INPUT = 4,
    PLKIT_E_FORMAT = 5,
    PLKIT_E_CONFIG = 6,
    PLKIT_E_IO = 7,
    PLKIT_E_INTERNAL = 99
} plkit_status;

typedef enum plkit_condition
{
    PLKIT_LOS = 0,
    PLKIT_NLOS = 1
} plkit_condition;

typedef enum plkit_nlos_option
{
    PLKIT_OPTION1 = 1,
    PLKIT_OPTION2 = 2
} plkit_nlos_option;

typedef enum plkit_domain_mode
{
    PLKIT_STRICT = 0,
    PLKIT_PERMISSIVE = 1
} plkit_domain_mode;

typedef struct plkit_fi_params
{
    double intercept_db;
    double distance_exponent;
    double sigma_sf_db;
} plkit_fi_params;

typedef struct plkit_abg_params
{
    double distance_exponent;
    double offset_db;
    double frequency_exponent;
    double sigma_sf_db;
} plkit_abg_params;

typedef struct plkit_ci_params
{
    double path_loss_exponent;
    double reference_distance_m; /* must be 1.0 */
    double sigma_sf_db;
} plkit_ci_params;

typedef struct plkit_fit_diagnostics
{
    size_t n_samples;
    double sse_db2;
    int rank_ok;
    size_t unit_distance_samples;
    char warning[256]; /* empty when there is nothing to report */
} plkit_fit_diagnostics;

typedef struct plkit_sample
{
    double frequency_ghz;
    double distance_m;
    double path_loss_db;
    plkit_condition condition;
} plkit_sample;

typedef enum plkit_spacing
{
    PLKIT_SPACING_LOG = 0,
    PLKIT_SPACING_LINEAR = 1
} plkit_spacing;

typedef struct plkit_grid
{
    double d_min_m;
    double d_max_m;
    size_t count;
    plkit_spacing spacing;
} plkit_grid;

typedef enum plkit_model_kind
{
    PLKIT_MODEL_FI = 0,
    PLKIT_MODEL_ABG = 1,
    PLKIT_MODEL_CI = 2,
    PLKIT_MODEL_3GPP_INH = 3
} plkit_model_kind;

/* Tagged model description; only the member selected by `kind` is read. */
typedef struct plkit_model
{
    plkit_model_kind kind;
    plkit_fi_params fi;
    plkit_abg_params abg;
    plkit_ci_params ci;
    plkit_condition condition;     /* 3GPP only */
    plkit_nlos_option nlos_option; /* 3GPP NLOS only */
    int apply_los_floor;           /* 3GPP NLOS only */
} plkit_model;

typedef struct plkit_synth_config
{
    plkit_model model;
    double frequency_ghz;
    const double* frequencies_ghz; /* overrides frequency_ghz when n_frequencies > 0 */
    size_t n_frequencies;
    plkit_grid grid;
    int shadow_fading; /* 0: noiseless */
    double sigma_db;
    uint64_t seed;
    size_t replicates_per_distance;
    plkit_condition label; /* condition written for FI/ABG/CI sources */
    plkit_domain_mode domain_mode;
} plkit_synth_config;

typedef enum plkit_threegpp_source
{
    PLKIT_FIT_OF_SYNTHETIC = 0,
    PLKIT_DIRECT_COEFFICIENT_READ = 1
} plkit_threegpp_source;

typedef struct plkit_synth_policy
{
    plkit_threegpp_source source;
    plkit_grid los_grid;
    plkit_grid nlos_grid;
    int apply_los_floor;
    int shadow_fading;
    uint64_t seed;
    size_t replicates_per_distance;
} plkit_synth_policy;

typedef enum plkit_format
{
    PLKIT_FORMAT_JSON = 0,
    PLKIT_FORMAT_CSV = 1,
    PLKIT_FORMAT_MARKDOWN = 2
} plkit_format;

typedef struct plkit_buffer plkit_buffer;
typedef struct plkit_sample_set plkit_sample_set;
typedef struct plkit_partition plkit_partition;
typedef struct plkit_report plkit_report;
typedef struct plkit_plot_bundle plkit_plot_bundle;

/* ---- library ---- */

PLKIT_API const char* plkit_version(void);
PLKIT_API const char* plkit_last_error(void);
/* Domain warnings from the last permissive evaluation on this thread, '\n' separated. */
PLKIT_API const char* plkit_last_warning(void);
PLKIT_API const char* plkit_status_string(plkit_status status);
PLKIT_API const char* plkit_normal_generator(void);

PLKIT_API const char* plkit_buffer_data(const plkit_buffer* buffer);
PLKIT_API size_t plkit_buffer_size(const plkit_buffer* buffer);
PLKIT_API void plkit_buffer_free(plkit_buffer* buffer);

/* Half-away-from-zero decimal rounding as used by the report tables. */
PLKIT_API plkit_status plkit_format_rounded(double value, int decimals, char* out, size_t out_size);

/* ---- evaluators (mean path loss in dB) ---- */

PLKIT_API plkit_status plkit_eval_fspl_1m(double frequency_ghz, double* out_db);
PLKIT_API plkit_status plkit_eval_fi(const plkit_fi_params* params, double distance_m, double* out_db);
PLKIT_API plkit_status plkit_eval_abg(const plkit_abg_params* params, double distance_m, double frequency_ghz,
                                      double* out_db);
PLKIT_API plkit_status plkit_eval_ci(const plkit_ci_params* params, double distance_m, double frequency_ghz,
                                     double* out_db);
/* out_of_domain may be NULL; set to 1 when a permissive evaluation left the validity range. */
PLKIT_API plkit_status plkit_eval_3gpp_inh_los(double distance_m, double frequency_ghz, plkit_domain_mode mode,
                                               double* out_db, int* out_of_domain);
PLKIT_API plkit_status plkit_eval_3gpp_inh_nlos(double distance_m, double frequency_ghz, plkit_nlos_option option,
                                                int apply_los_floor, plkit_domain_mode mode, double* out_db,
                                                int* out_of_domain);
PLKIT_API plkit_status plkit_eval_model(const plkit_model* model, double distance_m, double frequency_ghz,
                                        plkit_domain_mode mode, double* out_db);

/* ---- sample sets ---- */

PLKIT_API plkit_status plkit_sample_set_create(plkit_sample_set** out);
/* column_map_path may be NULL; it names a "source,target" rename table. */
PLKIT_API plkit_status plkit_sample_set_load_csv(const char* path, const char* column_map_path,
                                                 plkit_sample_set** out);
PLKIT_API plkit_status plkit_sample_set_parse_csv(const char* text, size_t length, plkit_sample_set** out);
PLKIT_API void plkit_sample_set_free(plkit_sample_set* set);
PLKIT_API size_t plkit_sample_set_size(const plkit_sample_set* set);
PLKIT_API plkit_status plkit_sample_set_get(const plkit_sample_set* set, size_t index, plkit_sample* out);
PLKIT_API plkit_status plkit_sample_set_add(plkit_sample_set* set, const plkit_sample* sample);
PLKIT_API size_t plkit_sample_set_rejected_count(const plkit_sample_set* set);
PLKIT_API plkit_status plkit_sample_set_rejected(const plkit_sample_set* set, size_t index, size_t* line,
                                                 const char** reason);
PLKIT_API plkit_status plkit_sample_set_to_csv(const plkit_sample_set* set, plkit_buffer** out);

/* band may be NULL, "7-24", "0.5-100" or a comma-separated frequency list. */
PLKIT_API plkit_status plkit_partition_create(const plkit_sample_set* set, int by_condition, int by_frequency,
                                              const char* band, plkit_partition** out);
PLKIT_API size_t plkit_partition_count(const plkit_partition* partition);
PLKIT_API const char* plkit_partition_label(const plkit_partition* partition, size_t index);
PLKIT_API const plkit_sample_set* plkit_partition_group(const plkit_partition* partition, size_t index);
PLKIT_API size_t plkit_partition_warning_count(const plkit_partition* partition);
PLKIT_API const char* plkit_partition_warning(const plkit_partition* partition, size_t index);
PLKIT_API void plkit_partition_free(plkit_partition* partition);

/* ---- fitting ---- */

PLKIT_API plkit_status plkit_fit_fi(const plkit_sample_set* set, plkit_fi_params* out,
                                    plkit_fit_diagnostics* diagnostics);
PLKIT_API plkit_status plkit_fit_abg(const plkit_sample_set* set, plkit_abg_params* out,
                                     plkit_fit_diagnostics* diagnostics);
PLKIT_API plkit_status plkit_fit_ci(const plkit_sample_set* set, plkit_ci_params* out,
                                    plkit_fit_diagnostics* diagnostics);

/* ---- synthesis ---- */

/* "log:1:100:100" style grid strings. */
PLKIT_API plkit_status plkit_grid_parse(const char* text, plkit_grid* out);
PLKIT_API void plkit_synth_config_init(plkit_synth_config* config);
PLKIT_API plkit_status plkit_synth_generate(const plkit_synth_config* config, plkit_sample_set** out);
/* CSV text with a metadata comment line; extra_comments may be NULL. */
PLKIT_API plkit_status plkit_synth_csv(const plkit_synth_config* config, const char* const* extra_comments,
                                       size_t n_extra_comments, plkit_buffer** out);

/* ---- validation reports ---- */

PLKIT_API void plkit_synth_policy_init(plkit_synth_policy* policy);
/* band may be NULL (all frequencies). */
PLKIT_API plkit_status plkit_validate_fi(const plkit_sample_set* measured, const char* band,
                                         const plkit_synth_policy* policy, plkit_report** out);
PLKIT_API plkit_status plkit_validate_abg(const plkit_sample_set* measured, const char* band,
                                          const plkit_synth_policy* policy, plkit_report** out);
PLKIT_API size_t plkit_report_row_count(const plkit_report* report);
PLKIT_API plkit_status plkit_report_render(const plkit_report* report, plkit_format format, plkit_buffer** out);
PLKIT_API void plkit_report_free(plkit_report* report);

/* ---- plot series ---- */

PLKIT_API plkit_status plkit_plot_data(const plkit_sample_set* measured, const char* const* model_specs,
                                       size_t n_models, const plkit_grid* grid, plkit_domain_mode mode,
                                       plkit_plot_bundle** out);
PLKIT_API size_t plkit_plot_series_count(const plkit_plot_bundle* bundle);
PLKIT_API const char* plkit_plot_series_name(const plkit_plot_bundle* bundle, size_t index);
PLKIT_API size_t plkit_plot_series_size(const plkit_plot_bundle* bundle, size_t index);
PLKIT_API plkit_status plkit_plot_series_csv(const plkit_plot_bundle* bundle, size_t index, plkit_buffer** out);
PLKIT_API plkit_status plkit_plot_bundle_json(const plkit_plot_bundle* bundle, plkit_buffer** out);
PLKIT_API void plkit_plot_bundle_free(plkit_plot_bundle* bundle);

#ifdef __cplusplus
}
#endif

#endif
