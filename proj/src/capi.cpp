// SPDX-License-Identifier: Apache-2.0
//
// plkit - path loss modelling, fitting and validation toolkit
// Copyright (C) 2026 The plkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "plkit/plkit.h"

#include "plkit/error.hpp"
#include "plkit/estimators.hpp"
#include "plkit/measurements.hpp"
#include "plkit/models.hpp"
#include "plkit/numfmt.hpp"
#include "plkit/report.hpp"
#include "plkit/synthgen.hpp"

#include <cstring>
#include <functional>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

struct plkit_buffer
{
    std::string text;
};

struct plkit_sample_set
{
    plkit::SampleSet set;
};

struct plkit_partition
{
    std::vector<std::string> labels;
    std::vector<plkit_sample_set> groups;
    std::vector<std::string> warnings;
};

struct plkit_report
{
    plkit::Report report;
};

struct plkit_plot_bundle
{
    plkit::PlotBundle bundle;
};

namespace
{

thread_local std::string g_last_error;
thread_local std::string g_last_warning;

template <class F>
plkit_status guarded(F&& body) noexcept
{
    g_last_error.clear();
    try
    {
        body();
        return PLKIT_OK;
    }
    catch (const plkit::Error& e)
    {
        g_last_error = e.what();
        return static_cast<plkit_status>(e.code());
    }
    catch (const std::bad_alloc&)
    {
        g_last_error = "out of memory";
    }
    catch (const std::exception& e)
    {
        g_last_error = e.what();
    }
    catch (...)
    {
        g_last_error = "unknown exception";
    }
    return PLKIT_E_INTERNAL;
}

template <class T>
void require(const T* ptr, const char* name)
{
    if (!ptr)
        throw plkit::Error(plkit::ErrorCode::InvalidArgument, std::string(name) + " is NULL");
}

plkit::Condition to_cpp(plkit_condition c)
{
    return c == PLKIT_NLOS ? plkit::Condition::Nlos : plkit::Condition::Los;
}

plkit_condition to_c(plkit::Condition c)
{
    return c == plkit::Condition::Nlos ? PLKIT_NLOS : PLKIT_LOS;
}

plkit::NlosOption to_cpp(plkit_nlos_option o)
{
    if (o != PLKIT_OPTION1 && o != PLKIT_OPTION2)
        throw plkit::Error(plkit::ErrorCode::InvalidArgument, "NLOS option must be 1 or 2");
    return o == PLKIT_OPTION2 ? plkit::NlosOption::Option2 : plkit::NlosOption::Option1;
}

plkit::DomainMode to_cpp(plkit_domain_mode m)
{
    return m == PLKIT_PERMISSIVE ? plkit::DomainMode::Permissive : plkit::DomainMode::Strict;
}

plkit::FIParams to_cpp(const plkit_fi_params& p)
{
    return {p.intercept_db, p.distance_exponent, p.sigma_sf_db};
}

plkit::ABGParams to_cpp(const plkit_abg_params& p)
{
    return {p.distance_exponent, p.offset_db, p.frequency_exponent, p.sigma_sf_db};
}

plkit::CIParams to_cpp(const plkit_ci_params& p)
{
    return {p.path_loss_exponent, p.reference_distance_m, p.sigma_sf_db};
}

plkit::DistanceGrid to_cpp(const plkit_grid& g)
{
    return {g.d_min_m, g.d_max_m, g.count, g.spacing == PLKIT_SPACING_LINEAR ? plkit::Spacing::Linear : plkit::Spacing::Log};
}

plkit_grid to_c(const plkit::DistanceGrid& g)
{
    return {g.d_min_m, g.d_max_m, g.count, g.spacing == plkit::Spacing::Linear ? PLKIT_SPACING_LINEAR : PLKIT_SPACING_LOG};
}

plkit::ModelSpec to_cpp(const plkit_model& m)
{
    switch (m.kind)
    {
    case PLKIT_MODEL_FI:
        return to_cpp(m.fi);
    case PLKIT_MODEL_ABG:
        return to_cpp(m.abg);
    case PLKIT_MODEL_CI:
        return to_cpp(m.ci);
    case PLKIT_MODEL_3GPP_INH:
        return plkit::ThreeGppInhSpec{to_cpp(m.condition),
                                      m.condition == PLKIT_NLOS ? to_cpp(m.nlos_option) : plkit::NlosOption::Option1,
                                      m.apply_los_floor != 0};
    }
    throw plkit::Error(plkit::ErrorCode::InvalidArgument, "unknown model kind");
}

plkit::SynthConfig to_cpp(const plkit_synth_config& c)
{
    plkit::SynthConfig config;
    config.model = to_cpp(c.model);
    config.frequency_ghz = c.frequency_ghz;
    if (c.n_frequencies > 0)
    {
        require(c.frequencies_ghz, "frequencies_ghz");
        config.frequencies_ghz.assign(c.frequencies_ghz, c.frequencies_ghz + c.n_frequencies);
    }
    config.grid = to_cpp(c.grid);
    if (c.shadow_fading)
        config.shadow_fading_sigma_db = c.sigma_db;
    config.seed = c.seed;
    config.replicates_per_distance = c.replicates_per_distance;
    config.label = to_cpp(c.label);
    config.domain_mode = to_cpp(c.domain_mode);
    return config;
}

plkit::SynthPolicy to_cpp(const plkit_synth_policy& p)
{
    plkit::SynthPolicy policy;
    policy.source = p.source == PLKIT_DIRECT_COEFFICIENT_READ ? plkit::ThreeGppSource::DirectCoefficientRead
                                                             : plkit::ThreeGppSource::FitOfSynthetic;
    policy.los_grid = to_cpp(p.los_grid);
    policy.nlos_grid = to_cpp(p.nlos_grid);
    policy.apply_los_floor = p.apply_los_floor != 0;
    policy.shadow_fading = p.shadow_fading != 0;
    policy.seed = p.seed;
    policy.replicates_per_distance = p.replicates_per_distance;
    return policy;
}

void fill(plkit_fit_diagnostics* out, const plkit::FitDiagnostics& d)
{
    if (!out)
        return;
    out->n_samples = d.n_samples;
    out->sse_db2 = d.sse_db2;
    out->rank_ok = d.rank_ok ? 1 : 0;
    out->unit_distance_samples = d.unit_distance_samples;
    std::memset(out->warning, 0, sizeof(out->warning));
    if (d.condition_warning)
        std::strncpy(out->warning, d.condition_warning->c_str(), sizeof(out->warning) - 1);
}

plkit_buffer* make_buffer(std::string text)
{
    return new plkit_buffer{std::move(text)};
}

double eval_with_warnings(const std::function<double(std::vector<std::string>*)>& eval, int* out_of_domain)
{
    std::vector<std::string> warnings;
    const double value = eval(&warnings);
    g_last_warning.clear();
    for (const auto& w : warnings)
        g_last_warning += (g_last_warning.empty() ? "" : "\n") + w;
    if (out_of_domain)
        *out_of_domain = warnings.empty() ? 0 : 1;
    return value;
}

} // namespace

extern "C" {

const char* plkit_version(void)
{
    return "0.1.0";
}

const char* plkit_last_error(void)
{
    return g_last_error.c_str();
}

const char* plkit_last_warning(void)
{
    return g_last_warning.c_str();
}

const char* plkit_status_string(plkit_status status)
{
    if (status == PLKIT_OK)
        return "ok";
    if (status == PLKIT_E_INTERNAL)
        return "internal error";
    return plkit::to_string(static_cast<plkit::ErrorCode>(status));
}

const char* plkit_normal_generator(void)
{
    return plkit::kNormalGenerator.data();
}

const char* plkit_buffer_data(const plkit_buffer* buffer)
{
    return buffer ? buffer->text.c_str() : "";
}

size_t plkit_buffer_size(const plkit_buffer* buffer)
{
    return buffer ? buffer->text.size() : 0;
}

void plkit_buffer_free(plkit_buffer* buffer)
{
    delete buffer;
}

plkit_status plkit_format_rounded(double value, int decimals, char* out, size_t out_size)
{
    return guarded([&] {
        require(out, "out");
        const std::string text = plkit::round_half_away(value, decimals);
        if (text.size() + 1 > out_size)
            throw plkit::Error(plkit::ErrorCode::InvalidArgument, "output buffer too small");
        std::memcpy(out, text.c_str(), text.size() + 1);
    });
}

plkit_status plkit_eval_fspl_1m(double frequency_ghz, double* out_db)
{
    return guarded([&] {
        require(out_db, "out_db");
        *out_db = plkit::eval_fspl_1m(frequency_ghz);
    });
}

plkit_status plkit_eval_fi(const plkit_fi_params* params, double distance_m, double* out_db)
{
    return guarded([&] {
        require(params, "params");
        require(out_db, "out_db");
        *out_db = plkit::eval_fi(to_cpp(*params), distance_m);
    });
}

plkit_status plkit_eval_abg(const plkit_abg_params* params, double distance_m, double frequency_ghz, double* out_db)
{
    return guarded([&] {
        require(params, "params");
        require(out_db, "out_db");
        *out_db = plkit::eval_abg(to_cpp(*params), distance_m, frequency_ghz);
    });
}

plkit_status plkit_eval_ci(const plkit_ci_params* params, double distance_m, double frequency_ghz, double* out_db)
{
    return guarded([&] {
        require(params, "params");
        require(out_db, "out_db");
        *out_db = plkit::eval_ci(to_cpp(*params), distance_m, frequency_ghz);
    });
}

plkit_status plkit_eval_3gpp_inh_los(double distance_m, double frequency_ghz, plkit_domain_mode mode, double* out_db,
                                     int* out_of_domain)
{
    return guarded([&] {
        require(out_db, "out_db");
        *out_db = eval_with_warnings(
            [&](std::vector<std::string>* w) {
                return plkit::eval_3gpp_inh_los(distance_m, frequency_ghz, to_cpp(mode), w);
            },
            out_of_domain);
    });
}

plkit_status plkit_eval_3gpp_inh_nlos(double distance_m, double frequency_ghz, plkit_nlos_option option,
                                      int apply_los_floor, plkit_domain_mode mode, double* out_db, int* out_of_domain)
{
    return guarded([&] {
        require(out_db, "out_db");
        const auto opt = to_cpp(option);
        *out_db = eval_with_warnings(
            [&](std::vector<std::string>* w) {
                return plkit::eval_3gpp_inh_nlos(distance_m, frequency_ghz, opt, apply_los_floor != 0, to_cpp(mode), w);
            },
            out_of_domain);
    });
}

plkit_status plkit_eval_model(const plkit_model* model, double distance_m, double frequency_ghz,
                              plkit_domain_mode mode, double* out_db)
{
    return guarded([&] {
        require(model, "model");
        require(out_db, "out_db");
        const auto spec = to_cpp(*model);
        *out_db = eval_with_warnings(
            [&](std::vector<std::string>* w) { return plkit::evaluate(spec, distance_m, frequency_ghz, to_cpp(mode), w); },
            nullptr);
    });
}

plkit_status plkit_sample_set_create(plkit_sample_set** out)
{
    return guarded([&] {
        require(out, "out");
        *out = new plkit_sample_set{};
    });
}

plkit_status plkit_sample_set_load_csv(const char* path, const char* column_map_path, plkit_sample_set** out)
{
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        plkit::ColumnMap columns;
        if (column_map_path)
            columns = plkit::load_column_map_file(column_map_path);
        *out = new plkit_sample_set{plkit::load_csv_file(path, columns)};
    });
}

plkit_status plkit_sample_set_parse_csv(const char* text, size_t length, plkit_sample_set** out)
{
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        std::istringstream in(std::string(text, length));
        *out = new plkit_sample_set{plkit::load_csv(in, "memory")};
    });
}

void plkit_sample_set_free(plkit_sample_set* set)
{
    delete set;
}

size_t plkit_sample_set_size(const plkit_sample_set* set)
{
    return set ? set->set.samples.size() : 0;
}

plkit_status plkit_sample_set_get(const plkit_sample_set* set, size_t index, plkit_sample* out)
{
    return guarded([&] {
        require(set, "set");
        require(out, "out");
        if (index >= set->set.samples.size())
            throw plkit::Error(plkit::ErrorCode::InvalidArgument, "sample index out of range");
        const auto& s = set->set.samples[index];
        *out = {s.frequency_ghz, s.distance_m, s.path_loss_db, to_c(s.condition)};
    });
}

plkit_status plkit_sample_set_add(plkit_sample_set* set, const plkit_sample* sample)
{
    return guarded([&] {
        require(set, "set");
        require(sample, "sample");
        plkit::PathLossSample s{sample->frequency_ghz, sample->distance_m, sample->path_loss_db,
                                to_cpp(sample->condition), {}};
        plkit::validate(s);
        set->set.samples.push_back(std::move(s));
    });
}

size_t plkit_sample_set_rejected_count(const plkit_sample_set* set)
{
    return set ? set->set.diagnostics.size() : 0;
}

plkit_status plkit_sample_set_rejected(const plkit_sample_set* set, size_t index, size_t* line, const char** reason)
{
    return guarded([&] {
        require(set, "set");
        if (index >= set->set.diagnostics.size())
            throw plkit::Error(plkit::ErrorCode::InvalidArgument, "diagnostic index out of range");
        if (line)
            *line = set->set.diagnostics[index].line;
        if (reason)
            *reason = set->set.diagnostics[index].reason.c_str();
    });
}

plkit_status plkit_sample_set_to_csv(const plkit_sample_set* set, plkit_buffer** out)
{
    return guarded([&] {
        require(set, "set");
        require(out, "out");
        std::ostringstream text;
        plkit::write_csv(text, set->set.samples);
        *out = make_buffer(text.str());
    });
}

plkit_status plkit_partition_create(const plkit_sample_set* set, int by_condition, int by_frequency, const char* band,
                                    plkit_partition** out)
{
    return guarded([&] {
        require(set, "set");
        require(out, "out");
        std::optional<plkit::BandSet> band_set;
        if (band)
            band_set = plkit::parse_band(band);
        auto parts = plkit::partition(set->set, by_condition != 0, by_frequency != 0, band_set);

        auto result = std::make_unique<plkit_partition>();
        for (auto& [key, samples] : parts.groups)
        {
            result->labels.push_back(key.label());
            plkit_sample_set group;
            group.set.samples = std::move(samples);
            group.set.provenance = set->set.provenance;
            result->groups.push_back(std::move(group));
        }
        result->warnings = std::move(parts.warnings);
        *out = result.release();
    });
}

size_t plkit_partition_count(const plkit_partition* partition)
{
    return partition ? partition->groups.size() : 0;
}

const char* plkit_partition_label(const plkit_partition* partition, size_t index)
{
    if (!partition || index >= partition->labels.size())
        return nullptr;
    return partition->labels[index].c_str();
}

const plkit_sample_set* plkit_partition_group(const plkit_partition* partition, size_t index)
{
    if (!partition || index >= partition->groups.size())
        return nullptr;
    return &partition->groups[index];
}

size_t plkit_partition_warning_count(const plkit_partition* partition)
{
    return partition ? partition->warnings.size() : 0;
}

const char* plkit_partition_warning(const plkit_partition* partition, size_t index)
{
    if (!partition || index >= partition->warnings.size())
        return nullptr;
    return partition->warnings[index].c_str();
}

void plkit_partition_free(plkit_partition* partition)
{
    delete partition;
}

plkit_status plkit_fit_fi(const plkit_sample_set* set, plkit_fi_params* out, plkit_fit_diagnostics* diagnostics)
{
    return guarded([&] {
        require(set, "set");
        require(out, "out");
        const auto fit = plkit::fit_fi(set->set.samples);
        *out = {fit.params.intercept_db, fit.params.distance_exponent, fit.params.sigma_sf_db};
        fill(diagnostics, fit.diagnostics);
    });
}

plkit_status plkit_fit_abg(const plkit_sample_set* set, plkit_abg_params* out, plkit_fit_diagnostics* diagnostics)
{
    return guarded([&] {
        require(set, "set");
        require(out, "out");
        const auto fit = plkit::fit_abg(set->set.samples);
        *out = {fit.params.distance_exponent, fit.params.offset_db, fit.params.frequency_exponent,
                fit.params.sigma_sf_db};
        fill(diagnostics, fit.diagnostics);
    });
}

plkit_status plkit_fit_ci(const plkit_sample_set* set, plkit_ci_params* out, plkit_fit_diagnostics* diagnostics)
{
    return guarded([&] {
        require(set, "set");
        require(out, "out");
        const auto fit = plkit::fit_ci(set->set.samples);
        *out = {fit.params.path_loss_exponent, fit.params.reference_distance_m, fit.params.sigma_sf_db};
        fill(diagnostics, fit.diagnostics);
    });
}

plkit_status plkit_grid_parse(const char* text, plkit_grid* out)
{
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = to_c(plkit::parse_grid(text));
    });
}

void plkit_synth_config_init(plkit_synth_config* config)
{
    if (!config)
        return;
    *config = {};
    config->model.kind = PLKIT_MODEL_3GPP_INH;
    config->model.condition = PLKIT_LOS;
    config->model.nlos_option = PLKIT_OPTION1;
    config->model.apply_los_floor = 1;
    config->model.ci.path_loss_exponent = 2.0;
    config->model.ci.reference_distance_m = 1.0;
    config->frequency_ghz = 6.75;
    config->grid = to_c(plkit::DistanceGrid{});
    config->replicates_per_distance = 1;
    config->label = PLKIT_LOS;
    config->domain_mode = PLKIT_STRICT;
}

plkit_status plkit_synth_generate(const plkit_synth_config* config, plkit_sample_set** out)
{
    return guarded([&] {
        require(config, "config");
        require(out, "out");
        auto set = std::make_unique<plkit_sample_set>();
        const auto cpp = to_cpp(*config);
        set->set.samples = plkit::generate_samples(cpp);
        set->set.provenance = "synthetic " + plkit::synth_metadata(cpp);
        *out = set.release();
    });
}

plkit_status plkit_synth_csv(const plkit_synth_config* config, const char* const* extra_comments,
                             size_t n_extra_comments, plkit_buffer** out)
{
    return guarded([&] {
        require(config, "config");
        require(out, "out");
        const auto cpp = to_cpp(*config);
        const auto samples = plkit::generate_samples(cpp);

        std::vector<std::string> comments;
        for (size_t i = 0; i < n_extra_comments; ++i)
        {
            require(extra_comments, "extra_comments");
            if (extra_comments[i])
                comments.emplace_back(extra_comments[i]);
        }
        comments.push_back("synth " + plkit::synth_metadata(cpp));

        std::ostringstream text;
        plkit::write_csv(text, samples, comments);
        *out = make_buffer(text.str());
    });
}

void plkit_synth_policy_init(plkit_synth_policy* policy)
{
    if (!policy)
        return;
    const plkit::SynthPolicy defaults;
    *policy = {};
    policy->source = PLKIT_FIT_OF_SYNTHETIC;
    policy->los_grid = to_c(defaults.los_grid);
    policy->nlos_grid = to_c(defaults.nlos_grid);
    policy->apply_los_floor = defaults.apply_los_floor ? 1 : 0;
    policy->shadow_fading = 0;
    policy->seed = defaults.seed;
    policy->replicates_per_distance = defaults.replicates_per_distance;
}

plkit_status plkit_validate_fi(const plkit_sample_set* measured, const char* band, const plkit_synth_policy* policy,
                               plkit_report** out)
{
    return guarded([&] {
        require(measured, "measured");
        require(policy, "policy");
        require(out, "out");
        plkit::SampleSet filtered;
        const plkit::SampleSet* input = &measured->set;
        std::vector<std::string> warnings;
        if (band)
        {
            auto parts = plkit::partition(measured->set, false, false, plkit::parse_band(band));
            filtered.provenance = measured->set.provenance;
            for (auto& [key, samples] : parts.groups)
                filtered.samples = std::move(samples);
            warnings = std::move(parts.warnings);
            input = &filtered;
        }
        auto report = plkit::fi_validation(*input, to_cpp(*policy));
        report.warnings.insert(report.warnings.begin(), warnings.begin(), warnings.end());
        *out = new plkit_report{std::move(report)};
    });
}

plkit_status plkit_validate_abg(const plkit_sample_set* measured, const char* band, const plkit_synth_policy* policy,
                                plkit_report** out)
{
    return guarded([&] {
        require(measured, "measured");
        require(band, "band");
        require(policy, "policy");
        require(out, "out");
        const auto cpp_policy = to_cpp(*policy);
        *out = new plkit_report{plkit::abg_validation(measured->set, plkit::parse_band(band), cpp_policy.source, cpp_policy)};
    });
}

size_t plkit_report_row_count(const plkit_report* report)
{
    return report ? report->report.rows.size() : 0;
}

plkit_status plkit_report_render(const plkit_report* report, plkit_format format, plkit_buffer** out)
{
    return guarded([&] {
        require(report, "report");
        require(out, "out");
        plkit::ReportFormat f = plkit::ReportFormat::Json;
        if (format == PLKIT_FORMAT_CSV)
            f = plkit::ReportFormat::Csv;
        else if (format == PLKIT_FORMAT_MARKDOWN)
            f = plkit::ReportFormat::Markdown;
        *out = make_buffer(plkit::render_report(report->report, f));
    });
}

void plkit_report_free(plkit_report* report)
{
    delete report;
}

plkit_status plkit_plot_data(const plkit_sample_set* measured, const char* const* model_specs, size_t n_models,
                             const plkit_grid* grid, plkit_domain_mode mode, plkit_plot_bundle** out)
{
    return guarded([&] {
        require(measured, "measured");
        require(grid, "grid");
        require(out, "out");
        std::vector<plkit::NamedModel> models;
        for (size_t i = 0; i < n_models; ++i)
        {
            require(model_specs, "model_specs");
            require(model_specs[i], "model spec");
            models.push_back(plkit::parse_model_spec(model_specs[i], measured->set));
        }
        *out = new plkit_plot_bundle{plkit::emit_plot_data(measured->set, models, to_cpp(*grid), to_cpp(mode))};
    });
}

size_t plkit_plot_series_count(const plkit_plot_bundle* bundle)
{
    return bundle ? bundle->bundle.series.size() : 0;
}

const char* plkit_plot_series_name(const plkit_plot_bundle* bundle, size_t index)
{
    if (!bundle || index >= bundle->bundle.series.size())
        return nullptr;
    return bundle->bundle.series[index].name.c_str();
}

size_t plkit_plot_series_size(const plkit_plot_bundle* bundle, size_t index)
{
    if (!bundle || index >= bundle->bundle.series.size())
        return 0;
    return bundle->bundle.series[index].points.size();
}

plkit_status plkit_plot_series_csv(const plkit_plot_bundle* bundle, size_t index, plkit_buffer** out)
{
    return guarded([&] {
        require(bundle, "bundle");
        require(out, "out");
        if (index >= bundle->bundle.series.size())
            throw plkit::Error(plkit::ErrorCode::InvalidArgument, "series index out of range");
        *out = make_buffer(plkit::plot_series_csv(bundle->bundle.series[index]));
    });
}

plkit_status plkit_plot_bundle_json(const plkit_plot_bundle* bundle, plkit_buffer** out)
{
    return guarded([&] {
        require(bundle, "bundle");
        require(out, "out");
        *out = make_buffer(plkit::plot_bundle_json(bundle->bundle));
    });
}

void plkit_plot_bundle_free(plkit_plot_bundle* bundle)
{
    delete bundle;
}

} // extern "C"
