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

#include "plkit/report.hpp"
#include "plkit/error.hpp"
#include "plkit/numfmt.hpp"

#include <json.hpp>

#include <cmath>
#include <sstream>

namespace plkit
{

namespace
{

using json = nlohmann::ordered_json;

SynthConfig threegpp_config(Condition condition, NlosOption option, const SynthPolicy& policy)
{
    SynthConfig config;
    config.model = ThreeGppInhSpec{condition, option, policy.apply_los_floor};
    config.grid = condition == Condition::Los ? policy.los_grid : policy.nlos_grid;
    config.seed = policy.seed;
    config.replicates_per_distance = policy.replicates_per_distance;
    if (policy.shadow_fading)
        config.shadow_fading_sigma_db = threegpp_inh_nominal_sigma(condition, option);
    return config;
}

SigmaProvenance sigma_provenance(const SynthPolicy& policy)
{
    if (policy.source == ThreeGppSource::FitOfSynthetic && policy.shadow_fading)
        return SigmaProvenance::Fitted;
    return SigmaProvenance::Nominal;
}

ParamDeltas fi_deltas(const FIParams& measured, const FIParams& threegpp)
{
    ParamDeltas d;
    d.distance_exponent = std::fabs(measured.distance_exponent - threegpp.distance_exponent);
    d.sigma_sf_db = std::fabs(measured.sigma_sf_db - threegpp.sigma_sf_db);
    return d;
}

ParamDeltas abg_deltas(const ABGParams& measured, const ABGParams& threegpp)
{
    ParamDeltas d;
    d.distance_exponent = std::fabs(measured.distance_exponent - threegpp.distance_exponent);
    d.frequency_exponent = std::fabs(measured.frequency_exponent - threegpp.frequency_exponent);
    d.sigma_sf_db = std::fabs(measured.sigma_sf_db - threegpp.sigma_sf_db);
    return d;
}

std::string frequency_group(double f)
{
    return format_number(f) + " GHz";
}

// ---- rendering helpers ----

json params_json(const ModelParams& params)
{
    if (const auto* fi = std::get_if<FIParams>(&params))
    {
        return json{{"intercept_db", fi->intercept_db},
                    {"distance_exponent", fi->distance_exponent},
                    {"sigma_sf_db", fi->sigma_sf_db}};
    }
    const auto& abg = std::get<ABGParams>(params);
    return json{{"distance_exponent", abg.distance_exponent},
                {"offset_db", abg.offset_db},
                {"frequency_exponent", abg.frequency_exponent},
                {"sigma_sf_db", abg.sigma_sf_db}};
}

json deltas_json(const std::optional<ParamDeltas>& d)
{
    if (!d)
        return nullptr;
    json out{{"distance_exponent", d->distance_exponent}};
    if (d->frequency_exponent)
        out["frequency_exponent"] = *d->frequency_exponent;
    out["sigma_sf_db"] = d->sigma_sf_db;
    return out;
}

json row_json(const ComparisonRow& row)
{
    json out;
    out["group"] = row.group;
    out["frequency_ghz"] = row.frequency_ghz ? json(*row.frequency_ghz) : json(nullptr);
    out["condition"] = to_string(row.condition);
    out["measured"] = row.measured ? params_json(*row.measured) : json(nullptr);
    out["measured_samples"] = row.measured_samples;
    out["unfittable_reason"] = row.measured ? json(nullptr) : json(row.unfittable_reason);
    out["threegpp_option1"] = params_json(row.threegpp_option1);
    out["threegpp_option2"] = row.threegpp_option2 ? params_json(*row.threegpp_option2) : json(nullptr);
    out["deltas"] = json{{"option1", deltas_json(row.deltas_option1)}, {"option2", deltas_json(row.deltas_option2)}};
    out["provenance"] = json{{"measured", row.measured_source},
                             {"threegpp_source", to_string(row.threegpp_source)},
                             {"threegpp_sigma_sf", to_string(row.sigma_provenance)}};
    return out;
}

using Field = double (*)(const ModelParams&);

double fi_intercept(const ModelParams& p) { return std::get<FIParams>(p).intercept_db; }
double fi_exponent(const ModelParams& p) { return std::get<FIParams>(p).distance_exponent; }
double fi_sigma(const ModelParams& p) { return std::get<FIParams>(p).sigma_sf_db; }
double abg_alpha(const ModelParams& p) { return std::get<ABGParams>(p).distance_exponent; }
double abg_beta(const ModelParams& p) { return std::get<ABGParams>(p).offset_db; }
double abg_gamma(const ModelParams& p) { return std::get<ABGParams>(p).frequency_exponent; }
double abg_sigma(const ModelParams& p) { return std::get<ABGParams>(p).sigma_sf_db; }

std::string cell(double v)
{
    return round_half_away(v, 2);
}

std::string threegpp_cell(const ComparisonRow& row, Field field)
{
    std::string out = cell(field(row.threegpp_option1));
    if (row.threegpp_option2)
        out += "/" + cell(field(*row.threegpp_option2));
    return out;
}

std::string measured_cell(const ComparisonRow& row, Field field)
{
    return row.measured ? cell(field(*row.measured)) : "unfittable";
}

std::string delta_cell(const ComparisonRow& row, double ParamDeltas::*member)
{
    if (!row.deltas_option1)
        return "-";
    std::string out = cell((*row.deltas_option1).*member);
    if (row.deltas_option2)
        out += "/" + cell((*row.deltas_option2).*member);
    return out;
}

std::string gamma_delta_cell(const ComparisonRow& row)
{
    if (!row.deltas_option1 || !row.deltas_option1->frequency_exponent)
        return "-";
    std::string out = cell(*row.deltas_option1->frequency_exponent);
    if (row.deltas_option2 && row.deltas_option2->frequency_exponent)
        out += "/" + cell(*row.deltas_option2->frequency_exponent);
    return out;
}

std::vector<std::vector<std::string>> table_cells(const Report& report)
{
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : report.rows)
    {
        std::vector<std::string> cells{row.group, to_string(row.condition)};
        if (report.family == ModelFamily::FI)
        {
            for (Field f : {fi_intercept, fi_exponent, fi_sigma})
                cells.push_back(measured_cell(row, f));
            for (Field f : {fi_intercept, fi_exponent, fi_sigma})
                cells.push_back(threegpp_cell(row, f));
            cells.push_back(delta_cell(row, &ParamDeltas::distance_exponent));
            cells.push_back(delta_cell(row, &ParamDeltas::sigma_sf_db));
        }
        else
        {
            for (Field f : {abg_alpha, abg_beta, abg_gamma, abg_sigma})
                cells.push_back(measured_cell(row, f));
            for (Field f : {abg_alpha, abg_beta, abg_gamma, abg_sigma})
                cells.push_back(threegpp_cell(row, f));
            cells.push_back(delta_cell(row, &ParamDeltas::distance_exponent));
            cells.push_back(gamma_delta_cell(row));
            cells.push_back(delta_cell(row, &ParamDeltas::sigma_sf_db));
        }
        cells.push_back(to_string(row.threegpp_source));
        cells.push_back(to_string(row.sigma_provenance));
        rows.push_back(std::move(cells));
    }
    return rows;
}

std::vector<std::string> csv_header(ModelFamily family)
{
    if (family == ModelFamily::FI)
    {
        return {"frequency", "condition",
                "measured_intercept_db", "measured_distance_exponent", "measured_sigma_sf_db",
                "threegpp_intercept_db", "threegpp_distance_exponent", "threegpp_sigma_sf_db",
                "abs_delta_distance_exponent", "abs_delta_sigma_sf_db",
                "threegpp_source", "threegpp_sigma_provenance"};
    }
    return {"band", "condition",
            "measured_distance_exponent", "measured_offset_db", "measured_frequency_exponent", "measured_sigma_sf_db",
            "threegpp_distance_exponent", "threegpp_offset_db", "threegpp_frequency_exponent", "threegpp_sigma_sf_db",
            "abs_delta_distance_exponent", "abs_delta_frequency_exponent", "abs_delta_sigma_sf_db",
            "threegpp_source", "threegpp_sigma_provenance"};
}

std::vector<std::string> markdown_header(ModelFamily family)
{
    if (family == ModelFamily::FI)
    {
        return {"Frequency", "Env.", "Meas. intercept", "Meas. exponent", "Meas. σ_SF", "3GPP intercept",
                "3GPP exponent", "3GPP σ_SF", "\\|Δ exponent\\|", "\\|Δσ_SF\\|", "3GPP source", "3GPP σ_SF provenance"};
    }
    return {"Band", "Env.", "Meas. α", "Meas. β", "Meas. γ", "Meas. σ_SF", "3GPP α", "3GPP β", "3GPP γ",
            "3GPP σ_SF", "\\|Δα\\|", "\\|Δγ\\|", "\\|Δσ_SF\\|", "3GPP source", "3GPP σ_SF provenance"};
}

std::string join(const std::vector<std::string>& cells, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i)
        out += (i ? sep : "") + cells[i];
    return out;
}

// ---- model spec parsing ----

std::vector<std::string> split(std::string_view text, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true)
    {
        const auto pos = text.find(sep, start);
        out.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

double number_arg(const std::string& text, std::string_view spec)
{
    auto v = parse_number(text);
    if (!v)
        throw Error(ErrorCode::Config, "bad number '" + text + "' in model spec '" + std::string(spec) + "'");
    return *v;
}

std::vector<PathLossSample> select(const SampleSet& set, Condition condition, std::optional<double> frequency)
{
    std::vector<PathLossSample> out;
    for (const auto& s : set.samples)
    {
        if (s.condition != condition)
            continue;
        if (frequency && std::fabs(s.frequency_ghz - *frequency) > kFrequencyMatchGhz)
            continue;
        out.push_back(s);
    }
    return out;
}

} // namespace

FIParams threegpp_fi_side(Condition condition, NlosOption option, double frequency_ghz, const SynthPolicy& policy)
{
    if (policy.source == ThreeGppSource::DirectCoefficientRead)
        return threegpp_inh_fi_at(condition, option, frequency_ghz);

    SynthConfig config = threegpp_config(condition, option, policy);
    config.frequency_ghz = frequency_ghz;
    FIParams fitted = fit_fi(generate_samples(config)).params;
    if (!policy.shadow_fading)
        fitted.sigma_sf_db = threegpp_inh_nominal_sigma(condition, option);
    return fitted;
}

ABGParams threegpp_abg_side(Condition condition, NlosOption option, const BandSet& band, const SynthPolicy& policy)
{
    if (policy.source == ThreeGppSource::DirectCoefficientRead)
        return threegpp_inh_coefficients(condition, option);

    validate(band);
    SynthConfig config = threegpp_config(condition, option, policy);
    config.frequencies_ghz = band.member_frequencies_ghz;
    ABGParams fitted = fit_abg(generate_samples(config)).params;
    if (!policy.shadow_fading)
        fitted.sigma_sf_db = threegpp_inh_nominal_sigma(condition, option);
    return fitted;
}

ComparisonRow compare_fi(double frequency_ghz, Condition condition, const std::optional<FIParams>& measured,
                         const SynthPolicy& policy)
{
    ComparisonRow row;
    row.group = frequency_group(frequency_ghz);
    row.frequency_ghz = frequency_ghz;
    row.condition = condition;
    row.threegpp_source = policy.source;
    row.sigma_provenance = sigma_provenance(policy);
    if (measured)
        row.measured = *measured;

    const FIParams first = threegpp_fi_side(condition, NlosOption::Option1, frequency_ghz, policy);
    row.threegpp_option1 = first;
    if (measured)
        row.deltas_option1 = fi_deltas(*measured, first);
    if (condition == Condition::Nlos)
    {
        const FIParams second = threegpp_fi_side(condition, NlosOption::Option2, frequency_ghz, policy);
        row.threegpp_option2 = second;
        if (measured)
            row.deltas_option2 = fi_deltas(*measured, second);
    }
    return row;
}

ComparisonRow compare_abg(const BandSet& band, Condition condition, const ABGParams& measured, ThreeGppSource source,
                          const SynthPolicy& policy)
{
    SynthPolicy effective = policy;
    effective.source = source;

    ComparisonRow row;
    row.group = band.name;
    row.condition = condition;
    row.threegpp_source = source;
    row.sigma_provenance = sigma_provenance(effective);
    row.measured = measured;

    const ABGParams first = threegpp_abg_side(condition, NlosOption::Option1, band, effective);
    row.threegpp_option1 = first;
    row.deltas_option1 = abg_deltas(measured, first);
    if (condition == Condition::Nlos)
    {
        const ABGParams second = threegpp_abg_side(condition, NlosOption::Option2, band, effective);
        row.threegpp_option2 = second;
        row.deltas_option2 = abg_deltas(measured, second);
    }
    return row;
}

Report fi_validation(const SampleSet& measured, const SynthPolicy& policy)
{
    Report report;
    report.family = ModelFamily::FI;

    auto parts = partition(measured, true, true);
    report.warnings = parts.warnings;
    for (const auto& [key, samples] : parts.groups)
    {
        std::optional<FIParams> fitted;
        std::string reason;
        try
        {
            fitted = fit_fi(samples).params;
        }
        catch (const Error& e)
        {
            reason = e.what();
        }
        ComparisonRow row = compare_fi(*key.frequency_ghz, *key.condition, fitted, policy);
        row.measured_samples = samples.size();
        row.unfittable_reason = reason;
        report.rows.push_back(std::move(row));
    }
    return report;
}

Report abg_validation(const SampleSet& measured, const BandSet& band, ThreeGppSource source,
                      const SynthPolicy& policy)
{
    Report report;
    report.family = ModelFamily::ABG;

    auto parts = partition(measured, true, false, band);
    report.warnings = parts.warnings;
    for (const auto& [key, samples] : parts.groups)
    {
        FitResult<ABGParams> fitted;
        try
        {
            fitted = fit_abg(samples);
        }
        catch (const Error& e)
        {
            throw Error(e.code(), "band '" + band.name + "' " + to_string(*key.condition) + ": " + e.what());
        }
        ComparisonRow row = compare_abg(band, *key.condition, fitted.params, source, policy);
        row.measured_samples = samples.size();
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string render_report(const Report& report, ReportFormat format)
{
    if (format == ReportFormat::Json)
    {
        json doc;
        doc["model"] = report.family == ModelFamily::FI ? "fi" : "abg";
        doc["rows"] = json::array();
        for (const auto& row : report.rows)
            doc["rows"].push_back(row_json(row));
        doc["warnings"] = report.warnings;
        return doc.dump(2) + "\n";
    }

    const auto cells = table_cells(report);
    std::ostringstream out;
    if (format == ReportFormat::Csv)
    {
        out << join(csv_header(report.family), ",") << '\n';
        for (const auto& row : cells)
            out << join(row, ",") << '\n';
        return out.str();
    }

    const auto header = markdown_header(report.family);
    out << "| " << join(header, " | ") << " |\n";
    out << "|" << join(std::vector<std::string>(header.size(), "---"), "|") << "|\n";
    for (const auto& row : cells)
        out << "| " << join(row, " | ") << " |\n";
    return out.str();
}

ReportFormat parse_report_format(std::string_view text)
{
    if (text == "json")
        return ReportFormat::Json;
    if (text == "csv")
        return ReportFormat::Csv;
    if (text == "markdown" || text == "md")
        return ReportFormat::Markdown;
    throw Error(ErrorCode::Config, "format must be json, csv or markdown");
}

std::string to_string(ThreeGppSource source)
{
    return source == ThreeGppSource::FitOfSynthetic ? "fit_of_synthetic" : "direct_coefficient_read";
}

std::string to_string(SigmaProvenance provenance)
{
    return provenance == SigmaProvenance::Nominal ? "nominal" : "fitted";
}

PlotBundle emit_plot_data(const SampleSet& measured, std::span<const NamedModel> models, const DistanceGrid& grid,
                          DomainMode mode)
{
    const auto distances = make_grid(grid);
    PlotBundle bundle;

    for (Condition c : {Condition::Los, Condition::Nlos})
    {
        PlotSeries series;
        series.name = "measured_" + to_string(c);
        series.kind = SeriesKind::Scatter;
        series.description = "measured " + to_string(c) + " samples";
        for (const auto& s : measured.samples)
        {
            if (s.condition == c)
                series.points.push_back({s.distance_m, s.path_loss_db, s.frequency_ghz});
        }
        if (!series.points.empty())
            bundle.series.push_back(std::move(series));
    }

    for (const auto& m : models)
    {
        PlotSeries series;
        series.name = m.name;
        series.kind = SeriesKind::Line;
        series.description = describe(m.model);
        if (!std::holds_alternative<FIParams>(m.model) && !m.frequency_ghz)
            throw Error(ErrorCode::Config, "model '" + m.name + "' needs a frequency");
        const double f = m.frequency_ghz.value_or(0.0);
        for (double d : distances)
            series.points.push_back({d, evaluate(m.model, d, m.frequency_ghz ? f : 1.0, mode), f});
        bundle.series.push_back(std::move(series));
    }
    return bundle;
}

NamedModel parse_model_spec(std::string_view text, const SampleSet& measured)
{
    NamedModel out;
    std::string body(text);
    if (auto eq = body.find('='); eq != std::string::npos)
    {
        out.name = body.substr(0, eq);
        body = body.substr(eq + 1);
    }
    if (auto at = body.find('@'); at != std::string::npos)
    {
        out.frequency_ghz = number_arg(body.substr(at + 1), text);
        body = body.substr(0, at);
    }
    if (out.name.empty())
        out.name = std::string(text);

    const auto args = split(body, ':');
    const std::string& kind = args[0];
    auto need_args = [&](std::size_t lo, std::size_t hi) {
        if (args.size() - 1 < lo || args.size() - 1 > hi)
            throw Error(ErrorCode::Config, "wrong number of arguments in model spec '" + std::string(text) + "'");
    };
    auto need_frequency = [&] {
        if (!out.frequency_ghz)
            throw Error(ErrorCode::Config, "model spec '" + std::string(text) + "' needs @frequency");
    };

    if (kind == "3gpp-inh-los")
    {
        need_args(0, 0);
        need_frequency();
        out.model = ThreeGppInhSpec{Condition::Los, NlosOption::Option1, true};
    }
    else if (kind == "3gpp-inh-nlos")
    {
        need_args(1, 2);
        need_frequency();
        ThreeGppInhSpec spec{Condition::Nlos, NlosOption::Option1, true};
        if (args[1] == "2")
            spec.nlos_option = NlosOption::Option2;
        else if (args[1] != "1")
            throw Error(ErrorCode::Config, "NLOS option must be 1 or 2");
        if (args.size() == 3)
        {
            if (args[2] != "nofloor")
                throw Error(ErrorCode::Config, "unknown NLOS modifier '" + args[2] + "'");
            spec.apply_los_floor = false;
        }
        out.model = spec;
    }
    else if (kind == "fi")
    {
        need_args(2, 2);
        out.model = FIParams{number_arg(args[1], text), number_arg(args[2], text), 0.0};
    }
    else if (kind == "abg")
    {
        need_args(3, 3);
        need_frequency();
        out.model = ABGParams{number_arg(args[1], text), number_arg(args[2], text), number_arg(args[3], text), 0.0};
    }
    else if (kind == "ci")
    {
        need_args(1, 1);
        need_frequency();
        out.model = CIParams{number_arg(args[1], text), 1.0, 0.0};
    }
    else if (kind == "fit-fi" || kind == "fit-abg" || kind == "fit-ci")
    {
        need_args(1, 1);
        const Condition condition = parse_condition(args[1]);
        if (kind == "fit-fi")
        {
            out.model = fit_fi(select(measured, condition, out.frequency_ghz)).params;
        }
        else if (kind == "fit-abg")
        {
            need_frequency();
            out.model = fit_abg(select(measured, condition, std::nullopt)).params;
        }
        else
        {
            need_frequency();
            out.model = fit_ci(select(measured, condition, out.frequency_ghz)).params;
        }
    }
    else
    {
        throw Error(ErrorCode::Config, "unknown model kind '" + kind + "'");
    }
    return out;
}

std::string plot_bundle_json(const PlotBundle& bundle)
{
    json doc;
    doc["series"] = json::array();
    for (const auto& s : bundle.series)
    {
        json entry;
        entry["name"] = s.name;
        entry["kind"] = s.kind == SeriesKind::Scatter ? "scatter" : "line";
        entry["description"] = s.description;
        json d = json::array(), pl = json::array(), f = json::array();
        for (const auto& p : s.points)
        {
            d.push_back(p.distance_m);
            pl.push_back(p.path_loss_db);
            f.push_back(p.frequency_ghz);
        }
        entry["distance_m"] = std::move(d);
        entry["path_loss_db"] = std::move(pl);
        entry["frequency_ghz"] = std::move(f);
        doc["series"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

std::string plot_series_csv(const PlotSeries& series)
{
    std::ostringstream out;
    out << "# " << series.name << " (" << (series.kind == SeriesKind::Scatter ? "scatter" : "line") << "): "
        << series.description << '\n';
    out << "distance_m,path_loss_db,frequency_ghz\n";
    for (const auto& p : series.points)
        out << format_number(p.distance_m) << ',' << format_number(p.path_loss_db) << ',' << format_number(p.frequency_ghz)
            << '\n';
    return out.str();
}

} // namespace plkit
