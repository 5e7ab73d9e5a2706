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

// Command-line front end. Talks to the library through the C API only.
//
// Exit codes: 0 success, 1 domain/validation/fit error, 2 usage error.

#include "plkit/plkit.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace
{

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Thrown for flag problems detected after CLI11 parsing.
struct UsageError
{
    std::string message;
};

// Thrown when the library reports an error.
struct RunError
{
    std::string message;
};

void check(plkit_status status, const std::string& what)
{
    if (status != PLKIT_OK)
        throw RunError{what + ": " + plkit_last_error()};
}

void check_usage(plkit_status status, const std::string& what)
{
    if (status != PLKIT_OK)
        throw UsageError{what + ": " + plkit_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter
{
    void operator()(T* p) const { Free(p); }
};

using Buffer = std::unique_ptr<plkit_buffer, Deleter<plkit_buffer, plkit_buffer_free>>;
using SampleSet = std::unique_ptr<plkit_sample_set, Deleter<plkit_sample_set, plkit_sample_set_free>>;
using Partition = std::unique_ptr<plkit_partition, Deleter<plkit_partition, plkit_partition_free>>;
using Report = std::unique_ptr<plkit_report, Deleter<plkit_report, plkit_report_free>>;
using PlotBundle = std::unique_ptr<plkit_plot_bundle, Deleter<plkit_plot_bundle, plkit_plot_bundle_free>>;

std::string num(double v)
{
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

std::string grid_text(const plkit_grid& g)
{
    return std::string(g.spacing == PLKIT_SPACING_LINEAR ? "linear" : "log") + ":" + num(g.d_min_m) + ":" +
           num(g.d_max_m) + ":" + std::to_string(g.count);
}

plkit_grid parse_grid(const std::string& text)
{
    plkit_grid grid{};
    check_usage(plkit_grid_parse(text.c_str(), &grid), "--grid '" + text + "'");
    return grid;
}

void check_band(const std::string& band)
{
    plkit_sample_set* raw = nullptr;
    check(plkit_sample_set_create(&raw), "internal");
    SampleSet empty(raw);
    plkit_partition* part = nullptr;
    check_usage(plkit_partition_create(empty.get(), 0, 0, band.c_str(), &part), "--band '" + band + "'");
    plkit_partition_free(part);
}

std::uint64_t default_seed()
{
    if (const char* env = std::getenv("PLKIT_SEED"))
    {
        std::uint64_t value = 0;
        const std::string text(env);
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size())
            throw UsageError{"PLKIT_SEED must be an unsigned integer"};
        return value;
    }
    return 0;
}

std::string join_args(const std::vector<std::string>& args)
{
    std::string out = "plkit";
    for (const auto& a : args)
        out += " " + a;
    return out;
}

void print_effective(const std::vector<std::string>& args)
{
    std::cerr << "# effective: " << join_args(args) << "\n";
}

// Writes a temporary file next to the target, then renames it into place.
void write_file(const std::string& path, const std::string& text)
{
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw RunError{"cannot write '" + path + "'"};
        out << text;
        if (!out)
            throw RunError{"cannot write '" + path + "'"};
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec)
        throw RunError{"cannot write '" + path + "': " + ec.message()};
}

void emit(const std::string& out_path, const std::string& text)
{
    if (out_path.empty())
        std::cout << text << std::flush;
    else
        write_file(out_path, text);
}

SampleSet load(const std::string& path, const std::string& columns)
{
    plkit_sample_set* raw = nullptr;
    check(plkit_sample_set_load_csv(path.c_str(), columns.empty() ? nullptr : columns.c_str(), &raw),
          "loading '" + path + "'");
    SampleSet set(raw);
    for (size_t i = 0; i < plkit_sample_set_rejected_count(set.get()); ++i)
    {
        size_t line = 0;
        const char* reason = nullptr;
        if (plkit_sample_set_rejected(set.get(), i, &line, &reason) == PLKIT_OK)
            std::cerr << "warning: " << path << ":" << line << ": row rejected: " << reason << "\n";
    }
    return set;
}

// ---- model flags shared by eval and synth ----

struct ModelFlags
{
    std::string kind = "3gpp-inh-los";
    std::optional<double> intercept, exponent, alpha, beta, gamma;
    int option = 1;
    bool no_floor = false;

    void add_to(CLI::App& app, bool with_fspl)
    {
        std::vector<std::string> kinds{"fi", "abg", "ci", "3gpp-inh-los", "3gpp-inh-nlos"};
        if (with_fspl)
            kinds.push_back("fspl");
        app.add_option("--model", kind, "Model kind")->check(CLI::IsMember(kinds))->capture_default_str();
        app.add_option("--intercept", intercept, "FI intercept in dB");
        app.add_option("--exponent", exponent, "FI distance exponent, or CI path loss exponent");
        app.add_option("--alpha", alpha, "ABG distance exponent");
        app.add_option("--beta", beta, "ABG offset in dB");
        app.add_option("--gamma", gamma, "ABG frequency exponent");
        app.add_option("--option", option, "3GPP NLOS option")->check(CLI::IsMember({1, 2}))->capture_default_str();
        app.add_flag("--no-floor", no_floor, "Do not apply the LOS floor to 3GPP NLOS");
    }

    static double need(const std::optional<double>& v, const char* flag, const std::string& kind)
    {
        if (!v)
            throw UsageError{"--model " + kind + " requires " + flag};
        return *v;
    }

    plkit_model resolve() const
    {
        plkit_model m{};
        m.ci.reference_distance_m = 1.0;
        m.nlos_option = option == 2 ? PLKIT_OPTION2 : PLKIT_OPTION1;
        m.apply_los_floor = no_floor ? 0 : 1;
        if (kind == "fi")
        {
            m.kind = PLKIT_MODEL_FI;
            m.fi = {need(intercept, "--intercept", kind), need(exponent, "--exponent", kind), 0.0};
        }
        else if (kind == "abg")
        {
            m.kind = PLKIT_MODEL_ABG;
            m.abg = {need(alpha, "--alpha", kind), need(beta, "--beta", kind), need(gamma, "--gamma", kind), 0.0};
        }
        else if (kind == "ci")
        {
            m.kind = PLKIT_MODEL_CI;
            m.ci = {need(exponent, "--exponent", kind), 1.0, 0.0};
        }
        else
        {
            m.kind = PLKIT_MODEL_3GPP_INH;
            m.condition = kind == "3gpp-inh-nlos" ? PLKIT_NLOS : PLKIT_LOS;
        }
        return m;
    }

    std::vector<std::string> effective() const
    {
        std::vector<std::string> out{"--model", kind};
        if (kind == "fi")
            out.insert(out.end(), {"--intercept", num(*intercept), "--exponent", num(*exponent)});
        else if (kind == "abg")
            out.insert(out.end(), {"--alpha", num(*alpha), "--beta", num(*beta), "--gamma", num(*gamma)});
        else if (kind == "ci")
            out.insert(out.end(), {"--exponent", num(*exponent)});
        else if (kind == "3gpp-inh-nlos")
        {
            out.insert(out.end(), {"--option", std::to_string(option)});
            if (no_floor)
                out.push_back("--no-floor");
        }
        return out;
    }
};

// ---- eval ----

struct EvalCommand
{
    ModelFlags model;
    double distance = 0.0;
    std::optional<double> frequency;
    bool permissive = false;
    int precision = 3;

    void add_to(CLI::App& app)
    {
        model.add_to(app, true);
        app.add_option("-d,--distance", distance, "3D distance in m")->required();
        app.add_option("-f,--frequency", frequency, "Frequency in GHz");
        app.add_flag("--permissive", permissive, "Evaluate 3GPP models outside their validity range");
        app.add_option("--precision", precision, "Decimal places printed")->capture_default_str();
    }

    int run()
    {
        const bool needs_frequency = model.kind != "fi";
        if (needs_frequency && !frequency)
            throw UsageError{"--model " + model.kind + " requires -f"};
        if (precision < 0 || precision > 17)
            throw UsageError{"--precision must be in [0, 17]"};
        const plkit_model m = model.kind == "fspl" ? plkit_model{} : model.resolve();

        std::vector<std::string> args{"eval"};
        if (model.kind == "fspl")
            args.insert(args.end(), {"--model", "fspl"});
        else
        {
            auto more = model.effective();
            args.insert(args.end(), more.begin(), more.end());
        }
        args.insert(args.end(), {"-d", num(distance)});
        if (frequency)
            args.insert(args.end(), {"-f", num(*frequency)});
        if (permissive)
            args.push_back("--permissive");
        args.insert(args.end(), {"--precision", std::to_string(precision)});
        print_effective(args);

        double value = 0.0;
        const plkit_domain_mode mode = permissive ? PLKIT_PERMISSIVE : PLKIT_STRICT;
        if (model.kind == "fspl")
            check(plkit_eval_fspl_1m(*frequency, &value), "eval");
        else
            check(plkit_eval_model(&m, distance, frequency.value_or(1.0), mode, &value), "eval");

        const std::string warning = plkit_last_warning();
        if (!warning.empty())
            std::cerr << "warning: " << warning << "\n";
        std::printf("%.*f\n", precision, value);
        return kExitOk;
    }
};

// ---- synth ----

struct SynthCommand
{
    ModelFlags model;
    double frequency = 6.75;
    std::string frequencies;
    std::string grid = "log:1:100:100";
    std::optional<std::size_t> count;
    std::string sf = "off";
    std::optional<std::uint64_t> seed;
    std::size_t replicates = 1;
    std::string label = "LOS";
    bool permissive = false;
    std::string out;

    void add_to(CLI::App& app)
    {
        model.add_to(app, false);
        app.add_option("-f,--frequency", frequency, "Frequency in GHz")->capture_default_str();
        app.add_option("--frequencies", frequencies, "Comma-separated frequency list (overrides -f)");
        app.add_option("--grid", grid, "Distance grid spacing:dmin:dmax:count")->capture_default_str();
        app.add_option("-n,--count", count, "Override the grid point count");
        app.add_option("--sf", sf, "Shadow fading: off or gaussian:SIGMA_DB")->capture_default_str();
        app.add_option("--seed", seed, "RNG seed (default: $PLKIT_SEED or 0)");
        app.add_option("--replicates", replicates, "Draws per distance")->capture_default_str();
        app.add_option("--label", label, "Condition label for FI/ABG/CI models")
            ->check(CLI::IsMember({"LOS", "NLOS"}))
            ->capture_default_str();
        app.add_flag("--permissive", permissive, "Allow 3GPP evaluation outside the validity range");
        app.add_option("--out", out, "Output CSV (default: stdout)");
    }

    int run()
    {
        plkit_synth_config config;
        plkit_synth_config_init(&config);
        config.model = model.resolve();
        config.frequency_ghz = frequency;

        std::vector<double> freq_list;
        if (!frequencies.empty())
        {
            std::size_t start = 0;
            while (start <= frequencies.size())
            {
                auto pos = frequencies.find(',', start);
                std::string item = frequencies.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
                double v = 0.0;
                auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
                if (ec != std::errc{} || ptr != item.data() + item.size())
                    throw UsageError{"--frequencies must be a comma-separated number list"};
                freq_list.push_back(v);
                if (pos == std::string::npos)
                    break;
                start = pos + 1;
            }
            config.frequencies_ghz = freq_list.data();
            config.n_frequencies = freq_list.size();
        }

        config.grid = parse_grid(grid);
        if (count)
        {
            config.grid.count = *count;
            check_usage(plkit_grid_parse(grid_text(config.grid).c_str(), &config.grid), "-n");
        }

        if (sf == "off")
            config.shadow_fading = 0;
        else if (sf.rfind("gaussian:", 0) == 0)
        {
            const std::string sigma = sf.substr(9);
            auto [ptr, ec] = std::from_chars(sigma.data(), sigma.data() + sigma.size(), config.sigma_db);
            if (ec != std::errc{} || ptr != sigma.data() + sigma.size() || config.sigma_db < 0)
                throw UsageError{"--sf must be off or gaussian:SIGMA_DB with SIGMA_DB >= 0"};
            config.shadow_fading = 1;
        }
        else
            throw UsageError{"--sf must be off or gaussian:SIGMA_DB"};

        config.seed = seed ? *seed : default_seed();
        if (replicates < 1)
            throw UsageError{"--replicates must be >= 1"};
        config.replicates_per_distance = replicates;
        config.label = label == "NLOS" ? PLKIT_NLOS : PLKIT_LOS;
        config.domain_mode = permissive ? PLKIT_PERMISSIVE : PLKIT_STRICT;

        std::vector<std::string> args{"synth"};
        auto more = model.effective();
        args.insert(args.end(), more.begin(), more.end());
        if (freq_list.empty())
            args.insert(args.end(), {"-f", num(frequency)});
        else
        {
            std::string list;
            for (std::size_t i = 0; i < freq_list.size(); ++i)
                list += (i ? "," : "") + num(freq_list[i]);
            args.insert(args.end(), {"--frequencies", list});
        }
        args.insert(args.end(), {"--grid", grid_text(config.grid), "--sf",
                                 config.shadow_fading ? "gaussian:" + num(config.sigma_db) : "off", "--seed",
                                 std::to_string(config.seed), "--replicates", std::to_string(replicates), "--label",
                                 label});
        if (permissive)
            args.push_back("--permissive");
        if (!out.empty())
            args.insert(args.end(), {"--out", out});
        print_effective(args);

        // embedded copy without --out
        std::vector<std::string> content_args = args;
        if (!out.empty())
            content_args.resize(content_args.size() - 2);
        const std::string effective = "effective: " + join_args(content_args);
        const char* comments[] = {effective.c_str()};
        plkit_buffer* raw = nullptr;
        check(plkit_synth_csv(&config, comments, 1, &raw), "synth");
        Buffer text(raw);
        emit(out, std::string(plkit_buffer_data(text.get()), plkit_buffer_size(text.get())));
        return kExitOk;
    }
};

// ---- fit ----

struct FitCommand
{
    std::string in;
    std::string columns;
    std::string model = "fi";
    std::string group_by;
    std::string band;
    std::string out;

    void add_to(CLI::App& app)
    {
        app.add_option("--in", in, "Input CSV")->required();
        app.add_option("--columns", columns, "Column rename table (source,target CSV)");
        app.add_option("--model", model, "Model family")->check(CLI::IsMember({"fi", "abg", "ci"}))->capture_default_str();
        app.add_option("--group-by", group_by,
                       "Comma list of condition,frequency or 'none' (default: fi/ci condition,frequency; abg condition)");
        app.add_option("--band", band, "Keep only band members: 7-24, 0.5-100 or a frequency list");
        app.add_option("--out", out, "Output JSON (default: stdout)");
    }

    int run()
    {
        if (group_by.empty())
            group_by = model == "abg" ? "condition" : "condition,frequency";
        bool by_condition = false, by_frequency = false;
        if (group_by != "none")
        {
            std::size_t start = 0;
            while (true)
            {
                auto pos = group_by.find(',', start);
                std::string item = group_by.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
                if (item == "condition")
                    by_condition = true;
                else if (item == "frequency")
                    by_frequency = true;
                else
                    throw UsageError{"--group-by accepts condition, frequency or none"};
                if (pos == std::string::npos)
                    break;
                start = pos + 1;
            }
        }
        if (!band.empty())
            check_band(band);

        std::vector<std::string> args{"fit", "--in", in};
        if (!columns.empty())
            args.insert(args.end(), {"--columns", columns});
        args.insert(args.end(), {"--model", model, "--group-by", group_by});
        if (!band.empty())
            args.insert(args.end(), {"--band", band});
        if (!out.empty())
            args.insert(args.end(), {"--out", out});
        print_effective(args);

        SampleSet set = load(in, columns);
        plkit_partition* raw = nullptr;
        check(plkit_partition_create(set.get(), by_condition, by_frequency, band.empty() ? nullptr : band.c_str(), &raw),
              "grouping");
        Partition part(raw);
        for (size_t i = 0; i < plkit_partition_warning_count(part.get()); ++i)
            std::cerr << "warning: " << plkit_partition_warning(part.get(), i) << "\n";

        nlohmann::ordered_json doc;
        doc["model"] = model;
        doc["input"] = in;
        doc["rejected_rows"] = plkit_sample_set_rejected_count(set.get());
        doc["groups"] = nlohmann::ordered_json::array();
        for (size_t i = 0; i < plkit_partition_count(part.get()); ++i)
        {
            const std::string label = plkit_partition_label(part.get(), i);
            const plkit_sample_set* group = plkit_partition_group(part.get(), i);
            plkit_fit_diagnostics diag{};
            nlohmann::ordered_json params;
            if (model == "fi")
            {
                plkit_fi_params p{};
                check(plkit_fit_fi(group, &p, &diag), "fit " + label);
                params = {{"intercept_db", p.intercept_db},
                          {"distance_exponent", p.distance_exponent},
                          {"sigma_sf_db", p.sigma_sf_db}};
            }
            else if (model == "abg")
            {
                plkit_abg_params p{};
                check(plkit_fit_abg(group, &p, &diag), "fit " + label);
                params = {{"distance_exponent", p.distance_exponent},
                          {"offset_db", p.offset_db},
                          {"frequency_exponent", p.frequency_exponent},
                          {"sigma_sf_db", p.sigma_sf_db}};
            }
            else
            {
                plkit_ci_params p{};
                check(plkit_fit_ci(group, &p, &diag), "fit " + label);
                params = {{"path_loss_exponent", p.path_loss_exponent},
                          {"reference_distance_m", p.reference_distance_m},
                          {"sigma_sf_db", p.sigma_sf_db}};
            }
            nlohmann::ordered_json entry;
            entry["group"] = label;
            entry["n_samples"] = diag.n_samples;
            entry["params"] = params;
            entry["sse_db2"] = diag.sse_db2;
            entry["warning"] = diag.warning[0] ? nlohmann::ordered_json(diag.warning) : nlohmann::ordered_json(nullptr);
            doc["groups"].push_back(entry);
        }
        emit(out, doc.dump(2) + "\n");
        return kExitOk;
    }
};

// ---- validate ----

struct ValidateCommand
{
    std::string in;
    std::string columns;
    std::string mode = "fi";
    std::string band;
    std::string threegpp;
    bool synth_sf = false;
    std::optional<std::uint64_t> seed;
    std::string los_grid = "log:1:100:100";
    std::string nlos_grid = "log:4:100:100";
    bool no_floor = false;
    std::size_t replicates = 1;
    std::string format = "json";
    std::string out;

    void add_to(CLI::App& app)
    {
        app.add_option("--in", in, "Measured CSV")->required();
        app.add_option("--columns", columns, "Column rename table (source,target CSV)");
        app.add_option("--mode", mode, "fi (per frequency) or abg (band pooled)")
            ->check(CLI::IsMember({"fi", "abg"}))
            ->capture_default_str();
        app.add_option("--band", band, "7-24, 0.5-100 or a frequency list (required for abg)");
        app.add_option("--threegpp", threegpp, "3GPP side: fit (fit synthetic samples) or direct (coefficients)")
            ->check(CLI::IsMember({"fit", "direct"}));
        app.add_flag("--synth-sf", synth_sf, "Add nominal shadow fading to the 3GPP synthetic samples");
        app.add_option("--seed", seed, "RNG seed for --synth-sf (default: $PLKIT_SEED or 0)");
        app.add_option("--los-grid", los_grid, "3GPP LOS synthesis grid")->capture_default_str();
        app.add_option("--nlos-grid", nlos_grid, "3GPP NLOS synthesis grid")->capture_default_str();
        app.add_flag("--no-floor", no_floor, "Do not apply the LOS floor when synthesising 3GPP NLOS");
        app.add_option("--replicates", replicates, "Synthetic draws per distance")->capture_default_str();
        app.add_option("--format", format, "Report format")
            ->check(CLI::IsMember({"json", "csv", "markdown"}))
            ->capture_default_str();
        app.add_option("--out", out, "Output file (default: stdout)");
    }

    int run()
    {
        if (threegpp.empty())
            threegpp = mode == "fi" ? "fit" : "direct";
        if (mode == "abg" && band.empty())
            throw UsageError{"--mode abg requires --band"};
        if (!band.empty())
            check_band(band);
        if (replicates < 1)
            throw UsageError{"--replicates must be >= 1"};

        plkit_synth_policy policy;
        plkit_synth_policy_init(&policy);
        policy.source = threegpp == "fit" ? PLKIT_FIT_OF_SYNTHETIC : PLKIT_DIRECT_COEFFICIENT_READ;
        policy.los_grid = parse_grid(los_grid);
        policy.nlos_grid = parse_grid(nlos_grid);
        policy.apply_los_floor = no_floor ? 0 : 1;
        policy.shadow_fading = synth_sf ? 1 : 0;
        policy.seed = seed ? *seed : default_seed();
        policy.replicates_per_distance = replicates;

        std::vector<std::string> args{"validate", "--in", in};
        if (!columns.empty())
            args.insert(args.end(), {"--columns", columns});
        args.insert(args.end(), {"--mode", mode});
        if (!band.empty())
            args.insert(args.end(), {"--band", band});
        args.insert(args.end(), {"--threegpp", threegpp});
        if (synth_sf)
            args.push_back("--synth-sf");
        args.insert(args.end(), {"--seed", std::to_string(policy.seed), "--los-grid", grid_text(policy.los_grid),
                                 "--nlos-grid", grid_text(policy.nlos_grid)});
        if (no_floor)
            args.push_back("--no-floor");
        args.insert(args.end(), {"--replicates", std::to_string(replicates), "--format", format});
        if (!out.empty())
            args.insert(args.end(), {"--out", out});
        print_effective(args);

        SampleSet set = load(in, columns);
        plkit_report* raw = nullptr;
        const char* band_arg = band.empty() ? nullptr : band.c_str();
        if (mode == "fi")
            check(plkit_validate_fi(set.get(), band_arg, &policy, &raw), "validate");
        else
            check(plkit_validate_abg(set.get(), band_arg, &policy, &raw), "validate");
        Report report(raw);

        plkit_format fmt = PLKIT_FORMAT_JSON;
        if (format == "csv")
            fmt = PLKIT_FORMAT_CSV;
        else if (format == "markdown")
            fmt = PLKIT_FORMAT_MARKDOWN;
        plkit_buffer* text_raw = nullptr;
        check(plkit_report_render(report.get(), fmt, &text_raw), "render");
        Buffer text(text_raw);
        emit(out, std::string(plkit_buffer_data(text.get()), plkit_buffer_size(text.get())));
        return kExitOk;
    }
};

// ---- plot-data ----

struct PlotCommand
{
    std::string in;
    std::string columns;
    std::vector<std::string> models;
    std::string grid = "log:1:100:100";
    std::string out;
    bool permissive = false;

    void add_to(CLI::App& app)
    {
        app.add_option("--in", in, "Measured CSV")->required();
        app.add_option("--columns", columns, "Column rename table (source,target CSV)");
        app.add_option("--model", models,
                       "Model line spec, repeatable: [name=]kind[:args][@GHz], e.g. 3gpp-inh-los@6.75, fit-fi:LOS");
        app.add_option("--grid", grid, "Line series grid")->capture_default_str();
        app.add_option("--out", out, "Output directory")->required();
        app.add_flag("--permissive", permissive, "Allow 3GPP evaluation outside the validity range");
    }

    static std::string file_stem(const std::string& name)
    {
        std::string stem;
        for (char c : name)
            stem += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.') ? c : '_';
        return stem;
    }

    int run()
    {
        const plkit_grid g = parse_grid(grid);

        std::vector<std::string> args{"plot-data", "--in", in};
        if (!columns.empty())
            args.insert(args.end(), {"--columns", columns});
        for (const auto& m : models)
            args.insert(args.end(), {"--model", m});
        args.insert(args.end(), {"--grid", grid_text(g), "--out", out});
        if (permissive)
            args.push_back("--permissive");
        print_effective(args);

        SampleSet set = load(in, columns);
        std::vector<const char*> specs;
        for (const auto& m : models)
            specs.push_back(m.c_str());
        plkit_plot_bundle* raw = nullptr;
        const plkit_status status = plkit_plot_data(set.get(), specs.data(), specs.size(), &g,
                                                    permissive ? PLKIT_PERMISSIVE : PLKIT_STRICT, &raw);
        if (status == PLKIT_E_CONFIG)
            throw UsageError{std::string("--model: ") + plkit_last_error()};
        check(status, "plot-data");
        PlotBundle bundle(raw);

        std::error_code ec;
        std::filesystem::create_directories(out, ec);
        if (ec)
            throw RunError{"cannot create '" + out + "': " + ec.message()};

        for (size_t i = 0; i < plkit_plot_series_count(bundle.get()); ++i)
        {
            plkit_buffer* text_raw = nullptr;
            check(plkit_plot_series_csv(bundle.get(), i, &text_raw), "plot-data");
            Buffer text(text_raw);
            const auto path = (std::filesystem::path(out) / (file_stem(plkit_plot_series_name(bundle.get(), i)) + ".csv")).string();
            write_file(path, std::string(plkit_buffer_data(text.get()), plkit_buffer_size(text.get())));
            std::cout << path << "\n";
        }
        plkit_buffer* json_raw = nullptr;
        check(plkit_plot_bundle_json(bundle.get(), &json_raw), "plot-data");
        Buffer json(json_raw);
        const auto path = (std::filesystem::path(out) / "plot.json").string();
        write_file(path, std::string(plkit_buffer_data(json.get()), plkit_buffer_size(json.get())));
        std::cout << path << "\n";
        return kExitOk;
    }
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"plkit - path loss model evaluation, fitting and 3GPP InH validation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", plkit_version());

    EvalCommand eval;
    SynthCommand synth;
    FitCommand fit;
    ValidateCommand validate;
    PlotCommand plot;

    eval.add_to(*app.add_subcommand("eval", "Evaluate a path loss model at one point"));
    synth.add_to(*app.add_subcommand("synth", "Generate synthetic path loss samples as CSV"));
    fit.add_to(*app.add_subcommand("fit", "Fit FI/ABG/CI models to a CSV of samples"));
    validate.add_to(*app.add_subcommand("validate", "Compare measured fits against 3GPP TR 38.901 InH"));
    plot.add_to(*app.add_subcommand("plot-data", "Export scatter and model line series"));

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForVersion& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return kExitUsage;
    }

    try
    {
        if (app.got_subcommand("eval"))
            return eval.run();
        if (app.got_subcommand("synth"))
            return synth.run();
        if (app.got_subcommand("fit"))
            return fit.run();
        if (app.got_subcommand("validate"))
            return validate.run();
        return plot.run();
    }
    catch (const UsageError& e)
    {
        std::cerr << "usage error: " << e.message << "\n";
        return kExitUsage;
    }
    catch (const RunError& e)
    {
        std::cerr << "error: " << e.message << "\n";
        return kExitFailure;
    }
}
