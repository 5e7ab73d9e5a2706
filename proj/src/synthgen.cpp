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

#include "plkit/synthgen.hpp"
#include "plkit/error.hpp"
#include "plkit/numfmt.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace plkit
{

namespace
{

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// uniform in (0, 1]
double unit_interval(std::uint64_t bits)
{
    return (static_cast<double>(bits >> 11) + 1.0) * 0x1.0p-53;
}

std::vector<std::string> split(std::string_view text, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true)
    {
        auto pos = text.find(sep, start);
        out.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

std::vector<double> effective_frequencies(const SynthConfig& config)
{
    if (!config.frequencies_ghz.empty())
        return config.frequencies_ghz;
    return {config.frequency_ghz};
}

Condition label_for(const SynthConfig& config)
{
    if (const auto* spec = std::get_if<ThreeGppInhSpec>(&config.model))
        return spec->condition;
    return config.label;
}

} // namespace

std::vector<double> make_grid(const DistanceGrid& grid)
{
    if (grid.count < 2)
        throw Error(ErrorCode::Config, "grid count must be >= 2");
    if (!(grid.d_min_m > 0.0) || !(grid.d_max_m > grid.d_min_m) || !std::isfinite(grid.d_max_m))
        throw Error(ErrorCode::Config, "grid needs 0 < d_min < d_max");

    std::vector<double> out(grid.count);
    const double last = static_cast<double>(grid.count - 1);
    if (grid.spacing == Spacing::Log)
    {
        const double log_min = std::log(grid.d_min_m);
        const double log_span = std::log(grid.d_max_m) - log_min;
        for (std::size_t i = 0; i < grid.count; ++i)
            out[i] = std::exp(log_min + log_span * static_cast<double>(i) / last);
    }
    else
    {
        const double span = grid.d_max_m - grid.d_min_m;
        for (std::size_t i = 0; i < grid.count; ++i)
            out[i] = grid.d_min_m + span * static_cast<double>(i) / last;
    }
    out.front() = grid.d_min_m;
    out.back() = grid.d_max_m;
    return out;
}

DistanceGrid parse_grid(std::string_view text)
{
    const auto parts = split(text, ':');
    if (parts.size() != 4)
        throw Error(ErrorCode::Config, "grid must be spacing:dmin:dmax:count (got '" + std::string(text) + "')");

    DistanceGrid grid;
    if (parts[0] == "log")
        grid.spacing = Spacing::Log;
    else if (parts[0] == "linear" || parts[0] == "lin")
        grid.spacing = Spacing::Linear;
    else
        throw Error(ErrorCode::Config, "grid spacing must be log or linear");

    const auto d_min = parse_number(parts[1]);
    const auto d_max = parse_number(parts[2]);
    const auto count = parse_number(parts[3]);
    if (!d_min || !d_max || !count || *count != std::floor(*count) || *count < 0)
        throw Error(ErrorCode::Config, "grid bounds and count must be numbers (got '" + std::string(text) + "')");
    grid.d_min_m = *d_min;
    grid.d_max_m = *d_max;
    grid.count = static_cast<std::size_t>(*count);
    make_grid(grid); // validates
    return grid;
}

std::string format_grid(const DistanceGrid& grid)
{
    return std::string(grid.spacing == Spacing::Log ? "log" : "linear") + ":" + format_number(grid.d_min_m) + ":" +
           format_number(grid.d_max_m) + ":" + std::to_string(grid.count);
}

double standard_normal(std::uint64_t seed, std::uint64_t distance_index, std::uint64_t replicate_index,
                       std::uint64_t frequency_index)
{
    std::uint64_t key = splitmix64(seed);
    key = splitmix64(key ^ distance_index);
    key = splitmix64(key ^ replicate_index);
    key = splitmix64(key ^ frequency_index);

    const double u1 = unit_interval(splitmix64(key ^ 0x1ULL));
    const double u2 = unit_interval(splitmix64(key ^ 0x2ULL));
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

void validate(const SynthConfig& config)
{
    make_grid(config.grid);
    if (config.replicates_per_distance < 1)
        throw Error(ErrorCode::Config, "replicates_per_distance must be >= 1");
    for (double f : effective_frequencies(config))
    {
        if (!(f > 0.0) || !std::isfinite(f))
            throw Error(ErrorCode::Config, "synthesis frequencies must be > 0");
    }
    if (config.shadow_fading_sigma_db &&
        (!(*config.shadow_fading_sigma_db >= 0.0) || !std::isfinite(*config.shadow_fading_sigma_db)))
        throw Error(ErrorCode::Config, "shadow fading sigma must be >= 0");
    std::visit([](const auto& m) {
        if constexpr (!std::is_same_v<std::decay_t<decltype(m)>, ThreeGppInhSpec>)
            validate(m);
    }, config.model);
}

std::vector<PathLossSample> generate_samples(const SynthConfig& config)
{
    validate(config);
    const auto distances = make_grid(config.grid);
    const auto frequencies = effective_frequencies(config);
    const Condition label = label_for(config);

    std::vector<PathLossSample> out;
    out.reserve(frequencies.size() * distances.size() * config.replicates_per_distance);
    for (std::size_t fi = 0; fi < frequencies.size(); ++fi)
    {
        for (std::size_t di = 0; di < distances.size(); ++di)
        {
            const double mean = evaluate(config.model, distances[di], frequencies[fi], config.domain_mode);
            for (std::size_t ri = 0; ri < config.replicates_per_distance; ++ri)
            {
                double pl = mean;
                if (config.shadow_fading_sigma_db)
                    pl += *config.shadow_fading_sigma_db * standard_normal(config.seed, di, ri, fi);
                out.push_back({frequencies[fi], distances[di], pl, label, {}});
            }
        }
    }
    return out;
}

std::string synth_metadata(const SynthConfig& config)
{
    std::ostringstream out;
    out << "model=" << describe(config.model);
    out << " frequencies_ghz=";
    const auto frequencies = effective_frequencies(config);
    for (std::size_t i = 0; i < frequencies.size(); ++i)
        out << (i ? "," : "") << format_number(frequencies[i]);
    out << " grid=" << format_grid(config.grid);
    out << " sf=";
    if (config.shadow_fading_sigma_db)
        out << "gaussian:" << format_number(*config.shadow_fading_sigma_db);
    else
        out << "off";
    out << " seed=" << config.seed;
    out << " replicates=" << config.replicates_per_distance;
    out << " label=" << to_string(label_for(config));
    out << " domain=" << (config.domain_mode == DomainMode::Strict ? "strict" : "permissive");
    out << " rng=" << kNormalGenerator;
    return out.str();
}

} // namespace plkit
