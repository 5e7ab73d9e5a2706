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

#ifndef PLKIT_SYNTHGEN_HPP
#define PLKIT_SYNTHGEN_HPP

#include "plkit/models.hpp"
#include "plkit/sample.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace plkit
{

enum class Spacing
{
    Log,
    Linear
};

struct DistanceGrid
{
    double d_min_m = 1.0;
    double d_max_m = 100.0;
    std::size_t count = 100;
    Spacing spacing = Spacing::Log;
};

/// Strictly increasing distances with both endpoints included exactly.
/// Throws Error(Config) for count < 2 or an invalid range.
std::vector<double> make_grid(const DistanceGrid& grid);

/// "spacing:dmin:dmax:count", e.g. "log:1:100:100".
DistanceGrid parse_grid(std::string_view text);
std::string format_grid(const DistanceGrid& grid);

/// Identifier of the normal deviate algorithm, stamped into output metadata.
inline constexpr std::string_view kNormalGenerator = "splitmix64-boxmuller-v1";

/// Standard normal deviate addressed by (seed, distance, replicate, frequency)
/// indices. Adding frequencies or replicates never changes existing draws.
double standard_normal(std::uint64_t seed,
                       std::uint64_t distance_index,
                       std::uint64_t replicate_index,
                       std::uint64_t frequency_index);

struct SynthConfig
{
    ModelSpec model = ThreeGppInhSpec{};
    double frequency_ghz = 6.75;
    std::vector<double> frequencies_ghz; // overrides frequency_ghz when non-empty
    DistanceGrid grid;
    std::optional<double> shadow_fading_sigma_db; // nullopt: noiseless
    std::uint64_t seed = 0;
    std::size_t replicates_per_distance = 1;
    Condition label = Condition::Los; // used for FI/ABG/CI sources
    DomainMode domain_mode = DomainMode::Strict;
};

void validate(const SynthConfig& config);

/// Frequency-major, then distance, then replicate. Identical configs give
/// bitwise-identical samples.
std::vector<PathLossSample> generate_samples(const SynthConfig& config);

/// One-line key=value description of the config including seed and generator.
std::string synth_metadata(const SynthConfig& config);

} // namespace plkit

#endif
