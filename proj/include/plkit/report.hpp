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

#ifndef PLKIT_REPORT_HPP
#define PLKIT_REPORT_HPP

#include "plkit/estimators.hpp"
#include "plkit/measurements.hpp"
#include "plkit/models.hpp"
#include "plkit/synthgen.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace plkit
{

/// How the 3GPP side of a comparison is obtained.
enum class ThreeGppSource
{
    FitOfSynthetic,       // fit the model family to samples generated from the 3GPP equations
    DirectCoefficientRead // read the coefficients straight off the equations
};

/// Whether the 3GPP shadow fading column is the nominal table value or the
/// RMS residual of a fit to shadowed synthetic samples.
enum class SigmaProvenance
{
    Nominal,
    Fitted
};

/// Recipe for the 3GPP side. The default NLOS grid starts at 4 m, above the
/// LOS floor crossover.
struct SynthPolicy
{
    ThreeGppSource source = ThreeGppSource::FitOfSynthetic;
    DistanceGrid los_grid{1.0, 100.0, 100, Spacing::Log};
    DistanceGrid nlos_grid{4.0, 100.0, 100, Spacing::Log};
    bool apply_los_floor = true;
    bool shadow_fading = false; // draw with the nominal sigma and report the fitted one
    std::uint64_t seed = 0;
    std::size_t replicates_per_distance = 1;
};

using ModelParams = std::variant<FIParams, ABGParams>;

/// Absolute measured-minus-3GPP differences. frequency_exponent is set for ABG rows only.
struct ParamDeltas
{
    double distance_exponent = 0.0;
    std::optional<double> frequency_exponent;
    double sigma_sf_db = 0.0;
};

struct ComparisonRow
{
    std::string group; // "6.75 GHz" or a band name
    std::optional<double> frequency_ghz;
    Condition condition = Condition::Los;

    std::optional<ModelParams> measured; // empty when unfittable
    std::string unfittable_reason;
    std::size_t measured_samples = 0;
    std::string measured_source = "fit"; // "fit" or "fixture"

    ModelParams threegpp_option1; // the single 3GPP set for LOS rows
    std::optional<ModelParams> threegpp_option2;
    std::optional<ParamDeltas> deltas_option1;
    std::optional<ParamDeltas> deltas_option2;

    ThreeGppSource threegpp_source = ThreeGppSource::FitOfSynthetic;
    SigmaProvenance sigma_provenance = SigmaProvenance::Nominal;
};

struct Report
{
    ModelFamily family = ModelFamily::FI;
    std::vector<ComparisonRow> rows;
    std::vector<std::string> warnings;
};

/// 3GPP-side FI parameters at one frequency.
FIParams threegpp_fi_side(Condition condition, NlosOption option, double frequency_ghz, const SynthPolicy& policy);

/// 3GPP-side ABG parameters pooled over a band.
ABGParams threegpp_abg_side(Condition condition, NlosOption option, const BandSet& band, const SynthPolicy& policy);

/// Builds one FI row from given measured parameters (or an unfittable reason).
ComparisonRow compare_fi(double frequency_ghz,
                         Condition condition,
                         const std::optional<FIParams>& measured,
                         const SynthPolicy& policy);

/// Builds one ABG row from given measured parameters.
ComparisonRow compare_abg(const BandSet& band,
                          Condition condition,
                          const ABGParams& measured,
                          ThreeGppSource source,
                          const SynthPolicy& policy = {});

/// Per (frequency, condition) FI comparison. Degenerate groups become
/// unfittable rows; they do not abort the run.
Report fi_validation(const SampleSet& measured, const SynthPolicy& policy = {});

/// Per condition ABG comparison on the band-pooled samples. Throws
/// Error(RankDeficient) if the band leaves fewer than two frequencies.
Report abg_validation(const SampleSet& measured,
                      const BandSet& band,
                      ThreeGppSource source,
                      const SynthPolicy& policy = {});

enum class ReportFormat
{
    Json,
    Csv,
    Markdown
};

/// Json keeps raw values; csv and markdown round half away from zero to two
/// decimals and render NLOS option pairs as "x/y".
std::string render_report(const Report& report, ReportFormat format);

ReportFormat parse_report_format(std::string_view text);
std::string to_string(ThreeGppSource source);
std::string to_string(SigmaProvenance provenance);

// ---- plot series ----

struct NamedModel
{
    std::string name;
    ModelSpec model;
    std::optional<double> frequency_ghz; // not needed by FI
};

enum class SeriesKind
{
    Scatter,
    Line
};

struct PlotPoint
{
    double distance_m = 0.0;
    double path_loss_db = 0.0;
    double frequency_ghz = 0.0; // 0 when the series has no frequency
};

struct PlotSeries
{
    std::string name;
    SeriesKind kind = SeriesKind::Line;
    std::string description;
    std::vector<PlotPoint> points;
};

struct PlotBundle
{
    std::vector<PlotSeries> series;
};

/// One scatter series per measured condition plus one line series per model
/// sampled on the grid. Distances are emitted raw.
PlotBundle emit_plot_data(const SampleSet& measured,
                          std::span<const NamedModel> models,
                          const DistanceGrid& grid,
                          DomainMode mode = DomainMode::Strict);

/**
 * Parses "[name=]kind[:args][@frequency]":
 *
 *   3gpp-inh-los@6.75            3gpp-inh-nlos:1@6.75    3gpp-inh-nlos:2:nofloor@16.95
 *   fi:43.4:1.7                  abg:1.7:28.2:1.9@6.75   ci:2.1@28
 *   fit-fi:LOS[@6.75]            fit-abg:NLOS@16.95      fit-ci:LOS@6.75
 *
 * fit-* kinds fit the family to the measured samples of that condition (and
 * frequency, for fit-fi/fit-ci when given).
 */
NamedModel parse_model_spec(std::string_view text, const SampleSet& measured);

std::string plot_bundle_json(const PlotBundle& bundle);
std::string plot_series_csv(const PlotSeries& series);

} // namespace plkit

#endif
