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

#ifndef PLKIT_MODELS_HPP
#define PLKIT_MODELS_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

/**
 * \file models.hpp
 *
 * Mean path loss evaluators. All results are in dB and exclude shadow fading;
 * the random shadow fading term is added only by the sample generator.
 *
 * Distances are 3D TX-RX separations in metres, frequencies are carrier
 * frequencies in GHz.
 */

namespace plkit
{

inline constexpr double kSpeedOfLight = 299792458.0; // m/s

enum class Condition
{
    Los,
    Nlos
};

enum class NlosOption
{
    Option1,
    Option2
};

/// Strict mode rejects inputs outside the 3GPP InH validity range, permissive
/// mode evaluates anyway and appends a warning.
enum class DomainMode
{
    Strict,
    Permissive
};

/// Floating-intercept model: PL = intercept_db + 10 * distance_exponent * log10(d).
struct FIParams
{
    double intercept_db = 0.0;
    double distance_exponent = 0.0;
    double sigma_sf_db = 0.0;
};

/// Alpha-beta-gamma model:
/// PL = offset_db + 10 * distance_exponent * log10(d) + 10 * frequency_exponent * log10(f).
struct ABGParams
{
    double distance_exponent = 0.0;
    double offset_db = 0.0;
    double frequency_exponent = 0.0;
    double sigma_sf_db = 0.0;
};

/// Close-in model anchored to free space loss at 1 m.
struct CIParams
{
    double path_loss_exponent = 2.0;
    double reference_distance_m = 1.0; // must stay 1.0
    double sigma_sf_db = 0.0;
};

/// 3GPP TR 38.901 indoor hotspot model selector.
struct ThreeGppInhSpec
{
    static constexpr double d3d_min_m = 1.0;
    static constexpr double d3d_max_m = 150.0;
    static constexpr double fc_min_ghz = 0.5;
    static constexpr double fc_max_ghz = 100.0;

    Condition condition = Condition::Los;
    NlosOption nlos_option = NlosOption::Option1; // ignored for LOS
    bool apply_los_floor = true;                  // NLOS = max(LOS, NLOS')
};

using ModelSpec = std::variant<FIParams, ABGParams, CIParams, ThreeGppInhSpec>;

// Parameter validation; throws Error(InvalidArgument) on non-finite fields
// or negative shadow fading.
void validate(const FIParams& params);
void validate(const ABGParams& params);
void validate(const CIParams& params);

double eval_fspl_1m(double frequency_ghz);
double eval_fi(const FIParams& params, double distance_m);
double eval_abg(const ABGParams& params, double distance_m, double frequency_ghz);
double eval_ci(const CIParams& params, double distance_m, double frequency_ghz);

double eval_3gpp_inh_los(double distance_m,
                         double frequency_ghz,
                         DomainMode mode = DomainMode::Strict,
                         std::vector<std::string>* warnings = nullptr);

double eval_3gpp_inh_nlos(double distance_m,
                          double frequency_ghz,
                          NlosOption option,
                          bool apply_los_floor,
                          DomainMode mode = DomainMode::Strict,
                          std::vector<std::string>* warnings = nullptr);

double eval_3gpp_inh(const ThreeGppInhSpec& spec,
                     double distance_m,
                     double frequency_ghz,
                     DomainMode mode = DomainMode::Strict,
                     std::vector<std::string>* warnings = nullptr);

/// Evaluates any model. The frequency is ignored by FI.
double evaluate(const ModelSpec& model,
                double distance_m,
                double frequency_ghz,
                DomainMode mode = DomainMode::Strict,
                std::vector<std::string>* warnings = nullptr);

/// The 3GPP InH coefficients as an ABG parameter set, with the nominal
/// shadow fading standard deviation (3, 8.03 or 8.29 dB).
ABGParams threegpp_inh_coefficients(Condition condition, NlosOption option);

/// The un-floored 3GPP InH branch at a fixed frequency, as an FI parameter set.
FIParams threegpp_inh_fi_at(Condition condition, NlosOption option, double frequency_ghz);

double threegpp_inh_nominal_sigma(Condition condition, NlosOption option);

/// Distance at which the LOS floor and the un-floored NLOS branch intersect.
/// The floor binds for all distances below it.
double threegpp_inh_floor_crossover_m(NlosOption option, double frequency_ghz);

std::string to_string(Condition condition);
std::string to_string(NlosOption option);
Condition parse_condition(std::string_view text); // case-insensitive LOS/NLOS

/// Short human-readable model description, e.g. "fi(43.4,1.7)".
std::string describe(const ModelSpec& model);

} // namespace plkit

#endif
