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

#include "plkit/models.hpp"
#include "plkit/error.hpp"
#include "plkit/numfmt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace plkit
{

namespace
{

// 3GPP TR 38.901 Table 7.4.1-1, InH-Office:
// PL = offset + distance_coeff * log10(d3D) + frequency_coeff * log10(fc)
struct InhBranch
{
    double offset_db;
    double distance_coeff;
    double frequency_coeff;
    double sigma_sf_db;
};

constexpr InhBranch kInhLos{32.4, 17.3, 20.0, 3.0};
constexpr InhBranch kInhNlosOption1{17.3, 38.3, 24.9, 8.03};
constexpr InhBranch kInhNlosOption2{32.4, 31.9, 20.0, 8.29};

const InhBranch& branch(Condition condition, NlosOption option)
{
    if (condition == Condition::Los)
        return kInhLos;
    return option == NlosOption::Option1 ? kInhNlosOption1 : kInhNlosOption2;
}

double eval_branch(const InhBranch& b, double distance_m, double frequency_ghz)
{
    return b.offset_db + b.distance_coeff * std::log10(distance_m) +
           b.frequency_coeff * std::log10(frequency_ghz);
}

void require_positive(double value, const char* name)
{
    if (!(value > 0.0) || !std::isfinite(value))
    {
        std::ostringstream msg;
        msg << name << " must be > 0 (got " << format_number(value) << ")";
        throw Error(ErrorCode::Domain, msg.str());
    }
}

void require_finite(double value, const char* name)
{
    if (!std::isfinite(value))
        throw Error(ErrorCode::InvalidArgument, std::string(name) + " must be finite");
}

void require_sigma(double sigma)
{
    require_finite(sigma, "sigma_sf_db");
    if (sigma < 0.0)
        throw Error(ErrorCode::InvalidArgument, "sigma_sf_db must be >= 0");
}

void check_inh_domain(double distance_m, double frequency_ghz, DomainMode mode,
                      std::vector<std::string>* warnings)
{
    require_positive(distance_m, "distance_m");
    require_positive(frequency_ghz, "frequency_ghz");

    std::string problem;
    if (distance_m < ThreeGppInhSpec::d3d_min_m || distance_m > ThreeGppInhSpec::d3d_max_m)
        problem = "distance_m " + format_number(distance_m) + " outside InH validity range [1, 150] m";
    else if (frequency_ghz < ThreeGppInhSpec::fc_min_ghz || frequency_ghz > ThreeGppInhSpec::fc_max_ghz)
        problem = "frequency_ghz " + format_number(frequency_ghz) +
                  " outside InH validity range [0.5, 100] GHz";

    if (problem.empty())
        return;
    if (mode == DomainMode::Strict)
        throw Error(ErrorCode::Domain, problem);
    if (warnings)
        warnings->push_back(problem);
}

} // namespace

void validate(const FIParams& params)
{
    require_finite(params.intercept_db, "intercept_db");
    require_finite(params.distance_exponent, "distance_exponent");
    require_sigma(params.sigma_sf_db);
}

void validate(const ABGParams& params)
{
    require_finite(params.distance_exponent, "distance_exponent");
    require_finite(params.offset_db, "offset_db");
    require_finite(params.frequency_exponent, "frequency_exponent");
    require_sigma(params.sigma_sf_db);
}

void validate(const CIParams& params)
{
    require_finite(params.path_loss_exponent, "path_loss_exponent");
    if (params.reference_distance_m != 1.0)
        throw Error(ErrorCode::InvalidArgument, "CI reference distance is fixed at 1 m");
    require_sigma(params.sigma_sf_db);
}

double eval_fspl_1m(double frequency_ghz)
{
    require_positive(frequency_ghz, "frequency_ghz");
    const double frequency_hz = frequency_ghz * 1e9;
    return 20.0 * std::log10(4.0 * std::numbers::pi * frequency_hz / kSpeedOfLight);
}

double eval_fi(const FIParams& params, double distance_m)
{
    validate(params);
    require_positive(distance_m, "distance_m");
    return params.intercept_db + 10.0 * params.distance_exponent * std::log10(distance_m);
}

double eval_abg(const ABGParams& params, double distance_m, double frequency_ghz)
{
    validate(params);
    require_positive(distance_m, "distance_m");
    require_positive(frequency_ghz, "frequency_ghz");
    return params.offset_db + 10.0 * params.distance_exponent * std::log10(distance_m) +
           10.0 * params.frequency_exponent * std::log10(frequency_ghz);
}

double eval_ci(const CIParams& params, double distance_m, double frequency_ghz)
{
    validate(params);
    require_positive(distance_m, "distance_m");
    return eval_fspl_1m(frequency_ghz) + 10.0 * params.path_loss_exponent * std::log10(distance_m);
}

double eval_3gpp_inh_los(double distance_m, double frequency_ghz, DomainMode mode,
                         std::vector<std::string>* warnings)
{
    check_inh_domain(distance_m, frequency_ghz, mode, warnings);
    return eval_branch(kInhLos, distance_m, frequency_ghz);
}

double eval_3gpp_inh_nlos(double distance_m, double frequency_ghz, NlosOption option,
                          bool apply_los_floor, DomainMode mode,
                          std::vector<std::string>* warnings)
{
    check_inh_domain(distance_m, frequency_ghz, mode, warnings);
    const double nlos = eval_branch(branch(Condition::Nlos, option), distance_m, frequency_ghz);
    if (!apply_los_floor)
        return nlos;
    return std::max(eval_branch(kInhLos, distance_m, frequency_ghz), nlos);
}

double eval_3gpp_inh(const ThreeGppInhSpec& spec, double distance_m, double frequency_ghz,
                     DomainMode mode, std::vector<std::string>* warnings)
{
    if (spec.condition == Condition::Los)
        return eval_3gpp_inh_los(distance_m, frequency_ghz, mode, warnings);
    return eval_3gpp_inh_nlos(distance_m, frequency_ghz, spec.nlos_option, spec.apply_los_floor,
                              mode, warnings);
}

double evaluate(const ModelSpec& model, double distance_m, double frequency_ghz, DomainMode mode,
                std::vector<std::string>* warnings)
{
    struct Visitor
    {
        double d, f;
        DomainMode mode;
        std::vector<std::string>* warnings;

        double operator()(const FIParams& p) const { return eval_fi(p, d); }
        double operator()(const ABGParams& p) const { return eval_abg(p, d, f); }
        double operator()(const CIParams& p) const { return eval_ci(p, d, f); }
        double operator()(const ThreeGppInhSpec& s) const { return eval_3gpp_inh(s, d, f, mode, warnings); }
    };
    return std::visit(Visitor{distance_m, frequency_ghz, mode, warnings}, model);
}

ABGParams threegpp_inh_coefficients(Condition condition, NlosOption option)
{
    if (condition == Condition::Los)
        return {1.73, 32.4, 2.0, 3.0};
    if (option == NlosOption::Option1)
        return {3.83, 17.3, 2.49, 8.03};
    return {3.19, 32.4, 2.0, 8.29};
}

FIParams threegpp_inh_fi_at(Condition condition, NlosOption option, double frequency_ghz)
{
    require_positive(frequency_ghz, "frequency_ghz");
    const InhBranch& b = branch(condition, option);
    return {b.offset_db + b.frequency_coeff * std::log10(frequency_ghz), b.distance_coeff / 10.0,
            b.sigma_sf_db};
}

double threegpp_inh_nominal_sigma(Condition condition, NlosOption option)
{
    return branch(condition, option).sigma_sf_db;
}

double threegpp_inh_floor_crossover_m(NlosOption option, double frequency_ghz)
{
    require_positive(frequency_ghz, "frequency_ghz");
    const InhBranch& nlos = branch(Condition::Nlos, option);
    const double gap_at_1m = eval_branch(kInhLos, 1.0, frequency_ghz) - eval_branch(nlos, 1.0, frequency_ghz);
    const double slope = nlos.distance_coeff - kInhLos.distance_coeff;
    return std::pow(10.0, gap_at_1m / slope);
}

std::string to_string(Condition condition)
{
    return condition == Condition::Los ? "LOS" : "NLOS";
}

std::string to_string(NlosOption option)
{
    return option == NlosOption::Option1 ? "Option1" : "Option2";
}

Condition parse_condition(std::string_view text)
{
    std::string upper;
    for (char c : text)
    {
        if (c == ' ' || c == '\t' || c == '\r')
            continue;
        upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    if (upper == "LOS")
        return Condition::Los;
    if (upper == "NLOS")
        return Condition::Nlos;
    throw Error(ErrorCode::InvalidArgument, "condition must be LOS or NLOS (got '" + std::string(text) + "')");
}

std::string describe(const ModelSpec& model)
{
    struct Visitor
    {
        std::string operator()(const FIParams& p) const
        {
            return "fi(" + format_number(p.intercept_db) + "," + format_number(p.distance_exponent) + ")";
        }
        std::string operator()(const ABGParams& p) const
        {
            return "abg(" + format_number(p.distance_exponent) + "," + format_number(p.offset_db) + "," +
                   format_number(p.frequency_exponent) + ")";
        }
        std::string operator()(const CIParams& p) const
        {
            return "ci(" + format_number(p.path_loss_exponent) + ")";
        }
        std::string operator()(const ThreeGppInhSpec& s) const
        {
            if (s.condition == Condition::Los)
                return "3gpp-inh-los";
            return std::string("3gpp-inh-nlos:") + (s.nlos_option == NlosOption::Option1 ? "1" : "2") +
                   (s.apply_los_floor ? "" : ":nofloor");
        }
    };
    return std::visit(Visitor{}, model);
}

} // namespace plkit
