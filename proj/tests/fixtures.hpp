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

// Reference measured-side parameter sets and CSV fixtures built from them.
// Each fixture row pair straddles the model mean by +/- sigma, so fitting the
// file returns the reference parameters exactly.

#ifndef PLKIT_TEST_FIXTURES_HPP
#define PLKIT_TEST_FIXTURES_HPP

#include "oracles.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <string>
#include <vector>

namespace fixture
{

struct FiRow
{
    double frequency_ghz;
    plkit::Condition condition;
    double intercept_db, exponent, sigma_db;
    // expected absolute deltas: exponent and sigma, Option1 then Option2 (NLOS)
    std::vector<double> d_exponent, d_sigma;
};

struct AbgRow
{
    const char* band;
    plkit::Condition condition;
    double alpha, beta, gamma, sigma_db;
    std::vector<double> d_alpha, d_gamma, d_sigma;
};

inline const std::vector<FiRow>& fi_rows()
{
    using plkit::Condition;
    static const std::vector<FiRow> rows{
        {6.75, Condition::Los, 43.4, 1.7, 3.4, {0.03}, {0.4}},
        {6.75, Condition::Nlos, 35.2, 3.6, 9.0, {0.23, 0.41}, {0.97, 0.71}},
        {16.95, Condition::Los, 50.9, 1.7, 2.4, {0.03}, {0.6}},
        {16.95, Condition::Nlos, 61.0, 2.8, 8.1, {1.03, 0.39}, {0.07, 0.19}},
    };
    return rows;
}

inline const std::vector<AbgRow>& abg_rows()
{
    using plkit::Condition;
    static const std::vector<AbgRow> rows{
        {"7-24", Condition::Los, 1.7, 28.2, 1.9, 2.9, {0.03}, {0.1}, {0.1}},
        {"7-24", Condition::Nlos, 3.2, 12.9, 3.4, 8.6, {0.63, 0.01}, {0.91, 1.4}, {0.57, 0.31}},
        {"0.5-100", Condition::Los, 1.4, 29.5, 2.1, 2.7, {0.33}, {0.1}, {0.3}},
        {"0.5-100", Condition::Nlos, 3.4, 12.9, 2.9, 10.1, {0.43, 0.21}, {0.41, 0.9}, {2.07, 1.81}},
    };
    return rows;
}

inline std::vector<double> band_members(const std::string& band)
{
    if (band == "7-24")
        return {6.75, 16.95};
    return {6.75, 16.95, 28.0, 73.0};
}

inline std::string shortest(double v)
{
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

inline void write_samples(const std::string& path, const std::vector<plkit::PathLossSample>& samples)
{
    std::ofstream out(path);
    out << "frequency_ghz,distance_m,path_loss_db,condition\n";
    for (const auto& s : samples)
        out << shortest(s.frequency_ghz) << ',' << shortest(s.distance_m) << ',' << shortest(s.path_loss_db) << ','
            << (s.condition == plkit::Condition::Los ? "LOS" : "NLOS") << '\n';
}

// Per-frequency FI measured sets over 13-97 m.
inline std::vector<plkit::PathLossSample> fi_samples()
{
    std::vector<plkit::PathLossSample> all;
    for (const auto& r : fi_rows())
    {
        auto part = oracle::plus_minus_fixture(
            [&](double d, double) { return r.intercept_db + 10 * r.exponent * std::log10(d); }, {r.frequency_ghz},
            oracle::log_distances(13, 97, 12), r.sigma_db, r.condition);
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

// Band-pooled ABG measured sets for one band.
inline std::vector<plkit::PathLossSample> abg_samples(const std::string& band)
{
    std::vector<plkit::PathLossSample> all;
    for (const auto& r : abg_rows())
    {
        if (band != r.band)
            continue;
        auto part = oracle::plus_minus_fixture(
            [&](double d, double f) { return r.beta + 10 * r.alpha * std::log10(d) + 10 * r.gamma * std::log10(f); },
            band_members(band), oracle::log_distances(13, 97, 12), r.sigma_db, r.condition);
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

} // namespace fixture

#endif
