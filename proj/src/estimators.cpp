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

#include "plkit/estimators.hpp"
#include "plkit/error.hpp"
#include "plkit/numfmt.hpp"

#include "accumulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace plkit
{

namespace
{

// Singular value ratio below which the centred regressor matrix is treated
// as rank deficient.
constexpr double kRankTolerance = 1e-10;

struct Row
{
    double distance_m;
    double frequency_ghz;
    double path_loss_db;
};

// Validated copy in a fixed order so accumulation is permutation invariant.
std::vector<Row> canonical_rows(std::span<const PathLossSample> samples)
{
    if (samples.empty())
        throw Error(ErrorCode::EmptyInput, "no samples to fit");

    std::vector<Row> rows;
    rows.reserve(samples.size());
    for (const auto& s : samples)
    {
        validate(s);
        rows.push_back({s.distance_m, s.frequency_ghz, s.path_loss_db});
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.distance_m != b.distance_m)
            return a.distance_m < b.distance_m;
        if (a.frequency_ghz != b.frequency_ghz)
            return a.frequency_ghz < b.frequency_ghz;
        return a.path_loss_db < b.path_loss_db;
    });
    return rows;
}

double mean(const std::vector<double>& v)
{
    detail::Accumulator acc;
    for (double x : v)
        acc += x;
    return acc.value() / static_cast<double>(v.size());
}

double dot(const std::vector<double>& a, const std::vector<double>& b)
{
    detail::Accumulator acc;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += a[i] * b[i];
    return acc.value();
}

std::vector<double> centred(const std::vector<double>& v, double m)
{
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = v[i] - m;
    return out;
}

std::size_t distinct_count(const std::vector<Row>& rows, double Row::*field)
{
    std::set<double> values;
    for (const auto& r : rows)
        values.insert(r.*field);
    return values.size();
}

// A centred column has collapsed when its norm is negligible next to the
// raw column norm.
bool collapsed(double centred_norm, double raw_norm, std::size_t distinct)
{
    return distinct < 2 || centred_norm <= kRankTolerance * raw_norm;
}

[[noreturn]] void throw_rank(const std::string& what)
{
    throw Error(ErrorCode::RankDeficient, "rank deficiency: " + what);
}

std::optional<std::string> conditioning_note(double ratio)
{
    if (ratio < 1e-6)
    {
        std::ostringstream msg;
        msg << "ill-conditioned regressors (singular value ratio " << ratio << ")";
        return msg.str();
    }
    return std::nullopt;
}

} // namespace

void validate(const PathLossSample& sample)
{
    if (!(sample.frequency_ghz > 0.0) || !std::isfinite(sample.frequency_ghz))
        throw Error(ErrorCode::Domain, "frequency_ghz must be > 0");
    if (!(sample.distance_m > 0.0) || !std::isfinite(sample.distance_m))
        throw Error(ErrorCode::Domain, "distance_m must be > 0");
    if (!std::isfinite(sample.path_loss_db))
        throw Error(ErrorCode::Domain, "path_loss_db must be finite");
}

FitResult<FIParams> fit_fi(std::span<const PathLossSample> samples)
{
    const auto rows = canonical_rows(samples);
    const std::size_t n = rows.size();

    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        x[i] = 10.0 * std::log10(rows[i].distance_m);
        y[i] = rows[i].path_loss_db;
    }

    const double x_mean = mean(x);
    const double y_mean = mean(y);
    const auto cx = centred(x, x_mean);
    const auto cy = centred(y, y_mean);
    const double sxx = dot(cx, cx);

    const std::size_t distinct = distinct_count(rows, &Row::distance_m);
    if (collapsed(std::sqrt(sxx), std::sqrt(dot(x, x)), distinct))
    {
        throw_rank("distance regressor 10*log10(d) has no spread (" + std::to_string(distinct) +
                   " distinct distance); FI fit needs at least 2 distinct distances");
    }

    FIParams params;
    params.distance_exponent = dot(cx, cy) / sxx;
    params.intercept_db = y_mean - params.distance_exponent * x_mean;

    detail::Accumulator sse;
    for (std::size_t i = 0; i < n; ++i)
    {
        const double r = y[i] - params.intercept_db - params.distance_exponent * x[i];
        sse += r * r;
    }

    FitResult<FIParams> result;
    result.diagnostics.n_samples = n;
    result.diagnostics.sse_db2 = std::max(0.0, sse.value());
    result.diagnostics.rank_ok = true;
    params.sigma_sf_db = std::sqrt(result.diagnostics.sse_db2 / static_cast<double>(n));
    result.params = params;
    return result;
}

FitResult<ABGParams> fit_abg(std::span<const PathLossSample> samples)
{
    const auto rows = canonical_rows(samples);
    const std::size_t n = rows.size();
    if (n < 3)
        throw_rank("ABG fit needs at least 3 samples (got " + std::to_string(n) + ")");

    std::vector<double> xd(n), xf(n), y(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        xd[i] = 10.0 * std::log10(rows[i].distance_m);
        xf[i] = 10.0 * std::log10(rows[i].frequency_ghz);
        y[i] = rows[i].path_loss_db;
    }

    const double xd_mean = mean(xd);
    const double xf_mean = mean(xf);
    const double y_mean = mean(y);
    const auto cd = centred(xd, xd_mean);
    const auto cf = centred(xf, xf_mean);
    const auto cy = centred(y, y_mean);

    const double norm_d = std::sqrt(dot(cd, cd));
    const double norm_f = std::sqrt(dot(cf, cf));
    const std::size_t distinct_d = distinct_count(rows, &Row::distance_m);
    const std::size_t distinct_f = distinct_count(rows, &Row::frequency_ghz);

    if (collapsed(norm_f, std::sqrt(dot(xf, xf)), distinct_f))
    {
        throw_rank("frequency regressor 10*log10(f) has no spread (" + std::to_string(distinct_f) +
                   " distinct frequency); the frequency exponent is undetermined - fit FI per "
                   "frequency instead");
    }
    if (collapsed(norm_d, std::sqrt(dot(xd, xd)), distinct_d))
    {
        throw_rank("distance regressor 10*log10(d) has no spread (" + std::to_string(distinct_d) +
                   " distinct distance); the distance exponent is undetermined");
    }

    // Thin QR of the centred 2-column regressor matrix [cd cf].
    std::vector<double> q1(n), q2(n);
    for (std::size_t i = 0; i < n; ++i)
        q1[i] = cd[i] / norm_d;
    const double r12 = dot(q1, cf);
    for (std::size_t i = 0; i < n; ++i)
        q2[i] = cf[i] - r12 * q1[i];
    const double r22 = std::sqrt(dot(q2, q2));

    // singular values of R = [[norm_d, r12], [0, r22]]
    const double trace = norm_d * norm_d + r12 * r12 + r22 * r22;
    const double det = norm_d * r22;
    const double disc = std::sqrt(std::max(0.0, trace * trace - 4.0 * det * det));
    const double s_max = std::sqrt((trace + disc) / 2.0);
    const double s_min = s_max > 0.0 ? det / s_max : 0.0;
    const double ratio = s_max > 0.0 ? s_min / s_max : 0.0;
    if (!(ratio >= kRankTolerance))
    {
        throw_rank("distance and frequency regressors are collinear (singular value ratio " +
                   format_number(ratio) + "); distance and frequency exponents cannot be separated");
    }

    for (std::size_t i = 0; i < n; ++i)
        q2[i] /= r22;
    const double z1 = dot(q1, cy);
    const double z2 = dot(q2, cy);

    ABGParams params;
    params.frequency_exponent = z2 / r22;
    params.distance_exponent = (z1 - r12 * params.frequency_exponent) / norm_d;
    params.offset_db = y_mean - params.distance_exponent * xd_mean - params.frequency_exponent * xf_mean;

    detail::Accumulator sse;
    for (std::size_t i = 0; i < n; ++i)
    {
        const double r = y[i] - params.offset_db - params.distance_exponent * xd[i] -
                         params.frequency_exponent * xf[i];
        sse += r * r;
    }

    FitResult<ABGParams> result;
    result.diagnostics.n_samples = n;
    result.diagnostics.sse_db2 = std::max(0.0, sse.value());
    result.diagnostics.rank_ok = true;
    result.diagnostics.condition_warning = conditioning_note(ratio);
    params.sigma_sf_db = std::sqrt(result.diagnostics.sse_db2 / static_cast<double>(n));
    result.params = params;
    return result;
}

FitResult<CIParams> fit_ci(std::span<const PathLossSample> samples)
{
    const auto rows = canonical_rows(samples);
    const std::size_t n = rows.size();

    std::vector<double> x(n), excess(n);
    std::size_t at_reference = 0;
    for (std::size_t i = 0; i < n; ++i)
    {
        x[i] = 10.0 * std::log10(rows[i].distance_m);
        excess[i] = rows[i].path_loss_db - eval_fspl_1m(rows[i].frequency_ghz);
        if (rows[i].distance_m == 1.0)
            ++at_reference;
    }

    const double sxx = dot(x, x);
    if (at_reference == n || !(sxx > 0.0))
        throw_rank("distance regressor 10*log10(d) is zero for every sample (all at the 1 m "
                   "reference distance); the CI exponent is undetermined");

    CIParams params;
    params.path_loss_exponent = dot(excess, x) / sxx;

    detail::Accumulator sse;
    for (std::size_t i = 0; i < n; ++i)
    {
        const double r = excess[i] - params.path_loss_exponent * x[i];
        sse += r * r;
    }

    FitResult<CIParams> result;
    result.diagnostics.n_samples = n;
    result.diagnostics.sse_db2 = std::max(0.0, sse.value());
    result.diagnostics.rank_ok = true;
    result.diagnostics.unit_distance_samples = at_reference;
    if (at_reference > 0)
    {
        result.diagnostics.condition_warning =
            std::to_string(at_reference) + " sample(s) at the 1 m reference distance do not constrain the exponent";
    }
    params.sigma_sf_db = std::sqrt(result.diagnostics.sse_db2 / static_cast<double>(n));
    result.params = params;
    return result;
}

double sum_squared_residuals(std::span<const PathLossSample> samples, const ModelSpec& model)
{
    detail::Accumulator sse;
    for (const auto& s : samples)
    {
        const double r = s.path_loss_db - evaluate(model, s.distance_m, s.frequency_ghz, DomainMode::Permissive);
        sse += r * r;
    }
    return sse.value();
}

BruteForceResult brute_force_fit(std::span<const PathLossSample> samples, ModelFamily family,
                                 std::span<const SearchRange> box, std::span<const double> step)
{
    if (samples.empty())
        throw Error(ErrorCode::EmptyInput, "no samples to fit");
    const std::size_t dims = family == ModelFamily::FI ? 2 : 3;
    if (box.size() != dims || step.size() != dims)
        throw Error(ErrorCode::InvalidArgument, "search box and step must have one entry per parameter");

    std::vector<std::size_t> counts(dims);
    double total = 1.0;
    for (std::size_t k = 0; k < dims; ++k)
    {
        if (!(step[k] > 0.0) || !(box[k].hi >= box[k].lo))
            throw Error(ErrorCode::InvalidArgument, "invalid search box or step");
        counts[k] = static_cast<std::size_t>(std::floor((box[k].hi - box[k].lo) / step[k] + 1e-9)) + 1;
        total *= static_cast<double>(counts[k]);
    }
    if (total > 1e7)
        throw Error(ErrorCode::InvalidArgument, "brute force grid exceeds 1e7 points");

    const std::size_t n = samples.size();
    std::vector<double> xd(n), xf(n), y(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        validate(samples[i]);
        xd[i] = 10.0 * std::log10(samples[i].distance_m);
        xf[i] = 10.0 * std::log10(samples[i].frequency_ghz);
        y[i] = samples[i].path_loss_db;
    }

    auto value_at = [&](std::size_t k, std::size_t idx) { return box[k].lo + static_cast<double>(idx) * step[k]; };

    double best = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> best_idx(dims, 0);

    if (family == ModelFamily::FI)
    {
        for (std::size_t i = 0; i < counts[0]; ++i)
        {
            const double intercept = value_at(0, i);
            for (std::size_t j = 0; j < counts[1]; ++j)
            {
                const double exponent = value_at(1, j);
                double sse = 0.0;
                for (std::size_t s = 0; s < n; ++s)
                {
                    const double r = y[s] - intercept - exponent * xd[s];
                    sse += r * r;
                }
                if (sse < best)
                {
                    best = sse;
                    best_idx = {i, j};
                }
            }
        }
    }
    else
    {
        for (std::size_t i = 0; i < counts[0]; ++i)
        {
            const double alpha = value_at(0, i);
            for (std::size_t j = 0; j < counts[1]; ++j)
            {
                const double beta = value_at(1, j);
                for (std::size_t k = 0; k < counts[2]; ++k)
                {
                    const double gamma = value_at(2, k);
                    double sse = 0.0;
                    for (std::size_t s = 0; s < n; ++s)
                    {
                        const double r = y[s] - beta - alpha * xd[s] - gamma * xf[s];
                        sse += r * r;
                    }
                    if (sse < best)
                    {
                        best = sse;
                        best_idx = {i, j, k};
                    }
                }
            }
        }
    }

    BruteForceResult result;
    result.sse_db2 = best;
    result.sigma_sf_db = std::sqrt(best / static_cast<double>(n));
    for (std::size_t k = 0; k < dims; ++k)
    {
        result.params.push_back(value_at(k, best_idx[k]));
        if (counts[k] > 1 && (best_idx[k] == 0 || best_idx[k] + 1 == counts[k]))
            result.on_boundary = true;
    }
    if (result.on_boundary)
        result.warning = "optimum lies on the search box boundary; widen the box";
    return result;
}

} // namespace plkit
