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

#ifndef PLKIT_ESTIMATORS_HPP
#define PLKIT_ESTIMATORS_HPP

#include "plkit/models.hpp"
#include "plkit/sample.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace plkit
{

struct FitDiagnostics
{
    std::size_t n_samples = 0;
    double sse_db2 = 0.0;
    bool rank_ok = true;
    std::optional<std::string> condition_warning;
    std::size_t unit_distance_samples = 0; // CI only: samples at exactly 1 m
};

template <class Params>
struct FitResult
{
    Params params;
    FitDiagnostics diagnostics;
};

// Closed-form least squares fits. The shadow fading estimate is the RMS
// residual sqrt(SSE / N). Results do not depend on sample order: sums are
// accumulated with compensated summation over a canonically sorted copy.
//
// Errors: EmptyInput for no samples, RankDeficient when a regressor has no
// spread (the message names it), Domain for invalid samples.

/// Single-frequency FI fit; frequencies are ignored.
FitResult<FIParams> fit_fi(std::span<const PathLossSample> samples);

/// Multi-frequency ABG fit; needs two distinct distances and two distinct
/// frequencies with non-collinear log regressors.
FitResult<ABGParams> fit_abg(std::span<const PathLossSample> samples);

/// CI fit with the free space anchor at 1 m. Samples at exactly 1 m carry no
/// information about the exponent; they still count toward the SSE.
FitResult<CIParams> fit_ci(std::span<const PathLossSample> samples);

/// Sum of squared residuals of a model over the samples.
double sum_squared_residuals(std::span<const PathLossSample> samples, const ModelSpec& model);

enum class ModelFamily
{
    FI,
    ABG
};

struct SearchRange
{
    double lo = 0.0;
    double hi = 0.0;
};

struct BruteForceResult
{
    // FI: {intercept_db, distance_exponent}; ABG: {distance_exponent, offset_db, frequency_exponent}
    std::vector<double> params;
    double sse_db2 = 0.0;
    double sigma_sf_db = 0.0;
    bool on_boundary = false;
    std::optional<std::string> warning;
};

/// Exhaustive SSE minimisation over a regular parameter grid. Verification
/// oracle for the closed-form fitters; refuses grids above 1e7 points.
BruteForceResult brute_force_fit(std::span<const PathLossSample> samples,
                                 ModelFamily family,
                                 std::span<const SearchRange> box,
                                 std::span<const double> step);

} // namespace plkit

#endif
