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

#ifndef PLKIT_SAMPLE_HPP
#define PLKIT_SAMPLE_HPP

#include "plkit/models.hpp"

#include <string>
#include <utility>
#include <vector>

namespace plkit
{

/// One omnidirectional path loss observation.
struct PathLossSample
{
    double frequency_ghz = 0.0;
    double distance_m = 0.0; // 3D separation
    double path_loss_db = 0.0;
    Condition condition = Condition::Los;
    std::vector<std::pair<std::string, std::string>> tags; // e.g. {"polarization", "VV"}

    bool operator==(const PathLossSample&) const = default;
};

/// Throws Error(Domain) when frequency or distance is not positive, or the
/// path loss is not finite.
void validate(const PathLossSample& sample);

} // namespace plkit

#endif
