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

#ifndef PLKIT_NUMFMT_HPP
#define PLKIT_NUMFMT_HPP

#include <optional>
#include <string>
#include <string_view>

namespace plkit
{

/// Shortest decimal text that parses back to the same double.
std::string format_number(double value);

/// Rounds half away from zero at `decimals` places, working on the shortest
/// decimal representation so 48.985 renders "48.99" and not "48.98".
/// Always prints exactly `decimals` fractional digits.
std::string round_half_away(double value, int decimals = 2);

/// Locale-independent strict parse; nullopt on trailing junk or empty text.
std::optional<double> parse_number(std::string_view text);

} // namespace plkit

#endif
