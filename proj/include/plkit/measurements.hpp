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

#ifndef PLKIT_MEASUREMENTS_HPP
#define PLKIT_MEASUREMENTS_HPP

#include "plkit/sample.hpp"

#include <compare>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace plkit
{

/// A rejected input row. `line` is the 1-based line number in the file.
struct RowDiagnostic
{
    std::size_t line = 0;
    std::string reason;
};

struct SampleSet
{
    std::vector<PathLossSample> samples;
    std::string provenance;
    std::vector<RowDiagnostic> diagnostics;
};

/// Source column name -> canonical column name.
using ColumnMap = std::map<std::string, std::string>;

inline constexpr std::string_view kCsvHeader = "frequency_ghz,distance_m,path_loss_db,condition";

/**
 * Reads path loss samples from CSV text.
 *
 * The header must name frequency_ghz, distance_m, path_loss_db and condition
 * (after applying `columns`). Extra columns become sample tags. Lines
 * starting with '#' and blank lines are skipped. Rows that fail to parse or
 * violate the sample invariants are dropped and listed in `diagnostics`.
 *
 * Throws Error(EmptyInput) when there is no header line and Error(Format)
 * when a required column is missing.
 */
SampleSet load_csv(std::istream& in, std::string provenance = {}, const ColumnMap& columns = {});
SampleSet load_csv_file(const std::filesystem::path& path, const ColumnMap& columns = {});

/// Two-column CSV "source,target" rename table; '#' comments allowed.
ColumnMap load_column_map(std::istream& in);
ColumnMap load_column_map_file(const std::filesystem::path& path);

/// Writes the canonical header plus the union of tag columns. Numbers use
/// the shortest round-trip representation.
void write_csv(std::ostream& out,
               std::span<const PathLossSample> samples,
               std::span<const std::string> comment_lines = {});

/// Named collection of measured centre frequencies pooled for ABG fits.
struct BandSet
{
    std::string name;
    std::vector<double> member_frequencies_ghz;
};

void validate(const BandSet& band);

/// "7-24" -> {6.75, 16.95}; "0.5-100" -> {6.75, 16.95, 28, 73}; otherwise a
/// comma-separated frequency list.
BandSet parse_band(std::string_view text);

/// Frequency match tolerance for band membership and grouping.
inline constexpr double kFrequencyMatchGhz = 1e-9;

struct GroupKey
{
    std::optional<double> frequency_ghz;
    std::optional<Condition> condition;

    std::string label() const; // "6.75GHz/LOS", "LOS", "all"
    auto operator<=>(const GroupKey&) const = default;
};

struct Partition
{
    std::vector<std::pair<GroupKey, std::vector<PathLossSample>>> groups; // sorted by key
    std::vector<std::string> warnings;
};

/// Splits a sample set by condition and/or frequency after optional band
/// filtering. Groups are disjoint and cover the filtered input.
Partition partition(const SampleSet& set,
                    bool by_condition,
                    bool by_frequency,
                    const std::optional<BandSet>& band = std::nullopt);

} // namespace plkit

#endif
