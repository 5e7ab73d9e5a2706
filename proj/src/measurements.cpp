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

#include "plkit/measurements.hpp"
#include "plkit/error.hpp"
#include "plkit/numfmt.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>

namespace plkit
{

namespace
{

std::string trim(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = text.find_last_not_of(" \t\r\n");
    return std::string(text.substr(first, last - first + 1));
}

std::vector<std::string> split_fields(std::string_view line)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true)
    {
        const auto pos = line.find(',', start);
        out.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

bool is_skippable(const std::string& line)
{
    const std::string t = trim(line);
    return t.empty() || t.front() == '#';
}

constexpr std::string_view kRequired[] = {"frequency_ghz", "distance_m", "path_loss_db", "condition"};

std::optional<std::string> row_problem(const PathLossSample& s)
{
    if (!(s.frequency_ghz > 0.0) || !std::isfinite(s.frequency_ghz))
        return "frequency_ghz must be > 0";
    if (!(s.distance_m > 0.0) || !std::isfinite(s.distance_m))
        return "distance_m must be > 0";
    if (!std::isfinite(s.path_loss_db))
        return "path_loss_db must be finite";
    return std::nullopt;
}

std::optional<double> match_member(double f, const BandSet& band)
{
    for (double m : band.member_frequencies_ghz)
    {
        if (std::fabs(f - m) <= kFrequencyMatchGhz)
            return m;
    }
    return std::nullopt;
}

} // namespace

SampleSet load_csv(std::istream& in, std::string provenance, const ColumnMap& columns)
{
    SampleSet set;
    set.provenance = std::move(provenance);

    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string> header;
    while (std::getline(in, line))
    {
        ++line_no;
        if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0)
            line.erase(0, 3);
        if (is_skippable(line))
            continue;
        header = split_fields(line);
        break;
    }
    if (header.empty())
        throw Error(ErrorCode::EmptyInput, "empty CSV input: no header line");

    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < header.size(); ++i)
    {
        if (auto it = columns.find(header[i]); it != columns.end())
            header[i] = it->second;
        if (header[i].empty())
            throw Error(ErrorCode::Format, "empty column name in CSV header");
        if (!index.emplace(header[i], i).second)
            throw Error(ErrorCode::Format, "duplicate column '" + header[i] + "' in CSV header");
    }
    for (auto name : kRequired)
    {
        if (!index.count(std::string(name)))
            throw Error(ErrorCode::Format, "CSV header is missing required column '" + std::string(name) +
                                               "' (expected " + std::string(kCsvHeader) + ")");
    }
    const std::size_t col_f = index["frequency_ghz"];
    const std::size_t col_d = index["distance_m"];
    const std::size_t col_pl = index["path_loss_db"];
    const std::size_t col_c = index["condition"];

    while (std::getline(in, line))
    {
        ++line_no;
        if (is_skippable(line))
            continue;
        const auto fields = split_fields(line);
        if (fields.size() != header.size())
        {
            set.diagnostics.push_back({line_no, "expected " + std::to_string(header.size()) + " fields, got " +
                                                    std::to_string(fields.size())});
            continue;
        }

        PathLossSample s;
        const auto f = parse_number(fields[col_f]);
        const auto d = parse_number(fields[col_d]);
        const auto pl = parse_number(fields[col_pl]);
        if (!f || !d || !pl)
        {
            const char* bad = !f ? "frequency_ghz" : (!d ? "distance_m" : "path_loss_db");
            set.diagnostics.push_back({line_no, std::string(bad) + " is not a number"});
            continue;
        }
        s.frequency_ghz = *f;
        s.distance_m = *d;
        s.path_loss_db = *pl;
        try
        {
            s.condition = parse_condition(fields[col_c]);
        }
        catch (const Error& e)
        {
            set.diagnostics.push_back({line_no, e.what()});
            continue;
        }
        if (auto problem = row_problem(s))
        {
            set.diagnostics.push_back({line_no, *problem});
            continue;
        }
        for (std::size_t i = 0; i < header.size(); ++i)
        {
            if (i == col_f || i == col_d || i == col_pl || i == col_c || fields[i].empty())
                continue;
            s.tags.emplace_back(header[i], fields[i]);
        }
        set.samples.push_back(std::move(s));
    }
    return set;
}

SampleSet load_csv_file(const std::filesystem::path& path, const ColumnMap& columns)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::Io, "cannot open '" + path.string() + "'");
    return load_csv(in, path.string(), columns);
}

ColumnMap load_column_map(std::istream& in)
{
    ColumnMap map;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        if (is_skippable(line))
            continue;
        const auto fields = split_fields(line);
        if (fields.size() != 2 || fields[0].empty() || fields[1].empty())
            throw Error(ErrorCode::Format, "column map line " + std::to_string(line_no) + ": expected source,target");
        if (fields[0] == "source" && fields[1] == "target")
            continue;
        map[fields[0]] = fields[1];
    }
    return map;
}

ColumnMap load_column_map_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::Io, "cannot open '" + path.string() + "'");
    return load_column_map(in);
}

void write_csv(std::ostream& out, std::span<const PathLossSample> samples, std::span<const std::string> comment_lines)
{
    std::vector<std::string> tag_columns;
    for (const auto& s : samples)
    {
        for (const auto& [key, value] : s.tags)
        {
            if (std::find(tag_columns.begin(), tag_columns.end(), key) == tag_columns.end())
                tag_columns.push_back(key);
            if (value.find_first_of(",\n\r") != std::string::npos || key.find_first_of(",\n\r") != std::string::npos)
                throw Error(ErrorCode::Format, "tag '" + key + "' contains a comma or newline");
        }
    }

    for (const auto& c : comment_lines)
        out << "# " << c << '\n';
    out << kCsvHeader;
    for (const auto& t : tag_columns)
        out << ',' << t;
    out << '\n';

    for (const auto& s : samples)
    {
        out << format_number(s.frequency_ghz) << ',' << format_number(s.distance_m) << ','
            << format_number(s.path_loss_db) << ',' << to_string(s.condition);
        for (const auto& t : tag_columns)
        {
            out << ',';
            for (const auto& [key, value] : s.tags)
            {
                if (key == t)
                {
                    out << value;
                    break;
                }
            }
        }
        out << '\n';
    }
}

void validate(const BandSet& band)
{
    if (band.member_frequencies_ghz.empty())
        throw Error(ErrorCode::Config, "band '" + band.name + "' has no member frequencies");
    for (std::size_t i = 0; i < band.member_frequencies_ghz.size(); ++i)
    {
        const double f = band.member_frequencies_ghz[i];
        if (!(f > 0.0) || !std::isfinite(f))
            throw Error(ErrorCode::Config, "band frequencies must be > 0");
        for (std::size_t j = 0; j < i; ++j)
        {
            if (std::fabs(band.member_frequencies_ghz[j] - f) <= kFrequencyMatchGhz)
                throw Error(ErrorCode::Config, "band '" + band.name + "' lists " + format_number(f) + " GHz twice");
        }
    }
}

BandSet parse_band(std::string_view text)
{
    BandSet band;
    band.name = trim(text);
    if (band.name == "7-24")
        band.member_frequencies_ghz = {6.75, 16.95};
    else if (band.name == "0.5-100")
        band.member_frequencies_ghz = {6.75, 16.95, 28.0, 73.0};
    else
    {
        for (const auto& field : split_fields(band.name))
        {
            const auto f = parse_number(field);
            if (!f)
                throw Error(ErrorCode::Config, "band must be 7-24, 0.5-100 or a comma-separated frequency list");
            band.member_frequencies_ghz.push_back(*f);
        }
    }
    validate(band);
    return band;
}

std::string GroupKey::label() const
{
    std::string out;
    if (frequency_ghz)
        out = format_number(*frequency_ghz) + "GHz";
    if (condition)
        out += (out.empty() ? "" : "/") + to_string(*condition);
    return out.empty() ? "all" : out;
}

Partition partition(const SampleSet& set, bool by_condition, bool by_frequency, const std::optional<BandSet>& band)
{
    if (band)
        validate(*band);

    Partition result;
    std::map<GroupKey, std::vector<PathLossSample>> groups;
    std::vector<double> seen_frequencies;
    std::set<double> band_hits;

    for (const auto& s : set.samples)
    {
        double key_frequency = s.frequency_ghz;
        if (band)
        {
            auto member = match_member(s.frequency_ghz, *band);
            if (!member)
                continue;
            key_frequency = *member;
            band_hits.insert(*member);
        }
        else
        {
            auto it = std::find_if(seen_frequencies.begin(), seen_frequencies.end(),
                                   [&](double f) { return std::fabs(f - s.frequency_ghz) <= kFrequencyMatchGhz; });
            if (it == seen_frequencies.end())
                seen_frequencies.push_back(s.frequency_ghz);
            else
                key_frequency = *it;
        }

        GroupKey key;
        if (by_frequency)
            key.frequency_ghz = key_frequency;
        if (by_condition)
            key.condition = s.condition;
        groups[key].push_back(s);
    }

    if (band)
    {
        if (band_hits.empty())
            result.warnings.push_back("band '" + band->name + "': no matching samples");
        else
        {
            for (double m : band->member_frequencies_ghz)
            {
                if (!band_hits.count(m))
                    result.warnings.push_back("band '" + band->name + "': no samples at " + format_number(m) + " GHz");
            }
        }
    }

    for (auto& [key, samples] : groups)
        result.groups.emplace_back(key, std::move(samples));
    return result;
}

} // namespace plkit
