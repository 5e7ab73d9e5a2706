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

#include "plkit/error.hpp"
#include "plkit/measurements.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <set>
#include <sstream>

using namespace plkit;

namespace
{

SampleSet parse(const std::string& text, const ColumnMap& map = {})
{
    std::istringstream in(text);
    return load_csv(in, "test", map);
}

SampleSet four_frequency_set()
{
    SampleSet set;
    int i = 0;
    for (double f : {6.75, 16.95, 28.0, 73.0})
        for (auto c : {Condition::Los, Condition::Nlos})
            for (int k = 0; k < 3; ++k)
                set.samples.push_back({f, 5.0 + i++, 80.0, c, {}});
    return set;
}

} // namespace

TEST_CASE("load a row with an extra tag column")
{
    const auto set = parse("frequency_ghz,distance_m,path_loss_db,condition,polarization\n6.75,13.0,75.2,LOS,VV\n");
    REQUIRE(set.samples.size() == 1);
    const auto& s = set.samples[0];
    CHECK(s.frequency_ghz == 6.75);
    CHECK(s.distance_m == 13.0);
    CHECK(s.path_loss_db == 75.2);
    CHECK(s.condition == Condition::Los);
    REQUIRE(s.tags.size() == 1);
    CHECK(s.tags[0] == std::pair<std::string, std::string>{"polarization", "VV"});
}

TEST_CASE("invalid rows are rejected with diagnostics")
{
    const auto set = parse("# comment\nfrequency_ghz,distance_m,path_loss_db,condition\n"
                           "6.75,-5,70,LOS\n"
                           "6.75,10,abc,LOS\n"
                           "6.75,10,70\n"
                           "6.75,10,70,MAYBE\n"
                           "\n"
                           "6.75,10,70,nlos\n");
    CHECK(set.samples.size() == 1);
    REQUIRE(set.diagnostics.size() == 4);
    CHECK(set.diagnostics[0].reason.find("distance_m must be > 0") != std::string::npos);
    CHECK(set.diagnostics[0].line == 3);
    CHECK(set.samples[0].condition == Condition::Nlos);
}

TEST_CASE("20 rows at one frequency")
{
    std::string text = "frequency_ghz,distance_m,path_loss_db,condition\n";
    for (int i = 0; i < 20; ++i)
        text += "6.75," + std::to_string(13 + 4 * i) + ",80," + (i < 7 ? "LOS" : "NLOS") + "\n";
    const auto set = parse(text);
    CHECK(set.samples.size() == 20);
    const auto part = partition(set, true, false);
    REQUIRE(part.groups.size() == 2);
    CHECK(part.groups[0].second.size() == 7);
    CHECK(part.groups[1].second.size() == 13);
}

TEST_CASE("header errors")
{
    CHECK_THROWS_AS(parse(""), Error);
    CHECK_THROWS_AS(parse("frequency_ghz,distance_m,condition\n"), Error);
    CHECK_THROWS_AS(parse("frequency_ghz,distance_m,path_loss_db,condition,distance_m\n"), Error);
}

TEST_CASE("column rename adapter")
{
    std::istringstream map_text("source,target\nFreq,frequency_ghz\nDist3D,distance_m\nPL,path_loss_db\nEnv,condition\n");
    const auto map = load_column_map(map_text);
    const auto set = parse("Freq,Dist3D,PL,Env,Site\n16.95,20,90.5,NLOS,A\n", map);
    REQUIRE(set.samples.size() == 1);
    CHECK(set.samples[0].frequency_ghz == 16.95);
    CHECK(set.samples[0].tags[0].first == "Site");
}

TEST_CASE("write and reload round trip")
{
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(1, 100);
    std::vector<PathLossSample> samples;
    for (int i = 0; i < 200; ++i)
    {
        PathLossSample s{u(rng), u(rng), 40 + u(rng), i % 3 ? Condition::Los : Condition::Nlos, {}};
        if (i % 5 == 0)
            s.tags = {{"pol", "VH"}};
        samples.push_back(s);
    }
    std::ostringstream out;
    const std::string comments[] = {"generated"};
    write_csv(out, samples, comments);
    const auto back = parse(out.str());
    REQUIRE(back.samples.size() == samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i)
    {
        CHECK(std::abs(back.samples[i].frequency_ghz - samples[i].frequency_ghz) <= 1e-12);
        CHECK(std::abs(back.samples[i].distance_m - samples[i].distance_m) <= 1e-12);
        CHECK(std::abs(back.samples[i].path_loss_db - samples[i].path_loss_db) <= 1e-12);
        CHECK(back.samples[i].condition == samples[i].condition);
        if (!samples[i].tags.empty())
            CHECK(back.samples[i].tags == samples[i].tags);
    }
    std::vector<PathLossSample> bad{{6.75, 1, 50, Condition::Los, {{"note", "a,b"}}}};
    std::ostringstream sink;
    CHECK_THROWS_AS(write_csv(sink, bad), Error);
}

TEST_CASE("bands")
{
    CHECK(parse_band("7-24").member_frequencies_ghz == std::vector<double>{6.75, 16.95});
    CHECK(parse_band("0.5-100").member_frequencies_ghz == std::vector<double>{6.75, 16.95, 28, 73});
    CHECK(parse_band("6.75,28").member_frequencies_ghz == std::vector<double>{6.75, 28});
    CHECK_THROWS_AS(parse_band("6.75,6.75"), Error);
    CHECK_THROWS_AS(parse_band("7 to 24"), Error);
    CHECK_THROWS_AS(validate(BandSet{"x", {}}), Error);
}

TEST_CASE("partition properties")
{
    const auto set = four_frequency_set();
    auto p = partition(set, true, false);
    CHECK(p.groups.size() == 2);
    CHECK(p.groups[0].second.size() + p.groups[1].second.size() == set.samples.size());

    p = partition(set, true, true);
    CHECK(p.groups.size() == 8);

    p = partition(set, false, false, parse_band("7-24"));
    REQUIRE(p.groups.size() == 1);
    for (const auto& s : p.groups[0].second)
        CHECK((s.frequency_ghz == 6.75 || s.frequency_ghz == 16.95));
    CHECK(p.groups[0].second.size() == 12);

    p = partition(set, false, false, parse_band("6.75,99"));
    CHECK(!p.warnings.empty());

    // disjoint and covering
    for (bool bc : {false, true})
        for (bool bf : {false, true})
        {
            p = partition(set, bc, bf, parse_band("0.5-100"));
            std::set<double> seen;
            std::size_t total = 0;
            for (const auto& [key, group] : p.groups)
            {
                for (const auto& s : group)
                {
                    CHECK(seen.insert(s.distance_m).second);
                    if (key.condition)
                        CHECK(s.condition == *key.condition);
                    if (key.frequency_ghz)
                        CHECK(s.frequency_ghz == *key.frequency_ghz);
                }
                total += group.size();
            }
            CHECK(total == set.samples.size());
        }
}

TEST_CASE("group labels")
{
    CHECK(GroupKey{6.75, Condition::Los}.label() == "6.75GHz/LOS");
    CHECK(GroupKey{std::nullopt, Condition::Nlos}.label() == "NLOS");
    CHECK(GroupKey{}.label() == "all");
}
