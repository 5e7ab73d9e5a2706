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

// Drives the built plkit executable end to end.

#include "fixtures.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;
using nlohmann::json;

namespace
{

struct Run
{
    int code = -1;
    std::string out, err;
};

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

const fs::path& workdir()
{
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("plkit_cli_test_" + std::to_string(::getpid()));
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

Run run(const std::string& args, const std::string& env = "")
{
    const auto out = workdir() / "stdout.txt", err = workdir() / "stderr.txt";
    const std::string cmd = env + (env.empty() ? "" : " ") + std::string(PLKIT_CLI_PATH) + " " + args + " >" +
                            out.string() + " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

std::string effective_args(const std::string& err)
{
    const std::string tag = "# effective: plkit ";
    const auto pos = err.find(tag);
    REQUIRE(pos != std::string::npos);
    const auto end = err.find('\n', pos);
    return err.substr(pos + tag.size(), end - pos - tag.size());
}

std::string path(const std::string& name)
{
    return (workdir() / name).string();
}

} // namespace

TEST_CASE("eval")
{
    auto r = run("eval --model 3gpp-inh-los -d 10 -f 6.75");
    CHECK(r.code == 0);
    CHECK(r.out == "66.286\n");
    r = run("eval --model 3gpp-inh-nlos --option 1 -d 2 -f 6.75");
    CHECK(r.out == "54.194\n");
    r = run("eval --model fi --intercept 0 --exponent 0 -d 5");
    CHECK(r.code == 0);
    CHECK(std::stod(r.out) == 0.0);
    r = run("eval --model fspl -d 1 -f 1 --precision 4");
    CHECK(r.out == "32.4478\n");
    r = run("eval --model ci --exponent 2 -d 10 -f 1 --precision 4");
    CHECK(r.out == "52.4478\n");
    r = run("eval --model abg --alpha 3.83 --beta 17.3 --gamma 2.49 -d 1 -f 6.75");
    CHECK(r.out == "37.950\n");
}

TEST_CASE("eval errors and exit codes")
{
    CHECK(run("eval --model 3gpp-inh-los -f 6.75").code == 2);
    CHECK(run("eval --model nope -d 1 -f 1").code == 2);
    CHECK(run("eval --model fi --intercept 1 -d 1").code == 2);
    CHECK(run("eval --model 3gpp-inh-los -d 10").code == 2);
    CHECK(run("").code == 2);
    auto r = run("eval --model 3gpp-inh-los -d 200 -f 6.75");
    CHECK(r.code == 1);
    CHECK(r.err.find("validity range") != std::string::npos);
    r = run("eval --model 3gpp-inh-los -d 200 -f 6.75 --permissive");
    CHECK(r.code == 0);
    CHECK(r.err.find("warning") != std::string::npos);
    CHECK(run("eval --model fi --intercept 1 --exponent 1 -d -3").code == 1);
}

TEST_CASE("synth then fit")
{
    const auto a = path("los.csv"), b = path("los2.csv");
    auto r = run("synth --model 3gpp-inh-los -f 6.75 --grid log:1:100:100 --sf off --out " + a);
    REQUIRE(r.code == 0);
    CHECK(run("synth --model 3gpp-inh-los -f 6.75 --grid log:1:100:100 --sf off --out " + b).code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(!fs::exists(a + ".tmp"));

    r = run("fit --in " + a + " --model fi");
    REQUIRE(r.code == 0);
    const auto doc = json::parse(r.out);
    REQUIRE(doc["groups"].size() == 1);
    const auto& p = doc["groups"][0]["params"];
    CHECK(std::abs(p["intercept_db"].get<double>() - 48.98) < 0.01);
    CHECK(std::abs(p["distance_exponent"].get<double>() - 1.73) < 0.005);
}

TEST_CASE("synth with shadow fading recovers sigma")
{
    const auto f = path("sf.csv");
    REQUIRE(run("synth --model 3gpp-inh-los -f 6.75 --sf gaussian:3 --seed 7 -n 100000 --out " + f).code == 0);
    const auto r = run("fit --in " + f + " --model fi");
    REQUIRE(r.code == 0);
    const double sigma = json::parse(r.out)["groups"][0]["params"]["sigma_sf_db"];
    CHECK(sigma >= 2.95);
    CHECK(sigma <= 3.05);
}

TEST_CASE("seed default comes from the environment and is surfaced")
{
    auto r = run("synth --model 3gpp-inh-los --sf gaussian:3 -n 5", "PLKIT_SEED=31");
    REQUIRE(r.code == 0);
    CHECK(r.err.find("--seed 31") != std::string::npos);
    const auto with_env = r.out;
    r = run("synth --model 3gpp-inh-los --sf gaussian:3 -n 5 --seed 31");
    CHECK(r.out == with_env);
    CHECK(run("synth --model 3gpp-inh-los -n 5", "PLKIT_SEED=abc").code == 2);
}

TEST_CASE("every subcommand reproduces from its effective line")
{
    const auto data = path("fi_fixture.csv");
    fixture::write_samples(data, fixture::fi_samples());
    const std::string commands[] = {
        "eval --model 3gpp-inh-nlos --option 2 -d 7 -f 16.95",
        "synth --model abg --alpha 2 --beta 30 --gamma 2 --frequencies 6.75,28 --sf gaussian:2 --seed 5 "
        "--grid linear:2:50:7 --replicates 2 --label NLOS",
        "fit --in " + data + " --model ci",
        "validate --in " + data + " --mode fi --format markdown",
    };
    for (const auto& c : commands)
    {
        const auto first = run(c);
        REQUIRE(first.code == 0);
        const auto again = run(effective_args(first.err));
        CHECK(again.code == 0);
        CHECK(again.out == first.out);
        CHECK(effective_args(again.err) == effective_args(first.err));
    }

    const auto dir1 = path("plot1");
    const auto first = run("plot-data --in " + data + " --model fit-fi:LOS@6.75 --model 3gpp-inh-los@6.75 --out " + dir1);
    REQUIRE(first.code == 0);
    auto args = effective_args(first.err);
    const auto dir2 = path("plot2");
    args.replace(args.find(dir1), dir1.size(), dir2);
    REQUIRE(run(args).code == 0);
    for (const auto& entry : fs::directory_iterator(dir1))
        CHECK(slurp(entry.path()) == slurp(fs::path(dir2) / entry.path().filename()));
}

TEST_CASE("rank deficiency exits 1 and names the regressor")
{
    const auto one_f = path("one_f.csv");
    REQUIRE(run("synth --model 3gpp-inh-los -f 6.75 -n 20 --out " + one_f).code == 0);
    auto r = run("fit --in " + one_f + " --model abg");
    CHECK(r.code == 1);
    CHECK(r.err.find("frequency regressor") != std::string::npos);
    CHECK(r.out.empty());

    const auto one_d = path("one_d.csv");
    REQUIRE(run("synth --model 3gpp-inh-los --frequencies 6.75,16.95 --grid linear:10:10.5:2 --out " + one_d).code == 0);
    {
        // keep only the 10 m rows
        std::ifstream in(one_d);
        std::string line, kept;
        while (std::getline(in, line))
            if (line.find(",10,") != std::string::npos || line.rfind("frequency", 0) == 0)
                kept += line + "\n";
        std::ofstream(one_d) << kept;
    }
    r = run("fit --in " + one_d + " --model fi");
    CHECK(r.code == 1);
    CHECK(r.err.find("distance regressor") != std::string::npos);

    r = run("validate --in " + one_f + " --mode abg --band 7-24");
    CHECK(r.code == 1);
    CHECK(r.err.find("frequency") != std::string::npos);
}

TEST_CASE("validate FI against the reference fixture")
{
    const auto data = path("fi_fixture.csv");
    fixture::write_samples(data, fixture::fi_samples());
    auto r = run("validate --in " + data + " --mode fi --format json");
    REQUIRE(r.code == 0);
    const auto doc = json::parse(r.out);
    REQUIRE(doc["rows"].size() == 4);
    const auto& nlos = doc["rows"][1];
    CHECK(nlos["condition"] == "NLOS");
    CHECK(std::abs(nlos["threegpp_option1"]["intercept_db"].get<double>() - 37.94) <= 0.01);
    CHECK(std::abs(nlos["threegpp_option2"]["intercept_db"].get<double>() - 48.98) <= 0.01);
    CHECK(nlos["provenance"]["threegpp_source"] == "fit_of_synthetic");
    CHECK(nlos["provenance"]["threegpp_sigma_sf"] == "nominal");

    r = run("validate --in " + data + " --mode fi --format csv");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("6.75 GHz,NLOS,35.20,3.60,9.00,37.95/48.99,3.83/3.19,8.03/8.29,0.23/0.41,0.97/0.71") !=
          std::string::npos);
}

TEST_CASE("validate FI on the synthetic self-test is all zeros")
{
    const auto data = path("self.csv");
    REQUIRE(run("synth --model 3gpp-inh-los -f 16.95 --out " + data).code == 0);
    const auto r = run("validate --in " + data + " --threegpp fit");
    REQUIRE(r.code == 0);
    const auto doc = json::parse(r.out);
    const auto& row = doc["rows"][0];
    CHECK(std::abs(row["measured"]["intercept_db"].get<double>() - row["threegpp_option1"]["intercept_db"].get<double>()) <
          1e-9);
    CHECK(row["deltas"]["option1"]["distance_exponent"].get<double>() < 1e-9);
}

TEST_CASE("validate ABG against the reference fixture")
{
    const auto data = path("abg_fixture.csv");
    fixture::write_samples(data, fixture::abg_samples("7-24"));
    const auto r = run("validate --in " + data + " --mode abg --band 7-24 --format csv");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("7-24,LOS,1.70,28.20,1.90,2.90,1.73,32.40,2.00,3.00,0.03,0.10,0.10,direct_coefficient_read") !=
          std::string::npos);
}

TEST_CASE("usage errors leave no output files")
{
    const auto f = path("never.csv");
    CHECK(run("synth --model 3gpp-inh-los --grid log:1:100 --out " + f).code == 2);
    CHECK(run("synth --model 3gpp-inh-los --sf gauss:3 --out " + f).code == 2);
    CHECK(run("synth --model fi --out " + f).code == 2);
    CHECK(run("synth --model 3gpp-inh-los -n 1 --out " + f).code == 2);
    CHECK(!fs::exists(f));
    CHECK(!fs::exists(f + ".tmp"));

    const auto data = path("fi_fixture.csv");
    fixture::write_samples(data, fixture::fi_samples());
    const auto rep = path("never.json");
    CHECK(run("validate --in " + data + " --mode abg --band 7..24 --out " + rep).code == 2);
    CHECK(run("validate --in " + data + " --mode abg --out " + rep).code == 2);
    CHECK(run("validate --in " + data + " --los-grid bad --out " + rep).code == 2);
    CHECK(run("validate --in " + data + " --format xml --out " + rep).code == 2);
    CHECK(!fs::exists(rep));

    const auto dir = path("never_dir");
    CHECK(run("plot-data --in " + data + " --grid log:1 --out " + dir).code == 2);
    CHECK(!fs::exists(dir));
}

TEST_CASE("plot-data writes one file per series plus a bundle")
{
    const auto data = path("fi_fixture.csv");
    fixture::write_samples(data, fixture::fi_samples());
    const auto dir = path("plots");
    const auto r = run("plot-data --in " + data +
                       " --model fitlos=fit-fi:LOS@6.75 --model fitnlos=fit-fi:NLOS@6.75 --model 3gpp-inh-los@6.75 "
                       "--grid log:1:100:100 --out " + dir);
    REQUIRE(r.code == 0);
    const auto bundle = json::parse(slurp(fs::path(dir) / "plot.json"));
    REQUIRE(bundle["series"].size() == 5);
    const auto& line = bundle["series"][4];
    CHECK(std::abs(line["path_loss_db"][0].get<double>() - 48.986) < 5e-4);
    CHECK(std::abs(line["path_loss_db"][99].get<double>() - 83.586) < 5e-4);
    std::size_t csv_files = 0;
    for (const auto& e : fs::directory_iterator(dir))
        csv_files += e.path().extension() == ".csv";
    CHECK(csv_files == 5);
    CHECK(run("plot-data --in " + data + " --model nonsense --out " + path("p2")).code == 2);
    CHECK(!fs::exists(path("p2")));
}

TEST_CASE("column map adapter and rejected rows")
{
    const auto data = path("raw.csv"), map = path("map.csv");
    std::ofstream(data) << "Freq,Dist,PL,Env,Site\n6.75,13,75.2,LOS,A\n6.75,-1,70,LOS,A\n6.75,40,85,LOS,B\n";
    std::ofstream(map) << "source,target\nFreq,frequency_ghz\nDist,distance_m\nPL,path_loss_db\nEnv,condition\n";
    const auto r = run("fit --in " + data + " --columns " + map);
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["rejected_rows"] == 1);
    CHECK(r.err.find("distance_m must be > 0") != std::string::npos);
    CHECK(run("fit --in " + data).code == 1);
    CHECK(run("fit --in " + path("missing.csv")).code == 1);
}
