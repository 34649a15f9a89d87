// Copyright 2026 The spindomain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "spindomain/cli.hpp"

using namespace spindomain::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "spindomain");
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

using Table = std::vector<std::vector<std::string>>;

Table parse_csv(const std::string& text)
{
    Table rows;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
        std::vector<std::string> cells;
        std::istringstream fields(line);
        for (std::string cell; std::getline(fields, cell, ',');) cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    return rows;
}

} // namespace

TEST_CASE("parse_range")
{
    CHECK(parse_range("4")->first == 4);
    CHECK(parse_range("4")->last == 4);
    CHECK(parse_range("2..20")->last == 20);
    CHECK_FALSE(parse_range("5..2"));
    CHECK_FALSE(parse_range("a..3"));
    CHECK_FALSE(parse_range("1..."));
    CHECK_FALSE(parse_range(""));
}

TEST_CASE("evolve approaches the steady weights")
{
    const Outcome r =
        invoke({"evolve", "--na", "4", "--nb", "1", "--t-end", "3", "--elements", "rho_6_6,rho_10_10"});
    REQUIRE(r.code == kExitOk);
    const Table t = parse_csv(r.out);
    CHECK(t.front() == std::vector<std::string>{"t_tilde", "rho_6_6", "rho_10_10"});
    CHECK(std::stod(t.back()[0]) == 3.0);
    CHECK(std::stod(t.back()[1]) == doctest::Approx(0.2).epsilon(1e-3));
    CHECK(std::stod(t.back()[2]) == doctest::Approx(0.8).epsilon(1e-3));
    CHECK(std::stod(t[2][0]) == doctest::Approx(0.01));
}

TEST_CASE("evolve with zero duration prints the initial state")
{
    const Outcome r = invoke({"evolve", "--na", "1", "--nb", "1", "--t-end", "0"});
    REQUIRE(r.code == kExitOk);
    const Table t = parse_csv(r.out);
    REQUIRE(t.size() == 2);
    CHECK(t[0] == std::vector<std::string>{"t_tilde", "rho_1_1", "rho_2_2", "rho_3_3", "rho_4_4"});
    const std::vector<double> expected{0.0, 0.0, 0.5, 0.0, 0.5};
    REQUIRE(t[1].size() == expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) {
        CHECK(std::abs(std::stod(t[1][k]) - expected[k]) <= 1e-15);
    }
}

TEST_CASE("evolve coherence column follows the closed form")
{
    const Outcome r = invoke({"evolve", "--na", "2", "--nb", "1", "--elements", "rho_2_5"});
    REQUIRE(r.code == kExitOk);
    const Table t = parse_csv(r.out);
    REQUIRE(t.size() > 100);
    for (std::size_t k = 1; k < t.size(); ++k) {
        const double time = std::stod(t[k][0]);
        CHECK(std::abs(std::stod(t[k][1]) + std::sqrt(2.0) / 3.0 * std::exp(-5.0 * time)) <= 1e-8);
    }
}

TEST_CASE("evolve rejects bad labels and parameters")
{
    Outcome r = invoke({"evolve", "--na", "2", "--nb", "1", "--elements", "rho_2_7"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("rho_2_7") != std::string::npos);
    CHECK(r.out.empty());

    CHECK(invoke({"evolve", "--na", "1", "--nb", "2"}).code == kExitUsage);
    CHECK(invoke({"evolve", "--na", "2", "--step", "0"}).code == kExitUsage);
    CHECK(invoke({"evolve", "--na", "2", "--t-end", "-1"}).code == kExitUsage);
    CHECK(invoke({"evolve", "--na", "2", "--gamma", "0"}).code == kExitUsage);
    CHECK(invoke({"evolve", "--na", "2..3"}).code == kExitUsage);
    CHECK(invoke({"evolve", "--na", "2", "--format", "xml"}).code == kExitUsage);
    CHECK(invoke({"evolve", "--bogus"}).code == kExitUsage);
}

TEST_CASE("evolve JSON output")
{
    const Outcome r = invoke({"evolve", "--na", "2", "--t-end", "0.05", "--elements", "rho_2_2",
                              "--format", "json"});
    REQUIRE(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("t_tilde").size() == 6);
    CHECK(j.at("elements").at("rho_2_2").at("re")[0].get<double>() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("steady reports")
{
    Outcome r = invoke({"steady", "--na", "5", "--nb", "1"});
    REQUIRE(r.code == kExitOk);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("negativity").get<double>() == doctest::Approx(0.56218).epsilon(1e-4));

    j = nlohmann::json::parse(invoke({"steady", "--na", "1", "--nb", "1"}).out);
    CHECK(j.at("entropy").get<double>() == doctest::Approx(1.0));

    j = nlohmann::json::parse(invoke({"steady", "--na", "3", "--nb", "2"}).out);
    REQUIRE(j.at("weights").size() == 3);
    CHECK(j.at("weights")[0].get<double>() == doctest::Approx(0.1));
    CHECK(j.at("weights")[1].get<double>() == doctest::Approx(0.4));
    CHECK(j.at("weights")[2].get<double>() == doctest::Approx(0.5));

    const auto numeric = nlohmann::json::parse(invoke({"steady", "--na", "3", "--nb", "2", "--numeric"}).out);
    CHECK(numeric.at("jz_b").get<double>() == doctest::Approx(j.at("jz_b").get<double>()).epsilon(1e-9));

    r = invoke({"steady", "--na", "3", "--nb", "1", "--format", "csv"});
    const Table t = parse_csv(r.out);
    CHECK(t[0][0] == "n_a");
    CHECK(std::stod(t[1][3]) == doctest::Approx(0.0625));
}

TEST_CASE("sweep tables")
{
    Table t = parse_csv(invoke({"sweep", "--nb", "1", "--na", "1..20"}).out);
    REQUIRE(t.size() == 21);
    CHECK(t[0] == std::vector<std::string>{"n_a", "jz_a", "jz_b", "negativity", "entropy"});
    for (int row = 1; row <= 20; ++row) CHECK(std::stoi(t[row][0]) == row);
    CHECK(std::stod(t[2][2]) < 0.0);
    CHECK(std::stod(t[3][2]) > 0.0);
    int best = 1;
    for (int row = 1; row <= 20; ++row) {
        if (std::stod(t[row][3]) > std::stod(t[best][3])) best = row;
    }
    CHECK(std::stoi(t[best][0]) == 5);

    t = parse_csv(invoke({"sweep", "--nb", "2", "--na", "2..20"}).out);
    int first_positive = 0;
    for (std::size_t row = 1; row < t.size() && first_positive == 0; ++row) {
        if (std::stod(t[row][2]) > 0.0) first_positive = std::stoi(t[row][0]);
    }
    CHECK(first_positive == 4);

    const auto j = nlohmann::json::parse(invoke({"sweep", "--nb", "1", "--na", "2..4", "--format", "json"}).out);
    CHECK(j.size() == 3);
    CHECK(j[2].at("n_a") == 4);

    CHECK(invoke({"sweep", "--nb", "2", "--na", "1..5"}).code == kExitUsage);
    CHECK(invoke({"sweep", "--nb", "1", "--na", "5..1"}).code == kExitUsage);
}

TEST_CASE("verify suites")
{
    Outcome r = invoke({"verify"});
    CHECK(r.code == kExitOk);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("passed") == true);
    CHECK(j.at("checks").size() == 12);
    for (const auto& c : j.at("checks")) {
        CHECK(c.at("residual").get<double>() <= 1e-8);
        CHECK(c.at("verdict") == "pass");
    }

    r = invoke({"verify", "--conjecture", "--nb", "3", "--na", "3..5"});
    CHECK(r.code == kExitOk);
    j = nlohmann::json::parse(r.out);
    CHECK(j.at("checks").size() == 3);
    CHECK(j.at("checks")[2].at("n_a") == 5);

    r = invoke({"verify", "--tol", "1e-30"});
    CHECK(r.code == kExitVerifyFailed);
    j = nlohmann::json::parse(r.out);
    CHECK(j.at("passed") == false);
    CHECK(j.at("checks")[1].at("verdict") == "fail");

    CHECK(invoke({"verify", "--na", "10", "--nb", "8"}).code == kExitUsage);
    CHECK(invoke({"verify", "--conjecture", "--na", "3..5"}).code == kExitUsage);
}

TEST_CASE("output file and help")
{
    const auto path = std::filesystem::temp_directory_path() / "spindomain_cli_test.json";
    std::filesystem::remove(path);
    const Outcome r = invoke({"steady", "--na", "2", "--nb", "1", "--out", path.string()});
    CHECK(r.code == kExitOk);
    CHECK(r.out.empty());
    std::ifstream file(path);
    const auto j = nlohmann::json::parse(file);
    CHECK(j.at("n_a") == 2);
    std::filesystem::remove(path);

    CHECK(invoke({"steady", "--na", "2", "--out", "/nonexistent/dir/x.json"}).code == kExitUsage);
    const Outcome help = invoke({"--help"});
    CHECK(help.code == kExitOk);
    CHECK(help.out.find("evolve") != std::string::npos);
    CHECK(invoke({}).code == kExitUsage);
}
