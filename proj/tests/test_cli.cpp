/*
 * Copyright 2026 The pdgcost Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "pdgcost/cli.hpp"
#include "pdgcost/game_file.hpp"

namespace {

const char* const example1_text = R"({
  "players": 3,
  "worth": {"1": 5, "2": 3, "3": 0, "1,2": 10, "1,3": 8, "2,3": 5, "N": 20},
  "costs": {"1,2": 3, "1,3": 2, "2,3": 2},
  "order": ["1,3", "2,3", "1,2"]
})";

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = example1_text)
{
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = pdgcost::cli::run(args, in, out, err);
    return Run{code, out.str(), err.str()};
}

} // namespace

TEST_CASE("solve")
{
    SUBCASE("table")
    {
        const Run r = run({"solve", "-"});
        CHECK(r.code == 0);
        CHECK(r.out.find("41/6") != std::string::npos);
        CHECK(r.out.find("{1,3}") != std::string::npos);
    }
    SUBCASE("json")
    {
        const Run r = run({"solve", "-", "--format", "json", "--rule", "gammaB"});
        REQUIRE(r.code == 0);
        const auto doc = nlohmann::json::parse(r.out);
        CHECK(doc["stages"].size() == 4);
        CHECK(doc["stages"][3] == nlohmann::json({"41/6", "13/3", "11/6"}));
        CHECK(doc["trace"]["raw"] == nlohmann::json({0, 1, 1}));
        CHECK(doc["trace"]["stop_stage"] == 2);
        CHECK(doc["trace"]["examinations_performed"] == 1);
        CHECK(doc["final"] == nlohmann::json({"53/6", "16/3", "23/6"}));
    }
    SUBCASE("json without a rule")
    {
        const auto doc = nlohmann::json::parse(run({"solve", "-", "--format", "json"}).out);
        CHECK(doc["trace"].is_null());
        CHECK(doc["final"].is_null());
    }
    SUBCASE("csv")
    {
        const Run r = run({"solve", "-", "--format", "csv", "--rule", "gamma"});
        CHECK(r.code == 0);
        CHECK(r.out.rfind("stage,player_1,player_2,player_3,flag,final\n", 0) == 0);
        CHECK(r.out.find("3,41/6,13/3,11/6,0,1") != std::string::npos);
    }
}

TEST_CASE("error exit codes")
{
    CHECK(run({"solve", "-"}, "{not json").code == pdgcost::cli::parse_error);
    CHECK(run({"solve", "-"}, R"({"players": 2, "worth": {"2,1": 1}})").code == pdgcost::cli::parse_error);
    const Run bad = run({"solve", "-"}, R"({"players": 2, "worth": {"1": 0, "2": 0, "1,2": 0}})");
    CHECK(bad.code == pdgcost::cli::validation_error);
    CHECK(bad.err.find("ZeroGrandWorth") != std::string::npos);
    CHECK(run({"solve", "/nonexistent/game.json"}).code == pdgcost::cli::parse_error);
    CHECK(run({}).code == pdgcost::cli::usage_error);
    CHECK(run({"frobnicate"}).code == pdgcost::cli::usage_error);
    CHECK(run({"solve", "-", "--rule", "delta"}).code == pdgcost::cli::usage_error);
    CHECK(run({"check", "--trials", "0"}).code == pdgcost::cli::usage_error);
    CHECK(run({"gen", "--n", "1"}).code == pdgcost::cli::usage_error);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("decompose")
{
    const Run r = run({"decompose", "-", "--format", "json", "--verify"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.dump().find("\"1,3\"") != std::string::npos);
}

TEST_CASE("gen")
{
    const Run a = run({"gen", "--n", "4", "--seed", "9", "--structured"});
    const Run b = run({"gen", "--n", "4", "--seed", "9", "--structured"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(pdgcost::parse_game_file(a.out).game.n() == 4);
    const Run pinned = run({"gen", "--n", "3", "--alpha", "5/2"});
    CHECK(pdgcost::parse_game_file(pinned.out).game.grand_worth() == pdgcost::Rational(5, 2));
    CHECK(run({"gen", "--alpha", "0"}).code == pdgcost::cli::usage_error);
}

TEST_CASE("check")
{
    const Run values = run({"check", "--suite", "values", "--trials", "30", "--n", "3"});
    CHECK(values.code == 0);
    CHECK(values.out.find("PASS  A1") != std::string::npos);

    const Run json = run({"check", "--suite", "ptype", "--trials", "10", "--format", "json"});
    CHECK(json.code == 0);
    CHECK(nlohmann::json::parse(json.out).is_array());

    const Run indicators = run({"check", "--suite", "indicators", "--trials", "100", "--n", "3"});
    CHECK(indicators.code == pdgcost::cli::axiom_failure);
    CHECK(indicators.out.find("FAIL  A8-gamma") != std::string::npos);
    CHECK(indicators.out.find("XFAIL  A10-gammaB") != std::string::npos);
    CHECK(indicators.err.find("counterexample") != std::string::npos);
}
