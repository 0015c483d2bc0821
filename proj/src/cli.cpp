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

#include "pdgcost/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pdgcost/exit_rules.hpp"
#include "pdgcost/game_file.hpp"
#include "pdgcost/values.hpp"
#include "pdgcost/verification.hpp"

namespace pdgcost::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

CostedGame load(const std::string& path, std::istream& in)
{
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file) throw ParseError("cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(file), {});
    }
    return parse_game_file(text);
}

Rational parse_option_rational(const std::string& text, const char* option)
{
    auto q = parse_rational(text);
    if (!q) throw UsageError(std::string(option) + ": not a rational number: " + text);
    return *q;
}

ordered_json payoff_json(const Payoff& p)
{
    ordered_json out = ordered_json::array();
    for (const auto& x : p) out.push_back(to_string(x));
    return out;
}

std::string cell(const Rational& q)
{
    if (q.get_den() == 1) return to_string(q);
    return to_string(q) + " ~" + to_decimal(q);
}

void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << std::left << std::setw(static_cast<int>(width[c])) << row[c];
            out << (c + 1 < row.size() ? "  " : "");
        }
        out << "\n";
    };
    line(header);
    for (const auto& row : rows) line(row);
}

std::string flags_text(const IndicatorVector& raw)
{
    std::string s;
    for (std::size_t k = 1; k <= raw.size(); ++k) {
        if (k > 1) s += ',';
        s += raw.flag(k) ? '1' : '0';
    }
    return s;
}

int cmd_solve(const std::string& path, const std::string& format, const std::string& rule_text, std::istream& in,
              std::ostream& out)
{
    const CostedGame g = load(path, in);
    const StageMatrix matrix = staged_value(g.game, g.profile);
    std::optional<ExaminationResult> result;
    if (rule_text != "none") {
        auto rule = parse_rule(rule_text);
        if (!rule) throw UsageError("unknown rule " + rule_text);
        result = run_examination(g.game, g.profile, *rule, matrix);
    }
    const int n = g.game.n();

    if (format == "json") {
        ordered_json doc;
        ordered_json stages = ordered_json::array();
        for (const auto& col : matrix.columns()) stages.push_back(payoff_json(col));
        doc["stages"] = std::move(stages);
        if (result) {
            ordered_json raw = ordered_json::array();
            for (bool f : result->trace.raw.flags()) raw.push_back(f ? 1 : 0);
            doc["trace"]["raw"] = std::move(raw);
            doc["trace"]["stop_stage"] =
                result->trace.stop_stage ? ordered_json(*result->trace.stop_stage) : ordered_json();
            doc["trace"]["examinations_performed"] = result->trace.examinations_performed;
            doc["final"] = payoff_json(result->payoff);
        } else {
            doc["trace"] = nullptr;
            doc["final"] = nullptr;
        }
        out << doc.dump(2) << "\n";
        return ok;
    }

    if (format == "csv") {
        out << "stage";
        for (int i = 1; i <= n; ++i) out << ",player_" << i;
        if (result) out << ",flag,final";
        out << "\n";
        for (std::size_t k = 0; k < matrix.stages(); ++k) {
            out << k;
            for (const auto& x : matrix.column(k)) out << ',' << to_string(x);
            if (result) {
                out << ',' << (k == 0 ? "" : (result->trace.raw.flag(k) ? "1" : "0"));
                out << ',' << (k == result->trace.examinations_performed ? "1" : "0");
            }
            out << "\n";
        }
        return ok;
    }

    std::vector<std::string> header{"stage", "examined", "cost", "accrued"};
    for (int i = 1; i <= n; ++i) header.push_back("player " + std::to_string(i));
    std::vector<std::vector<std::string>> rows;
    for (std::size_t k = 0; k < matrix.stages(); ++k) {
        std::vector<std::string> row{std::to_string(k)};
        if (k == 0) {
            row.insert(row.end(), {"-", "-", "0"});
        } else {
            row.push_back("{" + g.profile.examined_at(k).key() + "}");
            row.push_back(to_string(g.profile.stage_cost(k)));
            row.push_back(to_string(g.profile.accrued(k)));
        }
        for (const auto& x : matrix.column(k)) row.push_back(cell(x));
        rows.push_back(std::move(row));
    }
    print_table(out, header, rows);
    out << "(~ marks approximate decimals)\n";
    if (result) {
        const auto& trace = result->trace;
        out << "\nrule: " << rule_text << "\n";
        out << "raw flags: " << (trace.raw.size() ? flags_text(trace.raw) : "(none)") << "\n";
        out << "stop stage: " << (trace.stop_stage ? std::to_string(*trace.stop_stage) : "none") << "\n";
        out << "examinations performed: " << trace.examinations_performed << "\n";
        out << "final payoffs (stage " << trace.examinations_performed << "):";
        for (const auto& x : result->payoff) out << "  " << to_string(x);
        out << "\n";
    }
    return ok;
}

int cmd_decompose(const std::string& path, const std::string& format, bool verify, std::istream& in,
                  std::ostream& out, std::ostream& err)
{
    const CostedGame g = load(path, in);
    const CoalitionValues coeffs = moebius_decompose(g.game);
    std::optional<bool> verified;
    if (verify) {
        const CoalitionValues back = recompose(g.game.n(), coeffs);
        verified = std::equal(back.begin(), back.end(), g.game.worths().begin());
    }

    if (format == "json") {
        ordered_json doc;
        ordered_json table = ordered_json::object();
        for (std::size_t m = 1; m < coeffs.size(); ++m)
            table[Coalition{static_cast<Coalition::mask_type>(m)}.key()] = to_string(coeffs[m]);
        doc["coefficients"] = std::move(table);
        doc["verified"] = verified ? ordered_json(*verified) : ordered_json();
        out << doc.dump(2) << "\n";
    } else if (format == "csv") {
        out << "coalition,coefficient\n";
        for (std::size_t m = 1; m < coeffs.size(); ++m)
            out << '"' << Coalition{static_cast<Coalition::mask_type>(m)}.key() << "\"," << to_string(coeffs[m])
                << "\n";
    } else {
        std::vector<std::vector<std::string>> rows;
        for (std::size_t m = 1; m < coeffs.size(); ++m)
            rows.push_back({"{" + Coalition{static_cast<Coalition::mask_type>(m)}.key() + "}", cell(coeffs[m])});
        print_table(out, {"coalition", "coefficient"}, rows);
        if (verified) out << "recomposition: " << (*verified ? "ok" : "MISMATCH") << "\n";
    }
    if (verified && !*verified) {
        err << "error: recomposed worths differ from the input game\n";
        return axiom_failure;
    }
    return ok;
}

void print_counterexamples(const AxiomReport& report, std::ostream& err)
{
    for (const auto& r : report.results) {
        if (!r.unexpected_failure() || !r.counterexample) continue;
        const auto doc = ordered_json::parse(*r.counterexample);
        err << "counterexample for " << r.id << " (stage " << doc.at("stage") << ", players " << doc.at("players")
            << "): " << doc.at("note").get<std::string>() << "\n";
        err << doc.at("game").dump(2) << "\n";
        if (doc.contains("partner")) err << "partner game:\n" << doc.at("partner").dump(2) << "\n";
    }
}

struct CheckOptions
{
    std::string suite = "all";
    std::size_t trials = 1000;
    int n = 3;
    std::uint64_t seed = 42;
    std::string alpha = "20";
    std::string format = "text";
    bool plain = false;
};

int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err)
{
    const Rational alpha = parse_option_rational(opt.alpha, "--alpha");
    if (sgn(alpha) <= 0) throw UsageError("--alpha must be positive");
    GeneratorConfig config;
    config.n = opt.n;
    config.seed = opt.seed;
    config.structured = !opt.plain;

    std::vector<AxiomReport> reports;
    if (opt.suite == "values" || opt.suite == "all") reports.push_back(check_value_axioms(opt.trials, config));
    if (opt.suite == "indicators" || opt.suite == "all")
        reports.push_back(check_indicator_axioms(opt.trials, config, alpha));
    if (opt.suite == "ptype") reports.push_back(check_symmetric_partnership(opt.trials, config));

    bool all_ok = true;
    if (opt.format == "json") {
        ordered_json doc = ordered_json::array();
        for (const auto& r : reports) doc.push_back(ordered_json::parse(r.to_json()));
        out << doc.dump(2) << "\n";
    }
    for (const auto& r : reports) {
        if (opt.format != "json") out << r.to_text();
        if (!r.ok()) {
            all_ok = false;
            print_counterexamples(r, err);
        }
    }
    return all_ok ? ok : axiom_failure;
}

int cmd_gen(int n, std::uint64_t seed, double zero_prob, const std::string& alpha_text, bool structured,
            std::ostream& out)
{
    GeneratorConfig config;
    config.n = n;
    config.seed = seed;
    config.zero_probability = zero_prob;
    config.structured = structured;
    if (alpha_text.empty()) {
        out << serialize_game_file(random_game(config));
    } else {
        const Rational alpha = parse_option_rational(alpha_text, "--alpha");
        if (sgn(alpha) <= 0) throw UsageError("--alpha must be positive");
        out << serialize_game_file(random_game_alpha(config, alpha));
    }
    return ok;
}

} // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Staged cost-adjusted Shapley values and exit rules for partially defined games"};
    app.name("pdgcost");
    app.require_subcommand(1);

    std::string file;
    std::string format = "table";
    std::string rule = "none";
    auto* solve = app.add_subcommand("solve", "Stage-by-stage payoff matrix, optionally with an exit rule");
    solve->add_option("game_file", file, "Game file (JSON), '-' for standard input")->required();
    solve->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
    solve->add_option("--rule", rule, "Exit rule")->check(CLI::IsMember({"gamma", "gammaA", "gammaB", "none"}));

    bool verify = false;
    auto* decompose = app.add_subcommand("decompose", "Unanimity (Moebius) coefficients of the game");
    decompose->add_option("game_file", file, "Game file (JSON), '-' for standard input")->required();
    decompose->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
    decompose->add_flag("--verify", verify, "Recompose the game and confirm it matches");

    CheckOptions check_opt;
    auto* check = app.add_subcommand("check", "Run the axiom verification suites on generated games");
    check->add_option("--suite", check_opt.suite, "Suite to run")
        ->check(CLI::IsMember({"values", "indicators", "ptype", "all"}));
    check->add_option("--trials", check_opt.trials, "Generated games (pairs) per suite")->check(CLI::PositiveNumber);
    check->add_option("--n", check_opt.n, "Player count")->check(CLI::Range(2, max_players));
    check->add_option("--seed", check_opt.seed, "Base seed; trial t uses seed + t");
    check->add_option("--alpha", check_opt.alpha, "Grand-coalition worth for the indicator suite");
    check->add_option("--format", check_opt.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    check->add_flag("--plain", check_opt.plain, "Unstructured games only");

    int gen_n = 3;
    std::uint64_t gen_seed = 0;
    double zero_prob = 0.2;
    std::string gen_alpha;
    bool gen_structured = false;
    auto* gen = app.add_subcommand("gen", "Write a random valid game file to standard output");
    gen->add_option("--n", gen_n, "Player count")->check(CLI::Range(2, max_players));
    gen->add_option("--seed", gen_seed, "Seed");
    gen->add_option("--zero-prob", zero_prob, "Probability that a coalition has zero worth")
        ->check(CLI::Range(0.0, 1.0));
    gen->add_option("--alpha", gen_alpha, "Pin the grand-coalition worth");
    gen->add_flag("--structured", gen_structured, "Plant unanimity, carrier or zero-heavy structure");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (*solve) return cmd_solve(file, format, rule, in, out);
        if (*decompose) return cmd_decompose(file, format, verify, in, out, err);
        if (*check) return cmd_check(check_opt, out, err);
        if (*gen) return cmd_gen(gen_n, gen_seed, zero_prob, gen_alpha, gen_structured, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage_error;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return parse_error;
    } catch (const GameError& e) {
        err << "validation error: " << e.what() << "\n";
        return validation_error;
    }
    return usage_error;
}

} // namespace pdgcost::cli
