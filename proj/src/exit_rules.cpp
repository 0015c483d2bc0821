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

#include "pdgcost/exit_rules.hpp"

namespace pdgcost {

namespace {

void check_dims(const FullGame& game, const CostProfile& profile)
{
    if (game.n() != profile.n())
        throw GameError(ErrorKind::DimensionMismatch, "cost profile and game have different player counts");
}

} // namespace

std::string_view rule_name(ExitRule rule)
{
    switch (rule) {
    case ExitRule::Gamma: return "gamma";
    case ExitRule::GammaA: return "gammaA";
    case ExitRule::GammaB: return "gammaB";
    }
    return "";
}

std::optional<ExitRule> parse_rule(std::string_view name)
{
    if (name == "gamma") return ExitRule::Gamma;
    if (name == "gammaA") return ExitRule::GammaA;
    if (name == "gammaB") return ExitRule::GammaB;
    return std::nullopt;
}

IndicatorVector gamma(const FullGame& game, const CostProfile& profile)
{
    check_dims(game, profile);
    std::vector<bool> flags(profile.stage_count(), false);
    for (std::size_t k = 2; k <= flags.size(); ++k) {
        // S_{k-1} has been examined by now, so its worth is known.
        const Rational& learned = game.worth(profile.examined_at(k - 1));
        flags[k - 1] = learned >= game.grand_worth() - profile.accrued(k - 1);
    }
    return IndicatorVector(std::move(flags));
}

IndicatorVector gamma_A(const FullGame& game, const CostProfile& profile)
{
    check_dims(game, profile);
    return IndicatorVector(std::vector<bool>(profile.stage_count(), false));
}

IndicatorVector gamma_B(const FullGame& game, const CostProfile& profile)
{
    check_dims(game, profile);
    std::vector<bool> flags(profile.stage_count(), false);
    for (std::size_t k = 2; k <= flags.size(); ++k) flags[k - 1] = game.worth(profile.examined_at(k - 1)) != 0;
    return IndicatorVector(std::move(flags));
}

IndicatorVector evaluate_rule(ExitRule rule, const FullGame& game, const CostProfile& profile)
{
    switch (rule) {
    case ExitRule::Gamma: return gamma(game, profile);
    case ExitRule::GammaA: return gamma_A(game, profile);
    case ExitRule::GammaB: return gamma_B(game, profile);
    }
    return {};
}

ExitTrace effective_stop(const IndicatorVector& raw)
{
    ExitTrace trace{raw, std::nullopt, raw.size()};
    for (std::size_t k = 1; k <= raw.size(); ++k) {
        if (raw.flag(k)) {
            trace.stop_stage = k;
            trace.examinations_performed = k - 1;
            break;
        }
    }
    return trace;
}

ExaminationResult run_examination(const FullGame& game, const CostProfile& profile, ExitRule rule)
{
    return run_examination(game, profile, rule, staged_value(game, profile));
}

ExaminationResult run_examination(const FullGame& game, const CostProfile& profile, ExitRule rule,
                                  const StageMatrix& matrix)
{
    ExitTrace trace = effective_stop(evaluate_rule(rule, game, profile));
    Payoff payoff = matrix.column(trace.examinations_performed);
    return ExaminationResult{std::move(trace), std::move(payoff)};
}

} // namespace pdgcost
