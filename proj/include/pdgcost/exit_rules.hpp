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

#ifndef PDGCOST_EXIT_RULES_HPP
#define PDGCOST_EXIT_RULES_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "pdgcost/game.hpp"
#include "pdgcost/values.hpp"

namespace pdgcost {

/// Stop flags for stages 1 .. 2^n - n - 2. flag(k) == true means the k-th
/// examination is not paid for.
class IndicatorVector
{
public:
    IndicatorVector() = default;
    explicit IndicatorVector(std::vector<bool> flags) : flags_(std::move(flags)) {}

    std::size_t size() const { return flags_.size(); }
    bool flag(std::size_t k) const { return flags_.at(k - 1); }
    const std::vector<bool>& flags() const { return flags_; }

    friend bool operator==(const IndicatorVector&, const IndicatorVector&) = default;

private:
    std::vector<bool> flags_;
};

/// Raw flags plus the effective stop: once a flag is raised no further
/// examination happens, whatever the later flags say.
struct ExitTrace
{
    IndicatorVector raw;
    std::optional<std::size_t> stop_stage;
    std::size_t examinations_performed = 0;
};

enum class ExitRule { Gamma, GammaA, GammaB };

std::string_view rule_name(ExitRule rule);
std::optional<ExitRule> parse_rule(std::string_view name);

/// Stop before stage k >= 2 once the worth just learned, v(S_{k-1}), reaches
/// the grand worth net of the costs paid so far.
IndicatorVector gamma(const FullGame& game, const CostProfile& profile);

/// Never stops.
IndicatorVector gamma_A(const FullGame& game, const CostProfile& profile);

/// Continues only while the last examined coalition had zero worth.
IndicatorVector gamma_B(const FullGame& game, const CostProfile& profile);

IndicatorVector evaluate_rule(ExitRule rule, const FullGame& game, const CostProfile& profile);

ExitTrace effective_stop(const IndicatorVector& raw);

struct ExaminationResult
{
    ExitTrace trace;
    Payoff payoff;
};

/// Runs the examination process under `rule`; the payoff is the staged
/// value after the examinations actually performed.
ExaminationResult run_examination(const FullGame& game, const CostProfile& profile, ExitRule rule);

/// Same, reusing an already computed stage matrix.
ExaminationResult run_examination(const FullGame& game, const CostProfile& profile, ExitRule rule,
                                  const StageMatrix& matrix);

} // namespace pdgcost

#endif
