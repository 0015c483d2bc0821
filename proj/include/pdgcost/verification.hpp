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

#ifndef PDGCOST_VERIFICATION_HPP
#define PDGCOST_VERIFICATION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pdgcost/exit_rules.hpp"
#include "pdgcost/game.hpp"
#include "pdgcost/values.hpp"

namespace pdgcost {

/// Random game generator settings. Worths are drawn on a grid of 40 steps
/// over [worth_min, worth_max]; costs on a grid of 8 steps over
/// [0, cost_scale].
struct GeneratorConfig
{
    int n = 3;
    std::uint64_t seed = 0;
    Rational worth_min = 0;
    Rational worth_max = 20;
    double zero_probability = 0.2;
    Rational cost_scale = 2;
    /// Plant unanimity, carrier and zero-heavy structure in a share of the
    /// games so that the structural axioms have something to bite on.
    bool structured = false;
};

/// Throws InvalidConfig when the settings are out of range.
void validate(const GeneratorConfig& config);

/// Average marginal contribution over all n! player orders (n <= 8).
Payoff shapley_permutation_oracle(const FullGame& game);

/// Closed-form inversion d(S) = sum_{T subset S} (-1)^{|S|-|T|} v(T).
DividendMap dividend_oracle(const FullGame& game);

/// A game with v >= 0, v(N) > 0 and a cost profile obeying zero cost on
/// zero worth and cost-sorted order. Deterministic per seed.
CostedGame random_game(const GeneratorConfig& config);

/// As random_game with v(N) = alpha. alpha must be positive.
CostedGame random_game_alpha(const GeneratorConfig& config, const Rational& alpha);

/// A random game whose cost profile uses the given examination order. The
/// cost sequence is zero up to the last zero-worth coalition in the order
/// and nondecreasing after it.
CostedGame random_game_with_order(const GeneratorConfig& config, std::span<const Coalition> order,
                                  std::optional<Rational> alpha = std::nullopt);

struct AxiomResult
{
    std::string id;
    std::string description;
    std::size_t trials = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    /// Failures are the documented outcome for this row.
    bool expected_failure = false;
    /// JSON: {"game": <game file>, "stage": k, "players": [...], "note": "..."}
    std::optional<std::string> counterexample;

    std::size_t fired() const { return passed + failed; }
    bool unexpected_failure() const { return failed > 0 && !expected_failure; }
};

struct AxiomReport
{
    std::string suite;
    std::vector<AxiomResult> results;

    bool ok() const;
    const AxiomResult* find(std::string_view id) const;
    std::string to_text() const;
    std::string to_json() const;
};

using ValueFunction = std::function<StageMatrix(const FullGame&, const CostProfile&)>;

/// Efficiency, additivity, partnership, carrier, first-stage fairness and
/// zero-game checks on `trials` generated games (trial t uses seed + t).
AxiomReport check_value_axioms(std::size_t trials, const GeneratorConfig& config,
                               const ValueFunction& value = staged_value);

/// Join additivity and zero-worth continuation for gamma, gammaA and gammaB
/// over generated pairs in the class with v(N) = alpha, plus order
/// invariance for gammaA (and its known failure for gammaB).
AxiomReport check_indicator_axioms(std::size_t trials, const GeneratorConfig& config, const Rational& alpha);

/// Equal payoffs inside p-type coalitions at every stage k >= 1.
AxiomReport check_symmetric_partnership(std::size_t trials, const GeneratorConfig& config,
                                        const ValueFunction& value = staged_value);

/// A fixed three-player game on which gammaB depends on the examination
/// order. Returns the game and two orders with different gammaB vectors.
struct OrderWitness
{
    FullGame game;
    std::vector<Coalition> first;
    std::vector<Coalition> second;
};
OrderWitness gamma_B_order_witness();

} // namespace pdgcost

#endif
