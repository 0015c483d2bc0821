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

#ifndef PDGCOST_VALUES_HPP
#define PDGCOST_VALUES_HPP

#include <cstddef>
#include <vector>

#include "pdgcost/game.hpp"

namespace pdgcost {

/// One payoff per player, player 0 first.
using Payoff = std::vector<Rational>;

/// Harsanyi dividends of a partial game; zero outside the known family.
class DividendMap
{
public:
    explicit DividendMap(CoalitionValues values) : values_(std::move(values)) {}

    const Rational& operator()(Coalition s) const { return values_[s.index()]; }
    const CoalitionValues& values() const { return values_; }

    friend bool operator==(const DividendMap&, const DividendMap&) = default;

private:
    CoalitionValues values_;
};

/// Payoffs per player and examination stage; column k is the allocation
/// after k examinations, k = 0 .. 2^n - n - 2.
class StageMatrix
{
public:
    StageMatrix(int n, std::vector<Payoff> columns) : n_(n), columns_(std::move(columns)) {}

    int players() const { return n_; }
    std::size_t stages() const { return columns_.size(); }
    const Payoff& column(std::size_t k) const { return columns_.at(k); }
    const Rational& at(int player, std::size_t k) const { return columns_.at(k).at(static_cast<std::size_t>(player)); }
    const std::vector<Payoff>& columns() const { return columns_; }

    friend bool operator==(const StageMatrix&, const StageMatrix&) = default;

private:
    int n_;
    std::vector<Payoff> columns_;
};

DividendMap harsanyi_dividends(const PartialGame& pg);

/// Classic Shapley value via the marginal-contribution coefficient formula.
Payoff shapley_classic(const FullGame& game);

/// Each player's per-capita share of every dividend of the partial game.
Payoff shapley_pdg(const PartialGame& pg);

/// Singleton worth plus an equal share of v(N) - sum_j v(j).
Payoff cis_value(const FullGame& game);

/// Cost-adjusted staged Shapley value. Column k shares the dividends of the
/// known proper coalitions per capita and splits the grand-coalition
/// dividend, net of the costs accrued in the first k examinations, equally.
StageMatrix staged_value(const FullGame& game, const CostProfile& profile);

} // namespace pdgcost

#endif
