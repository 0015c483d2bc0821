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

#ifndef PDGCOST_GAME_HPP
#define PDGCOST_GAME_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "pdgcost/coalition.hpp"
#include "pdgcost/error.hpp"
#include "pdgcost/rational.hpp"

namespace pdgcost {

/// Dense map from coalitions to rationals, indexed by bitmask (size 2^n).
using CoalitionValues = std::vector<Rational>;

/// A TU-game with nonnegative worths and a positive grand-coalition worth.
class FullGame
{
public:
    int n() const { return n_; }
    const Rational& worth(Coalition s) const { return worth_[s.index()]; }
    const Rational& grand_worth() const { return worth_.back(); }
    std::span<const Rational> worths() const { return worth_; }

    friend bool operator==(const FullGame&, const FullGame&) = default;

private:
    friend FullGame make_full_game(int n, CoalitionValues worths);

    FullGame(int n, CoalitionValues worths) : n_(n), worth_(std::move(worths)) {}

    int n_ = 0;
    CoalitionValues worth_;
};

/// Validates and builds a game from a dense worth table of size 2^n.
FullGame make_full_game(int n, CoalitionValues worths);

/// Builds from a sparse map; every coalition except the empty one must be
/// present (the empty coalition defaults to 0 and must be 0 if given).
FullGame make_full_game(int n, const std::map<Coalition, Rational>& worths);

/// Examination costs together with the examination order S_1, ..., S_m.
class CostProfile
{
public:
    int n() const { return n_; }
    std::size_t stage_count() const { return order_.size(); }

    /// Examination order; position k-1 holds the coalition examined at stage k.
    std::span<const Coalition> order() const { return order_; }
    Coalition examined_at(std::size_t k) const { return order_.at(k - 1); }

    /// Cost of examining s (0 for trivial coalitions).
    const Rational& cost(Coalition s) const { return cost_[s.index()]; }

    /// Cost paid at stage k, 1-based.
    const Rational& stage_cost(std::size_t k) const { return cost_[order_.at(k - 1).index()]; }

    /// Sum of the first k stage costs; accrued(0) == 0.
    const Rational& accrued(std::size_t k) const { return accrued_.at(k); }

    /// Nondecreasing cost sequence in stage order.
    std::vector<Rational> stage_costs() const;

    friend bool operator==(const CostProfile&, const CostProfile&) = default;

private:
    friend CostProfile build_profile(const FullGame&, CoalitionValues, std::vector<Coalition>);

    CostProfile(int n, CoalitionValues cost, std::vector<Coalition> order, std::vector<Rational> accrued)
        : n_(n), cost_(std::move(cost)), order_(std::move(order)), accrued_(std::move(accrued))
    {}

    int n_ = 0;
    CoalitionValues cost_;
    std::vector<Coalition> order_;
    std::vector<Rational> accrued_;
};

/// Builds a cost profile for `game`. Without `order`, coalitions are sorted
/// by nondecreasing cost with ties broken by smallest bitmask first. A
/// supplied order must be a permutation of the examinable coalitions and
/// cost-nondecreasing.
CostProfile make_cost_profile(const FullGame& game,
                              const std::map<Coalition, Rational>& costs,
                              std::optional<std::vector<Coalition>> order = std::nullopt);

/// Builds a profile from an explicit order and its per-stage cost sequence.
CostProfile make_cost_profile_from_sequence(const FullGame& game,
                                            std::vector<Coalition> order,
                                            std::span<const Rational> stage_costs);

/// Zero costs everywhere with the given (or default tie-break) order.
CostProfile zero_cost_profile(const FullGame& game,
                              std::optional<std::vector<Coalition>> order = std::nullopt);

/// A game paired with its examination costs.
struct CostedGame
{
    FullGame game;
    CostProfile profile;
};

/// A family of coalitions whose worth is known.
class KnownFamily
{
public:
    KnownFamily(int n, std::span<const Coalition> members);

    /// Empty set, singletons and the grand coalition.
    static KnownFamily base(int n);

    int n() const { return n_; }
    bool contains(Coalition s) const { return in_[s.index()]; }
    std::size_t size() const { return count_; }
    std::vector<Coalition> members() const;

    /// True if the family holds the empty set, every singleton and N.
    bool has_base() const;

    KnownFamily with(Coalition s) const;

    friend bool operator==(const KnownFamily&, const KnownFamily&) = default;

private:
    int n_;
    std::vector<bool> in_;
    std::size_t count_ = 0;
};

/// A game known only on a family of coalitions.
class PartialGame
{
public:
    int n() const { return known_.n(); }
    const KnownFamily& known() const { return known_; }
    bool is_known(Coalition s) const { return known_.contains(s); }

    /// Throws CoalitionNotKnown outside the known family.
    const Rational& worth(Coalition s) const;

    std::optional<Rational> try_worth(Coalition s) const;

private:
    friend PartialGame make_partial_game(KnownFamily, CoalitionValues);

    PartialGame(KnownFamily known, CoalitionValues worth)
        : known_(std::move(known)), worth_(std::move(worth))
    {}

    KnownFamily known_;
    CoalitionValues worth_;
};

/// Builds a partial game from a family and a dense table (entries outside the
/// family are ignored and zeroed).
PartialGame make_partial_game(KnownFamily known, CoalitionValues worths);

PartialGame restrict(const FullGame& game, const KnownFamily& known);

/// Base family plus the first k examined coalitions.
KnownFamily stage_family(const CostProfile& profile, std::size_t k);

/// Pointwise sum. The k-th stage cost of the result is the sum of the k-th
/// stage costs of the operands. When both operands share an examination
/// order the result keeps it; otherwise the result examines its zero-worth
/// coalitions first and then the rest, each group in bitmask order.
CostedGame game_sum(const CostedGame& v, const CostedGame& w);

/// Cost profile for `sum`, the sum of the games behind v and w: stage k
/// costs c_v(S_k^v) + c_w(S_k^w), with the order rule described above.
CostProfile combine_profiles(const FullGame& sum, const CostProfile& v, const CostProfile& w);

/// Pointwise sum with the grand coalition pinned to alpha = v(N) = w(N).
FullGame game_sum_capped(const FullGame& v, const FullGame& w, const Rational& alpha);

/// Capped sum carrying the combined cost profile.
CostedGame game_sum_capped(const CostedGame& v, const CostedGame& w, const Rational& alpha);

FullGame game_join(const FullGame& v, const FullGame& w);
FullGame game_meet(const FullGame& v, const FullGame& w);

/// Worth table of coeff * u_s: coeff on every superset of s, 0 elsewhere.
CoalitionValues unanimity_worths(int n, Coalition s, const Rational& coeff);

/// Validated coeff * u_s. A zero coefficient gives the zero game, which is not
/// a valid FullGame (ZeroGrandWorth); use unanimity_worths for that case.
FullGame unanimity_game(int n, Coalition s, const Rational& coeff);

/// Keeps v on singletons, s and N; zero elsewhere.
FullGame unity_game(const FullGame& v, Coalition s);

/// Unanimity coefficients c_S with v = sum_S c_S u_S (fast Moebius transform).
CoalitionValues moebius_decompose(const FullGame& game);

/// Inverse of moebius_decompose: worth(T) = sum_{S subset of T} c_S.
CoalitionValues recompose(int n, const CoalitionValues& coefficients);

} // namespace pdgcost

#endif
