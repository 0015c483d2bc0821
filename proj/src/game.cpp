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

#include "pdgcost/game.hpp"

#include <algorithm>
#include <string>

namespace pdgcost {

std::string_view error_kind_name(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::PlayerCountTooSmall: return "PlayerCountTooSmall";
    case ErrorKind::PlayerCountTooLarge: return "PlayerCountTooLarge";
    case ErrorKind::MissingCoalition: return "MissingCoalition";
    case ErrorKind::NegativeWorth: return "NegativeWorth";
    case ErrorKind::NonzeroEmptyWorth: return "NonzeroEmptyWorth";
    case ErrorKind::ZeroGrandWorth: return "ZeroGrandWorth";
    case ErrorKind::NegativeCost: return "NegativeCost";
    case ErrorKind::CostDomainMismatch: return "CostDomainMismatch";
    case ErrorKind::Assumption1Violation: return "Assumption1Violation";
    case ErrorKind::UnsortedOrder: return "UnsortedOrder";
    case ErrorKind::BadOrder: return "BadOrder";
    case ErrorKind::BadKnownFamily: return "BadKnownFamily";
    case ErrorKind::CoalitionNotKnown: return "CoalitionNotKnown";
    case ErrorKind::StageOutOfRange: return "StageOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::AlphaMismatch: return "AlphaMismatch";
    case ErrorKind::EmptyCoalition: return "EmptyCoalition";
    case ErrorKind::TrivialCoalition: return "TrivialCoalition";
    case ErrorKind::TooManyPlayers: return "TooManyPlayers";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    }
    return "Unknown";
}

namespace {

void check_player_count(int n)
{
    if (n < 2)
        throw GameError(ErrorKind::PlayerCountTooSmall, "need at least 2 players, got " + std::to_string(n));
    if (n > max_players)
        throw GameError(ErrorKind::PlayerCountTooLarge,
                        "at most " + std::to_string(max_players) + " players supported, got " + std::to_string(n));
}

std::size_t table_size(int n) { return std::size_t{1} << n; }

std::string brace(Coalition s) { return "{" + s.key() + "}"; }

void check_same_n(int a, int b)
{
    if (a != b)
        throw GameError(ErrorKind::DimensionMismatch,
                        "player counts differ (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
}

void check_within(int n, Coalition s)
{
    if (!s.subset_of(Coalition::grand(n)))
        throw GameError(ErrorKind::DimensionMismatch, "coalition outside a " + std::to_string(n) + "-player game", s);
}

} // namespace

FullGame make_full_game(int n, CoalitionValues worths)
{
    check_player_count(n);
    if (worths.size() != table_size(n))
        throw GameError(ErrorKind::DimensionMismatch,
                        "worth table has " + std::to_string(worths.size()) + " entries, expected " +
                            std::to_string(table_size(n)));
    for (auto& w : worths) w.canonicalize();
    if (worths[0] != 0)
        throw GameError(ErrorKind::NonzeroEmptyWorth, "worth of the empty coalition must be 0", Coalition::empty());
    for (std::size_t m = 1; m < worths.size(); ++m) {
        if (sgn(worths[m]) < 0) {
            Coalition s{static_cast<Coalition::mask_type>(m)};
            throw GameError(ErrorKind::NegativeWorth, "worth of " + brace(s) + " is " + to_string(worths[m]), s);
        }
    }
    if (sgn(worths.back()) <= 0)
        throw GameError(ErrorKind::ZeroGrandWorth, "worth of the grand coalition must be positive",
                        Coalition::grand(n));
    return FullGame(n, std::move(worths));
}

FullGame make_full_game(int n, const std::map<Coalition, Rational>& worths)
{
    check_player_count(n);
    CoalitionValues table(table_size(n));
    for (const auto& [s, w] : worths) {
        check_within(n, s);
        table[s.index()] = w;
    }
    for (std::size_t m = 1; m < table.size(); ++m) {
        Coalition s{static_cast<Coalition::mask_type>(m)};
        if (!worths.contains(s))
            throw GameError(ErrorKind::MissingCoalition, "no worth given for " + brace(s), s);
    }
    return make_full_game(n, std::move(table));
}

std::vector<Rational> CostProfile::stage_costs() const
{
    std::vector<Rational> out;
    out.reserve(order_.size());
    for (Coalition s : order_) out.push_back(cost_[s.index()]);
    return out;
}

CostProfile build_profile(const FullGame& game, CoalitionValues cost, std::vector<Coalition> order)
{
    const int n = game.n();
    const std::size_t m = examinable_count(n);
    if (order.size() != m)
        throw GameError(ErrorKind::BadOrder,
                        "order has " + std::to_string(order.size()) + " entries, expected " + std::to_string(m));
    std::vector<bool> seen(table_size(n), false);
    for (Coalition s : order) {
        check_within(n, s);
        if (is_trivial(s, n))
            throw GameError(ErrorKind::BadOrder, brace(s) + " is known from the start and cannot be examined", s);
        if (seen[s.index()]) throw GameError(ErrorKind::BadOrder, brace(s) + " appears twice in the order", s);
        seen[s.index()] = true;
    }
    for (std::size_t i = 0; i < cost.size(); ++i) {
        Coalition s{static_cast<Coalition::mask_type>(i)};
        cost[i].canonicalize();
        if (sgn(cost[i]) < 0)
            throw GameError(ErrorKind::NegativeCost, "cost of " + brace(s) + " is " + to_string(cost[i]), s);
        if (sgn(cost[i]) > 0 && is_trivial(s, n))
            throw GameError(ErrorKind::CostDomainMismatch, brace(s) + " is not examinable and cannot carry a cost", s);
        if (sgn(cost[i]) > 0 && game.worth(s) == 0)
            throw GameError(ErrorKind::Assumption1Violation,
                            brace(s) + " has zero worth but cost " + to_string(cost[i]), s);
    }
    std::vector<Rational> accrued(m + 1);
    for (std::size_t k = 0; k < m; ++k) {
        if (k > 0 && cost[order[k].index()] < cost[order[k - 1].index()])
            throw GameError(ErrorKind::UnsortedOrder,
                            "stage " + std::to_string(k + 1) + " examines " + brace(order[k]) +
                                " which is cheaper than stage " + std::to_string(k) + " " + brace(order[k - 1]),
                            order[k]);
        accrued[k + 1] = accrued[k] + cost[order[k].index()];
    }
    return CostProfile(n, std::move(cost), std::move(order), std::move(accrued));
}

CostProfile make_cost_profile(const FullGame& game,
                              const std::map<Coalition, Rational>& costs,
                              std::optional<std::vector<Coalition>> order)
{
    const int n = game.n();
    CoalitionValues table(table_size(n));
    for (const auto& [s, c] : costs) {
        check_within(n, s);
        if (is_trivial(s, n))
            throw GameError(ErrorKind::CostDomainMismatch, brace(s) + " is not examinable and cannot carry a cost", s);
        table[s.index()] = c;
    }
    auto examinable = examinable_coalitions(n);
    for (Coalition s : examinable)
        if (!costs.contains(s)) throw GameError(ErrorKind::CostDomainMismatch, "no cost given for " + brace(s), s);

    if (!order) {
        std::stable_sort(examinable.begin(), examinable.end(),
                         [&](Coalition a, Coalition b) { return table[a.index()] < table[b.index()]; });
        order = std::move(examinable);
    }
    return build_profile(game, std::move(table), std::move(*order));
}

CostProfile make_cost_profile_from_sequence(const FullGame& game,
                                            std::vector<Coalition> order,
                                            std::span<const Rational> stage_costs)
{
    if (stage_costs.size() != order.size())
        throw GameError(ErrorKind::CostDomainMismatch, "cost sequence and order differ in length");
    CoalitionValues table(table_size(game.n()));
    for (std::size_t k = 0; k < order.size(); ++k) {
        check_within(game.n(), order[k]);
        table[order[k].index()] = stage_costs[k];
    }
    return build_profile(game, std::move(table), std::move(order));
}

CostProfile zero_cost_profile(const FullGame& game, std::optional<std::vector<Coalition>> order)
{
    return build_profile(game, CoalitionValues(table_size(game.n())),
                         order ? std::move(*order) : examinable_coalitions(game.n()));
}

KnownFamily::KnownFamily(int n, std::span<const Coalition> members) : n_(n)
{
    if (n < 0 || n > max_players)
        throw GameError(ErrorKind::PlayerCountTooLarge, "unsupported player count " + std::to_string(n));
    in_.assign(table_size(n), false);
    for (Coalition s : members) {
        check_within(n, s);
        if (!in_[s.index()]) {
            in_[s.index()] = true;
            ++count_;
        }
    }
}

KnownFamily KnownFamily::base(int n)
{
    std::vector<Coalition> members{Coalition::empty(), Coalition::grand(n)};
    for (int i = 0; i < n; ++i) members.push_back(Coalition::singleton(i));
    return KnownFamily(n, members);
}

std::vector<Coalition> KnownFamily::members() const
{
    std::vector<Coalition> out;
    out.reserve(count_);
    for (std::size_t m = 0; m < in_.size(); ++m)
        if (in_[m]) out.emplace_back(static_cast<Coalition::mask_type>(m));
    return out;
}

bool KnownFamily::has_base() const
{
    if (!contains(Coalition::empty()) || !contains(Coalition::grand(n_))) return false;
    for (int i = 0; i < n_; ++i)
        if (!contains(Coalition::singleton(i))) return false;
    return true;
}

KnownFamily KnownFamily::with(Coalition s) const
{
    check_within(n_, s);
    KnownFamily out = *this;
    if (!out.in_[s.index()]) {
        out.in_[s.index()] = true;
        ++out.count_;
    }
    return out;
}

const Rational& PartialGame::worth(Coalition s) const
{
    if (!known_.contains(s))
        throw GameError(ErrorKind::CoalitionNotKnown, "worth of {" + s.key() + "} is not known", s);
    return worth_[s.index()];
}

std::optional<Rational> PartialGame::try_worth(Coalition s) const
{
    if (!known_.contains(s)) return std::nullopt;
    return worth_[s.index()];
}

PartialGame make_partial_game(KnownFamily known, CoalitionValues worths)
{
    const int n = known.n();
    check_player_count(n);
    if (!known.has_base())
        throw GameError(ErrorKind::BadKnownFamily, "known family must contain the empty set, all singletons and N");
    if (worths.size() != table_size(n))
        throw GameError(ErrorKind::DimensionMismatch, "worth table size does not match the player count");
    for (std::size_t m = 0; m < worths.size(); ++m) {
        Coalition s{static_cast<Coalition::mask_type>(m)};
        if (!known.contains(s)) {
            worths[m] = 0;
            continue;
        }
        worths[m].canonicalize();
        if (sgn(worths[m]) < 0)
            throw GameError(ErrorKind::NegativeWorth, "worth of " + brace(s) + " is " + to_string(worths[m]), s);
    }
    if (worths[0] != 0)
        throw GameError(ErrorKind::NonzeroEmptyWorth, "worth of the empty coalition must be 0", Coalition::empty());
    if (sgn(worths.back()) <= 0)
        throw GameError(ErrorKind::ZeroGrandWorth, "worth of the grand coalition must be positive",
                        Coalition::grand(n));
    return PartialGame(std::move(known), std::move(worths));
}

PartialGame restrict(const FullGame& game, const KnownFamily& known)
{
    check_same_n(game.n(), known.n());
    return make_partial_game(known, CoalitionValues(game.worths().begin(), game.worths().end()));
}

KnownFamily stage_family(const CostProfile& profile, std::size_t k)
{
    if (k > profile.stage_count())
        throw GameError(ErrorKind::StageOutOfRange, "stage " + std::to_string(k) + " exceeds the " +
                                                        std::to_string(profile.stage_count()) + " examinable coalitions");
    KnownFamily family = KnownFamily::base(profile.n());
    std::vector<Coalition> members = family.members();
    members.insert(members.end(), profile.order().begin(), profile.order().begin() + static_cast<std::ptrdiff_t>(k));
    return KnownFamily(profile.n(), members);
}

CostProfile combine_profiles(const FullGame& sum, const CostProfile& v, const CostProfile& w)
{
    const int n = sum.n();
    check_same_n(n, v.n());
    check_same_n(n, w.n());
    const auto cv = v.stage_costs();
    const auto cw = w.stage_costs();
    std::vector<Rational> costs(cv.size());
    for (std::size_t k = 0; k < costs.size(); ++k) costs[k] = cv[k] + cw[k];

    std::vector<Coalition> order;
    if (std::ranges::equal(v.order(), w.order())) {
        order.assign(v.order().begin(), v.order().end());
    } else {
        order = examinable_coalitions(n);
        std::stable_partition(order.begin(), order.end(), [&](Coalition s) { return sum.worth(s) == 0; });
    }
    return make_cost_profile_from_sequence(sum, std::move(order), costs);
}

CostedGame game_sum(const CostedGame& v, const CostedGame& w)
{
    const int n = v.game.n();
    check_same_n(n, w.game.n());
    CoalitionValues worths(table_size(n));
    for (std::size_t m = 0; m < worths.size(); ++m) {
        Coalition s{static_cast<Coalition::mask_type>(m)};
        worths[m] = v.game.worth(s) + w.game.worth(s);
    }
    FullGame sum = make_full_game(n, std::move(worths));
    CostProfile profile = combine_profiles(sum, v.profile, w.profile);
    return CostedGame{std::move(sum), std::move(profile)};
}

FullGame game_sum_capped(const FullGame& v, const FullGame& w, const Rational& alpha)
{
    const int n = v.n();
    check_same_n(n, w.n());
    if (v.grand_worth() != alpha || w.grand_worth() != alpha)
        throw GameError(ErrorKind::AlphaMismatch, "both games must have grand worth " + to_string(alpha) + " (got " +
                                                      to_string(v.grand_worth()) + " and " +
                                                      to_string(w.grand_worth()) + ")");
    CoalitionValues worths(table_size(n));
    for (std::size_t m = 0; m + 1 < worths.size(); ++m) {
        Coalition s{static_cast<Coalition::mask_type>(m)};
        worths[m] = v.worth(s) + w.worth(s);
    }
    worths.back() = alpha;
    return make_full_game(n, std::move(worths));
}

CostedGame game_sum_capped(const CostedGame& v, const CostedGame& w, const Rational& alpha)
{
    FullGame sum = game_sum_capped(v.game, w.game, alpha);
    CostProfile profile = combine_profiles(sum, v.profile, w.profile);
    return CostedGame{std::move(sum), std::move(profile)};
}

namespace {

template <typename Op>
FullGame pointwise(const FullGame& v, const FullGame& w, Op op)
{
    const int n = v.n();
    check_same_n(n, w.n());
    CoalitionValues worths(table_size(n));
    for (std::size_t m = 0; m < worths.size(); ++m) {
        Coalition s{static_cast<Coalition::mask_type>(m)};
        worths[m] = op(v.worth(s), w.worth(s));
    }
    return make_full_game(n, std::move(worths));
}

} // namespace

FullGame game_join(const FullGame& v, const FullGame& w)
{
    return pointwise(v, w, [](const Rational& a, const Rational& b) { return a < b ? b : a; });
}

FullGame game_meet(const FullGame& v, const FullGame& w)
{
    return pointwise(v, w, [](const Rational& a, const Rational& b) { return b < a ? b : a; });
}

CoalitionValues unanimity_worths(int n, Coalition s, const Rational& coeff)
{
    check_player_count(n);
    check_within(n, s);
    if (s.is_empty()) throw GameError(ErrorKind::EmptyCoalition, "unanimity game needs a non-empty coalition");
    CoalitionValues worths(table_size(n));
    for (std::size_t m = 0; m < worths.size(); ++m)
        if (Coalition{static_cast<Coalition::mask_type>(m)}.superset_of(s)) worths[m] = coeff;
    return worths;
}

FullGame unanimity_game(int n, Coalition s, const Rational& coeff)
{
    return make_full_game(n, unanimity_worths(n, s, coeff));
}

FullGame unity_game(const FullGame& v, Coalition s)
{
    const int n = v.n();
    check_within(n, s);
    if (is_trivial(s, n))
        throw GameError(ErrorKind::TrivialCoalition, "unity game needs a coalition with 2..n-1 members", s);
    CoalitionValues worths(table_size(n));
    for (std::size_t m = 1; m < worths.size(); ++m) {
        Coalition t{static_cast<Coalition::mask_type>(m)};
        if (t.size() == 1 || t == s || t == Coalition::grand(n)) worths[m] = v.worth(t);
    }
    return make_full_game(n, std::move(worths));
}

CoalitionValues moebius_decompose(const FullGame& game)
{
    CoalitionValues c(game.worths().begin(), game.worths().end());
    const std::size_t size = c.size();
    for (int bit = 0; bit < game.n(); ++bit) {
        const std::size_t b = std::size_t{1} << bit;
        for (std::size_t m = 0; m < size; ++m)
            if (m & b) c[m] -= c[m ^ b];
    }
    return c;
}

CoalitionValues recompose(int n, const CoalitionValues& coefficients)
{
    if (coefficients.size() != table_size(n))
        throw GameError(ErrorKind::DimensionMismatch, "coefficient table size does not match the player count");
    CoalitionValues v = coefficients;
    for (int bit = 0; bit < n; ++bit) {
        const std::size_t b = std::size_t{1} << bit;
        for (std::size_t m = 0; m < v.size(); ++m)
            if (m & b) v[m] += v[m ^ b];
    }
    return v;
}

} // namespace pdgcost
