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

#include "pdgcost/values.hpp"

#include <cstdint>

namespace pdgcost {

namespace {

using mask_t = Coalition::mask_type;

// Scatters the low bits of `compressed` onto the set bits of `mask`.
mask_t deposit(mask_t compressed, mask_t mask)
{
    mask_t out = 0;
    for (mask_t m = mask; m != 0 && compressed != 0; m &= m - 1, compressed >>= 1)
        if (compressed & 1u) out |= m & (~m + 1);
    return out;
}

// Sum of d(T) over known proper subsets T of s.
Rational proper_subset_sum(const CoalitionValues& d, const KnownFamily& known, Coalition s)
{
    Rational sum;
    const mask_t full = s.bits();
    for (mask_t t = (full - 1) & full;; t = (t - 1) & full) {
        if (known.contains(Coalition{t})) sum += d[t];
        if (t == 0) break;
    }
    return sum;
}

Rational factorial(int k)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(f);
}

} // namespace

DividendMap harsanyi_dividends(const PartialGame& pg)
{
    const KnownFamily& known = pg.known();
    CoalitionValues d(std::size_t{1} << pg.n());
    // Bitmask order visits every proper subset before its supersets.
    for (std::size_t m = 1; m < d.size(); ++m) {
        Coalition s{static_cast<mask_t>(m)};
        if (!known.contains(s)) continue;
        d[m] = pg.worth(s) - proper_subset_sum(d, known, s);
    }
    return DividendMap(std::move(d));
}

Payoff shapley_classic(const FullGame& game)
{
    const int n = game.n();
    std::vector<Rational> weight(static_cast<std::size_t>(n) + 1);
    const Rational n_fact = factorial(n);
    for (int s = 1; s <= n; ++s) weight[static_cast<std::size_t>(s)] = factorial(s - 1) * factorial(n - s) / n_fact;

    Payoff phi(static_cast<std::size_t>(n));
    for (std::size_t m = 1; m < game.worths().size(); ++m) {
        Coalition s{static_cast<mask_t>(m)};
        const Rational& w = weight[static_cast<std::size_t>(s.size())];
        for (int i : s.members()) phi[static_cast<std::size_t>(i)] += w * (game.worth(s) - game.worth(s.without(i)));
    }
    return phi;
}

Payoff shapley_pdg(const PartialGame& pg)
{
    const DividendMap d = harsanyi_dividends(pg);
    Payoff phi(static_cast<std::size_t>(pg.n()));
    for (Coalition s : pg.known().members()) {
        if (s.is_empty() || d(s) == 0) continue;
        const Rational share = d(s) / s.size();
        for (int i : s.members()) phi[static_cast<std::size_t>(i)] += share;
    }
    return phi;
}

Payoff cis_value(const FullGame& game)
{
    const int n = game.n();
    Rational singles;
    for (int j = 0; j < n; ++j) singles += game.worth(Coalition::singleton(j));
    const Rational surplus_share = (game.grand_worth() - singles) / n;
    Payoff phi(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) phi[static_cast<std::size_t>(i)] = game.worth(Coalition::singleton(i)) + surplus_share;
    return phi;
}

StageMatrix staged_value(const FullGame& game, const CostProfile& profile)
{
    const int n = game.n();
    if (profile.n() != n)
        throw GameError(ErrorKind::DimensionMismatch, "cost profile and game have different player counts");

    const Coalition grand = Coalition::grand(n);
    KnownFamily known = KnownFamily::base(n);
    CoalitionValues d = harsanyi_dividends(restrict(game, known)).values();

    // Per-player share of the known proper-coalition dividends.
    Payoff proper(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) proper[static_cast<std::size_t>(i)] = d[Coalition::singleton(i).index()];

    auto column = [&](std::size_t k) {
        const Rational grand_share = (d[grand.index()] - profile.accrued(k)) / n;
        Payoff col(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < col.size(); ++i) col[i] = proper[i] + grand_share;
        return col;
    };

    std::vector<Payoff> columns;
    columns.reserve(profile.stage_count() + 1);
    columns.push_back(column(0));

    // Learning v(S) changes the dividend of S and of its known supersets
    // only. delta is indexed by the complement bits of S that are added.
    std::vector<Rational> delta;
    for (std::size_t k = 1; k <= profile.stage_count(); ++k) {
        const Coalition s = profile.examined_at(k);
        const mask_t comp = (grand - s).bits();
        const int c = std::popcount(comp);
        delta.assign(std::size_t{1} << c, Rational{});

        delta[0] = game.worth(s) - proper_subset_sum(d, known, s);
        known = known.with(s);

        for (mask_t t = 1; t < delta.size(); ++t) {
            const Coalition r = s | Coalition{deposit(t, comp)};
            if (!known.contains(r)) continue;
            Rational sum;
            for (mask_t u = (t - 1) & t;; u = (u - 1) & t) {
                sum += delta[u];
                if (u == 0) break;
            }
            delta[t] = -sum;
        }

        for (mask_t t = 0; t < delta.size(); ++t) {
            if (delta[t] == 0) continue;
            const Coalition r = s | Coalition{deposit(t, comp)};
            d[r.index()] += delta[t];
            if (r == grand) continue;
            const Rational share = delta[t] / r.size();
            for (int i : r.members()) proper[static_cast<std::size_t>(i)] += share;
        }
        columns.push_back(column(k));
    }
    return StageMatrix(n, std::move(columns));
}

} // namespace pdgcost
