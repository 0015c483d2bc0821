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

#ifndef PDGCOST_TESTS_FIXTURES_HPP
#define PDGCOST_TESTS_FIXTURES_HPP

#include <map>
#include <vector>

#include "pdgcost/game.hpp"
#include "pdgcost/values.hpp"

namespace pdgcost::testing {

inline Rational q(long num, long den = 1) { return make_rational(num, den); }

inline Coalition c(std::initializer_list<int> one_based)
{
    Coalition s;
    for (int p : one_based) s = s | Coalition::singleton(p - 1);
    return s;
}

/// Three-player game with pair costs 3, 2, 2 examined in the order
/// {1,3}, {2,3}, {1,2}.
inline FullGame example1_game()
{
    return make_full_game(3, std::map<Coalition, Rational>{
                                 {c({1}), q(5)},
                                 {c({2}), q(3)},
                                 {c({3}), q(0)},
                                 {c({1, 2}), q(10)},
                                 {c({1, 3}), q(8)},
                                 {c({2, 3}), q(5)},
                                 {c({1, 2, 3}), q(20)},
                             });
}

inline std::map<Coalition, Rational> example1_costs()
{
    return {{c({1, 2}), q(3)}, {c({1, 3}), q(2)}, {c({2, 3}), q(2)}};
}

inline CostedGame example1()
{
    FullGame g = example1_game();
    CostProfile p = make_cost_profile(g, example1_costs(), std::vector{c({1, 3}), c({2, 3}), c({1, 2})});
    return CostedGame{std::move(g), std::move(p)};
}

inline Payoff payoff(std::initializer_list<Rational> xs) { return Payoff(xs); }

/// Direct evaluation of the staged value, one stage at a time: recompute
/// dividends on the stage family from scratch and share them out.
inline StageMatrix staged_value_naive(const FullGame& game, const CostProfile& profile)
{
    const int n = game.n();
    std::vector<Payoff> columns;
    for (std::size_t k = 0; k <= profile.stage_count(); ++k) {
        const KnownFamily known = stage_family(profile, k);
        CoalitionValues d(game.worths().size());
        for (std::size_t m = 1; m < d.size(); ++m) {
            Coalition s{static_cast<Coalition::mask_type>(m)};
            if (!known.contains(s)) continue;
            Rational sub;
            for (std::size_t t = 1; t < m; ++t) {
                Coalition tt{static_cast<Coalition::mask_type>(t)};
                if (tt.subset_of(s) && known.contains(tt)) sub += d[t];
            }
            d[m] = game.worth(s) - sub;
        }
        Payoff col(static_cast<std::size_t>(n));
        const Coalition grand = Coalition::grand(n);
        for (int i = 0; i < n; ++i) {
            for (std::size_t m = 1; m + 1 < d.size(); ++m) {
                Coalition s{static_cast<Coalition::mask_type>(m)};
                if (s.contains(i)) col[static_cast<std::size_t>(i)] += d[m] / s.size();
            }
            col[static_cast<std::size_t>(i)] += (d[grand.index()] - profile.accrued(k)) / n;
        }
        columns.push_back(std::move(col));
    }
    return StageMatrix(n, std::move(columns));
}

} // namespace pdgcost::testing

#endif
