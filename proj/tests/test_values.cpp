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

#include "fixtures.hpp"
#include "pdgcost/verification.hpp"

using namespace pdgcost;
using namespace pdgcost::testing;

TEST_CASE("harsanyi dividends")
{
    const CostedGame ex = example1();
    SUBCASE("full family reproduces the dividend table")
    {
        const DividendMap d = harsanyi_dividends(restrict(ex.game, stage_family(ex.profile, 3)));
        CHECK(d(c({1})) == 5);
        CHECK(d(c({2})) == 3);
        CHECK(d(c({3})) == 0);
        CHECK(d(c({1, 2})) == 2);
        CHECK(d(c({1, 3})) == 3);
        CHECK(d(c({2, 3})) == 2);
        CHECK(d(c({1, 2, 3})) == 5);
    }
    SUBCASE("stage 0 puts the whole surplus on N")
    {
        const DividendMap d = harsanyi_dividends(restrict(ex.game, stage_family(ex.profile, 0)));
        CHECK(d(c({1, 2, 3})) == 12);
        CHECK(d(c({1})) == 5);
        CHECK(d(c({2})) == 3);
        CHECK(d(c({1, 3})) == 0);
    }
    SUBCASE("zero game")
    {
        // v(N) = 0 is not a valid game, so N carries 1 and only the other
        // dividends are checked.
        CoalitionValues v(8);
        v.back() = 1;
        const KnownFamily base = KnownFamily::base(3).with(c({1, 2}));
        const DividendMap d = harsanyi_dividends(make_partial_game(base, v));
        for (std::size_t m = 0; m + 1 < 8; ++m) CHECK(d.values()[m] == 0);
    }
    SUBCASE("dividends sum back to the known worths")
    {
        GeneratorConfig config;
        config.n = 5;
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            config.seed = seed;
            const CostedGame g = random_game(config);
            for (std::size_t k : {std::size_t{0}, std::size_t{7}, g.profile.stage_count()}) {
                const PartialGame pg = restrict(g.game, stage_family(g.profile, k));
                const DividendMap d = harsanyi_dividends(pg);
                for (Coalition s : pg.known().members()) {
                    Rational sum;
                    for (Coalition t : pg.known().members())
                        if (t.subset_of(s)) sum += d(t);
                    CHECK(sum == pg.worth(s));
                }
                for (std::size_t m = 0; m < d.values().size(); ++m)
                    if (!pg.known().contains(Coalition{static_cast<Coalition::mask_type>(m)}))
                        CHECK(d.values()[m] == 0);
            }
        }
    }
}

TEST_CASE("shapley_classic")
{
    CHECK(shapley_classic(example1_game()) == payoff({q(55, 6), q(40, 6), q(25, 6)}));
    CHECK(shapley_classic(example1_game()) == shapley_permutation_oracle(example1_game()));
    CHECK(shapley_classic(unanimity_game(3, c({1, 2, 3}), 1)) == payoff({q(1, 3), q(1, 3), q(1, 3)}));
    CHECK(shapley_classic(unanimity_game(3, c({1}), 1)) == payoff({q(1), q(0), q(0)}));
}

TEST_CASE("shapley_pdg")
{
    const CostedGame ex = example1();
    CHECK(shapley_pdg(restrict(ex.game, stage_family(ex.profile, 0))) == payoff({q(9), q(7), q(4)}));
    CHECK(shapley_pdg(restrict(ex.game, stage_family(ex.profile, 3))) == shapley_classic(ex.game));

    CoalitionValues v(16);
    v.back() = 10;
    const FullGame z = make_full_game(4, v);
    CHECK(shapley_pdg(restrict(z, KnownFamily::base(4))) == payoff({q(5, 2), q(5, 2), q(5, 2), q(5, 2)}));

    GeneratorConfig config;
    config.n = 4;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        config.seed = seed;
        const CostedGame g = random_game(config);
        CHECK(shapley_pdg(restrict(g.game, stage_family(g.profile, g.profile.stage_count()))) ==
              shapley_classic(g.game));
    }
}

TEST_CASE("staged_value on Example 1")
{
    const CostedGame ex = example1();
    const StageMatrix m = staged_value(ex.game, ex.profile);
    REQUIRE(m.stages() == 4);
    CHECK(m.column(0) == payoff({q(9), q(7), q(4)}));
    CHECK(m.column(1) == payoff({q(53, 6), q(32, 6), q(23, 6)}));
    CHECK(m.column(2) == payoff({q(45, 6), q(30, 6), q(21, 6)}));
    CHECK(m.column(3) == payoff({q(41, 6), q(26, 6), q(11, 6)}));
    CHECK(m == staged_value_naive(ex.game, ex.profile));
}

TEST_CASE("staged_value edge cases")
{
    SUBCASE("zero costs: last column is the Shapley value")
    {
        const FullGame g = example1_game();
        const StageMatrix m = staged_value(g, zero_cost_profile(g));
        CHECK(m.column(m.stages() - 1) == shapley_classic(g));
    }
    SUBCASE("zero-below-N game splits v(N) equally at every stage")
    {
        CoalitionValues v(16);
        v.back() = 6;
        const FullGame z = make_full_game(4, v);
        const StageMatrix m = staged_value(z, zero_cost_profile(z));
        for (const auto& col : m.columns()) CHECK(col == payoff({q(3, 2), q(3, 2), q(3, 2), q(3, 2)}));
    }
    SUBCASE("two players have a single stage")
    {
        const FullGame g = make_full_game(2, CoalitionValues{0, 1, 2, 7});
        const StageMatrix m = staged_value(g, zero_cost_profile(g));
        REQUIRE(m.stages() == 1);
        CHECK(m.column(0) == cis_value(g));
        CHECK(m.column(0) == shapley_classic(g));
    }
    SUBCASE("dimension mismatch")
    {
        const FullGame g3 = example1_game();
        const FullGame g4 = make_full_game(4, [] {
            CoalitionValues v(16);
            v.back() = 1;
            return v;
        }());
        CHECK_THROWS_AS(staged_value(g3, zero_cost_profile(g4)), GameError);
    }
}

TEST_CASE("incremental staged_value matches stage-by-stage recomputation")
{
    for (int n : {3, 4, 5}) {
        GeneratorConfig config;
        config.n = n;
        config.structured = true;
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            config.seed = seed;
            const CostedGame g = random_game(config);
            CHECK(staged_value(g.game, g.profile) == staged_value_naive(g.game, g.profile));
        }
    }
}

TEST_CASE("cis_value")
{
    CHECK(cis_value(example1_game()) == payoff({q(9), q(7), q(4)}));
    CoalitionValues v(8);
    v.back() = 9;
    v[c({1, 2}).index()] = 4;
    CHECK(cis_value(make_full_game(3, v)) == payoff({q(3), q(3), q(3)}));

    GeneratorConfig config;
    config.n = 4;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        config.seed = seed;
        const CostedGame g = random_game(config);
        CHECK(staged_value(g.game, g.profile).column(0) == cis_value(g.game));
    }
}

TEST_CASE("value properties on generated games")
{
    GeneratorConfig config;
    config.n = 4;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        config.seed = seed;
        const CostedGame g = random_game(config);
        const StageMatrix m = staged_value(g.game, g.profile);
        for (std::size_t k = 0; k < m.stages(); ++k) {
            Rational sum;
            for (const auto& x : m.column(k)) sum += x;
            CHECK(sum == g.game.grand_worth() - g.profile.accrued(k));
        }
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                CHECK(m.at(i, 0) - m.at(j, 0) ==
                      g.game.worth(Coalition::singleton(i)) - g.game.worth(Coalition::singleton(j)));
    }
}
