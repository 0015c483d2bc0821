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
#include "pdgcost/structures.hpp"
#include "pdgcost/verification.hpp"

using namespace pdgcost;
using namespace pdgcost::testing;

namespace {

FullGame zero_below_grand(int n, long grand)
{
    CoalitionValues v(std::size_t{1} << n);
    v.back() = grand;
    return make_full_game(n, v);
}

std::vector<Coalition> all_coalitions(int n)
{
    std::vector<Coalition> out;
    for (Coalition::mask_type m = 0; m < (1u << n); ++m) out.emplace_back(m);
    return out;
}

} // namespace

TEST_CASE("partnership")
{
    for (int n : {3, 4}) {
        for (Coalition s : all_coalitions(n)) {
            if (s.is_empty() || s == Coalition::grand(n)) continue;
            CHECK(is_partnership(unanimity_game(n, s, 3), s));
            CHECK(is_partnership(zero_below_grand(n, 2), s));
        }
    }
    CHECK_FALSE(is_partnership(example1_game(), c({1, 3})));
}

TEST_CASE("zero-coalition")
{
    const CostedGame ex = example1();
    const PartialGame stage0 = restrict(ex.game, stage_family(ex.profile, 0));
    CHECK(is_zero_coalition(stage0, Coalition::empty()));
    CHECK(is_zero_coalition(stage0, c({3})));
    CHECK_FALSE(is_zero_coalition(stage0, c({1, 3})));

    GeneratorConfig config;
    config.n = 4;
    config.zero_probability = 0.7;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        config.seed = seed;
        const CostedGame g = random_game(config);
        const PartialGame pg = restrict(g.game, stage_family(g.profile, seed % (g.profile.stage_count() + 1)));
        for (Coalition s : all_coalitions(4)) {
            if (!is_zero_coalition(pg, s)) continue;
            for (Coalition t : all_coalitions(4))
                if (t.subset_of(s)) CHECK(is_zero_coalition(pg, t));
        }
    }
}

TEST_CASE("p-type coalitions")
{
    SUBCASE("N when every other known coalition is a zero-coalition")
    {
        const FullGame z = zero_below_grand(4, 5);
        CHECK(is_p_type(restrict(z, KnownFamily::base(4)), Coalition::grand(4)));
    }
    SUBCASE("the carrier of a unanimity game, full family")
    {
        const std::vector<Coalition> all = all_coalitions(4);
        const KnownFamily everything(4, all);
        for (Coalition s : all) {
            if (s.is_empty()) continue;
            CHECK(is_p_type(restrict(unanimity_game(4, s, 2), everything), s));
        }
    }
    SUBCASE("Example 1")
    {
        const CostedGame ex = example1();
        // Every S in the stage-0 family that misses player 1 is the empty
        // set or a singleton, and removing player 1 leaves it unchanged.
        CHECK(is_p_type(restrict(ex.game, stage_family(ex.profile, 0)), c({1})));
        // S = {1}: S \ {1,3} is empty and known, but v({1}) = 5 != 0.
        CHECK_FALSE(is_p_type(restrict(ex.game, stage_family(ex.profile, 1)), c({1, 3})));
    }
}

TEST_CASE("carriers")
{
    const CostedGame ex = example1();
    const PartialGame stage0 = restrict(ex.game, stage_family(ex.profile, 0));
    CHECK(is_carrier(stage0, c({1, 2, 3})));
    CHECK_FALSE(is_carrier(stage0, c({1})));
    CHECK_THROWS_AS(is_carrier(stage0, c({1, 3})), GameError);

    const FullGame u = unanimity_game(3, c({1}), 4);
    for (std::size_t k = 0; k <= 3; ++k)
        CHECK(is_carrier(restrict(u, stage_family(zero_cost_profile(u), k)), c({1})));

    SUBCASE("unknown intersections disqualify")
    {
        // {1,2,4} & {1,2,3} = {1,2} lies outside the family.
        const FullGame g = unanimity_game(4, c({1, 2}), 1);
        const KnownFamily family = KnownFamily::base(4).with(c({1, 2, 3})).with(c({1, 2, 4}));
        const PartialGame pg = restrict(g, family);
        CHECK_FALSE(is_carrier(pg, c({1, 2, 3})));
    }

    SUBCASE("supersets of a carrier with known intersections are carriers")
    {
        GeneratorConfig config;
        config.n = 4;
        config.structured = true;
        int checked = 0;
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            config.seed = seed;
            const CostedGame g = random_game(config);
            for (std::size_t k = 0; k <= g.profile.stage_count(); k += 3) {
                const PartialGame pg = restrict(g.game, stage_family(g.profile, k));
                for (Coalition s : pg.known().members()) {
                    if (!is_carrier(pg, s)) continue;
                    for (Coalition r : pg.known().members()) {
                        if (!r.superset_of(s)) continue;
                        bool intersections_known = true;
                        for (Coalition t : pg.known().members())
                            intersections_known = intersections_known && pg.is_known(t & r);
                        if (!intersections_known) continue;
                        CHECK(is_carrier(pg, r));
                        ++checked;
                    }
                }
            }
        }
        CHECK(checked > 100);
    }
}
