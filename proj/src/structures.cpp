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

#include "pdgcost/structures.hpp"

namespace pdgcost {

bool is_partnership(const FullGame& game, Coalition s)
{
    for (std::size_t m = 0; m < game.worths().size(); ++m) {
        Coalition t{static_cast<Coalition::mask_type>(m)};
        if (!t.superset_of(s) && game.worth(t) != 0) return false;
    }
    return true;
}

bool is_zero_coalition(const PartialGame& pg, Coalition s)
{
    const auto full = s.bits();
    for (Coalition::mask_type t = full;; t = (t - 1) & full) {
        if (auto w = pg.try_worth(Coalition{t}); w && *w != 0) return false;
        if (t == 0) break;
    }
    return true;
}

bool is_p_type(const PartialGame& pg, Coalition p)
{
    for (Coalition s : pg.known().members()) {
        if ((p - s).is_empty()) continue;
        const Coalition rest = s - p;
        if (pg.is_known(rest)) {
            if (pg.worth(s) != pg.worth(rest)) return false;
        } else if (!is_zero_coalition(pg, s)) {
            return false;
        }
    }
    return true;
}

bool is_carrier(const PartialGame& pg, Coalition s)
{
    if (!pg.is_known(s))
        throw GameError(ErrorKind::CoalitionNotKnown, "carrier candidate {" + s.key() + "} is not known", s);
    for (Coalition t : pg.known().members()) {
        const auto inside = pg.try_worth(t & s);
        if (!inside || *inside != pg.worth(t)) return false;
    }
    return true;
}

} // namespace pdgcost
