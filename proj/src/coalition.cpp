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

#include "pdgcost/coalition.hpp"

namespace pdgcost {

std::vector<int> Coalition::members() const
{
    std::vector<int> out;
    for (mask_type m = bits_; m != 0; m &= m - 1)
        out.push_back(std::countr_zero(m));
    return out;
}

std::string Coalition::key() const
{
    std::string out;
    for (int p : members()) {
        if (!out.empty()) out += ',';
        out += std::to_string(p + 1);
    }
    return out;
}

std::vector<Coalition> examinable_coalitions(int n)
{
    std::vector<Coalition> out;
    out.reserve(examinable_count(n));
    const Coalition::mask_type full = Coalition::grand(n).bits();
    for (Coalition::mask_type m = 1; m < full; ++m) {
        Coalition s{m};
        if (!is_trivial(s, n)) out.push_back(s);
    }
    return out;
}

} // namespace pdgcost
