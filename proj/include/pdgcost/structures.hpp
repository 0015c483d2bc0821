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

#ifndef PDGCOST_STRUCTURES_HPP
#define PDGCOST_STRUCTURES_HPP

#include "pdgcost/game.hpp"

namespace pdgcost {

/// v(T) = 0 for every T that does not contain s. Evaluated on the full game.
bool is_partnership(const FullGame& game, Coalition s);

/// Every known subset of s has zero worth.
bool is_zero_coalition(const PartialGame& pg, Coalition s);

/// For every known S missing part of p: v(S) = v(S \ p) when S \ p is known,
/// otherwise S is a zero-coalition.
bool is_p_type(const PartialGame& pg, Coalition p);

/// s is known and v(T) = v(T & s) for every known T. An unknown
/// intersection T & s disqualifies s. Throws CoalitionNotKnown if s is not
/// known.
bool is_carrier(const PartialGame& pg, Coalition s);

} // namespace pdgcost

#endif
