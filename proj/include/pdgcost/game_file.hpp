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

#ifndef PDGCOST_GAME_FILE_HPP
#define PDGCOST_GAME_FILE_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "pdgcost/game.hpp"

namespace pdgcost {

/// Malformed game file: bad JSON, bad coalition key or bad number.
class ParseError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Parses "1,3" (sorted 1-based ids), "N" (grand coalition) or "" (empty).
Coalition parse_coalition_key(std::string_view key, int n);

/// Parses a game file document:
///   { "players": n, "worth": {key: rational}, "costs": {key: rational},
///     "order": [key, ...] }
/// Throws ParseError for format problems and GameError for model violations.
CostedGame parse_game_file(std::string_view text);

/// Canonical game file. Integers are written as JSON numbers, other
/// rationals as "p/q" strings; coalitions in bitmask order.
std::string serialize_game_file(const CostedGame& game);

} // namespace pdgcost

#endif
