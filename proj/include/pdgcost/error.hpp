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

#ifndef PDGCOST_ERROR_HPP
#define PDGCOST_ERROR_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pdgcost/coalition.hpp"

namespace pdgcost {

enum class ErrorKind {
    PlayerCountTooSmall,
    PlayerCountTooLarge,
    MissingCoalition,
    NegativeWorth,
    NonzeroEmptyWorth,
    ZeroGrandWorth,
    NegativeCost,
    CostDomainMismatch,
    Assumption1Violation,
    UnsortedOrder,
    BadOrder,
    BadKnownFamily,
    CoalitionNotKnown,
    StageOutOfRange,
    DimensionMismatch,
    AlphaMismatch,
    EmptyCoalition,
    TrivialCoalition,
    TooManyPlayers,
    InvalidConfig,
};

std::string_view error_kind_name(ErrorKind kind);

/// Raised when game data violates one of the model's standing invariants.
class GameError : public std::runtime_error
{
public:
    GameError(ErrorKind kind, std::string message, std::optional<Coalition> where = std::nullopt)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message)
        , kind_(kind)
        , where_(where)
    {}

    ErrorKind kind() const { return kind_; }
    const std::optional<Coalition>& coalition() const { return where_; }

private:
    ErrorKind kind_;
    std::optional<Coalition> where_;
};

} // namespace pdgcost

#endif
