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

#ifndef PDGCOST_COALITION_HPP
#define PDGCOST_COALITION_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace pdgcost {

inline constexpr int max_players = 16;

/// A set of players stored as a bitmask; bit i is player i (0-based).
/// Rendered externally with 1-based ids, e.g. {0, 2} prints as "1,3".
class Coalition
{
public:
    using mask_type = std::uint32_t;

    constexpr Coalition() = default;
    constexpr explicit Coalition(mask_type bits) : bits_(bits) {}

    static constexpr Coalition empty() { return Coalition{}; }
    static constexpr Coalition grand(int n) { return Coalition{(mask_type{1} << n) - 1}; }
    static constexpr Coalition singleton(int player) { return Coalition{mask_type{1} << player}; }

    /// Builds from 0-based player indices.
    static Coalition of(std::initializer_list<int> players)
    {
        mask_type m = 0;
        for (int p : players) m |= mask_type{1} << p;
        return Coalition{m};
    }

    constexpr mask_type bits() const { return bits_; }
    constexpr std::size_t index() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool is_empty() const { return bits_ == 0; }
    constexpr bool contains(int player) const { return (bits_ >> player) & 1u; }

    constexpr bool subset_of(Coalition other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool superset_of(Coalition other) const { return other.subset_of(*this); }

    constexpr Coalition operator|(Coalition o) const { return Coalition{bits_ | o.bits_}; }
    constexpr Coalition operator&(Coalition o) const { return Coalition{bits_ & o.bits_}; }
    /// Set difference.
    constexpr Coalition operator-(Coalition o) const { return Coalition{bits_ & ~o.bits_}; }
    constexpr Coalition without(int player) const { return Coalition{bits_ & ~(mask_type{1} << player)}; }

    constexpr auto operator<=>(const Coalition&) const = default;

    /// 0-based member indices in increasing order.
    std::vector<int> members() const;

    /// "1,3" style key; the empty coalition renders as "".
    std::string key() const;

private:
    mask_type bits_ = 0;
};

/// Trivial coalitions are the ones known before any examination: the empty
/// set, singletons and the grand coalition.
constexpr bool is_trivial(Coalition s, int n)
{
    return s.size() <= 1 || s == Coalition::grand(n);
}

/// Number of coalitions whose worth must be examined: 2^n - n - 2.
constexpr std::size_t examinable_count(int n)
{
    return (std::size_t{1} << n) - static_cast<std::size_t>(n) - 2;
}

/// All examinable (non-trivial) coalitions in increasing bitmask order.
std::vector<Coalition> examinable_coalitions(int n);

} // namespace pdgcost

#endif
