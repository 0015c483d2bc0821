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

#include "pdgcost/game_file.hpp"

#include <charconv>
#include <map>

#include <json.hpp>

namespace pdgcost {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

Rational parse_number(const json& value, std::string_view where)
{
    std::optional<Rational> out;
    if (value.is_number_integer()) {
        out = parse_rational(value.dump());
    } else if (value.is_number_float()) {
        // Shortest round-trip spelling, so 0.1 reads back as 1/10.
        char buf[64];
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value.get<double>());
        if (ec == std::errc{}) out = parse_rational(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
    } else if (value.is_string()) {
        out = parse_rational(value.get<std::string>());
    }
    if (!out) throw ParseError(std::string(where) + ": expected an integer, \"p/q\" or decimal, got " + value.dump());
    return *out;
}

std::map<Coalition, Rational> parse_table(const json& doc, const char* field, int n, bool required)
{
    std::map<Coalition, Rational> out;
    if (!doc.contains(field)) {
        if (required) throw ParseError(std::string("missing \"") + field + "\" object");
        return out;
    }
    const json& table = doc.at(field);
    if (!table.is_object()) throw ParseError(std::string("\"") + field + "\" must be an object");
    for (const auto& [key, value] : table.items()) {
        const std::string where = std::string(field) + "[\"" + key + "\"]";
        Coalition s;
        try {
            s = parse_coalition_key(key, n);
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        }
        if (out.contains(s)) throw ParseError(where + ": coalition listed twice");
        out.emplace(s, parse_number(value, where));
    }
    return out;
}

ordered_json number_to_json(const Rational& q)
{
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return to_string(q);
}

} // namespace

Coalition parse_coalition_key(std::string_view key, int n)
{
    if (key == "N") return Coalition::grand(n);
    Coalition s;
    int previous = 0;
    std::size_t pos = 0;
    while (pos < key.size()) {
        const std::size_t comma = std::min(key.find(',', pos), key.size());
        const std::string_view token = key.substr(pos, comma - pos);
        int id = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), id);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
            throw ParseError("bad player id \"" + std::string(token) + "\" at offset " + std::to_string(pos) +
                             " in key \"" + std::string(key) + "\"");
        if (id < 1 || id > n)
            throw ParseError("player id " + std::to_string(id) + " at offset " + std::to_string(pos) +
                             " is outside 1.." + std::to_string(n) + " in key \"" + std::string(key) + "\"");
        if (id <= previous)
            throw ParseError("player ids must be strictly increasing; " + std::to_string(id) + " at offset " +
                             std::to_string(pos) + " follows " + std::to_string(previous) + " in key \"" +
                             std::string(key) + "\"");
        s = s | Coalition::singleton(id - 1);
        previous = id;
        pos = comma + 1;
        if (comma + 1 == key.size())
            throw ParseError("trailing comma in key \"" + std::string(key) + "\"");
    }
    return s;
}

CostedGame parse_game_file(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("game file must be a JSON object");
    if (!doc.contains("players") || !doc.at("players").is_number_integer())
        throw ParseError("\"players\" must be an integer");
    const auto players = doc.at("players").get<long long>();
    if (players < 2)
        throw GameError(ErrorKind::PlayerCountTooSmall, "need at least 2 players, got " + std::to_string(players));
    if (players > max_players)
        throw GameError(ErrorKind::PlayerCountTooLarge, "at most " + std::to_string(max_players) +
                                                            " players supported, got " + std::to_string(players));
    const int n = static_cast<int>(players);

    auto worths = parse_table(doc, "worth", n, true);
    if (auto it = worths.find(Coalition::empty()); it == worths.end()) worths.emplace(Coalition::empty(), Rational{});
    auto costs = parse_table(doc, "costs", n, false);

    std::optional<std::vector<Coalition>> order;
    if (doc.contains("order")) {
        const json& list = doc.at("order");
        if (!list.is_array()) throw ParseError("\"order\" must be an array of coalition keys");
        order.emplace();
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (!list[i].is_string()) throw ParseError("order[" + std::to_string(i) + "] must be a string");
            try {
                order->push_back(parse_coalition_key(list[i].get<std::string>(), n));
            } catch (const ParseError& e) {
                throw ParseError("order[" + std::to_string(i) + "]: " + e.what());
            }
        }
    }

    FullGame game = make_full_game(n, worths);
    CostProfile profile = make_cost_profile(game, costs, std::move(order));
    return CostedGame{std::move(game), std::move(profile)};
}

std::string serialize_game_file(const CostedGame& costed)
{
    const FullGame& game = costed.game;
    ordered_json doc;
    doc["players"] = game.n();
    ordered_json worth = ordered_json::object();
    for (std::size_t m = 1; m < game.worths().size(); ++m) {
        Coalition s{static_cast<Coalition::mask_type>(m)};
        worth[s.key()] = number_to_json(game.worth(s));
    }
    doc["worth"] = std::move(worth);
    ordered_json costs = ordered_json::object();
    for (Coalition s : examinable_coalitions(game.n())) costs[s.key()] = number_to_json(costed.profile.cost(s));
    doc["costs"] = std::move(costs);
    ordered_json order = ordered_json::array();
    for (Coalition s : costed.profile.order()) order.push_back(s.key());
    doc["order"] = std::move(order);
    return doc.dump(2) + "\n";
}

} // namespace pdgcost
