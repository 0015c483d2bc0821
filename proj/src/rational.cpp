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

#include "pdgcost/rational.hpp"

#include <cctype>
#include <charconv>

namespace pdgcost {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class pow10(unsigned long e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

} // namespace

std::optional<Rational> parse_rational(std::string_view text)
{
    bool negative = false;
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (body.empty()) return std::nullopt;

    Rational result;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return std::nullopt;
        const mpz_class q{std::string(den), 10};
        if (q == 0) return std::nullopt;
        result = Rational(mpz_class(std::string(num), 10), q);
    } else {
        // Decimal with optional fraction and exponent.
        long exponent = 0;
        if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
            auto exp_text = body.substr(e + 1);
            if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
            auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
            if (ec != std::errc{} || ptr != exp_text.data() + exp_text.size()) return std::nullopt;
            body = body.substr(0, e);
        }
        std::string digits;
        std::string_view int_part = body;
        std::string_view frac_part;
        if (auto dot = body.find('.'); dot != std::string_view::npos) {
            int_part = body.substr(0, dot);
            frac_part = body.substr(dot + 1);
            if (!frac_part.empty() && !all_digits(frac_part)) return std::nullopt;
        }
        if (!int_part.empty() && !all_digits(int_part)) return std::nullopt;
        if (int_part.empty() && frac_part.empty()) return std::nullopt;
        digits.append(int_part);
        digits.append(frac_part);
        exponent -= static_cast<long>(frac_part.size());
        if (exponent > 4096 || exponent < -4096) return std::nullopt;
        mpz_class mantissa(digits, 10);
        if (exponent >= 0)
            result = Rational(mantissa * pow10(static_cast<unsigned long>(exponent)));
        else
            result = Rational(mantissa, pow10(static_cast<unsigned long>(-exponent)));
    }
    result.canonicalize();
    if (negative) result = -result;
    return result;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

std::string to_decimal(const Rational& q, int digits)
{
    mpz_class scale = pow10(static_cast<unsigned long>(digits));
    mpz_class scaled_num = q.get_num() * scale;
    mpz_class abs_num = abs(scaled_num);
    // Round half away from zero.
    mpz_class rounded = (2 * abs_num + q.get_den()) / (2 * q.get_den());
    std::string s = rounded.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    std::string out = (sgn(scaled_num) < 0 && rounded != 0) ? "-" : "";
    out += s.substr(0, s.size() - static_cast<std::size_t>(digits));
    if (digits > 0) {
        out += '.';
        out += s.substr(s.size() - static_cast<std::size_t>(digits));
    }
    return out;
}

} // namespace pdgcost
