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

#ifndef PDGCOST_RATIONAL_HPP
#define PDGCOST_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace pdgcost {

/// Arbitrary-precision rational. Always kept in canonical (lowest terms,
/// positive denominator) form by the helpers below.
using Rational = mpq_class;

/// Parses "p", "p/q" (q > 0) or a finite decimal such as "-2.125" exactly.
/// Returns nullopt on malformed input.
std::optional<Rational> parse_rational(std::string_view text);

/// Canonical rendering: "p" for integers, otherwise "p/q" in lowest terms.
std::string to_string(const Rational& q);

/// Decimal approximation with a fixed number of fractional digits.
std::string to_decimal(const Rational& q, int digits = 4);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1)
{
    Rational r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

} // namespace pdgcost

#endif
