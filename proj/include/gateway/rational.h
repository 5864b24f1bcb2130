// Copyright 2026 The Gateway Games Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GATEWAY_RATIONAL_H_
#define GATEWAY_RATIONAL_H_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace gateway {

// Exact reduced fraction. Every cost comparison in the library goes through
// this type; there is no floating point on any decision path.
//
// Compare only Rational against Rational with == and !=. Boost 1.74's mixed
// integer overloads recurse forever under C++20 rewritten comparisons.
using Rational = boost::rational<std::int64_t>;

// Accepts "p/q", "-p/q", integers and finite decimals ("0.5", "2.25").
// Throws GameError(kParseError) on anything else.
Rational ParseRational(std::string_view text);

// Always "p/q" with an explicit denominator, e.g. "15/1", "-1/2".
std::string FormatRational(const Rational& value);

std::int64_t Floor(const Rational& value);
std::int64_t Ceil(const Rational& value);

// Smallest integer t >= 0 with t*t >= value (value >= 0).
std::int64_t CeilSqrt(const Rational& value);
// Largest integer t >= 0 with t*t <= value (value >= 0).
std::int64_t FloorSqrt(const Rational& value);

}  // namespace gateway

#endif  // GATEWAY_RATIONAL_H_
