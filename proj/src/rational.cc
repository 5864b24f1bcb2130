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

#include "gateway/rational.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

#include "gateway/error.h"

namespace gateway {
namespace {

[[noreturn]] void Fail(std::string_view text) {
  throw GameError(ErrorCode::kParseError,
                  "malformed rational '" + std::string(text) + "'");
}

std::int64_t ParseInt(std::string_view digits, std::string_view whole) {
  if (digits.empty()) Fail(whole);
  std::int64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) Fail(whole);
  return value;
}

bool AllDigits(std::string_view s) {
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  if (s.empty()) Fail(text);
  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) Fail(text);
    std::int64_t q = ParseInt(den, text);
    if (q == 0) Fail(text);
    result = Rational(ParseInt(num, text), q);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) Fail(text);
    if (!AllDigits(whole) || !AllDigits(frac) || frac.size() > 17) Fail(text);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    std::int64_t w = whole.empty() ? 0 : ParseInt(whole, text);
    std::int64_t f = frac.empty() ? 0 : ParseInt(frac, text);
    if (w > (std::numeric_limits<std::int64_t>::max() - f) / scale) Fail(text);
    result = Rational(w * scale + f, scale);
  } else {
    if (!AllDigits(s)) Fail(text);
    result = Rational(ParseInt(s, text));
  }
  return negative ? -result : result;
}

std::string FormatRational(const Rational& value) {
  return std::to_string(value.numerator()) + "/" +
         std::to_string(value.denominator());
}

std::int64_t Floor(const Rational& value) {
  std::int64_t q = value.numerator() / value.denominator();
  if (value.numerator() % value.denominator() != 0 && value.numerator() < 0) {
    --q;
  }
  return q;
}

std::int64_t Ceil(const Rational& value) { return -Floor(-value); }

std::int64_t FloorSqrt(const Rational& value) {
  // floor(sqrt(x)) == floor(sqrt(floor(x))) for x >= 0.
  std::int64_t f = Floor(value);
  if (f <= 0) return 0;
  auto t = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(f)));
  while (t > 0 && t * t > f) --t;
  while ((t + 1) <= f / (t + 1)) ++t;
  return t;
}

std::int64_t CeilSqrt(const Rational& value) {
  std::int64_t t = FloorSqrt(value);
  if (Rational(t * t) < value) ++t;
  return t;
}

}  // namespace gateway
