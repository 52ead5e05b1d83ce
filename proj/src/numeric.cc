// Copyright 2026 The walkbreak Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "walkbreak/numeric.h"

#include <cctype>
#include <charconv>
#include <limits>

#include "walkbreak/error.h"

namespace walkbreak {

namespace {

std::int64_t ParseInt(std::string_view s, std::string_view whole) {
  std::int64_t value = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorCode::kParseError,
                "not a rational number: '" + std::string(whole) + "'");
  }
  return value;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view s = Trim(text);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::int64_t num = ParseInt(Trim(s.substr(0, slash)), text);
    std::int64_t den = ParseInt(Trim(s.substr(slash + 1)), text);
    if (den == 0) {
      throw Error(ErrorCode::kParseError,
                  "zero denominator: '" + std::string(text) + "'");
    }
    return Rational(num, den);
  }
  int exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    exponent = static_cast<int>(ParseInt(s.substr(e + 1), text));
    s = s.substr(0, e);
  }
  bool negative = !s.empty() && s.front() == '-';
  if (negative || (!s.empty() && s.front() == '+')) s.remove_prefix(1);
  std::int64_t num = 0;
  std::int64_t den = 1;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string digits(s.substr(0, dot));
    std::string_view frac = s.substr(dot + 1);
    digits += frac;
    if (frac.size() > 17) {
      throw Error(ErrorCode::kParseError,
                  "too many decimals: '" + std::string(text) + "'");
    }
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    num = ParseInt(digits, text);
  } else {
    num = ParseInt(s, text);
  }
  for (; exponent > 0; --exponent) {
    if (num > std::numeric_limits<std::int64_t>::max() / 10)
      throw Error(ErrorCode::kParseError, "out of range: " + std::string(text));
    num *= 10;
  }
  for (; exponent < 0; ++exponent) {
    if (den > std::numeric_limits<std::int64_t>::max() / 10)
      throw Error(ErrorCode::kParseError, "out of range: " + std::string(text));
    den *= 10;
  }
  return Rational(negative ? -num : num, den);
}

std::string FormatRational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double ToDouble(const Rational& r) {
  return boost::rational_cast<double>(r);
}

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t DeriveSeed(std::uint64_t parent, std::uint64_t i,
                         std::uint64_t j) {
  std::uint64_t s = SplitMix64(parent);
  s = SplitMix64(s ^ ((i + 1) * 0x9e3779b97f4a7c15ULL));
  s = SplitMix64(s ^ ((j + 1) * 0xc2b2ae3d27d4eb4fULL));
  return s;
}

bool BernoulliExact(Rng& rng, const Rational& p) {
  if (p.numerator() <= 0) return false;
  if (p >= 1) return true;
  std::uniform_int_distribution<std::int64_t> dist(0, p.denominator() - 1);
  return dist(rng) < p.numerator();
}

}  // namespace walkbreak
