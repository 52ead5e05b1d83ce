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

#ifndef WALKBREAK_NUMERIC_H_
#define WALKBREAK_NUMERIC_H_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace walkbreak {

// Exact small rationals for probabilities and thresholds (p, epsilon, alpha).
using Rational = boost::rational<std::int64_t>;

// Accepts "2/5", "0.4", "3" and "1e-2". Decimal input is converted exactly.
Rational ParseRational(std::string_view text);
std::string FormatRational(const Rational& r);
double ToDouble(const Rational& r);

// Every game owns its generator; nothing is shared across games.
using Rng = std::mt19937_64;

std::uint64_t SplitMix64(std::uint64_t x);

// Seed for a sub-stream: mixes the parent seed with two indices. Used for
// per-trial seeds (master, cell, trial) and per-strategy streams
// (game seed, role, 0).
std::uint64_t DeriveSeed(std::uint64_t parent, std::uint64_t i,
                         std::uint64_t j);

// Draws true with probability exactly p (p in [0,1]).
bool BernoulliExact(Rng& rng, const Rational& p);

}  // namespace walkbreak

#endif  // WALKBREAK_NUMERIC_H_
