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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN

#include <set>

#include "doctest.h"
#include "walkbreak/error.h"
#include "walkbreak/numeric.h"

namespace walkbreak {
namespace {

TEST_CASE("ParseRational") {
  CHECK(ParseRational("2/5") == Rational(2, 5));
  CHECK(ParseRational(" 4 / 10 ") == Rational(2, 5));
  CHECK(ParseRational("0.4") == Rational(2, 5));
  CHECK(ParseRational("-1.25") == Rational(-5, 4));
  CHECK(ParseRational("3") == Rational(3));
  CHECK(ParseRational("1e-2") == Rational(1, 100));
  CHECK(ParseRational("2.5E1") == Rational(25));
  for (const char* bad : {"", "x", "1/0", "1/", "0.4.1", "1e"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(ParseRational(bad), Error);
  }
}

TEST_CASE("FormatRational") {
  CHECK(FormatRational(Rational(2, 5)) == "2/5");
  CHECK(FormatRational(Rational(6, 3)) == "2");
  CHECK(ToDouble(Rational(1, 4)) == 0.25);
}

TEST_CASE("SplitMix64 reference value") {
  // First output of the reference generator seeded with 0.
  CHECK(SplitMix64(0) == 0xe220a8397b1dcdafULL);
}

TEST_CASE("DeriveSeed is deterministic and separates indices") {
  CHECK(DeriveSeed(1, 2, 3) == DeriveSeed(1, 2, 3));
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 50; ++i) {
    for (std::uint64_t j = 0; j < 50; ++j) seen.insert(DeriveSeed(9, i, j));
  }
  CHECK(seen.size() == 2500);
  CHECK(DeriveSeed(1, 2, 3) != DeriveSeed(1, 3, 2));
  CHECK(DeriveSeed(1, 0, 0) != DeriveSeed(2, 0, 0));
}

TEST_CASE("BernoulliExact") {
  Rng rng(5);
  CHECK_FALSE(BernoulliExact(rng, Rational(0)));
  CHECK(BernoulliExact(rng, Rational(1)));
  int hits = 0;
  constexpr int kTrials = 100000;
  for (int i = 0; i < kTrials; ++i) hits += BernoulliExact(rng, Rational(2, 5));
  // Mean 40000, standard deviation about 155.
  CHECK(hits > 40000 - 800);
  CHECK(hits < 40000 + 800);
}

}  // namespace
}  // namespace walkbreak
