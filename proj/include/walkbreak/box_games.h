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

// Auxiliary games used by the Walker and Breaker strategies.
//
// Box(k, t, a, 1): k disjoint boxes of near-equal size holding t elements.
// BoxMaker claims a elements per move and wins by filling a box; BoxBreaker
// claims one element per move, which destroys the box it lies in. BoxBreaker
// moves first. BoxMaker wins iff t <= f(k, a), where f(1, a) = 0 and
// f(k, a) = floor(k (f(k-1, a) + a) / (k-1)).
//
// MinBox(n, D, alpha, b): n boxes of size D. Maker claims one element per
// turn and wants alpha*D elements in every box; the adversary adds up to a
// declared budget of elements between Maker's claims. Maker plays the free
// active box of maximum danger w_B - b*w_M.

#ifndef WALKBREAK_BOX_GAMES_H_
#define WALKBREAK_BOX_GAMES_H_

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "walkbreak/numeric.h"

namespace walkbreak {

using BigRational = boost::multiprecision::cpp_rational;

// Exact f(k, a). Throws kInvalidConfig for k < 1 or a < 1 and
// kValueOverflow if the value leaves the int64 range.
std::int64_t BoxF(int k, int a);

// H_m = 1 + 1/2 + ... + 1/m, exact (H_0 = 0). Cached; thread-safe.
const BigRational& HarmonicNumber(int m);

struct BoxFBounds {
  BigRational lower;  // (a-1) k H_{k-1}
  BigRational upper;  // a k H_{k-1}
};

// Requires k >= 2.
BoxFBounds ComputeBoxFBounds(int k, int a);

// Box sizes as equal as possible, larger boxes first.
std::vector<int> NearEqualSizes(int k, std::int64_t t);

// The criterion t <= f(k, a).
bool BoxMakerWins(int k, std::int64_t t, int a);

enum class BoxPlayer { kMaker, kBreaker };

inline constexpr int kOracleMaxElements = 18;

// Game value under optimal play with BoxBreaker to move, by memoised
// minimax over multisets of surviving free counts. Throws kOracleBudget when
// the sizes sum to more than kOracleMaxElements.
BoxPlayer ExactBoxGameWinner(std::span<const int> sizes, int a);

struct Box {
  int free = 0;
  bool destroyed = false;
  int maker = 0;
};

class BoxGameState {
 public:
  BoxGameState(std::span<const int> sizes, int a);

  const std::vector<Box>& boxes() const { return boxes_; }
  int bias() const { return a_; }
  BoxPlayer to_move() const { return to_move_; }

  // BoxMaker has filled a surviving box.
  bool MakerWon() const;
  // Every box is destroyed and none was filled.
  bool BreakerWon() const;
  bool over() const { return MakerWon() || BreakerWon(); }

  // counts[i] elements of box i; the total must be min(a, free elements).
  void ApplyMakerClaims(std::span<const int> counts);
  // BoxBreaker claims one free element of box i.
  void ApplyBreakerClaim(int box);

 private:
  std::vector<Box> boxes_;
  int a_;
  BoxPlayer to_move_ = BoxPlayer::kBreaker;
};

// BoxMaker's move as per-box claim counts: fill a surviving box with at most
// a free elements if one exists (fewest free first), otherwise place each
// element in the surviving box with the most free elements. Elements left
// over once surviving boxes are full go to destroyed boxes. Ties go to the
// lowest index.
std::vector<int> BoxMakerStrategyMove(const BoxGameState& state);

// BoxBreaker heuristics; each returns a box with a free element, or -1.
int BoxBreakerDestroyMostFilled(const BoxGameState& state);
int BoxBreakerDestroySmallest(const BoxGameState& state);
int BoxBreakerRandom(const BoxGameState& state, Rng& rng);

class MinBoxState {
 public:
  // `bias` is the danger multiplier; `adversary_budget` is the number of
  // adversary elements tolerated between consecutive Maker claims.
  MinBoxState(int num_boxes, int box_size, Rational alpha, int bias,
              int adversary_budget);

  int num_boxes() const { return static_cast<int>(w_maker_.size()); }
  int box_size() const { return box_size_; }
  const Rational& alpha() const { return alpha_; }
  int bias() const { return bias_; }
  int adversary_budget() const { return adversary_budget_; }

  int maker_count(int i) const { return w_maker_[i]; }
  int breaker_count(int i) const { return w_breaker_[i]; }
  int free_elements(int i) const {
    return box_size_ - w_maker_[i] - w_breaker_[i];
  }
  bool IsFree(int i) const { return free_elements(i) > 0; }
  bool IsActive(int i) const;
  std::int64_t Danger(int i) const {
    return w_breaker_[i] - static_cast<std::int64_t>(bias_) * w_maker_[i];
  }
  // b (ln n + 1) for this state's n and bias.
  double DangerBound() const;

  // Adversary elements since the last Maker claim.
  int adversary_since_maker() const { return adversary_since_maker_; }
  int max_adversary_exchange() const { return max_adversary_exchange_; }

  // Maker claims up to `count` free elements of box i; returns how many.
  int MakerClaim(int i, int count = 1);

  friend int MinBoxMakerMove(MinBoxState& state);
  friend void MinBoxBreakerApply(MinBoxState& state,
                                 std::span<const int> increments);

 private:
  int box_size_;
  Rational alpha_;
  int bias_;
  int adversary_budget_;
  std::vector<int> w_maker_;
  std::vector<int> w_breaker_;
  int adversary_since_maker_ = 0;
  int max_adversary_exchange_ = 0;
};

// Claims one element in the free active box of maximum danger (lowest index
// on ties) and returns its index. Throws kNoActiveBox if there is none.
int MinBoxMakerMove(MinBoxState& state);

// increments[i] adversary elements into box i (size num_boxes). Throws
// kBoxExhausted, leaving the state unchanged, if a box lacks room.
void MinBoxBreakerApply(MinBoxState& state, std::span<const int> increments);

}  // namespace walkbreak

#endif  // WALKBREAK_BOX_GAMES_H_
