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

#include "walkbreak/box_games.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "walkbreak/error.h"

namespace walkbreak {

std::int64_t BoxF(int k, int a) {
  if (k < 1 || a < 1) {
    throw Error(ErrorCode::kInvalidConfig, "f(k,a) needs k >= 1 and a >= 1");
  }
  __int128 f = 0;
  for (int j = 2; j <= k; ++j) {
    f = (static_cast<__int128>(j) * (f + a)) / (j - 1);
    if (f > std::numeric_limits<std::int64_t>::max()) {
      throw Error(ErrorCode::kValueOverflow,
                  "f(" + std::to_string(k) + "," + std::to_string(a) +
                      ") exceeds int64");
    }
  }
  return static_cast<std::int64_t>(f);
}

const BigRational& HarmonicNumber(int m) {
  static std::mutex mu;
  // Deque: references stay valid as the cache grows.
  static std::deque<BigRational> cache = {BigRational(0)};
  if (m < 0) throw Error(ErrorCode::kInvalidConfig, "negative harmonic index");
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= m) {
    int i = static_cast<int>(cache.size());
    cache.push_back(cache.back() + BigRational(1, i));
  }
  return cache[m];
}

BoxFBounds ComputeBoxFBounds(int k, int a) {
  if (k < 2 || a < 1) {
    throw Error(ErrorCode::kInvalidConfig, "bounds need k >= 2 and a >= 1");
  }
  const BigRational& h = HarmonicNumber(k - 1);
  return {BigRational(a - 1) * k * h, BigRational(a) * k * h};
}

std::vector<int> NearEqualSizes(int k, std::int64_t t) {
  if (k < 1 || t < 0) {
    throw Error(ErrorCode::kInvalidConfig, "need k >= 1 boxes and t >= 0");
  }
  std::vector<int> sizes(k, static_cast<int>(t / k));
  for (int i = 0; i < t % k; ++i) ++sizes[i];
  return sizes;
}

bool BoxMakerWins(int k, std::int64_t t, int a) { return t <= BoxF(k, a); }

namespace {

class BoxOracle {
 public:
  explicit BoxOracle(int a) : a_(a) {}

  // Surviving free counts, sorted, all positive.
  bool MakerWins(const std::vector<int>& boxes, bool maker_to_move) {
    if (boxes.empty()) return false;
    auto key = std::make_pair(boxes, maker_to_move);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result;
    if (maker_to_move) {
      int total = std::accumulate(boxes.begin(), boxes.end(), 0);
      if (total <= a_) {
        result = true;
      } else {
        std::vector<int> work = boxes;
        result = TryDistributions(work, 0, a_);
      }
    } else {
      result = true;
      for (std::size_t i = 0; i < boxes.size() && result; ++i) {
        if (i > 0 && boxes[i] == boxes[i - 1]) continue;
        std::vector<int> next = boxes;
        next.erase(next.begin() + i);
        result = MakerWins(next, true);
      }
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  bool TryDistributions(std::vector<int>& work, std::size_t i, int left) {
    if (left == 0) {
      if (std::find(work.begin(), work.end(), 0) != work.end()) return true;
      std::vector<int> next = work;
      std::sort(next.begin(), next.end());
      return MakerWins(next, false);
    }
    if (i == work.size()) return false;
    int original = work[i];
    for (int c = std::min(left, original); c >= 0; --c) {
      work[i] = original - c;
      bool win = TryDistributions(work, i + 1, left - c);
      work[i] = original;
      if (win) return true;
    }
    return false;
  }

  int a_;
  std::map<std::pair<std::vector<int>, bool>, bool> memo_;
};

}  // namespace

BoxPlayer ExactBoxGameWinner(std::span<const int> sizes, int a) {
  if (a < 1) throw Error(ErrorCode::kInvalidConfig, "bias must be >= 1");
  std::int64_t total = 0;
  for (int s : sizes) {
    if (s < 0) throw Error(ErrorCode::kInvalidConfig, "negative box size");
    total += s;
  }
  if (total > kOracleMaxElements) {
    throw Error(ErrorCode::kOracleBudget,
                "oracle limited to " + std::to_string(kOracleMaxElements) +
                    " elements, got " + std::to_string(total));
  }
  if (std::find(sizes.begin(), sizes.end(), 0) != sizes.end()) {
    return BoxPlayer::kMaker;
  }
  std::vector<int> boxes(sizes.begin(), sizes.end());
  std::sort(boxes.begin(), boxes.end());
  return BoxOracle(a).MakerWins(boxes, false) ? BoxPlayer::kMaker
                                              : BoxPlayer::kBreaker;
}

BoxGameState::BoxGameState(std::span<const int> sizes, int a) : a_(a) {
  if (a < 1) throw Error(ErrorCode::kInvalidConfig, "bias must be >= 1");
  for (int s : sizes) {
    if (s < 0) throw Error(ErrorCode::kInvalidConfig, "negative box size");
    boxes_.push_back({s, false, 0});
  }
}

bool BoxGameState::MakerWon() const {
  return std::any_of(boxes_.begin(), boxes_.end(), [](const Box& b) {
    return !b.destroyed && b.free == 0;
  });
}

bool BoxGameState::BreakerWon() const {
  if (MakerWon()) return false;
  return std::all_of(boxes_.begin(), boxes_.end(),
                     [](const Box& b) { return b.destroyed; });
}

void BoxGameState::ApplyMakerClaims(std::span<const int> counts) {
  if (to_move_ != BoxPlayer::kMaker) {
    throw Error(ErrorCode::kTurnError, "not BoxMaker's turn");
  }
  if (counts.size() != boxes_.size()) {
    throw Error(ErrorCode::kIllegalClaim, "one count per box required");
  }
  int total_free = 0;
  int total = 0;
  for (std::size_t i = 0; i < boxes_.size(); ++i) {
    if (counts[i] < 0 || counts[i] > boxes_[i].free) {
      throw Error(ErrorCode::kIllegalClaim,
                  "box " + std::to_string(i) + " lacks free elements");
    }
    total_free += boxes_[i].free;
    total += counts[i];
  }
  if (total != std::min(a_, total_free)) {
    throw Error(ErrorCode::kBadBias, "BoxMaker must claim " +
                                         std::to_string(std::min(a_, total_free)) +
                                         " elements");
  }
  for (std::size_t i = 0; i < boxes_.size(); ++i) {
    boxes_[i].free -= counts[i];
    boxes_[i].maker += counts[i];
  }
  to_move_ = BoxPlayer::kBreaker;
}

void BoxGameState::ApplyBreakerClaim(int box) {
  if (to_move_ != BoxPlayer::kBreaker) {
    throw Error(ErrorCode::kTurnError, "not BoxBreaker's turn");
  }
  if (box < 0 || box >= static_cast<int>(boxes_.size()) ||
      boxes_[box].free == 0) {
    throw Error(ErrorCode::kIllegalClaim, "box has no free element");
  }
  --boxes_[box].free;
  boxes_[box].destroyed = true;
  to_move_ = BoxPlayer::kMaker;
}

std::vector<int> BoxMakerStrategyMove(const BoxGameState& state) {
  const auto& boxes = state.boxes();
  const int k = static_cast<int>(boxes.size());
  std::vector<int> counts(k, 0);
  std::vector<int> free(k);
  int total_free = 0;
  for (int i = 0; i < k; ++i) {
    free[i] = boxes[i].free;
    total_free += free[i];
  }
  int budget = std::min(state.bias(), total_free);

  int finish = -1;
  for (int i = 0; i < k; ++i) {
    if (boxes[i].destroyed || free[i] > budget) continue;
    if (finish < 0 || free[i] < free[finish]) finish = i;
  }
  if (finish >= 0) {
    counts[finish] = free[finish];
    budget -= free[finish];
    free[finish] = 0;
  }
  while (budget > 0) {
    int best = -1;
    for (int i = 0; i < k; ++i) {
      if (boxes[i].destroyed || free[i] == 0) continue;
      if (best < 0 || free[i] > free[best]) best = i;
    }
    if (best < 0) break;
    ++counts[best];
    --free[best];
    --budget;
  }
  for (int i = 0; i < k && budget > 0; ++i) {
    int take = std::min(budget, free[i]);
    counts[i] += take;
    free[i] -= take;
    budget -= take;
  }
  return counts;
}

namespace {

int AnyBoxWithFree(const BoxGameState& state) {
  const auto& boxes = state.boxes();
  for (int i = 0; i < static_cast<int>(boxes.size()); ++i) {
    if (boxes[i].free > 0) return i;
  }
  return -1;
}

}  // namespace

int BoxBreakerDestroyMostFilled(const BoxGameState& state) {
  const auto& boxes = state.boxes();
  int best = -1;
  for (int i = 0; i < static_cast<int>(boxes.size()); ++i) {
    if (boxes[i].destroyed || boxes[i].free == 0) continue;
    if (best < 0 || boxes[i].maker > boxes[best].maker ||
        (boxes[i].maker == boxes[best].maker &&
         boxes[i].free < boxes[best].free)) {
      best = i;
    }
  }
  return best >= 0 ? best : AnyBoxWithFree(state);
}

int BoxBreakerDestroySmallest(const BoxGameState& state) {
  const auto& boxes = state.boxes();
  int best = -1;
  for (int i = 0; i < static_cast<int>(boxes.size()); ++i) {
    if (boxes[i].destroyed || boxes[i].free == 0) continue;
    if (best < 0 || boxes[i].free < boxes[best].free) best = i;
  }
  return best >= 0 ? best : AnyBoxWithFree(state);
}

int BoxBreakerRandom(const BoxGameState& state, Rng& rng) {
  const auto& boxes = state.boxes();
  std::vector<int> candidates;
  for (int i = 0; i < static_cast<int>(boxes.size()); ++i) {
    if (!boxes[i].destroyed && boxes[i].free > 0) candidates.push_back(i);
  }
  if (candidates.empty()) return AnyBoxWithFree(state);
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  return candidates[pick(rng)];
}

MinBoxState::MinBoxState(int num_boxes, int box_size, Rational alpha, int bias,
                         int adversary_budget)
    : box_size_(box_size), alpha_(alpha), bias_(bias),
      adversary_budget_(adversary_budget), w_maker_(num_boxes, 0),
      w_breaker_(num_boxes, 0) {
  if (num_boxes < 1 || box_size < 1) {
    throw Error(ErrorCode::kInvalidConfig, "MinBox needs boxes of size >= 1");
  }
  if (alpha <= 0 || alpha >= 1) {
    throw Error(ErrorCode::kInvalidConfig, "MinBox alpha must lie in (0,1)");
  }
  if (bias < 1 || adversary_budget < 1) {
    throw Error(ErrorCode::kInvalidConfig, "MinBox bias must be >= 1");
  }
}

bool MinBoxState::IsActive(int i) const {
  // w_M < alpha * D, compared exactly.
  return static_cast<__int128>(w_maker_[i]) * alpha_.denominator() <
         static_cast<__int128>(alpha_.numerator()) * box_size_;
}

double MinBoxState::DangerBound() const {
  return bias_ * (std::log(static_cast<double>(num_boxes())) + 1.0);
}

int MinBoxState::MakerClaim(int i, int count) {
  int take = std::clamp(count, 0, free_elements(i));
  w_maker_[i] += take;
  if (take > 0) adversary_since_maker_ = 0;
  return take;
}

int MinBoxMakerMove(MinBoxState& state) {
  int best = -1;
  for (int i = 0; i < state.num_boxes(); ++i) {
    if (!state.IsFree(i) || !state.IsActive(i)) continue;
    if (best < 0 || state.Danger(i) > state.Danger(best)) best = i;
  }
  if (best < 0) throw Error(ErrorCode::kNoActiveBox, "no free active box");
  ++state.w_maker_[best];
  state.adversary_since_maker_ = 0;
  return best;
}

void MinBoxBreakerApply(MinBoxState& state, std::span<const int> increments) {
  if (static_cast<int>(increments.size()) != state.num_boxes()) {
    throw Error(ErrorCode::kInvalidConfig, "one increment per box required");
  }
  int total = 0;
  for (int i = 0; i < state.num_boxes(); ++i) {
    if (increments[i] < 0) {
      throw Error(ErrorCode::kInvalidConfig, "negative increment");
    }
    if (increments[i] > state.free_elements(i)) {
      throw Error(ErrorCode::kBoxExhausted,
                  "box " + std::to_string(i) + " has no room for " +
                      std::to_string(increments[i]) + " elements");
    }
    total += increments[i];
  }
  for (int i = 0; i < state.num_boxes(); ++i) {
    state.w_breaker_[i] += increments[i];
  }
  state.adversary_since_maker_ += total;
  state.max_adversary_exchange_ =
      std::max(state.max_adversary_exchange_, state.adversary_since_maker_);
}

}  // namespace walkbreak
