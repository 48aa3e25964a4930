// Copyright 2026 The MCG Authors. All rights reserved.
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

#ifndef MCG_GAME_H_
#define MCG_GAME_H_

#include <string>
#include <utility>
#include <vector>

#include "mcg/rational.h"

namespace mcg {

// Who decides which treasure is surrendered when a query hits several
// non-empty boxes.
enum class Variant { kAdversary, kRandom, kCooperative };

std::string VariantName(Variant v);
// Accepts "adversary", "random" or "cooperative" (case-insensitive).
Variant ParseVariant(const std::string& name);

// One game instance: n boxes, d treasures, queries of k boxes.
struct GameSpec {
  int n = 0;
  int d = 0;
  int k = 0;
  Variant variant = Variant::kAdversary;

  // Throws InvalidInput unless 1 <= k <= n and d >= 1.
  void Validate() const;
  std::string ToString() const;
};

// Treasure counts per box.
using Allocation = std::vector<int>;
// Strictly increasing list of queried box indices.
using Query = std::vector<int>;

struct GameState {
  Allocation remaining;
  std::vector<std::pair<Query, int>> history;
  int treasures_found = 0;

  // The state before any query for a given initial allocation.
  static GameState Initial(const Allocation& allocation);
  int Remaining() const;
  bool Won() const { return Remaining() == 0; }
};

// Every placement of d treasures into n boxes, once each, in ascending
// lexicographic order of the count vector.
std::vector<Allocation> EnumerateAllocations(int n, int d);

// The boxes of `q` that may surrender a treasure. Under kRandom each carries
// its probability (proportional to its treasure count); under the other
// variants every weight is 1 and the choice belongs to an agent. Empty when
// the query holds no treasure.
std::vector<std::pair<int, Rational>> LegalReveals(const GameState& state,
                                                   const Query& q,
                                                   Variant variant);

// Returns the successor state after box `revealed` of `q` surrenders a
// treasure. Throws InvalidInput when the move is illegal.
GameState ApplyMove(const GameState& state, const Query& q, int revealed);

// Throws InvalidInput unless q is strictly increasing within [0, n) and its
// size is k (or between 1 and k when `relaxed`).
void ValidateQuery(const Query& q, int n, int k, bool relaxed);

std::string FormatVector(const std::vector<int>& v);

}  // namespace mcg

#endif  // MCG_GAME_H_
