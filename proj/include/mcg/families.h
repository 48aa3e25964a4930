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
#ifndef MCG_FAMILIES_H_
#define MCG_FAMILIES_H_

#include <string>
#include <vector>

#include "mcg/best_response.h"
#include "mcg/game.h"
#include "mcg/strategy_tree.h"

namespace mcg {

// Built-in searcher strategies, written in first-touch labels (label 0 is
// always the box that surrendered the first treasure).

// The (4,3,2) strategy: after the first treasure, re-ask the lucky box with
// a new one (4/5) or two new boxes (1/5). Worst-case value 2/5.
StrategyTree Fig432();

// n = 2k-1, d = 2: ask {0..k-1}, then the lucky box with the k-1 boxes never
// asked. Worst-case value k/n.
StrategyTree FamilyD2(int k);

// n = 3k-2, d = 3: after the first treasure, with probability
// n k^2 / C(n+2,3) re-ask the lucky box with k-1 new boxes, otherwise ask k
// new boxes. Worst-case value k^3 / C(n+2,3).
StrategyTree FamilyD3(int k);

// The (5,4,2) strategy with the 4/7, 3/7 and uniform 1/3 mixtures.
// Worst-case value 8/35.
StrategyTree Fig542();

// (3,3,2) strategies for each revealer: 3/5 (adversary), 12/19 (random) and
// 2/3 (cooperative, together with FewestTreasuresRule()).
StrategyTree Family332(Variant variant);

// Cooperative reveal rule: surrender from the queried box holding the fewest
// treasures (ties go to the lowest label).
RevealRule FewestTreasuresRule();

// The d-independent strategy: ask {0..k-1}, then always re-ask the box that
// surrendered the last treasure together with k-1 of the other n-1 boxes
// chosen uniformly at random. Requires 2 <= k <= n.
StrategyTree FamilyInfiniteD(int n, int d, int k);

// Describes a built-in family for listing and lookup.
struct FamilyInfo {
  std::string name;
  std::string parameters;
  std::string description;
};
std::vector<FamilyInfo> ListFamilies();

// Builds a family by name. `n`, `d` and `k` are used where the family takes
// parameters (k for "d2"/"d3", all three for "infinite-d"); the variant
// selects the member of "332". Throws InvalidInput for unknown names or
// inadmissible parameters.
StrategyTree BuildFamily(const std::string& name, int n, int d, int k,
                         Variant variant);

}  // namespace mcg

#endif  // MCG_FAMILIES_H_
