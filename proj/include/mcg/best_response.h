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

#ifndef MCG_BEST_RESPONSE_H_
#define MCG_BEST_RESPONSE_H_

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mcg/game.h"
#include "mcg/rational.h"
#include "mcg/search_model.h"
#include "mcg/strategy_tree.h"

namespace mcg {

// Everything the revealing side may condition on at a reveal decision.
struct RevealContext {
  const History& history;
  // Touched label count before the query.
  int touched;
  // Hidden state after the fresh labels of the query received contents.
  const HiddenState& drawn;
  const Query& query;
  const std::vector<RevealOption>& options;
};

// Probability of each entry of ctx.options (must be non-negative, sum 1).
using RevealPolicy =
    std::function<std::vector<Rational>(const RevealContext&)>;
// A deterministic reveal rule: returns a box of ctx.query (a drawn label)
// that holds a treasure.
using RevealRule = std::function<int(const RevealContext&)>;

// A hider behavioural strategy: a distribution over initial allocations
// (under symmetry an allocation stands for its whole relabelling orbit) and,
// for the adversarial variant, a reveal policy.
struct HiderStrategy {
  std::vector<std::pair<Allocation, Rational>> allocations;
  RevealPolicy reveal;
};

// A reveal table keyed by RevealKey, as produced by the LP solver. Keys that
// are absent reveal the first option.
RevealPolicy TablePolicy(std::map<std::string, std::vector<Rational>> table);

// Allocation weights of the hider who places treasures uniformly over all
// C(n+d-1, d) allocations.
std::vector<std::pair<Allocation, Rational>> UniformAllocations(int n, int d);

// The hider's best reply to a searcher strategy.
struct HiderResponse {
  Rational value;
  // The allocation attaining the minimum (a partition under symmetry).
  Allocation allocation;
  // Chosen box (drawn label) at every adversarial reveal decision, keyed by
  // RevealKey, for every allocation examined.
  std::map<std::string, int> reveals;
};

// Exact worst-case win probability of `tree`: the minimum over hider pure
// strategies, with reveals chosen by the hider (kAdversary), by chance in
// proportion to treasures (kRandom). Throws InvalidInput for kCooperative
// (use CooperativeValue) or an ill-formed tree.
HiderResponse BestResponseValue(const GameSpec& spec, const StrategyTree& tree,
                                const ModelOptions& options = ModelOptions());

// Minimum over allocations of the win probability of `tree` when every
// reveal is chosen by `rule`. Throws InvalidInput when the rule names a box
// without treasure or outside the query.
HiderResponse CooperativeValue(const GameSpec& spec, const StrategyTree& tree,
                               const RevealRule& rule,
                               const ModelOptions& options = ModelOptions());

// The searcher's best reply to a hider strategy.
struct SearcherResponse {
  Rational value;
  // A deterministic strategy attaining `value`.
  StrategyTree strategy;
};

// Exact maximum over searcher pure strategies of the win probability against
// `hider`. Under kRandom the reveal policy is ignored. Throws InvalidInput
// when the allocation weights are not a distribution or the policy returns
// an invalid distribution.
SearcherResponse HiderStrategyValue(const GameSpec& spec,
                                    const HiderStrategy& hider,
                                    const ModelOptions& options = ModelOptions());

}  // namespace mcg

#endif  // MCG_BEST_RESPONSE_H_
