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

#ifndef MCG_STRATEGY_TREE_H_
#define MCG_STRATEGY_TREE_H_

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mcg/game.h"
#include "mcg/rational.h"
#include "mcg/search_model.h"

namespace mcg {

struct StrategyNode;
// Null means "end of plan": the searcher resigns on that line.
using StrategyNodePtr = std::shared_ptr<const StrategyNode>;

// One query of a node's mixture, with the continuation for each canonical
// label that may surrender a treasure. Missing keys also mean resignation
// (unless that reveal completed the game).
struct StrategyChoice {
  Rational probability;
  Query query;
  std::map<int, StrategyNodePtr> branches;
};

// A searcher behavioural strategy: at every reached position a probability
// mixture over queries.
struct StrategyNode {
  std::vector<StrategyChoice> mix;
};

// A strategy written in first-touch labels for an (n, d, k) game.
struct StrategyTree {
  int n = 0;
  int d = 0;
  int k = 0;
  StrategyNodePtr root;
};

StrategyNodePtr MakeNode(std::vector<StrategyChoice> mix);
// A node that asks `q` with certainty.
StrategyNodePtr Ask(Query q, std::map<int, StrategyNodePtr> branches = {});

// Throws InvalidInput, naming the offending node path (for example
// "root.mix[0].branches[2]"), unless: probabilities are non-negative and sum
// to one at every node; queries are legal for the model (canonical
// first-touch labels under symmetry); branch keys are canonical labels of
// the query; depth never exceeds d.
void ValidateStrategy(const StrategyTree& tree, const GameSpec& spec,
                      const ModelOptions& options);

// Longest chain of queries.
int StrategyDepth(const StrategyTree& tree);
// Number of nodes.
int StrategyNodeCount(const StrategyTree& tree);

}  // namespace mcg

#endif  // MCG_STRATEGY_TREE_H_
