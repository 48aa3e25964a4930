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

#ifndef MCG_GAME_TREE_H_
#define MCG_GAME_TREE_H_

#include <string>
#include <vector>

#include "mcg/game.h"
#include "mcg/rational.h"
#include "mcg/search_model.h"

namespace mcg {

enum class Owner { kSearcher, kHider, kChance, kTerminal };

struct TreeNode {
  Owner owner = Owner::kTerminal;
  // Searcher nodes: index into GameTree::infosets. Hider nodes: their own
  // information-set index (the hider observes everything but the searcher's
  // coin flips, so each hider node is a singleton set).
  int infoset = -1;
  std::vector<int> children;
  // Chance nodes: probability per child.
  std::vector<Rational> probabilities;
  // Human-readable action per child (query, reveal, allocation, draw).
  std::vector<std::string> actions;
  // Terminal nodes: whether the searcher collected every treasure, and the
  // searcher sequence (index) that reached the leaf.
  bool win = false;
  int sequence = -1;
  // Hider reveal nodes: the RevealKey of the decision and the representative
  // box of each child option.
  std::string key;
  std::vector<int> boxes;
};

// A searcher information set: every node sharing one observed history.
struct SearcherInfoset {
  History history;
  int touched = 0;
  // Sequence that leads into this set (0 is the empty sequence).
  int parent_sequence = 0;
  std::vector<Query> actions;
  // Sequence index of actions[0]; actions[i] has first_sequence + i.
  int first_sequence = 0;
};

struct GameTree {
  GameSpec spec;
  ModelOptions options;
  std::vector<TreeNode> nodes;  // nodes[0] is the root
  std::vector<SearcherInfoset> infosets;
  // Number of searcher sequences including the empty sequence 0.
  int num_sequences = 1;
  int num_hider_nodes = 0;
  // Root children are the hider's initial allocation choices.
  std::vector<Allocation> allocations;
};

constexpr long kDefaultNodeBudget = 10'000'000;

// Builds the extensive form. The root is a hider node choosing an
// allocation; reveal decisions are hider nodes (kAdversary) or chance nodes
// weighted by treasure count (kRandom); assignment of untouched contents to
// new labels is a chance node. Throws InvalidInput for kCooperative and
// BudgetExceeded, with a size estimate, when more than `node_budget` nodes
// would be created.
GameTree BuildTree(const GameSpec& spec, const ModelOptions& options,
                   long node_budget = kDefaultNodeBudget);

}  // namespace mcg

#endif  // MCG_GAME_TREE_H_
