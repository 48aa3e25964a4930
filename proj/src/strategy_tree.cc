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

#include "mcg/strategy_tree.h"

#include <algorithm>

#include "mcg/error.h"

namespace mcg {

StrategyNodePtr MakeNode(std::vector<StrategyChoice> mix) {
  auto node = std::make_shared<StrategyNode>();
  node->mix = std::move(mix);
  return node;
}

StrategyNodePtr Ask(Query q, std::map<int, StrategyNodePtr> branches) {
  return MakeNode({StrategyChoice{Rational(1), std::move(q),
                                  std::move(branches)}});
}

namespace {

void ValidateNode(const StrategyNode& node, const SearchModel& model, int m,
                  int depth, const std::string& path) {
  const GameSpec& spec = model.spec();
  auto fail = [&](const std::string& msg) {
    throw InvalidInput("invalid strategy at " + path + ": " + msg);
  };
  if (depth >= spec.d) fail("deeper than d = " + std::to_string(spec.d));
  if (node.mix.empty()) fail("empty mixture");
  Rational total;
  for (size_t i = 0; i < node.mix.size(); ++i) {
    const StrategyChoice& c = node.mix[i];
    std::string here = path + ".mix[" + std::to_string(i) + "]";
    if (c.probability.Sign() < 0) {
      throw InvalidInput("invalid strategy at " + here +
                         ": negative probability");
    }
    total += c.probability;
    std::string why = model.CheckQuery(m, c.query);
    if (!why.empty()) throw InvalidInput("invalid strategy at " + here + ": " + why);
    int next_m = model.TouchedAfter(m, c.query);
    for (const auto& [label, child] : c.branches) {
      std::string bpath = here + ".branches[" + std::to_string(label) + "]";
      bool member = std::find(c.query.begin(), c.query.end(), label) !=
                    c.query.end();
      if (!member) {
        throw InvalidInput("invalid strategy at " + bpath +
                           ": branch key is not in the query");
      }
      if (label > m) {
        throw InvalidInput("invalid strategy at " + bpath +
                           ": a new box that surrenders a treasure takes "
                           "label " + std::to_string(m));
      }
      if (child) ValidateNode(*child, model, next_m, depth + 1, bpath);
    }
  }
  if (total != Rational(1)) {
    fail("mixture probabilities sum to " + total.ToString());
  }
}

int DepthOf(const StrategyNodePtr& node) {
  if (!node) return 0;
  int best = 0;
  for (const auto& c : node->mix) {
    int sub = 0;
    for (const auto& [label, child] : c.branches) {
      sub = std::max(sub, DepthOf(child));
    }
    best = std::max(best, 1 + sub);
  }
  return best;
}

int CountOf(const StrategyNodePtr& node) {
  if (!node) return 0;
  int total = 1;
  for (const auto& c : node->mix) {
    for (const auto& [label, child] : c.branches) total += CountOf(child);
  }
  return total;
}

}  // namespace

void ValidateStrategy(const StrategyTree& tree, const GameSpec& spec,
                      const ModelOptions& options) {
  if (tree.n != spec.n || tree.d != spec.d || tree.k != spec.k) {
    throw InvalidInput("strategy is written for (" + std::to_string(tree.n) +
                       "," + std::to_string(tree.d) + "," +
                       std::to_string(tree.k) + ") but the game is " +
                       spec.ToString());
  }
  if (!tree.root) throw InvalidInput("invalid strategy at root: missing");
  SearchModel model(spec, options);
  ValidateNode(*tree.root, model, model.InitialTouched(), 0, "root");
}

int StrategyDepth(const StrategyTree& tree) { return DepthOf(tree.root); }
int StrategyNodeCount(const StrategyTree& tree) { return CountOf(tree.root); }

}  // namespace mcg
