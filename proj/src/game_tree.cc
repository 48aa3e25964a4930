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

#include "mcg/game_tree.h"

#include <map>

#include "mcg/error.h"

namespace mcg {

namespace {

class TreeBuilder {
 public:
  TreeBuilder(const GameSpec& spec, const ModelOptions& options, long budget)
      : model_(spec, options), budget_(budget) {
    tree_.spec = spec;
    tree_.options = options;
  }

  GameTree Build() {
    if (tree_.spec.variant == Variant::kCooperative) {
      throw InvalidInput(
          "the cooperative variant has no tree formulation; it can only be "
          "verified against a given strategy and reveal rule");
    }
    int root = NewNode(Owner::kHider);
    tree_.nodes[root].infoset = tree_.num_hider_nodes++;
    tree_.allocations = model_.HiderChoices();
    roots_total_ = static_cast<long>(tree_.allocations.size());
    for (const auto& a : tree_.allocations) {
      History h;
      int child = Searcher(model_.RootState(a), model_.InitialTouched(), h, 0);
      tree_.nodes[root].children.push_back(child);
      tree_.nodes[root].actions.push_back("allocate " + FormatVector(a));
      ++roots_done_;
    }
    return std::move(tree_);
  }

 private:
  int NewNode(Owner owner) {
    if (static_cast<long>(tree_.nodes.size()) >= budget_) {
      double done = static_cast<double>(roots_done_) + 0.5;
      long estimate = static_cast<long>(
          static_cast<double>(tree_.nodes.size()) * roots_total_ / done);
      throw BudgetExceeded(
          "game tree for " + tree_.spec.ToString() + " exceeds the budget of " +
          std::to_string(budget_) + " nodes after " +
          std::to_string(roots_done_) + " of " + std::to_string(roots_total_) +
          " allocations; estimated size about " + std::to_string(estimate) +
          " nodes");
    }
    tree_.nodes.emplace_back();
    tree_.nodes.back().owner = owner;
    return static_cast<int>(tree_.nodes.size()) - 1;
  }

  int Infoset(const History& h, int m, int parent_sequence) {
    std::string key = HistoryKey(h);
    auto it = infoset_ids_.find(key);
    if (it != infoset_ids_.end()) {
      MCG_CHECK(tree_.infosets[it->second].parent_sequence == parent_sequence);
      return it->second;
    }
    SearcherInfoset info;
    info.history = h;
    info.touched = m;
    info.parent_sequence = parent_sequence;
    info.actions = model_.Queries(m);
    info.first_sequence = tree_.num_sequences;
    tree_.num_sequences += static_cast<int>(info.actions.size());
    tree_.infosets.push_back(std::move(info));
    int id = static_cast<int>(tree_.infosets.size()) - 1;
    infoset_ids_[key] = id;
    return id;
  }

  int Searcher(const HiddenState& s, int m, History& h, int parent_sequence) {
    int node = NewNode(Owner::kSearcher);
    int info = Infoset(h, m, parent_sequence);
    tree_.nodes[node].infoset = info;
    int first = tree_.infosets[info].first_sequence;
    std::vector<Query> actions = tree_.infosets[info].actions;
    for (size_t a = 0; a < actions.size(); ++a) {
      int child = AfterQuery(s, m, h, actions[a], first + static_cast<int>(a));
      tree_.nodes[node].children.push_back(child);
      tree_.nodes[node].actions.push_back("ask " + FormatVector(actions[a]));
    }
    return node;
  }

  int AfterQuery(const HiddenState& s, int m, History& h, const Query& q,
                 int sequence) {
    std::vector<Draw> draws = model_.Draws(s, m, q);
    if (draws.size() == 1) return Reveal(draws[0].state, m, h, q, sequence);
    int node = NewNode(Owner::kChance);
    for (const Draw& d : draws) {
      int child = Reveal(d.state, m, h, q, sequence);
      tree_.nodes[node].children.push_back(child);
      tree_.nodes[node].probabilities.push_back(d.probability);
      tree_.nodes[node].actions.push_back("draw " + d.state.Key());
    }
    return node;
  }

  int Reveal(const HiddenState& drawn, int m, History& h, const Query& q,
             int sequence) {
    std::vector<RevealOption> options = model_.Reveals(drawn, m, q);
    int next_m = model_.TouchedAfter(m, q);
    if (options.empty()) {
      int leaf = NewNode(Owner::kTerminal);
      tree_.nodes[leaf].sequence = sequence;
      return leaf;
    }
    auto outcome = [&](const RevealOption& opt) {
      if (opt.next.Remaining() == 0) {
        int leaf = NewNode(Owner::kTerminal);
        tree_.nodes[leaf].win = true;
        tree_.nodes[leaf].sequence = sequence;
        return leaf;
      }
      h.push_back({q, opt.label});
      int child = Searcher(opt.next, next_m, h, sequence);
      h.pop_back();
      return child;
    };
    if (options.size() == 1) return outcome(options[0]);
    bool adversary = tree_.spec.variant == Variant::kAdversary;
    int node = NewNode(adversary ? Owner::kHider : Owner::kChance);
    if (adversary) {
      tree_.nodes[node].infoset = tree_.num_hider_nodes++;
      tree_.nodes[node].key = RevealKey(h, drawn, q);
    }
    Rational inside;
    for (const auto& o : options) inside += o.weight;
    for (const auto& o : options) {
      int child = outcome(o);
      tree_.nodes[node].children.push_back(child);
      tree_.nodes[node].actions.push_back("reveal " + std::to_string(o.boxes[0]));
      tree_.nodes[node].boxes.push_back(o.boxes[0]);
      if (!adversary) tree_.nodes[node].probabilities.push_back(o.weight / inside);
    }
    return node;
  }

  SearchModel model_;
  long budget_;
  GameTree tree_;
  std::map<std::string, int> infoset_ids_;
  long roots_done_ = 0;
  long roots_total_ = 1;
};

}  // namespace

GameTree BuildTree(const GameSpec& spec, const ModelOptions& options,
                   long node_budget) {
  if (node_budget < 1) throw InvalidInput("node budget must be at least 1");
  return TreeBuilder(spec, options, node_budget).Build();
}

}  // namespace mcg
