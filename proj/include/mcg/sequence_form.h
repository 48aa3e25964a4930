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

#ifndef MCG_SEQUENCE_FORM_H_
#define MCG_SEQUENCE_FORM_H_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mcg/best_response.h"
#include "mcg/game_tree.h"
#include "mcg/lp.h"
#include "mcg/rational.h"
#include "mcg/strategy_tree.h"

namespace mcg {

// The searcher's realization-plan program for a game tree:
//
//   maximise v  subject to
//     x_root = 1,  sum_{a} x_{I,a} = x_{parent(I)}  for every searcher set I,
//     Z_h <= W(c)   for every child c of every adversarial reveal node h,
//     v   <= W(c)   for every initial allocation c,
//     x >= 0,  v and Z free,
//
// where W(node) is the searcher's expected payoff of the subtree as a linear
// form in x and Z (chance nodes average, win leaves contribute their
// sequence's x). Row duals of the last two families form the hider's
// realization plan.
struct SequenceLp {
  LinearProgram lp;
  int value_column = -1;
  // LP column of each searcher sequence.
  std::vector<int> sequence_column;
  // Row of each initial allocation (aligned with GameTree::allocations).
  std::vector<int> allocation_rows;
  // For each adversarial reveal node with a variable: its key and one row
  // per child (aligned with TreeNode::children).
  std::vector<std::pair<std::string, std::vector<int>>> reveal_rows;
  // Reveal nodes whose children are payoff-equivalent for every searcher
  // plan; they need no variable.
  int indifferent_nodes = 0;
};

SequenceLp BuildSequenceLp(const GameTree& tree);

struct SolveOptions {
  ModelOptions model;
  long node_budget = kDefaultNodeBudget;
  LpOptions lp;
};

struct SolveStats {
  long tree_nodes = 0;
  long searcher_infosets = 0;
  long searcher_sequences = 0;
  long hider_nodes = 0;
  long lp_rows = 0;
  long lp_columns = 0;
  long pivots = 0;
  double build_seconds = 0;
  double solve_seconds = 0;
};

// One searcher sequence with its realization weight.
struct SequenceWeight {
  History history;
  Query query;
  Rational weight;
};

// One hider decision weight: an allocation or a reveal.
struct HiderWeight {
  // Allocation decisions carry the allocation; reveal decisions carry the
  // RevealKey and the revealed box.
  Allocation allocation;
  std::string key;
  int box = -1;
  Rational weight;
};

struct SolveResult {
  GameSpec spec;
  ModelOptions model;
  Rational value;
  // Sequences with positive weight, in sequence order.
  std::vector<SequenceWeight> searcher_plan;
  // Positive hider realization weights: allocations first, then reveals.
  std::vector<HiderWeight> hider_plan;
  // The same plans in behavioural form.
  StrategyTree searcher_strategy;
  std::vector<std::pair<Allocation, Rational>> hider_allocations;
  std::map<std::string, std::vector<Rational>> hider_reveals;
  SolveStats stats;

  // The optimal hider as an evaluable strategy.
  HiderStrategy Hider() const;
};

// Exact game value with optimal plans for both sides. Deterministic for a
// fixed spec and options. Throws InvalidInput for kCooperative and
// BudgetExceeded when the tree is too large.
SolveResult Solve(const GameSpec& spec,
                  const SolveOptions& options = SolveOptions());

struct AccuracyResult {
  bool accurate = false;
  Rational value;
  Rational bound;
};

// Compares the adversarial value with k^d / C(n+d-1, d).
AccuracyResult CheckAccuracy(int n, int d, int k,
                             const SolveOptions& options = SolveOptions());

}  // namespace mcg

#endif  // MCG_SEQUENCE_FORM_H_
