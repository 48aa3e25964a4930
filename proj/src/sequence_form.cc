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

#include "mcg/sequence_form.h"

#include <chrono>
#include <map>
#include <string>
#include <vector>

#include "mcg/bounds.h"
#include "mcg/error.h"

namespace mcg {

namespace {

// Sparse linear form over LP columns, sorted by column.
using LinExpr = std::vector<std::pair<int, Rational>>;

LinExpr Combine(const LinExpr& a, const LinExpr& b, const Rational& fb) {
  LinExpr out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, b[j].second * fb);
      ++j;
    } else {
      Rational v = a[i].second + b[j].second * fb;
      if (!v.IsZero()) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

class LpBuilder {
 public:
  explicit LpBuilder(const GameTree& tree) : tree_(tree) {}

  SequenceLp Build() {
    SequenceLp& s = out_;
    s.value_column = s.lp.AddVariable(Rational(1), VarBounds::Free());
    s.sequence_column.resize(tree_.num_sequences);
    for (int q = 0; q < tree_.num_sequences; ++q) {
      s.sequence_column[q] = s.lp.AddVariable(Rational(0));
    }
    s.lp.AddRow({{s.sequence_column[0], Rational(1)}}, Sense::kEq, 1);
    for (const auto& info : tree_.infosets) {
      SparseRow row;
      for (size_t a = 0; a < info.actions.size(); ++a) {
        row.emplace_back(s.sequence_column[info.first_sequence + a], 1);
      }
      row.emplace_back(s.sequence_column[info.parent_sequence], -1);
      s.lp.AddRow(row, Sense::kEq, 0);
    }
    const TreeNode& root = tree_.nodes[0];
    for (int child : root.children) {
      LinExpr w = Payoff(child);
      SparseRow row{{s.value_column, Rational(1)}};
      for (auto& [col, a] : w) row.emplace_back(col, -a);
      s.allocation_rows.push_back(s.lp.AddRow(row, Sense::kLe, 0));
    }
    return std::move(out_);
  }

 private:
  LinExpr Payoff(int id) {
    const TreeNode& node = tree_.nodes[id];
    switch (node.owner) {
      case Owner::kTerminal:
        if (!node.win) return {};
        return {{out_.sequence_column[node.sequence], Rational(1)}};
      case Owner::kSearcher: {
        LinExpr sum;
        for (int c : node.children) sum = Combine(sum, Payoff(c), Rational(1));
        return sum;
      }
      case Owner::kChance: {
        LinExpr sum;
        for (size_t i = 0; i < node.children.size(); ++i) {
          sum = Combine(sum, Payoff(node.children[i]), node.probabilities[i]);
        }
        return sum;
      }
      case Owner::kHider: {
        std::vector<LinExpr> kids;
        for (int c : node.children) kids.push_back(Payoff(c));
        bool same = true;
        for (size_t i = 1; i < kids.size(); ++i) same = same && kids[i] == kids[0];
        if (same) {
          ++out_.indifferent_nodes;
          return kids[0];
        }
        int z = out_.lp.AddVariable(Rational(0), VarBounds::Free());
        std::vector<int> rows;
        for (const auto& w : kids) {
          SparseRow row{{z, Rational(1)}};
          for (auto& [col, a] : w) row.emplace_back(col, -a);
          rows.push_back(out_.lp.AddRow(row, Sense::kLe, 0));
        }
        out_.reveal_rows.emplace_back(node.key, std::move(rows));
        reveal_nodes_.push_back(id);
        return {{z, Rational(1)}};
      }
    }
    throw InternalError("unknown node owner");
  }

  const GameTree& tree_;
  SequenceLp out_;

 public:
  std::vector<int> reveal_nodes_;
};

// Converts a realization plan into a behavioural strategy tree.
StrategyNodePtr Behavioural(
    const GameTree& tree, int info, const std::vector<Rational>& x,
    const std::vector<std::vector<int>>& children_of_sequence) {
  const SearcherInfoset& I = tree.infosets[info];
  const Rational& parent = x[I.parent_sequence];
  if (parent.IsZero()) return nullptr;
  std::vector<StrategyChoice> mix;
  for (size_t a = 0; a < I.actions.size(); ++a) {
    int seq = I.first_sequence + static_cast<int>(a);
    if (x[seq].IsZero()) continue;
    StrategyChoice c{x[seq] / parent, I.actions[a], {}};
    for (int child : children_of_sequence[seq]) {
      c.branches[tree.infosets[child].history.back().label] =
          Behavioural(tree, child, x, children_of_sequence);
    }
    mix.push_back(std::move(c));
  }
  return MakeNode(std::move(mix));
}

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since)
      .count();
}

}  // namespace

SequenceLp BuildSequenceLp(const GameTree& tree) {
  return LpBuilder(tree).Build();
}

HiderStrategy SolveResult::Hider() const {
  return HiderStrategy{hider_allocations, TablePolicy(hider_reveals)};
}

SolveResult Solve(const GameSpec& spec, const SolveOptions& options) {
  spec.Validate();
  auto t0 = std::chrono::steady_clock::now();
  GameTree tree = BuildTree(spec, options.model, options.node_budget);
  LpBuilder builder(tree);
  SequenceLp slp = builder.Build();
  SolveResult res;
  res.spec = spec;
  res.model = options.model;
  res.stats.build_seconds = Seconds(t0);
  auto t1 = std::chrono::steady_clock::now();
  LpSolution sol = SolveLp(slp.lp, Objective::kMaximize, options.lp);
  res.stats.solve_seconds = Seconds(t1);
  if (sol.status != LpStatus::kOptimal) {
    throw InternalError("sequence-form program is " +
                        LpStatusName(sol.status));
  }
  res.value = sol.objective_value;
  MCG_CHECK(res.value.Sign() >= 0 && res.value <= Rational(1));

  std::vector<Rational> x(tree.num_sequences);
  for (int q = 0; q < tree.num_sequences; ++q) {
    x[q] = sol.primal[slp.sequence_column[q]];
  }
  std::vector<std::vector<int>> children_of_sequence(tree.num_sequences);
  for (size_t i = 0; i < tree.infosets.size(); ++i) {
    const auto& I = tree.infosets[i];
    if (!I.history.empty()) {
      children_of_sequence[I.parent_sequence].push_back(static_cast<int>(i));
    }
    for (size_t a = 0; a < I.actions.size(); ++a) {
      int seq = I.first_sequence + static_cast<int>(a);
      if (x[seq].Sign() > 0) {
        res.searcher_plan.push_back({I.history, I.actions[a], x[seq]});
      }
    }
  }
  res.searcher_strategy = StrategyTree{spec.n, spec.d, spec.k, nullptr};
  res.searcher_strategy.root = Behavioural(tree, 0, x, children_of_sequence);

  for (size_t i = 0; i < slp.allocation_rows.size(); ++i) {
    const Rational& y = sol.dual[slp.allocation_rows[i]];
    MCG_CHECK(y.Sign() >= 0);
    if (y.IsZero()) continue;
    res.hider_allocations.emplace_back(tree.allocations[i], y);
    res.hider_plan.push_back({tree.allocations[i], "", -1, y});
  }
  // Several tree nodes can share one reveal key when different allocations
  // or earlier reveals lead to the same position.  Their continuation games
  // coincide, so pooling the realization weights per key gives a stationary
  // policy with the same leaf-level realization mass.
  std::map<std::string, std::vector<Rational>> pooled;
  for (size_t r = 0; r < slp.reveal_rows.size(); ++r) {
    const auto& [key, rows] = slp.reveal_rows[r];
    const TreeNode& node = tree.nodes[builder.reveal_nodes_[r]];
    auto& acc = pooled[key];
    if (acc.empty()) acc.resize(rows.size());
    MCG_CHECK(acc.size() == rows.size());
    for (size_t c = 0; c < rows.size(); ++c) {
      const Rational& y = sol.dual[rows[c]];
      MCG_CHECK(y.Sign() >= 0);
      acc[c] += y;
      if (y.Sign() > 0) res.hider_plan.push_back({{}, key, node.boxes[c], y});
    }
  }
  for (auto& [key, weights] : pooled) {
    Rational total;
    for (const Rational& w : weights) total += w;
    if (total.IsZero()) continue;
    for (Rational& w : weights) w = w / total;
    res.hider_reveals[key] = std::move(weights);
  }

  res.stats.tree_nodes = static_cast<long>(tree.nodes.size());
  res.stats.searcher_infosets = static_cast<long>(tree.infosets.size());
  res.stats.searcher_sequences = tree.num_sequences;
  res.stats.hider_nodes = tree.num_hider_nodes;
  res.stats.lp_rows = slp.lp.NumRows();
  res.stats.lp_columns = slp.lp.NumCols();
  res.stats.pivots = sol.pivots;
  return res;
}

AccuracyResult CheckAccuracy(int n, int d, int k, const SolveOptions& options) {
  GameSpec spec{n, d, k, Variant::kAdversary};
  SolveResult r = Solve(spec, options);
  AccuracyResult a;
  a.value = r.value;
  a.bound = UpperBoundCombinatorial(n, d, k);
  a.accurate = a.value == a.bound;
  return a;
}

}  // namespace mcg
