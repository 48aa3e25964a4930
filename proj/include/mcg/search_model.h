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

#ifndef MCG_SEARCH_MODEL_H_
#define MCG_SEARCH_MODEL_H_

#include <string>
#include <vector>

#include "mcg/game.h"
#include "mcg/rational.h"

namespace mcg {

// The hider's private state expressed in the searcher's canonical labels.
// Boxes are labelled in order of first appearance in a query; the searcher
// cannot tell untouched boxes apart, so their contents are kept only as a
// multiset.
struct HiddenState {
  // Treasure counts of the touched labels 0..m-1.
  std::vector<int> touched;
  // Contents of the untouched boxes, weakly decreasing.
  std::vector<int> pool;

  int Remaining() const;
  std::string Key() const;
  friend bool operator<(const HiddenState& a, const HiddenState& b) {
    return a.touched != b.touched ? a.touched < b.touched : a.pool < b.pool;
  }
  friend bool operator==(const HiddenState& a, const HiddenState& b) {
    return a.touched == b.touched && a.pool == b.pool;
  }
};

// One searcher turn: the query asked and the canonical label that
// surrendered a treasure.
struct Step {
  Query query;
  int label = 0;
  friend bool operator==(const Step& a, const Step& b) {
    return a.query == b.query && a.label == b.label;
  }
};
using History = std::vector<Step>;

std::string HistoryKey(const History& h);

// Outcome of assigning untouched contents to the fresh labels of a query.
struct Draw {
  Rational probability;
  HiddenState state;
};

// A way for the query to surrender a treasure. Boxes whose removal leads to
// the same canonical label and state are merged into one option.
struct RevealOption {
  // Labels (in the drawn state) of the merged boxes; `boxes[0]` represents
  // the option.
  std::vector<int> boxes;
  // Canonical label of the revealed box after the step.
  int label = 0;
  HiddenState next;
  // Treasures behind this option; the random revealer picks with
  // probability weight / (treasures inside the query).
  Rational weight;
};

struct ModelOptions {
  // Quotient by box relabelling: the searcher plays in first-touch labels
  // against a uniformly permuted allocation. When false, boxes keep their
  // identities and the hider picks individual allocations.
  bool symmetric = true;
  // Allow queries of any size 1..k instead of exactly k.
  bool relaxed_queries = false;
};

// Identifies a hider reveal decision: history, drawn state and query.
std::string RevealKey(const History& h, const HiddenState& drawn,
                      const Query& q);

class SearchModel {
 public:
  SearchModel(const GameSpec& spec, const ModelOptions& options);

  const GameSpec& spec() const { return spec_; }
  const ModelOptions& options() const { return options_; }

  // Touched label count before the first query (0, or n without symmetry).
  int InitialTouched() const { return options_.symmetric ? 0 : spec_.n; }

  // The hider's initial pure choices: partitions of d (weakly decreasing,
  // length n) under symmetry, otherwise every allocation.
  std::vector<Allocation> HiderChoices() const;
  HiddenState RootState(const Allocation& allocation) const;

  // Canonical queries with m touched labels, in lexicographic order. A
  // canonical query is a set of touched labels plus the fresh labels
  // m..m+f-1.
  std::vector<Query> Queries(int m) const;
  // Empty when q is canonical for m touched labels, else the reason.
  std::string CheckQuery(int m, const Query& q) const;
  int FreshCount(int m, const Query& q) const;
  int TouchedAfter(int m, const Query& q) const {
    return m + FreshCount(m, q);
  }

  // Chance assignment of untouched contents to the fresh labels of q.
  std::vector<Draw> Draws(const HiddenState& s, int m, const Query& q) const;
  // Reveal options of q in a drawn state (empty when q holds no treasure).
  std::vector<RevealOption> Reveals(const HiddenState& drawn, int m,
                                    const Query& q) const;

 private:
  GameSpec spec_;
  ModelOptions options_;
};

}  // namespace mcg

#endif  // MCG_SEARCH_MODEL_H_
