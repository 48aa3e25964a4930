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
#include "mcg/verify.h"

#include <algorithm>
#include <set>

namespace mcg {
namespace {

// `m` labels asked so far; `lucky` labels that have surrendered a treasure.
bool NodeNeverAsksBack(const StrategyNodePtr& node, int m,
                       const std::set<int>& lucky) {
  if (!node) return true;
  for (const StrategyChoice& c : node->mix) {
    for (int b : c.query) {
      if (b < m && lucky.count(b) == 0) return false;
    }
    int next_m = m;
    for (int b : c.query) next_m = std::max(next_m, b + 1);
    for (const auto& [label, child] : c.branches) {
      std::set<int> next = lucky;
      next.insert(label);
      if (!NodeNeverAsksBack(child, next_m, next)) return false;
    }
  }
  return true;
}

}  // namespace

HiderResponse Verify(const GameSpec& spec, const StrategyTree& tree,
                     const ModelOptions& options) {
  return BestResponseValue(spec, tree, options);
}

HiderResponse JointVerifyCooperative(const GameSpec& spec,
                                     const StrategyTree& tree,
                                     const RevealRule& rule,
                                     const ModelOptions& options) {
  return CooperativeValue(spec, tree, rule, options);
}

bool NeverAsksBack(const StrategyTree& tree) {
  return NodeNeverAsksBack(tree.root, 0, {});
}

}  // namespace mcg
