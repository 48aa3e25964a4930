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
#ifndef MCG_VERIFY_H_
#define MCG_VERIFY_H_

#include "mcg/best_response.h"
#include "mcg/game.h"
#include "mcg/rational.h"
#include "mcg/search_model.h"
#include "mcg/strategy_tree.h"

namespace mcg {

// Exact worst-case win probability of `tree` under the adversarial or
// random revealer: the minimum over hider pure strategies, with the initial
// relabelling of boxes averaged out. Validates the tree first; a missing
// branch counts as resignation.
HiderResponse Verify(const GameSpec& spec, const StrategyTree& tree,
                     const ModelOptions& options = ModelOptions());

// Worst case over allocations when every reveal follows `rule`.
HiderResponse JointVerifyCooperative(
    const GameSpec& spec, const StrategyTree& tree, const RevealRule& rule,
    const ModelOptions& options = ModelOptions());

// True when no path of `tree` asks a previously asked box that has not yet
// surrendered a treasure. Under this property the revealer's choice never
// matters, so adversarial and random values coincide.
bool NeverAsksBack(const StrategyTree& tree);

}  // namespace mcg

#endif  // MCG_VERIFY_H_
