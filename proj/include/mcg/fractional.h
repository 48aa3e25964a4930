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
#ifndef MCG_FRACTIONAL_H_
#define MCG_FRACTIONAL_H_

#include <optional>
#include <vector>

#include "mcg/rational.h"

namespace mcg {

// Treasures found so far, box by box, by the one-box-per-query searcher who
// empties boxes in her planned order. `lambda` is weakly decreasing and its
// last entry is the box currently being asked.
struct YoungState {
  std::vector<int> lambda;
  int n = 0;
  int d = 0;

  // Throws InvalidInput unless lambda is weakly decreasing with positive
  // entries, sum(lambda) <= d and |lambda| <= n.
  void Validate() const;
};

// (n, d) with a rational query size k >= 1. The searcher asks floor(k)
// boxes with probability p and ceil(k) boxes otherwise, so that the
// expected size is k; p = 1 when k is an integer.
struct FractionalSpec {
  int n = 0;
  int d = 0;
  Rational k;

  Rational p() const;
  long FloorK() const;
  long CeilK() const;
  // Throws InvalidInput unless n, d >= 1 and 1 <= k <= n.
  void Validate() const;
};

// Probability that the one-box searcher asks the current box again, given
// only the observation `state`. She draws a plan allocation uniformly from
// all C(n+d-1, d) allocations, then asks boxes in decreasing order of their
// planned count (ties broken uniformly), each until its planned count is
// used up. Computed by enumerating every (allocation, tie-break) path
// consistent with `state`. Zero once every treasure is found. Throws
// InvalidInput for an empty or invalid lambda, or for a state no plan is
// consistent with.
Rational PLambda(const YoungState& state);

// s * PLambda(state), or nullopt when that exceeds 1 (the parameters are
// too small for the mixed construction).
std::optional<Rational> ScaledRepeatProbability(const YoungState& state,
                                                int s);

// One branch of the mixed step: re-ask the current box or not, plus
// `fresh` never-asked boxes.
struct StepBranch {
  bool repeat = false;
  int fresh = 0;
  Rational weight;

  int Size() const { return (repeat ? 1 : 0) + fresh; }
};

// The mixed step after `state`: with probability p a floor(k)-query, with
// 1-p a ceil(k)-query; within each, the current box is re-asked with
// probability s * PLambda (s the query size). Branches of a size that is
// never used (1-p = 0 for integral k) are omitted. Throws InvalidInput
// naming the failed precondition unless n >= d * ceil(k) and
// ceil(k) * PLambda(state) <= 1.
std::vector<StepBranch> FractionalStepDistribution(const FractionalSpec& spec,
                                                   const YoungState& state);

enum class Target { kCurrentBox, kFreshBox };

// Both sides of the per-step comparison with the one-box searcher:
//   current box: P(next query contains it)     vs  k * PLambda,
//   fresh boxes: E(number of fresh boxes asked) vs  k * (1 - PLambda).
struct StepCheck {
  Rational lhs;
  Rational rhs;
};
StepCheck PerStepDiscoveryCheck(const FractionalSpec& spec,
                                const YoungState& state, Target target);

// Every lambda with sum < d and |lambda| <= n that some plan is consistent
// with.
std::vector<std::vector<int>> ReachableLambdas(int n, int d);

}  // namespace mcg

#endif  // MCG_FRACTIONAL_H_
