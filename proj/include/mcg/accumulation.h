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
#ifndef MCG_ACCUMULATION_H_
#define MCG_ACCUMULATION_H_

#include <vector>

#include "mcg/rational.h"

namespace mcg {

// The one-turn accumulation game: the hider spreads d units of gold over n
// boxes, the searcher opens a uniformly random k-subset and wins when it
// holds at least one unit.
struct AccumulationSpec {
  int n = 0;
  int k = 0;
  Rational d;

  // Throws InvalidInput unless 1 <= k <= n and d > 0.
  void Validate() const;
};

using GoldDistribution = std::vector<Rational>;

// Throws InvalidInput unless every amount is non-negative and they sum to d.
void ValidateDistribution(const GoldDistribution& g, const Rational& d);

// Number of k-subsets holding at least one unit (exact comparison).
long CountWinningSubsets(const GoldDistribution& g, int k);
// Number of k-subsets holding strictly less than one unit.
long CountLosingSubsets(const GoldDistribution& g, int k);

// d/r units in each of the first r boxes.
GoldDistribution RuckleDistribution(int n, const Rational& d, int r);

struct RuckleResult {
  int r = 0;
  long winning = 0;
  GoldDistribution distribution;
};

// The equal-split distribution (d/r in r boxes) with the fewest winning
// k-subsets; ties go to the smallest r.
RuckleResult BestRuckleDistribution(const AccumulationSpec& spec);

constexpr int kMaxExactBoxes = 8;

struct MaxLosingResult {
  long losing = 0;
  long total = 0;
  // Weakly decreasing distribution attaining `losing`.
  GoldDistribution witness;
  // Candidate losing families whose feasibility was decided by LP.
  long families_checked = 0;
};

// Exact maximum over all distributions of the number of losing k-subsets.
// Only weakly decreasing distributions are searched (relabelling boxes is
// free); a losing family is then closed under moving gold-poorer boxes in,
// so families are enumerated as such closed sets and each is decided by a
// strict-inequality feasibility program. Throws InvalidInput when
// n > kMaxExactBoxes.
MaxLosingResult MaxLosingSubsetsExact(const AccumulationSpec& spec);

struct DivisibilityCheck {
  bool holds = false;
  long losing = 0;
  // (1 - k/n) * C(n,k).
  Rational bound;
};

// For k | n and d >= n/k: the exact maximum losing count is at most
// (1 - k/n) C(n,k). Throws InvalidInput when the preconditions fail.
DivisibilityCheck VerifyDivisibilityBound(int n, int k, const Rational& d);

// Fraction of k-subsets of `a` whose sum is strictly below (k/n) sum(a).
Rational MmsProbability(const std::vector<Rational>& a, int k);

}  // namespace mcg

#endif  // MCG_ACCUMULATION_H_
