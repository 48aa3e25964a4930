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
#include "mcg/fractional.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "mcg/combinatorics.h"
#include "mcg/error.h"
#include "mcg/game.h"

namespace mcg {
namespace {

struct Conditional {
  Rational consistent;
  Rational repeat;
};

// Walks the plan order of allocation `mu` position by position. At each
// position the next box is drawn uniformly among unused boxes of maximal
// planned count. Accumulates the probability of paths consistent with
// lambda, and of those that ask the current box again.
void WalkPlan(const Allocation& mu, const std::vector<int>& lambda,
              std::vector<bool>& used, size_t position, const Rational& prob,
              Conditional& out) {
  int best = -1;
  std::vector<int> ties;
  for (size_t b = 0; b < mu.size(); ++b) {
    if (used[b]) continue;
    if (mu[b] > best) {
      best = mu[b];
      ties.clear();
    }
    if (mu[b] == best) ties.push_back(static_cast<int>(b));
  }
  const int want = lambda[position];
  const bool last = position + 1 == lambda.size();
  if (last ? best < want : best != want) return;
  Rational branch = prob / Rational(static_cast<long>(ties.size()));
  if (last) {
    // Every tie choice carries the same planned count.
    out.consistent += prob;
    if (best > want) out.repeat += prob;
    return;
  }
  for (int b : ties) {
    used[b] = true;
    WalkPlan(mu, lambda, used, position + 1, branch, out);
    used[b] = false;
  }
}

Conditional Condition(const YoungState& state) {
  Conditional c;
  const Rational prior = Rational(1) /
                         Rational(Binomial(state.n + state.d - 1, state.d));
  for (const Allocation& mu : EnumerateAllocations(state.n, state.d)) {
    std::vector<bool> used(state.n, false);
    WalkPlan(mu, state.lambda, used, 0, prior, c);
  }
  return c;
}

}  // namespace

void YoungState::Validate() const {
  MCG_REQUIRE(n >= 1 && d >= 1, "Young state needs n, d >= 1");
  MCG_REQUIRE(static_cast<int>(lambda.size()) <= n,
              "lambda has more parts than boxes");
  int sum = 0;
  for (size_t i = 0; i < lambda.size(); ++i) {
    MCG_REQUIRE(lambda[i] >= 1, "lambda entries must be positive");
    MCG_REQUIRE(i == 0 || lambda[i] <= lambda[i - 1],
                "lambda must be weakly decreasing");
    sum += lambda[i];
  }
  MCG_REQUIRE(sum <= d, "lambda records more than d treasures");
}

Rational FractionalSpec::p() const {
  if (k.IsInteger()) return Rational(1);
  return Rational(mpz_class(k.Ceil())) - k;
}

long FractionalSpec::FloorK() const { return mpz_class(k.Floor()).get_si(); }
long FractionalSpec::CeilK() const { return mpz_class(k.Ceil()).get_si(); }

void FractionalSpec::Validate() const {
  MCG_REQUIRE(n >= 1 && d >= 1, "fractional game needs n, d >= 1");
  MCG_REQUIRE(k >= Rational(1) && k <= Rational(n),
              "fractional game needs 1 <= k <= n");
}

Rational PLambda(const YoungState& state) {
  state.Validate();
  MCG_REQUIRE(!state.lambda.empty(), "lambda is empty: there is no current box");
  int found = std::accumulate(state.lambda.begin(), state.lambda.end(), 0);
  if (found == state.d) return Rational(0);
  Conditional c = Condition(state);
  MCG_REQUIRE(c.consistent.Sign() > 0,
              "no plan produces lambda " + FormatVector(state.lambda));
  return c.repeat / c.consistent;
}

std::optional<Rational> ScaledRepeatProbability(const YoungState& state,
                                                int s) {
  MCG_REQUIRE(s >= 1, "query size must be positive");
  Rational scaled = Rational(s) * PLambda(state);
  if (scaled > Rational(1)) return std::nullopt;
  return scaled;
}

std::vector<StepBranch> FractionalStepDistribution(const FractionalSpec& spec,
                                                   const YoungState& state) {
  spec.Validate();
  MCG_REQUIRE(spec.n == state.n && spec.d == state.d,
              "Young state belongs to a different game");
  const long lo = spec.FloorK();
  const long hi = spec.CeilK();
  if (static_cast<long>(spec.n) < spec.d * hi) {
    throw InvalidInput("precondition n >= d*ceil(k) fails: " +
                       std::to_string(spec.n) + " < " +
                       std::to_string(spec.d * hi));
  }
  const Rational p1 = PLambda(state);
  if (Rational(hi) * p1 > Rational(1)) {
    throw InvalidInput("precondition ceil(k)*p_lambda <= 1 fails: " +
                       (Rational(hi) * p1).ToString() + " > 1");
  }
  const Rational p = spec.p();
  std::vector<StepBranch> out;
  auto add = [&](long size, const Rational& mass) {
    if (mass.IsZero()) return;
    Rational again = Rational(size) * p1;
    out.push_back({true, static_cast<int>(size - 1), mass * again});
    out.push_back({false, static_cast<int>(size),
                   mass * (Rational(1) - again)});
  };
  add(lo, p);
  add(hi, Rational(1) - p);
  return out;
}

StepCheck PerStepDiscoveryCheck(const FractionalSpec& spec,
                                const YoungState& state, Target target) {
  std::vector<StepBranch> branches = FractionalStepDistribution(spec, state);
  const Rational p1 = PLambda(state);
  StepCheck c;
  for (const StepBranch& b : branches) {
    if (target == Target::kCurrentBox) {
      if (b.repeat) c.lhs += b.weight;
    } else {
      c.lhs += b.weight * Rational(b.fresh);
    }
  }
  c.rhs = target == Target::kCurrentBox ? spec.k * p1
                                        : spec.k * (Rational(1) - p1);
  return c;
}

std::vector<std::vector<int>> ReachableLambdas(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> lambda;
  std::function<void(int, int)> grow = [&](int max_part, int remaining) {
    if (!lambda.empty()) {
      YoungState s{lambda, n, d};
      if (Condition(s).consistent.Sign() > 0) out.push_back(lambda);
    }
    if (static_cast<int>(lambda.size()) == n) return;
    for (int part = std::min(max_part, remaining - 1); part >= 1; --part) {
      lambda.push_back(part);
      grow(part, remaining - part);
      lambda.pop_back();
    }
  };
  grow(d, d);
  return out;
}

}  // namespace mcg
