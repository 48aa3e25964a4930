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
#include "mcg/families.h"

#include <algorithm>
#include <functional>
#include <numeric>

#include "mcg/combinatorics.h"
#include "mcg/error.h"

namespace mcg {
namespace {

// Labels first..first+count-1.
std::vector<int> Range(int first, int count) {
  std::vector<int> out(count);
  std::iota(out.begin(), out.end(), first);
  return out;
}

Query Join(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

StrategyChoice Choice(Rational p, Query q,
                      std::map<int, StrategyNodePtr> branches = {}) {
  return StrategyChoice{std::move(p), std::move(q), std::move(branches)};
}

}  // namespace

StrategyTree Fig432() {
  // Re-ask the lucky box with a new one, or ask two new boxes.
  StrategyNodePtr second = MakeNode(
      {Choice(Rational(4, 5), {0, 2}, {{0, Ask({0, 3})}, {2, Ask({2, 3})}}),
       Choice(Rational(1, 5), {2, 3}, {{2, Ask({0, 2})}})});
  return StrategyTree{4, 3, 2, Ask({0, 1}, {{0, second}})};
}

StrategyTree FamilyD2(int k) {
  MCG_REQUIRE(k >= 1, "the d = 2 family needs k >= 1");
  Query second = Join({0}, Range(k, k - 1));
  return StrategyTree{2 * k - 1, 2, k, Ask(Range(0, k), {{0, Ask(second)}})};
}

StrategyTree FamilyD3(int k) {
  MCG_REQUIRE(k >= 2, "the d = 3 family needs k >= 2");
  const int n = 3 * k - 2;
  Rational upper_weight =
      Rational(mpz_class(mpz_class(n) * k * k)) / Rational(Binomial(n + 2, 3));
  // Upper line: re-ask box 0 with k-1 new boxes.
  Query up = Join({0}, Range(k, k - 1));
  StrategyNodePtr up_after_0 = Ask(Join({0}, Range(2 * k - 1, k - 1)));
  StrategyNodePtr up_after_k = Ask(Join({k}, Range(2 * k - 1, k - 1)));
  // Lower line: k new boxes, then box 0, the lucky new box and k-2 more.
  Query low = Range(k, k);
  StrategyNodePtr low_after_k = Ask(Join({0, k}, Range(2 * k, k - 2)));
  StrategyNodePtr second = MakeNode(
      {Choice(upper_weight, up, {{0, up_after_0}, {k, up_after_k}}),
       Choice(Rational(1) - upper_weight, low, {{k, low_after_k}})});
  return StrategyTree{n, 3, k, Ask(Range(0, k), {{0, second}})};
}

StrategyTree Fig542() {
  // Upper line (4/7): {0,2}.
  StrategyNodePtr after_03 = Ask({0, 3}, {{0, Ask({0, 4})}, {3, Ask({3, 4})}});
  StrategyNodePtr after_23 = Ask({2, 3}, {{2, Ask({2, 4})}, {3, Ask({3, 4})}});
  // Lower line (3/7): {2,3}, then a uniform choice of three pairs.
  Rational third(1, 3);
  StrategyNodePtr third_step = MakeNode(
      {Choice(third, {2, 4}, {{2, Ask({0, 2})}, {4, Ask({0, 4})}}),
       Choice(third, {0, 4}, {{0, Ask({0, 2})}, {4, Ask({2, 4})}}),
       Choice(third, {0, 2}, {{0, Ask({0, 4})}, {2, Ask({2, 4})}})});
  StrategyNodePtr second = MakeNode(
      {Choice(Rational(4, 7), {0, 2}, {{0, after_03}, {2, after_23}}),
       Choice(Rational(3, 7), {2, 3}, {{2, third_step}})});
  return StrategyTree{5, 4, 2, Ask({0, 1}, {{0, second}})};
}

StrategyTree Family332(Variant variant) {
  StrategyNodePtr root;
  switch (variant) {
    case Variant::kCooperative:
      root = Ask({0, 1},
                 {{0, Ask({0, 1}, {{0, Ask({0, 2})}, {1, Ask({1, 2})}})}});
      break;
    case Variant::kRandom: {
      StrategyNodePtr after_02 = Ask(
          {0, 2},
          {{0, Ask({0, 1})},
           {2, MakeNode({Choice(Rational(1, 3), {0, 2}),
                         Choice(Rational(2, 3), {1, 2})})}});
      StrategyNodePtr after_12 =
          Ask({1, 2}, {{1, Ask({0, 1})}, {2, Ask({0, 2})}});
      StrategyNodePtr second = MakeNode(
          {Choice(Rational(18, 19), {0, 2}, after_02->mix[0].branches),
           Choice(Rational(1, 19), {1, 2}, after_12->mix[0].branches)});
      root = Ask({0, 1}, {{0, second}});
      break;
    }
    case Variant::kAdversary: {
      Rational half(1, 2);
      std::map<int, StrategyNodePtr> after_01 = {{0, Ask({0, 2})},
                                                 {1, Ask({1, 2})}};
      std::map<int, StrategyNodePtr> after_02 = {
          {0, MakeNode({Choice(half, {0, 1}), Choice(half, {0, 2})})},
          {2, MakeNode({Choice(half, {0, 2}), Choice(half, {1, 2})})}};
      std::map<int, StrategyNodePtr> after_12 = {{1, Ask({0, 1})},
                                                 {2, Ask({0, 2})}};
      StrategyNodePtr second =
          MakeNode({Choice(Rational(3, 10), {0, 1}, after_01),
                    Choice(Rational(6, 10), {0, 2}, after_02),
                    Choice(Rational(1, 10), {1, 2}, after_12)});
      root = Ask({0, 1}, {{0, second}});
      break;
    }
  }
  return StrategyTree{3, 3, 2, root};
}

RevealRule FewestTreasuresRule() {
  return [](const RevealContext& ctx) {
    int best = -1;
    for (int box : ctx.query) {
      int count = ctx.drawn.touched[box];
      if (count == 0) continue;
      if (best < 0 || count < ctx.drawn.touched[best]) best = box;
    }
    return best;
  };
}

StrategyTree FamilyInfiniteD(int n, int d, int k) {
  MCG_REQUIRE(2 <= k && k <= n, "the infinite-d family needs 2 <= k <= n");
  MCG_REQUIRE(d >= 1, "the infinite-d family needs d >= 1");
  const Rational all(Binomial(n - 1, k - 1));
  // `m` boxes asked so far; `last` surrendered the previous treasure;
  // `depth` queries already made.
  std::function<StrategyNodePtr(int, int, int)> build =
      [&](int m, int last, int depth) -> StrategyNodePtr {
    std::vector<int> others;
    for (int b = 0; b < m; ++b) {
      if (b != last) others.push_back(b);
    }
    std::vector<StrategyChoice> mix;
    for (int j = 0; j <= std::min<int>(k - 1, others.size()); ++j) {
      int fresh = k - 1 - j;
      if (fresh > n - m) continue;
      Rational p = Rational(Binomial(n - m, fresh)) / all;
      for (const std::vector<int>& pick : Subsets(others.size(), j)) {
        std::vector<int> asked = {last};
        for (int i : pick) asked.push_back(others[i]);
        Query q = Join(asked, Range(m, fresh));
        std::map<int, StrategyNodePtr> branches;
        if (depth + 1 < d) {
          for (int b : q) {
            if (b <= m) branches[b] = build(m + fresh, b, depth + 1);
          }
        }
        mix.push_back(Choice(p, std::move(q), std::move(branches)));
      }
    }
    return MakeNode(std::move(mix));
  };
  std::map<int, StrategyNodePtr> branches;
  if (d > 1) branches[0] = build(k, 0, 1);
  return StrategyTree{n, d, k, Ask(Range(0, k), std::move(branches))};
}

std::vector<FamilyInfo> ListFamilies() {
  return {
      {"fig432", "-", "(4,3,2) strategy, worst case 2/5"},
      {"d2", "k", "n = 2k-1, d = 2, worst case k/n"},
      {"d3", "k >= 2", "n = 3k-2, d = 3, worst case k^3/C(n+2,3)"},
      {"fig542", "-", "(5,4,2) strategy, worst case 8/35"},
      {"332", "variant", "(3,3,2): 3/5 adversary, 12/19 random, "
                         "2/3 cooperative"},
      {"infinite-d", "n, d, k >= 2",
       "re-ask the last lucky box plus k-1 random others"},
  };
}

StrategyTree BuildFamily(const std::string& name, int n, int d, int k,
                         Variant variant) {
  if (name == "fig432") return Fig432();
  if (name == "d2") return FamilyD2(k);
  if (name == "d3") return FamilyD3(k);
  if (name == "fig542") return Fig542();
  if (name == "332") return Family332(variant);
  if (name == "infinite-d") return FamilyInfiniteD(n, d, k);
  throw InvalidInput("unknown strategy family '" + name + "'");
}

}  // namespace mcg
