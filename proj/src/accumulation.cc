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
#include "mcg/accumulation.h"

#include <algorithm>
#include <functional>
#include <string>

#include "mcg/combinatorics.h"
#include "mcg/error.h"
#include "mcg/lp.h"

namespace mcg {
namespace {

Rational SubsetSum(const std::vector<Rational>& a, const std::vector<int>& s) {
  Rational total;
  for (int i : s) total += a[i];
  return total;
}

// s <= t in the coordinatewise order of sorted index tuples: t is obtained
// from s by moving elements to higher (gold-poorer) indices.
bool Below(const std::vector<int>& s, const std::vector<int>& t) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] > t[i]) return false;
  }
  return true;
}

Constraint SubsetRow(const std::vector<int>& s, Relation rel) {
  Constraint c;
  for (int i : s) c.coeffs.emplace_back(i, Rational(1));
  c.relation = rel;
  c.rhs = Rational(1);
  return c;
}

// Sorted amounts summing to d.
std::vector<Constraint> ShapeRows(int n, const Rational& d) {
  std::vector<Constraint> rows;
  for (int i = 0; i + 1 < n; ++i) {
    rows.push_back({{{i, Rational(1)}, {i + 1, Rational(-1)}},
                    Relation::kGe,
                    Rational(0)});
  }
  Constraint total;
  for (int i = 0; i < n; ++i) total.coeffs.emplace_back(i, Rational(1));
  total.relation = Relation::kEq;
  total.rhs = d;
  rows.push_back(total);
  return rows;
}

}  // namespace

void AccumulationSpec::Validate() const {
  MCG_REQUIRE(1 <= k && k <= n, "accumulation game needs 1 <= k <= n");
  MCG_REQUIRE(d.Sign() > 0, "accumulation game needs d > 0");
}

void ValidateDistribution(const GoldDistribution& g, const Rational& d) {
  Rational total;
  for (const Rational& x : g) {
    MCG_REQUIRE(x.Sign() >= 0, "gold amounts must be non-negative");
    total += x;
  }
  MCG_REQUIRE(total == d, "gold amounts sum to " + total.ToString() +
                              ", expected " + d.ToString());
}

long CountWinningSubsets(const GoldDistribution& g, int k) {
  MCG_REQUIRE(1 <= k && k <= static_cast<int>(g.size()),
              "subset size must be between 1 and the number of boxes");
  for (const Rational& x : g) {
    MCG_REQUIRE(x.Sign() >= 0, "gold amounts must be non-negative");
  }
  long winning = 0;
  for (const std::vector<int>& s : Subsets(g.size(), k)) {
    if (SubsetSum(g, s) >= Rational(1)) ++winning;
  }
  return winning;
}

long CountLosingSubsets(const GoldDistribution& g, int k) {
  long total = Binomial(g.size(), k).get_si();
  return total - CountWinningSubsets(g, k);
}

GoldDistribution RuckleDistribution(int n, const Rational& d, int r) {
  MCG_REQUIRE(1 <= r && r <= n, "Ruckle split needs 1 <= r <= n");
  GoldDistribution g(n);
  for (int i = 0; i < r; ++i) g[i] = d / Rational(r);
  return g;
}

RuckleResult BestRuckleDistribution(const AccumulationSpec& spec) {
  spec.Validate();
  RuckleResult best;
  for (int r = 1; r <= spec.n; ++r) {
    GoldDistribution g = RuckleDistribution(spec.n, spec.d, r);
    long w = CountWinningSubsets(g, spec.k);
    if (best.r == 0 || w < best.winning) best = {r, w, g};
  }
  return best;
}

MaxLosingResult MaxLosingSubsetsExact(const AccumulationSpec& spec) {
  spec.Validate();
  MCG_REQUIRE(spec.n <= kMaxExactBoxes,
              "exact search is limited to n <= " +
                  std::to_string(kMaxExactBoxes));
  const int n = spec.n;
  std::vector<std::vector<int>> subsets = Subsets(n, spec.k);
  // Gold-poorest subsets first, so every subset above a decided one in the
  // order has already been decided.
  std::sort(subsets.begin(), subsets.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              int sa = 0, sb = 0;
              for (int x : a) sa += x;
              for (int x : b) sb += x;
              if (sa != sb) return sa > sb;
              return a > b;
            });
  const int m = static_cast<int>(subsets.size());
  const std::vector<Constraint> shape = ShapeRows(n, spec.d);

  MaxLosingResult best;
  best.total = m;
  best.losing = -1;
  // 1 = losing, 0 = winning.
  std::vector<int> side(m, -1);
  long losing = 0;

  // Decides whether the first `decided` choices are realisable. `witness`
  // holds a point realising the first decided-1 choices; it is reused when
  // it also satisfies the newest choice and replaced otherwise.
  auto feasible = [&](int decided, std::vector<Rational>& witness) {
    if (!witness.empty()) {
      Rational sum = SubsetSum(witness, subsets[decided - 1]);
      bool lose = sum < Rational(1);
      if (lose == (side[decided - 1] == 1)) return true;
    }
    std::vector<Constraint> rows = shape;
    for (int i = 0; i < decided; ++i) {
      rows.push_back(SubsetRow(subsets[i],
                               side[i] ? Relation::kLt : Relation::kGe));
    }
    ++best.families_checked;
    FeasibilityResult r = CheckFeasible(n, rows);
    if (r.feasible) witness = r.witness;
    return r.feasible;
  };

  std::function<void(int, const std::vector<Rational>&)> search =
      [&](int i, const std::vector<Rational>& witness) {
    if (losing + (m - i) <= best.losing) return;
    if (i == m) {
      best.losing = losing;
      best.witness = witness;
      return;
    }
    // A subset can lose only if every gold-poorer variant of it loses.
    bool can_lose = true;
    for (int j = 0; j < i; ++j) {
      if (side[j] == 0 && Below(subsets[i], subsets[j])) can_lose = false;
    }
    for (int choice : {1, 0}) {
      if (choice == 1 && !can_lose) continue;
      side[i] = choice;
      losing += choice;
      std::vector<Rational> next = witness;
      if (feasible(i + 1, next)) search(i + 1, next);
      losing -= choice;
      side[i] = -1;
    }
  };
  search(0, {});
  MCG_CHECK(best.losing >= 0);
  MCG_CHECK(CountLosingSubsets(best.witness, spec.k) == best.losing);
  return best;
}

DivisibilityCheck VerifyDivisibilityBound(int n, int k, const Rational& d) {
  MCG_REQUIRE(1 <= k && k <= n && n % k == 0, "divisibility bound needs k | n");
  MCG_REQUIRE(d >= Rational(n, k), "divisibility bound needs d >= n/k");
  DivisibilityCheck c;
  c.losing = MaxLosingSubsetsExact({n, k, d}).losing;
  c.bound = (Rational(1) - Rational(k, n)) * Rational(Binomial(n, k));
  c.holds = Rational(c.losing) <= c.bound;
  return c;
}

Rational MmsProbability(const std::vector<Rational>& a, int k) {
  const int n = static_cast<int>(a.size());
  MCG_REQUIRE(1 <= k && k <= n, "subset size must be between 1 and n");
  Rational total;
  for (const Rational& x : a) total += x;
  const Rational threshold = Rational(k, n) * total;
  long below = 0;
  std::vector<std::vector<int>> subsets = Subsets(n, k);
  for (const std::vector<int>& s : subsets) {
    if (SubsetSum(a, s) < threshold) ++below;
  }
  return Rational(below) / Rational(static_cast<long>(subsets.size()));
}

}  // namespace mcg
