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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mcg/combinatorics.h"
#include "mcg/error.h"
#include "mcg/lp.h"

using mcg::Constraint;
using mcg::LinearProgram;
using mcg::LpStatus;
using mcg::Objective;
using mcg::Rational;
using mcg::Relation;
using mcg::Sense;
using mcg::VarBounds;

namespace {

// Gold-style system over sorted a_1 >= ... >= a_5 >= 0 with total `d`, in
// which every listed triple (1-based) must sum strictly below one.
std::vector<Constraint> TripleSystem(
    const std::vector<std::vector<int>>& triples, const Rational& d) {
  std::vector<Constraint> cs;
  for (int i = 0; i + 1 < 5; ++i) {
    cs.push_back({{{i, Rational(1)}, {i + 1, Rational(-1)}},
                  Relation::kGe, Rational(0)});
  }
  mcg::SparseRow total;
  for (int i = 0; i < 5; ++i) total.emplace_back(i, Rational(1));
  cs.push_back({total, Relation::kEq, d});
  for (const auto& t : triples) {
    mcg::SparseRow row;
    for (int b : t) row.emplace_back(b - 1, Rational(1));
    cs.push_back({row, Relation::kLt, Rational(1)});
  }
  return cs;
}

std::vector<std::vector<int>> AllTriplesExcept(
    const std::vector<std::vector<int>>& excluded) {
  std::vector<std::vector<int>> out;
  for (auto t : mcg::Subsets(5, 3)) {
    for (int& b : t) ++b;
    bool skip = false;
    for (const auto& e : excluded) skip = skip || e == t;
    if (!skip) out.push_back(t);
  }
  return out;
}

}  // namespace

TEST_CASE("small optima") {
  LinearProgram lp;
  int x = lp.AddVariable(1);
  lp.AddRow({{x, 1}}, Sense::kLe, Rational(3, 7));
  auto sol = mcg::SolveLp(lp, Objective::kMaximize);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.primal[x] == Rational(3, 7));
  CHECK(sol.objective_value == Rational(3, 7));
  CHECK(sol.dual[0] == Rational(1));
  CHECK(mcg::VerifyCertificate(lp, Objective::kMaximize, sol));

  LinearProgram lp2;
  int a = lp2.AddVariable(1), b = lp2.AddVariable(1);
  lp2.AddRow({{a, 1}, {b, 1}}, Sense::kLe, 1);
  auto sol2 = mcg::SolveLp(lp2, Objective::kMaximize);
  REQUIRE(sol2.status == LpStatus::kOptimal);
  CHECK(sol2.objective_value == Rational(1));
}

TEST_CASE("infeasible and unbounded programs carry certificates") {
  LinearProgram lp;
  int x = lp.AddVariable(1);
  lp.AddRow({{x, 1}}, Sense::kLe, -1);
  auto sol = mcg::SolveLp(lp, Objective::kMaximize);
  CHECK(sol.status == LpStatus::kInfeasible);
  CHECK(mcg::VerifyCertificate(lp, Objective::kMaximize, sol));
  CHECK(sol.dual[0].Sign() > 0);

  LinearProgram un;
  int u = un.AddVariable(1), v = un.AddVariable(0);
  un.AddRow({{u, 1}, {v, -1}}, Sense::kLe, 2);
  auto s2 = mcg::SolveLp(un, Objective::kMaximize);
  CHECK(s2.status == LpStatus::kUnbounded);
  CHECK(mcg::VerifyCertificate(un, Objective::kMaximize, s2));
}

TEST_CASE("bounds, free variables and minimisation") {
  LinearProgram lp;
  int x = lp.AddVariable(1, VarBounds::Free());
  int y = lp.AddVariable(2, VarBounds::Between(Rational(-1), Rational(5, 2)));
  int z = lp.AddVariable(-1, VarBounds{std::nullopt, Rational(4)});
  lp.AddRow({{x, 1}, {y, 1}}, Sense::kGe, Rational(1, 2));
  lp.AddRow({{x, 1}, {z, -1}}, Sense::kEq, 0);
  lp.AddRow({{z, 1}}, Sense::kGe, -3);
  auto mn = mcg::SolveLp(lp, Objective::kMinimize);
  REQUIRE(mn.status == LpStatus::kOptimal);
  // Minimum: y = -1, x = z = 3/2 gives 3/2 - 2 - 3/2 = -2; any feasible
  // x = z cancels in the objective, so the optimum is 2y at y = -1.
  CHECK(mn.objective_value == Rational(-2));
  CHECK(mcg::VerifyCertificate(lp, Objective::kMinimize, mn));
  auto mx = mcg::SolveLp(lp, Objective::kMaximize);
  REQUIRE(mx.status == LpStatus::kOptimal);
  CHECK(mx.objective_value == Rational(5));
  CHECK(mcg::VerifyCertificate(lp, Objective::kMaximize, mx));
}

TEST_CASE("malformed programs are rejected") {
  LinearProgram lp;
  lp.AddVariable(1);
  lp.rows.push_back({{3, Rational(1)}});
  lp.senses.push_back(Sense::kLe);
  lp.rhs.push_back(1);
  CHECK_THROWS_AS(mcg::SolveLp(lp, Objective::kMaximize), mcg::InvalidInput);
  LinearProgram lp2;
  lp2.AddVariable(1);
  lp2.rhs.push_back(1);
  CHECK_THROWS_AS(mcg::SolveLp(lp2, Objective::kMaximize), mcg::InvalidInput);
}

TEST_CASE("randomised programs with a planted optimum") {
  // Builds max c x s.t. A x (<=,=,>=) b, x >= 0 around a chosen primal x*
  // and dual y* satisfying complementary slackness, so c x* = b y* is the
  // optimum by weak duality.
  std::mt19937 rng(20260416);
  auto small = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  for (int trial = 0; trial < 100; ++trial) {
    int m = small(1, 6), n = small(1, 6);
    std::vector<std::vector<Rational>> A(m, std::vector<Rational>(n));
    for (auto& row : A) {
      for (auto& a : row) a = Rational(small(-5, 5), small(1, 3));
    }
    std::vector<Rational> xs(n), ys(m);
    std::vector<Sense> senses(m);
    for (int j = 0; j < n; ++j) {
      xs[j] = small(0, 1) ? Rational(small(0, 6), small(1, 4)) : Rational(0);
    }
    for (int i = 0; i < m; ++i) {
      senses[i] = static_cast<Sense>(small(0, 2));
      int mag = small(0, 1) ? small(0, 5) : 0;
      ys[i] = senses[i] == Sense::kLe   ? Rational(mag, small(1, 3))
              : senses[i] == Sense::kGe ? Rational(-mag, small(1, 3))
                                        : Rational(small(-5, 5), small(1, 3));
    }
    LinearProgram lp;
    for (int j = 0; j < n; ++j) {
      Rational aty;
      for (int i = 0; i < m; ++i) aty += A[i][j] * ys[i];
      // Reduced cost d_j = c_j - (A^T y)_j must be <= 0, and 0 where x_j > 0.
      Rational d = xs[j].Sign() > 0 ? Rational(0) : Rational(-small(0, 3));
      lp.AddVariable(aty + d);
    }
    for (int i = 0; i < m; ++i) {
      mcg::SparseRow row;
      Rational ax;
      for (int j = 0; j < n; ++j) {
        row.emplace_back(j, A[i][j]);
        ax += A[i][j] * xs[j];
      }
      Rational slack = ys[i].IsZero() ? Rational(small(0, 3)) : Rational(0);
      Rational b = senses[i] == Sense::kLe   ? ax + slack
                   : senses[i] == Sense::kGe ? ax - slack
                                             : ax;
      lp.AddRow(row, senses[i], b);
    }
    Rational expect;
    for (int j = 0; j < n; ++j) expect += lp.objective[j] * xs[j];
    auto sol = mcg::SolveLp(lp, Objective::kMaximize,
                            {trial % 2 ? mcg::PivotRule::kBland
                                       : mcg::PivotRule::kDantzig});
    REQUIRE(sol.status == LpStatus::kOptimal);
    CHECK(sol.objective_value == expect);
    CHECK(mcg::VerifyCertificate(lp, Objective::kMaximize, sol));
    // Complementary slackness, checked directly.
    for (int i = 0; i < lp.NumRows(); ++i) {
      Rational ax;
      for (auto& [j, a] : lp.rows[i]) ax += a * sol.primal[j];
      CHECK((sol.dual[i] * (ax - lp.rhs[i])).IsZero());
    }
    // Positive row scaling leaves the optimum unchanged.
    LinearProgram scaled = lp;
    for (int i = 0; i < scaled.NumRows(); ++i) {
      Rational f(small(1, 7), small(1, 5));
      for (auto& e : scaled.rows[i]) e.second *= f;
      scaled.rhs[i] *= f;
    }
    auto s2 = mcg::SolveLp(scaled, Objective::kMaximize);
    REQUIRE(s2.status == LpStatus::kOptimal);
    CHECK(s2.objective_value == expect);
  }
}

TEST_CASE("strict feasibility through the margin program") {
  auto eight = TripleSystem(AllTriplesExcept({{1, 2, 3}, {1, 2, 4}}),
                            Rational(5, 3));
  CHECK(eight.size() == 4 + 1 + 8);
  auto r8 = mcg::CheckFeasible(5, eight);
  CHECK_FALSE(r8.feasible);
  CHECK(r8.certificate.status == LpStatus::kOptimal);
  CHECK(r8.margin.IsZero());
  CHECK(mcg::VerifyFeasibilityResult(5, eight, {}, r8));

  auto seven = TripleSystem(AllTriplesExcept({{1, 2, 3}, {1, 2, 4}, {1, 2, 5}}),
                            Rational(5, 3));
  auto r7 = mcg::CheckFeasible(5, seven);
  CHECK(r7.feasible);
  CHECK(mcg::VerifyFeasibilityResult(5, seven, {}, r7));
  // The two-heavy-box placement is a witness as well.
  mcg::FeasibilityResult manual;
  manual.feasible = true;
  manual.witness = {Rational(5, 6), Rational(5, 6), 0, 0, 0};
  CHECK(mcg::VerifyFeasibilityResult(5, seven, {}, manual));

  auto empty = mcg::CheckFeasible(0, {});
  CHECK(empty.feasible);

  // A non-strict contradiction yields a Farkas certificate.
  std::vector<Constraint> bad = {{{{0, Rational(1)}}, Relation::kLe, -1}};
  auto rb = mcg::CheckFeasible(1, bad);
  CHECK_FALSE(rb.feasible);
  CHECK(rb.certificate.status == LpStatus::kInfeasible);
  CHECK(mcg::VerifyFeasibilityResult(1, bad, {}, rb));
}

TEST_CASE("certificate checker rejects a wrong dual") {
  LinearProgram lp;
  int x = lp.AddVariable(1);
  lp.AddRow({{x, 1}}, Sense::kLe, 2);
  auto sol = mcg::SolveLp(lp, Objective::kMaximize);
  sol.dual[0] = Rational(2);
  CHECK_FALSE(mcg::VerifyCertificate(lp, Objective::kMaximize, sol));
  sol.dual[0] = Rational(-1);
  CHECK_FALSE(mcg::VerifyCertificate(lp, Objective::kMaximize, sol));
}
