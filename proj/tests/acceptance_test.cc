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

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "mcg/accumulation.h"
#include "mcg/best_response.h"
#include "mcg/bounds.h"
#include "mcg/cli/cache.h"
#include "mcg/cli/commands.h"
#include "mcg/combinatorics.h"
#include "mcg/error.h"
#include "mcg/families.h"
#include "mcg/fractional.h"
#include "mcg/lp.h"
#include "mcg/sequence_form.h"
#include "mcg/verify.h"

namespace mcg {
namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

// Collects failures of one criterion; the criterion passes when none occur.
class Checker {
 public:
  void Expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void Note(const std::string& text) { notes_.push_back(text); }
  bool ok() const { return failed_ == 0; }
  std::string Summary() const {
    std::ostringstream os;
    os << checks_ - failed_ << "/" << checks_ << " checks";
    for (const std::string& n : notes_) os << "; " << n;
    for (const std::string& f : failures_) os << "; failed: " << f;
    if (failed_ > static_cast<long>(failures_.size())) {
      os << "; ... " << failed_ - failures_.size() << " more";
    }
    return os.str();
  }

 private:
  long checks_ = 0;
  long failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string Str(const Rational& r) { return r.ToString(); }

std::string SpecName(int n, int d, int k) {
  return "(" + std::to_string(n) + "," + std::to_string(d) + "," +
         std::to_string(k) + ")";
}

// Game values shared between criteria; std::nullopt marks an over-budget
// spec.
class ValueTable {
 public:
  std::optional<Rational> Get(int n, int d, int k, Variant v, bool relaxed) {
    auto key = std::make_tuple(n, d, k, static_cast<int>(v), relaxed);
    auto it = values_.find(key);
    if (it != values_.end()) return it->second;
    SolveOptions options;
    options.model.relaxed_queries = relaxed;
    std::optional<Rational> value;
    try {
      value = Solve({n, d, k, v}, options).value;
    } catch (const BudgetExceeded&) {
      value = std::nullopt;
    }
    values_[key] = value;
    return value;
  }
  const auto& all() const { return values_; }

 private:
  std::map<std::tuple<int, int, int, int, bool>, std::optional<Rational>>
      values_;
};

ValueTable& Values() {
  static ValueTable table;
  return table;
}

// Hider plan over the three partitions of 3 treasures into 3 boxes:
// l1 -> (3,0,0), l2 -> (1,1,1), l3 -> (2,1,0). Two-way reveal decisions:
//   q2: first reveal from a (1,2) split, probability of the single box;
//   q1: touched counts (1,0,1), probability of label 0;
//   q3: touched counts (1,1), probability of label 0;
//   q4: touched counts (0,1,1), probability of label 1.
HiderStrategy TabulatedHider(Rational l1, Rational l2, Rational l3,
                             Rational q1, Rational q2, Rational q3,
                             Rational q4) {
  HiderStrategy h;
  h.allocations = {{{3, 0, 0}, l1}, {{1, 1, 1}, l2}, {{2, 1, 0}, l3}};
  h.reveal = [=](const RevealContext& ctx) {
    std::vector<Rational> probs(ctx.options.size());
    probs[0] = R(1);
    auto put = [&](int box, const Rational& p) {
      for (size_t i = 0; i < ctx.options.size(); ++i) {
        const auto& boxes = ctx.options[i].boxes;
        bool here = std::find(boxes.begin(), boxes.end(), box) != boxes.end();
        probs[i] = here ? p : Rational(1) - p;
      }
    };
    const std::vector<int>& t = ctx.drawn.touched;
    if (ctx.options.size() != 2) return probs;
    if (ctx.history.empty()) {
      put(t[0] == 1 ? 0 : 1, q2);
    } else if (t == std::vector<int>{1, 0, 1}) {
      put(0, q1);
    } else if (t == std::vector<int>{1, 1}) {
      put(0, q3);
    } else if (t == std::vector<int>{0, 1, 1}) {
      put(1, q4);
    }
    return probs;
  };
  return h;
}

void ReferenceValues(Checker& c) {
  for (auto [variant, want] :
       std::vector<std::pair<Variant, Rational>>{{Variant::kAdversary, R(3, 5)},
                                                 {Variant::kRandom, R(12, 19)}}) {
    auto t0 = std::chrono::steady_clock::now();
    Rational got = Solve({3, 3, 2, variant}).value;
    double seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    c.Expect(got == want, VariantName(variant) + " gave " + Str(got));
    c.Expect(seconds < 60, VariantName(variant) + " took too long");
    std::ostringstream note;
    note << VariantName(variant) << " " << Str(got) << " in " << seconds
         << " s";
    c.Note(note.str());
  }
}

void TabulatedHiders(Checker& c) {
  HiderStrategy random = TabulatedHider(R(5, 19), R(2, 19), R(12, 19), R(1, 2),
                                        R(1, 3), R(1, 2), R(1, 2));
  Rational rv = HiderStrategyValue({3, 3, 2, Variant::kRandom}, random).value;
  c.Expect(rv == R(12, 19), "random plan gave " + Str(rv));
  for (Rational q3 : {R(0), R(1, 2), R(1)}) {
    for (Rational q4 : {R(0), R(1, 2), R(1)}) {
      HiderStrategy adv = TabulatedHider(R(3, 10), R(1, 10), R(6, 10),
                                         R(1, 2), R(1, 2), q3, q4);
      Rational v = HiderStrategyValue({3, 3, 2, Variant::kAdversary}, adv).value;
      c.Expect(v == R(3, 5), "adversary plan with q3=" + Str(q3) +
                                 ", q4=" + Str(q4) + " gave " + Str(v));
    }
  }
}

void StrategySuite(Checker& c) {
  auto value = [](const StrategyTree& t, Variant v) {
    GameSpec spec{t.n, t.d, t.k, v};
    if (v == Variant::kCooperative) {
      return JointVerifyCooperative(spec, t, FewestTreasuresRule()).value;
    }
    return Verify(spec, t).value;
  };
  auto expect = [&](const std::string& name, const StrategyTree& t, Variant v,
                    const Rational& want) {
    Rational got = value(t, v);
    c.Expect(got == want, name + " gave " + Str(got) + ", want " + Str(want));
  };
  expect("fig432", Fig432(), Variant::kAdversary, R(2, 5));
  for (int k = 2; k <= 4; ++k) {
    Rational want = Rational(mpq_class(mpz_class(k) * k, Binomial(2 * k, 2)));
    expect("d2(" + std::to_string(k) + ")", FamilyD2(k), Variant::kAdversary,
           want);
  }
  for (int k = 2; k <= 3; ++k) {
    Rational want =
        Rational(mpq_class(mpz_class(k) * k * k, Binomial(3 * k, 3)));
    expect("d3(" + std::to_string(k) + ")", FamilyD3(k), Variant::kAdversary,
           want);
  }
  expect("fig542", Fig542(), Variant::kAdversary, R(8, 35));
  expect("332 adversary", Family332(Variant::kAdversary), Variant::kAdversary,
         R(3, 5));
  expect("332 random", Family332(Variant::kRandom), Variant::kRandom,
         R(12, 19));
  expect("332 cooperative", Family332(Variant::kCooperative),
         Variant::kCooperative, R(2, 3));
}

void AccuracyChecks(Checker& c) {
  AccuracyResult a432 = CheckAccuracy(4, 3, 2);
  c.Expect(a432.accurate, "(4,3,2) not accurate: " + Str(a432.value));
  AccuracyResult a332 = CheckAccuracy(3, 3, 2);
  c.Expect(!a332.accurate && a332.value == R(3, 5),
           "(3,3,2) gave " + Str(a332.value));
  cli::RunConfig config;
  cli::ResultCache cache;
  Json sweep = cli::CmdSweepAccuracy({5, 3, 2, 2}, config, cache);
  long threshold = 0, d_monotone = 0;
  for (const Json& f : sweep["findings"]) {
    if (f["kind"] == "accuracy-threshold") ++threshold;
    if (f["kind"] == "d-monotonicity") ++d_monotone;
  }
  c.Expect(threshold == 0, "accuracy-threshold findings in the sweep");
  c.Expect(d_monotone == 0, "d-monotonicity findings in the sweep");
  c.Expect(sweep["budget_exceeded"] == 0, "sweep left triplets unsolved");
  c.Note(std::to_string(sweep["rows"].size()) + " triplets swept, " +
         std::to_string(sweep["findings"].size()) + " findings");
}

void QuerySizeRelaxation(Checker& c) {
  long compared = 0, skipped = 0;
  for (int n = 1; n <= 4; ++n) {
    for (int d = 1; d <= 3; ++d) {
      for (int k = 1; k <= std::min(n, 3); ++k) {
        auto exact = Values().Get(n, d, k, Variant::kAdversary, false);
        auto relaxed = Values().Get(n, d, k, Variant::kAdversary, true);
        if (!exact || !relaxed) {
          ++skipped;
          continue;
        }
        ++compared;
        c.Expect(*exact == *relaxed, SpecName(n, d, k) + ": " + Str(*exact) +
                                         " vs " + Str(*relaxed));
      }
    }
  }
  c.Note(std::to_string(compared) + " specs compared, " +
         std::to_string(skipped) + " over budget");
}

void BoundProperties(Checker& c) {
  for (int n = 1; n <= 5; ++n) {
    for (int d = 1; d <= 3; ++d) {
      for (int k = 1; k <= std::min(n, 3); ++k) {
        Values().Get(n, d, k, Variant::kAdversary, false);
        Values().Get(n, d, k, Variant::kRandom, false);
      }
    }
  }
  long solved = 0;
  for (const auto& [key, value] : Values().all()) {
    if (!value) continue;
    ++solved;
    auto [n, d, k, v, relaxed] = key;
    Rational bound = Min(UpperBoundCombinatorial(n, d, k),
                         UpperBoundFirstQuery(n, k));
    c.Expect(*value <= bound, SpecName(n, d, k) + " exceeds its bound");
    if (v == static_cast<int>(Variant::kAdversary)) {
      auto random = Values().Get(n, d, k, Variant::kRandom, relaxed);
      if (random) {
        c.Expect(*value <= *random,
                 SpecName(n, d, k) + " adversary above random");
      }
    }
  }
  c.Note(std::to_string(solved) + " solved values");
}

void InfiniteD(Checker& c) {
  for (int d = 1; d <= 5; ++d) {
    Rational v = Verify({3, d, 2, Variant::kAdversary},
                        FamilyInfiniteD(3, d, 2))
                     .value;
    c.Expect(v >= R(1, 3), "(3," + std::to_string(d) + ",2) gave " + Str(v));
  }
  for (int n = 2; n <= 12; ++n) {
    for (int k = 2; k <= n; ++k) {
      mpq_class formula(k, n);
      formula.canonicalize();
      mpz_class all = Binomial(n - 1, k - 1);
      for (int i = k; i <= n - 1; ++i) {
        mpq_class factor(all - Binomial(i - 1, k - 1), all);
        factor.canonicalize();
        formula *= factor;
      }
      Rational got = LowerBoundInfiniteD(n, k);
      c.Expect(got == Rational(formula),
               "c(" + std::to_string(n) + "," + std::to_string(k) + ")");
      c.Expect(got.Sign() > 0 && got <= R(1),
               "c(" + std::to_string(n) + "," + std::to_string(k) +
                   ") out of (0,1]");
    }
  }
}

void FractionalIdentities(Checker& c) {
  long states = 0;
  for (Rational k : {R(1), R(4, 3), R(3, 2), R(5, 3), R(2)}) {
    for (int n = 1; n <= 8; ++n) {
      for (int d = 1; d <= 4; ++d) {
        FractionalSpec f{n, d, k};
        if (k > Rational(n) || n < d * f.CeilK()) continue;
        for (const std::vector<int>& lambda : ReachableLambdas(n, d)) {
          YoungState s{lambda, n, d};
          if (Rational(f.CeilK()) * PLambda(s) > R(1)) continue;
          for (Target t : {Target::kCurrentBox, Target::kFreshBox}) {
            StepCheck sc = PerStepDiscoveryCheck(f, s, t);
            c.Expect(sc.lhs == sc.rhs, "n=" + std::to_string(n) +
                                           " d=" + std::to_string(d) +
                                           " k=" + Str(k));
          }
          ++states;
        }
      }
    }
  }
  c.Note(std::to_string(states) + " admissible states");
}

std::string Render(const GoldDistribution& g) {
  std::string out = "(";
  for (size_t i = 0; i < g.size(); ++i) out += (i ? "," : "") + Str(g[i]);
  return out + ")";
}

void Accumulation(Checker& c) {
  MaxLosingResult m = MaxLosingSubsetsExact({5, 3, R(2)});
  c.Expect(m.losing == 7, "max losing subsets for (5,3,2) is " +
                              std::to_string(m.losing) + ", not 7");
  GoldDistribution r3 = RuckleDistribution(5, R(2), 3);
  bool ruckle_witness = m.witness == r3;
  c.Expect(ruckle_witness, "witness " + Render(m.witness) +
                               " is not the equal split over 3 boxes");
  c.Note("computed maximum " + std::to_string(m.losing) + "/" +
         std::to_string(m.total) + " with witness " + Render(m.witness) +
         "; equal split over 3 boxes loses " +
         std::to_string(CountLosingSubsets(r3, 3)));
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (Rational d : {Rational(n, k) - R(1, 7), Rational(n, 2 * k)}) {
        if (d.Sign() <= 0 || d >= Rational(n, k)) continue;
        GoldDistribution uniform(n, d / Rational(n));
        c.Expect(CountWinningSubsets(uniform, k) == 0,
                 "uniform split wins for n=" + std::to_string(n));
      }
    }
  }
  for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {6, 2}}) {
    for (Rational extra : {R(0), R(1, 2), R(1)}) {
      DivisibilityCheck dc = VerifyDivisibilityBound(n, k, Rational(n, k) + extra);
      c.Expect(dc.holds, "divisibility bound fails for (" + std::to_string(n) +
                             "," + std::to_string(k) + ")");
    }
  }
}

void LpEngine(Checker& c) {
  std::mt19937 rng(20261016);
  auto small = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  for (int trial = 0; trial < 100; ++trial) {
    // Planted optimum: choose x* and a dual y* meeting complementary
    // slackness, then derive costs and right-hand sides.
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
      Rational d = xs[j].Sign() > 0 ? Rational(0) : Rational(-small(0, 3));
      lp.AddVariable(aty + d);
    }
    for (int i = 0; i < m; ++i) {
      SparseRow row;
      Rational ax;
      for (int j = 0; j < n; ++j) {
        row.emplace_back(j, A[i][j]);
        ax += A[i][j] * xs[j];
      }
      Rational slack = ys[i].IsZero() ? Rational(small(0, 3)) : Rational(0);
      lp.AddRow(row, senses[i],
                senses[i] == Sense::kLe   ? ax + slack
                : senses[i] == Sense::kGe ? ax - slack
                                          : ax);
    }
    Rational expect;
    for (int j = 0; j < n; ++j) expect += lp.objective[j] * xs[j];
    LpSolution sol = SolveLp(lp, Objective::kMaximize);
    std::string why;
    c.Expect(sol.status == LpStatus::kOptimal && sol.objective_value == expect,
             "trial " + std::to_string(trial) + " missed the optimum");
    c.Expect(VerifyCertificate(lp, Objective::kMaximize, sol, &why),
             "trial " + std::to_string(trial) + " certificate: " + why);
  }

  // Sorted a_1 >= ... >= a_5 >= 0 summing to 5/3 with every triple except
  // {1,2,3} and {1,2,4} strictly below one.
  std::vector<Constraint> system;
  for (int i = 0; i + 1 < 5; ++i) {
    system.push_back({{{i, R(1)}, {i + 1, R(-1)}}, Relation::kGe, R(0)});
  }
  SparseRow total;
  for (int i = 0; i < 5; ++i) total.emplace_back(i, R(1));
  system.push_back({total, Relation::kEq, R(5, 3)});
  int triples = 0;
  for (const std::vector<int>& t : Subsets(5, 3)) {
    if (t == std::vector<int>{0, 1, 2} || t == std::vector<int>{0, 1, 3}) {
      continue;
    }
    SparseRow row;
    for (int b : t) row.emplace_back(b, R(1));
    system.push_back({row, Relation::kLt, R(1)});
    ++triples;
  }
  c.Expect(triples == 8, "expected eight triples");
  FeasibilityResult r = CheckFeasible(5, system);
  std::string why;
  c.Expect(!r.feasible, "eight-triple system reported feasible");
  c.Expect(VerifyFeasibilityResult(5, system, {}, r, &why),
           "eight-triple certificate: " + why);
  c.Note("eight-triple system infeasible, certificate " +
         LpStatusName(r.certificate.status) + ", margin " + Str(r.margin));
}

}  // namespace
}  // namespace mcg

int main() {
  using mcg::Checker;
  struct Criterion {
    int id;
    std::string title;
    std::function<void(Checker&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "(3,3,2) values: adversary 3/5, random 12/19, under 60 s each",
       mcg::ReferenceValues},
      {2, "tabulated hider plans hold the searcher to 12/19 and 3/5",
       mcg::TabulatedHiders},
      {3, "strategy suite: fig432, d2, d3, fig542 and the (3,3,2) trio",
       mcg::StrategySuite},
      {4, "accuracy of (4,3,2) and (3,3,2); sweep n<=5, d<=3, k<=2 clean",
       mcg::AccuracyChecks},
      {5, "queries of exactly k and of at most k boxes give equal values",
       mcg::QuerySizeRelaxation},
      {6, "values respect both upper bounds; adversary <= random",
       mcg::BoundProperties},
      {7, "infinite-d strategy >= 1/3 on (3,d,2); closed-form lower bound",
       mcg::InfiniteD},
      {8, "fractional per-step identities on every admissible state",
       mcg::FractionalIdentities},
      {9, "accumulation: (5,3,2) maximum 7 with 3-box equal split; uniform "
          "zero; divisibility bound",
       mcg::Accumulation},
      {10, "LP engine: 100 certified random optima; eight-triple system "
           "infeasible",
       mcg::LpEngine},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Checker checker;
    std::string error;
    try {
      c.run(checker);
    } catch (const std::exception& e) {
      error = e.what();
    }
    bool ok = error.empty() && checker.ok();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": "
              << c.title << " [" << checker.Summary()
              << (error.empty() ? "" : "; exception: " + error) << "]"
              << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
