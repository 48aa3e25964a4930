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

#ifndef MCG_LP_H_
#define MCG_LP_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcg/rational.h"

namespace mcg {

enum class Sense { kLe, kEq, kGe };
enum class Objective { kMaximize, kMinimize };
enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string LpStatusName(LpStatus s);

// Per-variable box; a missing side means unbounded in that direction.
struct VarBounds {
  std::optional<Rational> lower = Rational(0);
  std::optional<Rational> upper;

  static VarBounds Free() { return VarBounds{std::nullopt, std::nullopt}; }
  static VarBounds NonNegative() { return VarBounds{}; }
  static VarBounds Between(Rational lo, Rational hi) {
    return VarBounds{std::move(lo), std::move(hi)};
  }
};

using SparseRow = std::vector<std::pair<int, Rational>>;

// A linear program over exact rationals. Rows are stored sparsely as
// (column, coefficient) pairs.
struct LinearProgram {
  std::vector<Rational> objective;
  std::vector<SparseRow> rows;
  std::vector<Sense> senses;
  std::vector<Rational> rhs;
  std::vector<VarBounds> bounds;

  int NumRows() const { return static_cast<int>(rows.size()); }
  int NumCols() const { return static_cast<int>(objective.size()); }

  // Appends a variable and returns its column index.
  int AddVariable(Rational cost, VarBounds b = VarBounds::NonNegative());
  // Appends a constraint and returns its row index. Duplicate column entries
  // are summed.
  int AddRow(SparseRow coeffs, Sense sense, Rational rhs);

  // Throws InvalidInput when dimensions disagree, a column index is out of
  // range, or a variable has lower > upper.
  void Validate() const;
};

// Result of SolveLp.
//
// Dual conventions. For kMaximize, `dual` holds y with y_i >= 0 on <= rows,
// y_i <= 0 on >= rows, and reduced costs d = c - A^T y satisfying d_j > 0
// only where x_j has a finite upper bound and d_j < 0 only where it has a
// finite lower bound; the dual bound b^T y + sum_j (d_j > 0 ? d_j u_j :
// d_j l_j) equals the optimum. For kMinimize, `dual` is the negation of the
// maximisation certificate for the negated objective.
//
// When infeasible, `dual` is a Farkas vector y (maximisation signs, zero
// objective) whose dual bound above is negative. When unbounded, `primal`
// is feasible and `ray` is an improving recession direction.
struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<Rational> primal;
  std::vector<Rational> dual;
  std::vector<Rational> ray;
  Rational objective_value;
  long pivots = 0;
};

enum class PivotRule {
  // Smallest-index entering and leaving variables; never cycles.
  kBland,
  // Most negative reduced cost, falling back to Bland's rule after a run of
  // degenerate pivots so termination is still guaranteed.
  kDantzig,
};

struct LpOptions {
  PivotRule rule = PivotRule::kDantzig;
  // Degenerate pivots tolerated under kDantzig before switching to Bland.
  int degenerate_run_limit = 50;
};

LpSolution SolveLp(const LinearProgram& lp, Objective objective,
                   const LpOptions& options = LpOptions());

// Checks the certificate carried by `solution` exactly: primal feasibility,
// dual sign conditions and equal objectives for kOptimal; a valid Farkas
// vector for kInfeasible; a feasible point plus improving ray for
// kUnbounded. On failure returns false and, if `why` is non-null, explains.
bool VerifyCertificate(const LinearProgram& lp, Objective objective,
                       const LpSolution& solution, std::string* why = nullptr);

// Exact primal feasibility of a point.
bool IsPrimalFeasible(const LinearProgram& lp, const std::vector<Rational>& x,
                      std::string* why = nullptr);

enum class Relation { kLt, kLe, kEq, kGe, kGt };

// A constraint sum_j a_j x_j REL rhs, where REL may be strict.
struct Constraint {
  SparseRow coeffs;
  Relation relation = Relation::kLe;
  Rational rhs;
};

// Outcome of a feasibility question with possibly strict constraints.
//
// Strict rows are decided exactly through the margin program
//   maximise t  s.t.  a x + t <= b  (for a x < b),  a x - t >= b (for > b),
//                     non-strict rows unchanged,  0 <= t <= 1,
// the system being feasible iff the optimal t is positive.
struct FeasibilityResult {
  bool feasible = false;
  std::vector<Rational> witness;
  // Optimal margin t (zero when infeasible).
  Rational margin;
  // The margin program and its solved certificate: an Infeasible Farkas
  // certificate, or an Optimal certificate proving t <= 0.
  LinearProgram margin_program;
  LpSolution certificate;
};

// `bounds` may be empty, meaning every variable is non-negative.
FeasibilityResult CheckFeasible(int num_vars,
                                const std::vector<Constraint>& constraints,
                                const std::vector<VarBounds>& bounds = {},
                                const LpOptions& options = LpOptions());

// Re-checks the certificate inside `result` independently of the solver.
bool VerifyFeasibilityResult(int num_vars,
                             const std::vector<Constraint>& constraints,
                             const std::vector<VarBounds>& bounds,
                             const FeasibilityResult& result,
                             std::string* why = nullptr);

}  // namespace mcg

#endif  // MCG_LP_H_
