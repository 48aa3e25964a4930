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

#include "mcg/lp.h"

#include <algorithm>
#include <map>

#include "mcg/error.h"

namespace mcg {

std::string LpStatusName(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

int LinearProgram::AddVariable(Rational cost, VarBounds b) {
  objective.push_back(std::move(cost));
  bounds.push_back(std::move(b));
  return NumCols() - 1;
}

int LinearProgram::AddRow(SparseRow coeffs, Sense sense, Rational value) {
  std::map<int, Rational> merged;
  for (auto& [j, a] : coeffs) merged[j] += a;
  SparseRow row;
  for (auto& [j, a] : merged) {
    if (!a.IsZero()) row.emplace_back(j, a);
  }
  rows.push_back(std::move(row));
  senses.push_back(sense);
  rhs.push_back(std::move(value));
  return NumRows() - 1;
}

void LinearProgram::Validate() const {
  if (rows.size() != senses.size() || rows.size() != rhs.size()) {
    throw InvalidInput("LP row count, sense count and rhs length differ");
  }
  if (objective.size() != bounds.size()) {
    throw InvalidInput("LP objective length and bound count differ");
  }
  for (size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [j, a] : rows[i]) {
      if (j < 0 || j >= NumCols()) {
        throw InvalidInput("LP row " + std::to_string(i) +
                           " references column " + std::to_string(j));
      }
    }
  }
  for (size_t j = 0; j < bounds.size(); ++j) {
    if (bounds[j].lower && bounds[j].upper &&
        *bounds[j].lower > *bounds[j].upper) {
      throw InvalidInput("LP variable " + std::to_string(j) +
                         " has lower bound above upper bound");
    }
  }
}

namespace {

// The problem rewritten as  max c'x'  s.t. rows over x' >= 0, rhs >= 0.
struct StandardForm {
  int num_cols = 0;
  // Original variable j equals offset[j] + sum of sign * x'[col].
  std::vector<std::vector<std::pair<int, int>>> var_cols;
  std::vector<Rational> offset;
  std::vector<SparseRow> rows;
  std::vector<Sense> senses;
  std::vector<Rational> rhs;
  // Row negation applied to reach a non-negative rhs (+1 or -1).
  std::vector<int> row_sign;
  std::vector<Rational> cost;
  Rational cost_constant;
  int num_original_rows = 0;
};

StandardForm ToStandardForm(const LinearProgram& lp,
                            const std::vector<Rational>& cost) {
  StandardForm sf;
  int n = lp.NumCols();
  sf.var_cols.resize(n);
  sf.offset.assign(n, Rational(0));
  std::vector<std::pair<int, Rational>> upper_rows;  // (x' column, u - l)
  for (int j = 0; j < n; ++j) {
    const VarBounds& b = lp.bounds[j];
    if (b.lower) {
      sf.offset[j] = *b.lower;
      sf.var_cols[j].emplace_back(sf.num_cols, 1);
      if (b.upper) upper_rows.emplace_back(sf.num_cols, *b.upper - *b.lower);
      ++sf.num_cols;
    } else if (b.upper) {
      sf.offset[j] = *b.upper;
      sf.var_cols[j].emplace_back(sf.num_cols++, -1);
    } else {
      sf.var_cols[j].emplace_back(sf.num_cols++, 1);
      sf.var_cols[j].emplace_back(sf.num_cols++, -1);
    }
  }
  sf.cost.assign(sf.num_cols, Rational(0));
  for (int j = 0; j < n; ++j) {
    sf.cost_constant += cost[j] * sf.offset[j];
    for (auto [col, sign] : sf.var_cols[j]) {
      sf.cost[col] = sign > 0 ? cost[j] : -cost[j];
    }
  }
  auto push_row = [&](SparseRow row, Sense sense, Rational value) {
    int sign = 1;
    if (value.Sign() < 0) {
      sign = -1;
      value = -value;
      for (auto& e : row) e.second = -e.second;
      if (sense == Sense::kLe) {
        sense = Sense::kGe;
      } else if (sense == Sense::kGe) {
        sense = Sense::kLe;
      }
    }
    sf.rows.push_back(std::move(row));
    sf.senses.push_back(sense);
    sf.rhs.push_back(std::move(value));
    sf.row_sign.push_back(sign);
  };
  for (int i = 0; i < lp.NumRows(); ++i) {
    SparseRow row;
    Rational value = lp.rhs[i];
    for (const auto& [j, a] : lp.rows[i]) {
      value -= a * sf.offset[j];
      for (auto [col, sign] : sf.var_cols[j]) {
        row.emplace_back(col, sign > 0 ? a : -a);
      }
    }
    push_row(std::move(row), lp.senses[i], std::move(value));
  }
  sf.num_original_rows = lp.NumRows();
  for (auto& [col, width] : upper_rows) {
    push_row(SparseRow{{col, Rational(1)}}, Sense::kLe, width);
  }
  return sf;
}

// Dense simplex tableau with a separately stored reduced-cost row.
class Tableau {
 public:
  Tableau(int rows, int cols)
      : m_(rows), n_(cols), t_(static_cast<size_t>(rows) * (cols + 1)),
        r_(cols + 1), basis_(rows, -1), blocked_(cols, false) {}

  mpq_class& At(int i, int j) { return t_[static_cast<size_t>(i) * (n_ + 1) + j]; }
  mpq_class& Rhs(int i) { return At(i, n_); }
  mpq_class& Reduced(int j) { return r_[j]; }
  mpq_class& Value() { return r_[n_]; }
  int Basis(int i) const { return basis_[i]; }
  void SetBasis(int i, int j) { basis_[i] = j; }
  void Block(int j) { blocked_[j] = true; }
  int rows() const { return m_; }
  int cols() const { return n_; }
  long pivots() const { return pivots_; }

  // Installs reduced costs r_j = c_B B^-1 A_j - c_j for cost vector c.
  void PriceOut(const std::vector<mpq_class>& c) {
    for (int j = 0; j < n_; ++j) r_[j] = -c[j];
    r_[n_] = 0;
    for (int i = 0; i < m_; ++i) {
      const mpq_class& cb = c[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (int j = 0; j <= n_; ++j) {
        const mpq_class& a = At(i, j);
        if (sgn(a) != 0) r_[j] += cb * a;
      }
    }
  }

  void Pivot(int pr, int pc) {
    ++pivots_;
    mpq_class inv = 1 / At(pr, pc);
    std::vector<int> nz;
    for (int j = 0; j <= n_; ++j) {
      mpq_class& a = At(pr, j);
      if (sgn(a) != 0) {
        a *= inv;
        nz.push_back(j);
      }
    }
    mpq_class f, tmp;
    auto eliminate = [&](mpq_class* row) {
      f = row[pc];
      if (sgn(f) == 0) return;
      const mpq_class* prow = &At(pr, 0);
      for (int j : nz) {
        mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), prow[j].get_mpq_t());
        mpq_sub(row[j].get_mpq_t(), row[j].get_mpq_t(), tmp.get_mpq_t());
      }
    };
    for (int i = 0; i < m_; ++i) {
      if (i != pr) eliminate(&At(i, 0));
    }
    eliminate(r_.data());
    basis_[pr] = pc;
  }

  // Runs primal simplex to optimality. Returns -1 at optimum, otherwise the
  // entering column that proved unboundedness.
  int Run(const LpOptions& options) {
    std::vector<bool> is_basic(n_, false);
    for (int b : basis_) is_basic[b] = true;
    bool bland = options.rule == PivotRule::kBland;
    int degenerate_run = 0;
    mpq_class ratio, best;
    while (true) {
      int e = -1;
      for (int j = 0; j < n_; ++j) {
        if (blocked_[j] || is_basic[j] || sgn(r_[j]) >= 0) continue;
        if (e < 0) {
          e = j;
          if (bland) break;
        } else if (r_[j] < r_[e]) {
          e = j;
        }
      }
      if (e < 0) return -1;
      int leave = -1;
      for (int i = 0; i < m_; ++i) {
        const mpq_class& a = At(i, e);
        if (sgn(a) <= 0) continue;
        ratio = Rhs(i) / a;
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return e;
      if (sgn(best) == 0) {
        if (!bland && ++degenerate_run > options.degenerate_run_limit) {
          bland = true;
        }
      } else {
        degenerate_run = 0;
        bland = options.rule == PivotRule::kBland;
      }
      is_basic[basis_[leave]] = false;
      is_basic[e] = true;
      Pivot(leave, e);
    }
  }

 private:
  int m_, n_;
  std::vector<mpq_class> t_;
  std::vector<mpq_class> r_;
  std::vector<int> basis_;
  std::vector<bool> blocked_;
  long pivots_ = 0;
};

LpSolution SolveMax(const LinearProgram& lp, const std::vector<Rational>& cost,
                    const LpOptions& options) {
  StandardForm sf = ToStandardForm(lp, cost);
  int m = static_cast<int>(sf.rows.size());
  int ns = sf.num_cols;
  // Column layout: structural, then one slack/surplus per inequality row,
  // then one artificial per equality or >= row.
  std::vector<int> slack_col(m, -1), art_col(m, -1), unit_col(m, -1);
  int cols = ns;
  for (int i = 0; i < m; ++i) {
    if (sf.senses[i] != Sense::kEq) slack_col[i] = cols++;
  }
  int first_art = cols;
  for (int i = 0; i < m; ++i) {
    if (sf.senses[i] != Sense::kLe) art_col[i] = cols++;
  }
  Tableau tab(m, cols);
  for (int i = 0; i < m; ++i) {
    for (const auto& [j, a] : sf.rows[i]) tab.At(i, j) += a.value();
    if (slack_col[i] >= 0) {
      tab.At(i, slack_col[i]) = sf.senses[i] == Sense::kLe ? 1 : -1;
    }
    if (art_col[i] >= 0) tab.At(i, art_col[i]) = 1;
    tab.Rhs(i) = sf.rhs[i].value();
    unit_col[i] = sf.senses[i] == Sense::kLe ? slack_col[i] : art_col[i];
    tab.SetBasis(i, unit_col[i]);
  }

  auto row_duals = [&](const std::vector<mpq_class>& c) {
    std::vector<Rational> y(lp.NumRows());
    for (int i = 0; i < sf.num_original_rows; ++i) {
      mpq_class yi = tab.Reduced(unit_col[i]) + c[unit_col[i]];
      if (sf.row_sign[i] < 0) yi = -yi;
      y[i] = Rational(yi);
    }
    return y;
  };
  auto map_primal = [&](const std::vector<mpq_class>& xs, bool with_offset) {
    std::vector<Rational> x(lp.NumCols());
    for (int j = 0; j < lp.NumCols(); ++j) {
      Rational v = with_offset ? sf.offset[j] : Rational(0);
      for (auto [col, sign] : sf.var_cols[j]) {
        if (sign > 0) {
          v += Rational(xs[col]);
        } else {
          v -= Rational(xs[col]);
        }
      }
      x[j] = v;
    }
    return x;
  };

  LpSolution sol;
  if (first_art < cols) {
    std::vector<mpq_class> c1(cols, 0);
    for (int j = first_art; j < cols; ++j) c1[j] = -1;
    tab.PriceOut(c1);
    LpOptions phase1 = options;
    int e = tab.Run(phase1);
    MCG_CHECK(e < 0);  // phase one is bounded above by zero
    if (sgn(tab.Value()) < 0) {
      sol.status = LpStatus::kInfeasible;
      sol.dual = row_duals(c1);
      sol.pivots = tab.pivots();
      return sol;
    }
    // Drive zero-valued artificials out of the basis where possible.
    for (int i = 0; i < m; ++i) {
      if (tab.Basis(i) < first_art) continue;
      for (int j = 0; j < first_art; ++j) {
        if (sgn(tab.At(i, j)) != 0) {
          tab.Pivot(i, j);
          break;
        }
      }
    }
    for (int j = first_art; j < cols; ++j) tab.Block(j);
  }
  std::vector<mpq_class> c2(cols, 0);
  for (int j = 0; j < ns; ++j) c2[j] = sf.cost[j].value();
  tab.PriceOut(c2);
  int e = tab.Run(options);
  std::vector<mpq_class> xs(cols, 0);
  for (int i = 0; i < m; ++i) xs[tab.Basis(i)] = tab.Rhs(i);
  sol.primal = map_primal(xs, true);
  sol.pivots = tab.pivots();
  if (e >= 0) {
    std::vector<mpq_class> dir(cols, 0);
    dir[e] = 1;
    for (int i = 0; i < m; ++i) dir[tab.Basis(i)] = -tab.At(i, e);
    sol.status = LpStatus::kUnbounded;
    sol.ray = map_primal(dir, false);
    Rational z = sf.cost_constant;
    for (int j = 0; j < lp.NumCols(); ++j) z += cost[j] * sol.primal[j];
    sol.objective_value = z;
    return sol;
  }
  sol.status = LpStatus::kOptimal;
  sol.dual = row_duals(c2);
  sol.objective_value = Rational(tab.Value()) + sf.cost_constant;
  return sol;
}

// Dual bound b^T y + sum_j (d_j > 0 ? d_j u_j : d_j l_j) for a maximisation
// with cost c; returns false when some needed bound is infinite or a sign
// condition fails.
bool DualBound(const LinearProgram& lp, const std::vector<Rational>& c,
               const std::vector<Rational>& y, Rational* out,
               std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (static_cast<int>(y.size()) != lp.NumRows()) {
    return fail("dual vector has wrong length");
  }
  std::vector<Rational> d = c;
  Rational bound;
  for (int i = 0; i < lp.NumRows(); ++i) {
    if (lp.senses[i] == Sense::kLe && y[i].Sign() < 0) {
      return fail("negative dual on <= row " + std::to_string(i));
    }
    if (lp.senses[i] == Sense::kGe && y[i].Sign() > 0) {
      return fail("positive dual on >= row " + std::to_string(i));
    }
    if (y[i].IsZero()) continue;
    bound += lp.rhs[i] * y[i];
    for (const auto& [j, a] : lp.rows[i]) d[j] -= a * y[i];
  }
  for (int j = 0; j < lp.NumCols(); ++j) {
    int s = d[j].Sign();
    if (s > 0) {
      if (!lp.bounds[j].upper) {
        return fail("positive reduced cost on column " + std::to_string(j) +
                    " without upper bound");
      }
      bound += d[j] * *lp.bounds[j].upper;
    } else if (s < 0) {
      if (!lp.bounds[j].lower) {
        return fail("negative reduced cost on column " + std::to_string(j) +
                    " without lower bound");
      }
      bound += d[j] * *lp.bounds[j].lower;
    }
  }
  *out = bound;
  return true;
}

}  // namespace

LpSolution SolveLp(const LinearProgram& lp, Objective objective,
                   const LpOptions& options) {
  lp.Validate();
  std::vector<Rational> cost = lp.objective;
  if (objective == Objective::kMinimize) {
    for (auto& c : cost) c = -c;
  }
  LpSolution sol = SolveMax(lp, cost, options);
  if (objective == Objective::kMinimize) {
    sol.objective_value = -sol.objective_value;
    if (sol.status == LpStatus::kOptimal) {
      for (auto& y : sol.dual) y = -y;
    }
  }
  std::string why;
  if (!VerifyCertificate(lp, objective, sol, &why)) {
    throw InternalError("LP certificate check failed: " + why);
  }
  return sol;
}

bool IsPrimalFeasible(const LinearProgram& lp, const std::vector<Rational>& x,
                      std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (static_cast<int>(x.size()) != lp.NumCols()) {
    return fail("primal vector has wrong length");
  }
  for (int j = 0; j < lp.NumCols(); ++j) {
    if (lp.bounds[j].lower && x[j] < *lp.bounds[j].lower) {
      return fail("column " + std::to_string(j) + " below its lower bound");
    }
    if (lp.bounds[j].upper && x[j] > *lp.bounds[j].upper) {
      return fail("column " + std::to_string(j) + " above its upper bound");
    }
  }
  for (int i = 0; i < lp.NumRows(); ++i) {
    Rational lhs;
    for (const auto& [j, a] : lp.rows[i]) lhs += a * x[j];
    bool ok = lp.senses[i] == Sense::kLe   ? lhs <= lp.rhs[i]
              : lp.senses[i] == Sense::kGe ? lhs >= lp.rhs[i]
                                           : lhs == lp.rhs[i];
    if (!ok) return fail("row " + std::to_string(i) + " violated");
  }
  return true;
}

bool VerifyCertificate(const LinearProgram& lp, Objective objective,
                       const LpSolution& sol, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  std::vector<Rational> c = lp.objective;
  if (objective == Objective::kMinimize) {
    for (auto& v : c) v = -v;
  }
  switch (sol.status) {
    case LpStatus::kOptimal: {
      if (!IsPrimalFeasible(lp, sol.primal, why)) return false;
      Rational primal;
      for (int j = 0; j < lp.NumCols(); ++j) primal += lp.objective[j] * sol.primal[j];
      if (primal != sol.objective_value) {
        return fail("reported objective differs from c^T x");
      }
      std::vector<Rational> y = sol.dual;
      if (objective == Objective::kMinimize) {
        for (auto& v : y) v = -v;
      }
      Rational bound;
      if (!DualBound(lp, c, y, &bound, why)) return false;
      Rational max_primal =
          objective == Objective::kMinimize ? -primal : primal;
      if (bound != max_primal) {
        return fail("duality gap: primal " + max_primal.ToString() +
                    " vs dual " + bound.ToString());
      }
      return true;
    }
    case LpStatus::kInfeasible: {
      std::vector<Rational> zero(lp.NumCols(), Rational(0));
      Rational bound;
      if (!DualBound(lp, zero, sol.dual, &bound, why)) return false;
      if (bound.Sign() >= 0) return fail("Farkas bound is not negative");
      return true;
    }
    case LpStatus::kUnbounded: {
      if (!IsPrimalFeasible(lp, sol.primal, why)) return false;
      if (static_cast<int>(sol.ray.size()) != lp.NumCols()) {
        return fail("ray has wrong length");
      }
      Rational gain;
      for (int j = 0; j < lp.NumCols(); ++j) {
        gain += c[j] * sol.ray[j];
        if (lp.bounds[j].lower && sol.ray[j].Sign() < 0) {
          return fail("ray leaves lower bound of column " + std::to_string(j));
        }
        if (lp.bounds[j].upper && sol.ray[j].Sign() > 0) {
          return fail("ray leaves upper bound of column " + std::to_string(j));
        }
      }
      for (int i = 0; i < lp.NumRows(); ++i) {
        Rational a;
        for (const auto& [j, v] : lp.rows[i]) a += v * sol.ray[j];
        bool ok = lp.senses[i] == Sense::kLe   ? a.Sign() <= 0
                  : lp.senses[i] == Sense::kGe ? a.Sign() >= 0
                                               : a.IsZero();
        if (!ok) return fail("ray violates row " + std::to_string(i));
      }
      if (gain.Sign() <= 0) return fail("ray does not improve the objective");
      return true;
    }
  }
  return fail("unknown status");
}

namespace {

LinearProgram MarginProgram(int num_vars,
                            const std::vector<Constraint>& constraints,
                            const std::vector<VarBounds>& bounds) {
  if (!bounds.empty() && static_cast<int>(bounds.size()) != num_vars) {
    throw InvalidInput("bounds length differs from variable count");
  }
  LinearProgram lp;
  for (int j = 0; j < num_vars; ++j) {
    lp.AddVariable(Rational(0),
                   bounds.empty() ? VarBounds::NonNegative() : bounds[j]);
  }
  int t = lp.AddVariable(Rational(1), VarBounds::Between(0, 1));
  for (const auto& c : constraints) {
    SparseRow row = c.coeffs;
    for (const auto& [j, a] : row) {
      if (j < 0 || j >= num_vars) {
        throw InvalidInput("constraint references variable " +
                           std::to_string(j));
      }
    }
    switch (c.relation) {
      case Relation::kLt:
        row.emplace_back(t, Rational(1));
        lp.AddRow(row, Sense::kLe, c.rhs);
        break;
      case Relation::kGt:
        row.emplace_back(t, Rational(-1));
        lp.AddRow(row, Sense::kGe, c.rhs);
        break;
      case Relation::kLe:
        lp.AddRow(row, Sense::kLe, c.rhs);
        break;
      case Relation::kEq:
        lp.AddRow(row, Sense::kEq, c.rhs);
        break;
      case Relation::kGe:
        lp.AddRow(row, Sense::kGe, c.rhs);
        break;
    }
  }
  return lp;
}

bool Satisfies(const Constraint& c, const std::vector<Rational>& x) {
  Rational lhs;
  for (const auto& [j, a] : c.coeffs) lhs += a * x[j];
  switch (c.relation) {
    case Relation::kLt:
      return lhs < c.rhs;
    case Relation::kLe:
      return lhs <= c.rhs;
    case Relation::kEq:
      return lhs == c.rhs;
    case Relation::kGe:
      return lhs >= c.rhs;
    case Relation::kGt:
      return lhs > c.rhs;
  }
  return false;
}

}  // namespace

FeasibilityResult CheckFeasible(int num_vars,
                                const std::vector<Constraint>& constraints,
                                const std::vector<VarBounds>& bounds,
                                const LpOptions& options) {
  FeasibilityResult res;
  res.margin_program = MarginProgram(num_vars, constraints, bounds);
  res.certificate =
      SolveLp(res.margin_program, Objective::kMaximize, options);
  if (res.certificate.status == LpStatus::kOptimal) {
    res.margin = res.certificate.objective_value;
    res.feasible = res.margin.Sign() > 0;
    if (res.feasible) {
      res.witness.assign(res.certificate.primal.begin(),
                         res.certificate.primal.begin() + num_vars);
    }
  }
  MCG_CHECK(res.certificate.status != LpStatus::kUnbounded);
  return res;
}

bool VerifyFeasibilityResult(int num_vars,
                             const std::vector<Constraint>& constraints,
                             const std::vector<VarBounds>& bounds,
                             const FeasibilityResult& result,
                             std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (result.feasible) {
    if (static_cast<int>(result.witness.size()) != num_vars) {
      return fail("witness has wrong length");
    }
    for (int j = 0; j < num_vars; ++j) {
      VarBounds b = bounds.empty() ? VarBounds::NonNegative() : bounds[j];
      if ((b.lower && result.witness[j] < *b.lower) ||
          (b.upper && result.witness[j] > *b.upper)) {
        return fail("witness violates bound of variable " + std::to_string(j));
      }
    }
    for (size_t i = 0; i < constraints.size(); ++i) {
      if (!Satisfies(constraints[i], result.witness)) {
        return fail("witness violates constraint " + std::to_string(i));
      }
    }
    return true;
  }
  LinearProgram lp = MarginProgram(num_vars, constraints, bounds);
  if (!VerifyCertificate(lp, Objective::kMaximize, result.certificate, why)) {
    return false;
  }
  if (result.certificate.status == LpStatus::kInfeasible) return true;
  if (result.certificate.status == LpStatus::kOptimal &&
      result.certificate.objective_value.IsZero()) {
    return true;
  }
  return fail("certificate does not establish infeasibility");
}

}  // namespace mcg
