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

#ifndef MCG_CLI_COMMANDS_H_
#define MCG_CLI_COMMANDS_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "mcg/cli/cache.h"
#include "mcg/game.h"
#include "mcg/game_tree.h"
#include "mcg/json_io.h"
#include "mcg/sequence_form.h"

namespace mcg::cli {

enum class Format { kJson, kTable };

// Settings shared by every command.
struct RunConfig {
  long budget = kDefaultNodeBudget;
  bool symmetric = true;
  bool relaxed_queries = false;
  Format format = Format::kJson;
  // Empty: no persistent cache.
  std::string cache_path;
  // Recompute cached values and fail (exit 4) on any difference.
  bool recheck = false;
  // Table output only: add decimal approximations next to exact values.
  bool approx = false;

  // Throws InvalidInput unless budget >= 1.
  void Validate() const;
  ModelOptions Model() const;
  SolveOptions Solve() const;
};

// Solves one game, consulting and filling the cache. A cache hit yields the
// stored value and stats only; a miss yields the full SolveResult JSON.
Json CmdSolve(const GameSpec& spec, const RunConfig& config,
              ResultCache& cache);

struct VerifyRequest {
  // Exactly one of `family` and `strategy_file` is set.
  std::string family;
  std::string strategy_file;
  // Family parameters (ignored by fixed trees).
  int n = 0;
  int d = 0;
  int k = 0;
  Variant variant = Variant::kAdversary;
};

// Value of a searcher strategy against a best-responding hider (or, for the
// cooperative variant, under the fewest-treasures reveal rule), with the
// minimizing allocation and reveal choices.
Json CmdVerify(const VerifyRequest& request, const RunConfig& config);

struct SweepRequest {
  int max_n = 0;
  int max_d = 0;
  int max_k = 0;
  int threads = 1;
};

// Solves every adversarial (n, d, k) with k <= n <= max_n, d <= max_d,
// k <= max_k and reports which are accurate (value equals the counting
// bound). Findings list every triplet that contradicts
//  - "accurate whenever n >= d(k-1)+1",
//  - monotonicity in d: v(n, d+1, k) <= v(n, d, k),
//  - "accurate (n,d,k) implies accurate (n',d',k') for n' >= n, d' <= d,
//    k' <= k".
// Triplets over budget are listed with status "budget-exceeded".
Json CmdSweepAccuracy(const SweepRequest& request, const RunConfig& config,
                      ResultCache& cache);

enum class AccumulationMode { kEvaluate, kRuckle, kExact };
AccumulationMode ParseAccumulationMode(const std::string& name);

struct AccumulationRequest {
  int n = 0;
  int k = 0;
  std::string d;
  AccumulationMode mode = AccumulationMode::kEvaluate;
  // Comma-separated rationals; evaluate mode only.
  std::string dist;
};

// {"winning", "losing", "total", "probability", "witness", ...}, where
// probability is winning / total (a uniformly random k-subset wins).
Json CmdAccumulation(const AccumulationRequest& request);

// p_lambda for a comma-separated Young shape ("" is the empty shape).
Json CmdPLambda(int n, int d, const std::string& lambda);

// Per-step discovery identities for the fractional-k strategy, either on one
// shape or on every reachable shape satisfying the preconditions.
Json CmdFractionalCheck(int n, int d, const std::string& k,
                        const std::string& lambda);

// Recomputes every cache entry and compares the exact values.
Json CmdRecheckCache(const RunConfig& config, ResultCache& cache);

// Human-readable rendering of any command result.
std::string RenderTable(const Json& result, bool approx);

// Parses `args` (without the program name), runs the command and prints the
// result. Returns the process exit code: 0 success, 2 invalid input,
// 3 budget exceeded, 4 internal invariant breach.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace mcg::cli

#endif  // MCG_CLI_COMMANDS_H_
