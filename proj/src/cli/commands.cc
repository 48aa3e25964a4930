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

#include "mcg/cli/commands.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>
#include <utility>

#include "CLI11.hpp"
#include "mcg/accumulation.h"
#include "mcg/best_response.h"
#include "mcg/bounds.h"
#include "mcg/combinatorics.h"
#include "mcg/error.h"
#include "mcg/families.h"
#include "mcg/fractional.h"
#include "mcg/verify.h"

namespace mcg::cli {

namespace {

std::vector<std::string> SplitComma(const std::string& text) {
  std::vector<std::string> out;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t b = item.find_first_not_of(" \t");
    size_t e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  if (!text.empty() && text.back() == ',') out.push_back("");
  return out;
}

std::vector<int> ParseIntList(const std::string& text,
                              const std::string& what) {
  std::vector<int> out;
  for (const std::string& item : SplitComma(text)) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) {
      throw InvalidInput(what + ": '" + item + "' is not an integer");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<Rational> ParseRationalList(const std::string& text) {
  std::vector<Rational> out;
  for (const std::string& item : SplitComma(text)) {
    out.push_back(Rational::Parse(item));
  }
  return out;
}

Json RationalsToJson(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const Rational& r : v) out.push_back(RationalToJson(r));
  return out;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read file " + path);
  std::stringstream text;
  text << in.rdbuf();
  return text.str();
}

Json Triplet(int n, int d, int k) { return Json::array({n, d, k}); }

}  // namespace

void RunConfig::Validate() const {
  MCG_REQUIRE(budget >= 1, "--budget must be at least 1");
}

ModelOptions RunConfig::Model() const {
  ModelOptions m;
  m.symmetric = symmetric;
  m.relaxed_queries = relaxed_queries;
  return m;
}

SolveOptions RunConfig::Solve() const {
  SolveOptions s;
  s.model = Model();
  s.node_budget = budget;
  return s;
}

Json CmdSolve(const GameSpec& spec, const RunConfig& config,
              ResultCache& cache) {
  config.Validate();
  spec.Validate();
  const ModelOptions model = config.Model();
  const std::string key = CacheKey(spec, model);
  std::optional<CacheEntry> hit = cache.Get(key);
  if (hit && !config.recheck) {
    return {{"n", spec.n},
            {"d", spec.d},
            {"k", spec.k},
            {"variant", VariantName(spec.variant)},
            {"symmetric", model.symmetric},
            {"relaxed_queries", model.relaxed_queries},
            {"value", hit->value},
            {"stats", hit->stats},
            {"cached", true},
            {"cache_key", key}};
  }
  SolveResult r = mcg::Solve(spec, config.Solve());
  Json j = SolveResultToJson(r);
  const std::string value = r.value.ToString();
  if (hit) {
    if (hit->value != value) {
      throw InternalError("cache recheck failed for " + key + ": stored " +
                          hit->value + ", recomputed " + value);
    }
    j["recheck"] = "match";
  } else {
    CacheEntry e;
    e.spec = spec;
    e.model = model;
    e.value = value;
    e.stats = j["stats"];
    e.timestamp = UtcTimestamp();
    cache.Put(key, std::move(e));
  }
  j["cached"] = false;
  j["cache_key"] = key;
  return j;
}

Json CmdVerify(const VerifyRequest& request, const RunConfig& config) {
  config.Validate();
  MCG_REQUIRE(request.family.empty() != request.strategy_file.empty(),
              "give exactly one of --family and --strategy");
  StrategyTree tree;
  Json source;
  if (!request.family.empty()) {
    tree = BuildFamily(request.family, request.n, request.d, request.k,
                       request.variant);
    source = {{"family", request.family}};
  } else {
    tree = StrategyFromJson(ParseJson(ReadFile(request.strategy_file)));
    source = {{"strategy", request.strategy_file}};
  }
  GameSpec spec{tree.n, tree.d, tree.k, request.variant};
  spec.Validate();
  const ModelOptions model = config.Model();
  HiderResponse response;
  std::string reveal_model;
  if (request.variant == Variant::kCooperative) {
    response =
        JointVerifyCooperative(spec, tree, FewestTreasuresRule(), model);
    reveal_model = "fewest-treasures rule";
  } else {
    response = Verify(spec, tree, model);
    reveal_model = request.variant == Variant::kRandom
                       ? "treasure-uniform chance"
                       : "best-responding hider";
  }
  Json reveals = Json::object();
  for (const auto& [key, box] : response.reveals) reveals[key] = box;
  Json out = source;
  out["n"] = spec.n;
  out["d"] = spec.d;
  out["k"] = spec.k;
  out["variant"] = VariantName(spec.variant);
  out["value"] = RationalToJson(response.value);
  out["reveal_model"] = reveal_model;
  out["never_asks_back"] = NeverAsksBack(tree);
  out["witness"] = {{"allocation", response.allocation},
                    {"reveals", std::move(reveals)}};
  return out;
}

Json CmdSweepAccuracy(const SweepRequest& request, const RunConfig& config,
                      ResultCache& cache) {
  config.Validate();
  MCG_REQUIRE(request.max_n >= 0 && request.max_d >= 0 && request.max_k >= 0,
              "sweep limits must be non-negative");
  MCG_REQUIRE(request.threads >= 1, "--threads must be at least 1");
  std::vector<std::tuple<int, int, int>> jobs;
  for (int k = 1; k <= request.max_k; ++k) {
    for (int n = k; n <= request.max_n; ++n) {
      for (int d = 1; d <= request.max_d; ++d) jobs.emplace_back(n, d, k);
    }
  }

  std::vector<Json> rows(jobs.size());
  std::vector<std::optional<Rational>> values(jobs.size());
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&]() {
    for (size_t i = next++; i < jobs.size(); i = next++) {
      auto [n, d, k] = jobs[i];
      Json row = {{"n", n}, {"d", d}, {"k", k}};
      Rational bound = UpperBoundCombinatorial(n, d, k);
      row["bound"] = RationalToJson(bound);
      bool premise = n >= d * (k - 1) + 1;
      row["threshold_premise"] = premise;
      try {
        Json solved =
            CmdSolve({n, d, k, Variant::kAdversary}, config, cache);
        Rational value = Rational::Parse(solved["value"].get<std::string>());
        values[i] = value;
        row["value"] = RationalToJson(value);
        row["accurate"] = value == bound;
        row["threshold_consistent"] = !premise || value == bound;
        row["status"] = solved["cached"].get<bool>() ? "cached" : "solved";
        // Persist as we go so an interrupted sweep resumes where it stopped.
        if (!solved["cached"].get<bool>()) cache.Save();
      } catch (const BudgetExceeded& e) {
        row["value"] = nullptr;
        row["accurate"] = nullptr;
        row["threshold_consistent"] = nullptr;
        row["status"] = "budget-exceeded";
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        return;
      }
      rows[i] = std::move(row);
    }
  };
  std::vector<std::thread> pool;
  int threads = std::min<int>(request.threads,
                              std::max<int>(1, static_cast<int>(jobs.size())));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::map<std::tuple<int, int, int>, size_t> index;
  for (size_t i = 0; i < jobs.size(); ++i) index[jobs[i]] = i;
  auto accurate = [&](size_t i) {
    return values[i] && rows[i]["accurate"].get<bool>();
  };

  Json findings = Json::array();
  for (size_t i = 0; i < jobs.size(); ++i) {
    auto [n, d, k] = jobs[i];
    if (values[i] && !rows[i]["threshold_consistent"].get<bool>()) {
      findings.push_back(
          {{"kind", "accuracy-threshold"},
           {"triplets", Json::array({Triplet(n, d, k)})},
           {"detail", "n >= d(k-1)+1 holds but the value " +
                          values[i]->ToString() + " is below the bound " +
                          rows[i]["bound"].get<std::string>()}});
    }
    auto up = index.find({n, d + 1, k});
    if (values[i] && up != index.end() && values[up->second] &&
        *values[up->second] > *values[i]) {
      findings.push_back(
          {{"kind", "d-monotonicity"},
           {"triplets", Json::array({Triplet(n, d, k), Triplet(n, d + 1, k)})},
           {"detail", "value rises from " + values[i]->ToString() + " to " +
                          values[up->second]->ToString()}});
    }
    if (!accurate(i)) continue;
    for (size_t j = 0; j < jobs.size(); ++j) {
      auto [n2, d2, k2] = jobs[j];
      if (j == i || n2 < n || d2 > d || k2 > k || !values[j]) continue;
      if (!accurate(j)) {
        findings.push_back(
            {{"kind", "pairwise-monotonicity"},
             {"triplets", Json::array({Triplet(n, d, k), Triplet(n2, d2, k2)})},
             {"detail", "the first is accurate but the second is not"}});
      }
    }
  }
  long skipped = 0;
  for (const auto& v : values) skipped += v ? 0 : 1;
  return {{"max_n", request.max_n},
          {"max_d", request.max_d},
          {"max_k", request.max_k},
          {"solved", static_cast<long>(jobs.size()) - skipped},
          {"budget_exceeded", skipped},
          {"rows", Json(rows)},
          {"findings", std::move(findings)}};
}

AccumulationMode ParseAccumulationMode(const std::string& name) {
  if (name == "evaluate") return AccumulationMode::kEvaluate;
  if (name == "ruckle") return AccumulationMode::kRuckle;
  if (name == "exact") return AccumulationMode::kExact;
  throw InvalidInput("unknown accumulation mode '" + name +
                     "' (expected evaluate, ruckle or exact)");
}

Json CmdAccumulation(const AccumulationRequest& request) {
  AccumulationSpec spec{request.n, request.k, Rational::Parse(request.d)};
  spec.Validate();
  MCG_REQUIRE(request.mode == AccumulationMode::kEvaluate ||
                  request.dist.empty(),
              "--dist is only used in evaluate mode");
  const long total = Binomial(spec.n, spec.k).get_si();
  Json out = {{"n", spec.n}, {"k", spec.k}, {"d", RationalToJson(spec.d)}};
  long winning = 0;
  GoldDistribution witness;
  switch (request.mode) {
    case AccumulationMode::kEvaluate: {
      MCG_REQUIRE(!request.dist.empty(), "evaluate mode needs --dist");
      witness = ParseRationalList(request.dist);
      MCG_REQUIRE(static_cast<int>(witness.size()) == spec.n,
                  "--dist needs exactly n = " + std::to_string(spec.n) +
                      " entries");
      ValidateDistribution(witness, spec.d);
      winning = CountWinningSubsets(witness, spec.k);
      out["mode"] = "evaluate";
      break;
    }
    case AccumulationMode::kRuckle: {
      RuckleResult r = BestRuckleDistribution(spec);
      winning = r.winning;
      witness = r.distribution;
      out["mode"] = "ruckle";
      out["r"] = r.r;
      break;
    }
    case AccumulationMode::kExact: {
      MaxLosingResult m = MaxLosingSubsetsExact(spec);
      winning = m.total - m.losing;
      witness = m.witness;
      out["mode"] = "exact";
      out["families_checked"] = m.families_checked;
      break;
    }
  }
  out["winning"] = winning;
  out["losing"] = total - winning;
  out["total"] = total;
  out["probability"] = RationalToJson(Rational(winning, total));
  out["losing_probability"] = RationalToJson(Rational(total - winning, total));
  out["witness"] = RationalsToJson(witness);
  return out;
}

Json CmdPLambda(int n, int d, const std::string& lambda) {
  YoungState s{ParseIntList(lambda, "--lambda"), n, d};
  s.Validate();
  return {{"n", n},
          {"d", d},
          {"lambda", s.lambda},
          {"p_lambda", RationalToJson(PLambda(s))}};
}

Json CmdFractionalCheck(int n, int d, const std::string& k,
                        const std::string& lambda) {
  FractionalSpec spec{n, d, Rational::Parse(k)};
  spec.Validate();
  const bool single = !lambda.empty();
  std::vector<std::vector<int>> shapes;
  if (single) {
    shapes.push_back(ParseIntList(lambda, "--lambda"));
  } else {
    shapes = ReachableLambdas(n, d);
  }
  Json rows = Json::array();
  Json steps = Json::array();
  long skipped = 0;
  bool all_equal = true;
  for (const std::vector<int>& shape : shapes) {
    YoungState s{shape, n, d};
    s.Validate();
    if (!single && (n < d * spec.CeilK() ||
                    Rational(spec.CeilK()) * PLambda(s) > Rational(1))) {
      ++skipped;
      continue;
    }
    if (single) {
      for (const StepBranch& b : FractionalStepDistribution(spec, s)) {
        steps.push_back({{"repeat", b.repeat},
                         {"fresh", b.fresh},
                         {"weight", RationalToJson(b.weight)}});
      }
    }
    for (Target t : {Target::kCurrentBox, Target::kFreshBox}) {
      StepCheck c = PerStepDiscoveryCheck(spec, s, t);
      all_equal = all_equal && c.lhs == c.rhs;
      rows.push_back(
          {{"lambda", shape},
           {"target", t == Target::kCurrentBox ? "current-box" : "fresh-box"},
           {"lhs", RationalToJson(c.lhs)},
           {"rhs", RationalToJson(c.rhs)},
           {"equal", c.lhs == c.rhs}});
    }
  }
  Json out = {{"n", n},
              {"d", d},
              {"k", RationalToJson(spec.k)},
              {"p", RationalToJson(spec.p())},
              {"checked", rows.size() / 2},
              {"skipped", skipped},
              {"all_equal", all_equal}};
  if (single) out["steps"] = std::move(steps);
  out["rows"] = std::move(rows);
  return out;
}

Json CmdRecheckCache(const RunConfig& config, ResultCache& cache) {
  config.Validate();
  Json rows = Json::array();
  std::vector<std::string> mismatched;
  for (const auto& [key, entry] : cache.Entries()) {
    SolveOptions options = config.Solve();
    options.model = entry.model;
    std::string value = mcg::Solve(entry.spec, options).value.ToString();
    bool match = value == entry.value;
    if (!match) mismatched.push_back(key);
    rows.push_back({{"key", key},
                    {"stored", entry.value},
                    {"recomputed", value},
                    {"match", match}});
  }
  if (!mismatched.empty()) {
    std::string list;
    for (const std::string& key : mismatched) list += " " + key;
    throw InternalError("cache recheck failed for" + list);
  }
  return {{"cache", cache.path()},
          {"entries", rows.size()},
          {"all_match", true},
          {"rows", std::move(rows)}};
}

namespace {

const std::set<std::string>& BulkyKeys() {
  static const std::set<std::string> keys = {
      "searcher_plan", "hider_plan", "searcher_strategy", "hider_reveals",
      "witness_reveals"};
  return keys;
}

std::string Cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

std::optional<double> Approx(const Json& v) {
  if (!v.is_string()) return std::nullopt;
  const std::string& s = v.get_ref<const std::string&>();
  if (s.find('/') == std::string::npos) return std::nullopt;
  try {
    return Rational::Parse(s).ToDouble();
  } catch (const InvalidInput&) {
    return std::nullopt;
  }
}

std::string FormatApprox(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << x;
  return os.str();
}

void RenderRows(const Json& rows, bool approx, std::ostream& os) {
  if (rows.empty()) {
    os << "(no rows)\n";
    return;
  }
  std::vector<std::string> columns;
  for (const auto& [key, v] : rows[0].items()) {
    columns.push_back(key);
    if (approx && Approx(v)) columns.push_back("~" + key);
  }
  std::vector<std::vector<std::string>> table;
  table.push_back(columns);
  for (const Json& row : rows) {
    std::vector<std::string> line;
    for (const std::string& c : columns) {
      if (c[0] == '~') {
        auto a = Approx(row.value(c.substr(1), Json()));
        line.push_back(a ? FormatApprox(*a) : "-");
      } else {
        line.push_back(Cell(row.value(c, Json())));
      }
    }
    table.push_back(std::move(line));
  }
  std::vector<size_t> width(columns.size(), 0);
  for (const auto& line : table) {
    for (size_t c = 0; c < line.size(); ++c) {
      width[c] = std::max(width[c], line[c].size());
    }
  }
  for (const auto& line : table) {
    for (size_t c = 0; c < line.size(); ++c) {
      os << std::left << std::setw(static_cast<int>(width[c]) + 2) << line[c];
    }
    os << "\n";
  }
  if (approx) {
    os << "(~ columns are decimal approximations, not authoritative)\n";
  }
}

}  // namespace

std::string RenderTable(const Json& result, bool approx) {
  std::ostringstream os;
  for (const auto& [key, v] : result.items()) {
    if (key == "rows" || key == "findings") continue;
    if (BulkyKeys().count(key) && !v.empty()) {
      os << key << ": <" << v.size() << " entries, see --format json>\n";
    } else if (v.is_primitive()) {
      os << key << ": " << Cell(v);
      if (auto a = approx ? Approx(v) : std::nullopt) {
        os << "  (~" << FormatApprox(*a) << ", not authoritative)";
      }
      os << "\n";
    } else {
      os << key << ": " << v.dump() << "\n";
    }
  }
  if (result.contains("rows")) RenderRows(result["rows"], approx, os);
  if (result.contains("findings")) {
    const Json& f = result["findings"];
    os << "findings: " << (f.empty() ? "none" : std::to_string(f.size()))
       << "\n";
    for (const Json& item : f) {
      os << "  " << item["kind"].get<std::string>() << " "
         << item["triplets"].dump() << ": " << item["detail"].get<std::string>()
         << "\n";
    }
  }
  return os.str();
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Exact solver and strategy workbench for the multiple caching "
               "game",
               "mcg"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  bool no_symmetry = false;
  std::string format = "json";
  app.add_option("--budget", config.budget,
                 "maximum number of game-tree nodes per solve")
      ->capture_default_str();
  app.add_flag("--no-symmetry", no_symmetry,
               "solve with labelled boxes instead of first-touch labels");
  app.add_flag("--relaxed-queries", config.relaxed_queries,
               "allow queries of any size 1..k");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--cache", config.cache_path,
                 "persistent result cache (JSON file)");
  app.add_flag("--recheck", config.recheck,
               "recompute cached values and fail on any difference");
  app.add_flag("--approx", config.approx,
               "table format: add decimal approximations (not authoritative)");

  std::function<Json(ResultCache&)> action;

  GameSpec solve_spec;
  std::string solve_variant = "adversary";
  CLI::App* solve = app.add_subcommand("solve", "exact game value");
  solve->add_option("--n", solve_spec.n, "number of boxes")->required();
  solve->add_option("--d", solve_spec.d, "number of treasures")->required();
  solve->add_option("--k", solve_spec.k, "boxes per query")->required();
  solve->add_option("--variant", solve_variant,
                    "adversary | random (cooperative has no solver)")
      ->capture_default_str();
  solve->callback([&]() {
    action = [&](ResultCache& cache) {
      solve_spec.variant = ParseVariant(solve_variant);
      return CmdSolve(solve_spec, config, cache);
    };
  });

  VerifyRequest verify_request;
  std::string verify_variant = "adversary";
  CLI::App* verify =
      app.add_subcommand("verify", "value of a searcher strategy");
  verify->add_option("--family", verify_request.family,
                     "built-in family (see the families command)");
  verify->add_option("--strategy", verify_request.strategy_file,
                     "strategy JSON file");
  verify->add_option("--n", verify_request.n, "family parameter n");
  verify->add_option("--d", verify_request.d, "family parameter d");
  verify->add_option("--k", verify_request.k, "family parameter k");
  verify->add_option("--variant", verify_variant,
                     "adversary | random | cooperative")
      ->capture_default_str();
  verify->callback([&]() {
    action = [&](ResultCache&) {
      verify_request.variant = ParseVariant(verify_variant);
      return CmdVerify(verify_request, config);
    };
  });

  CLI::App* families =
      app.add_subcommand("families", "list built-in strategy families");
  families->callback([&]() {
    action = [](ResultCache&) {
      Json rows = Json::array();
      for (const FamilyInfo& f : ListFamilies()) {
        rows.push_back({{"name", f.name},
                        {"parameters", f.parameters},
                        {"description", f.description}});
      }
      return Json{{"rows", std::move(rows)}};
    };
  });

  SweepRequest sweep_request;
  CLI::App* sweep = app.add_subcommand(
      "sweep-accuracy", "accuracy table with monotonicity findings");
  sweep->add_option("--max-n", sweep_request.max_n)->required();
  sweep->add_option("--max-d", sweep_request.max_d)->required();
  sweep->add_option("--max-k", sweep_request.max_k)->required();
  sweep->add_option("--threads", sweep_request.threads, "worker threads")
      ->capture_default_str();
  sweep->callback([&]() {
    action = [&](ResultCache& cache) {
      return CmdSweepAccuracy(sweep_request, config, cache);
    };
  });

  AccumulationRequest acc_request;
  std::string acc_mode = "evaluate";
  CLI::App* accumulation = app.add_subcommand(
      "accumulation", "winning subsets of the accumulation game");
  accumulation->add_option("--n", acc_request.n, "number of boxes")
      ->required();
  accumulation->add_option("--k", acc_request.k, "boxes per choice")
      ->required();
  accumulation->add_option("--d", acc_request.d, "total gold, p/q")
      ->required();
  accumulation->add_option("--mode", acc_mode, "evaluate | ruckle | exact")
      ->capture_default_str();
  accumulation->add_option("--dist", acc_request.dist,
                           "comma-separated amounts (evaluate mode)");
  accumulation->callback([&]() {
    action = [&](ResultCache&) {
      acc_request.mode = ParseAccumulationMode(acc_mode);
      return CmdAccumulation(acc_request);
    };
  });

  int pl_n = 0, pl_d = 0;
  std::string pl_lambda;
  CLI::App* plambda =
      app.add_subcommand("plambda", "probability of a Young shape");
  plambda->add_option("--n", pl_n)->required();
  plambda->add_option("--d", pl_d)->required();
  plambda->add_option("--lambda", pl_lambda, "comma-separated shape");
  plambda->callback([&]() {
    action = [&](ResultCache&) { return CmdPLambda(pl_n, pl_d, pl_lambda); };
  });

  int fc_n = 0, fc_d = 0;
  std::string fc_k, fc_lambda;
  CLI::App* fractional = app.add_subcommand(
      "fractional-check", "per-step identities of the fractional strategy");
  fractional->add_option("--n", fc_n)->required();
  fractional->add_option("--d", fc_d)->required();
  fractional->add_option("--k", fc_k, "query size, p/q")->required();
  fractional->add_option("--lambda", fc_lambda,
                         "one shape (default: every reachable shape)");
  fractional->callback([&]() {
    action = [&](ResultCache&) {
      return CmdFractionalCheck(fc_n, fc_d, fc_k, fc_lambda);
    };
  });

  CLI::App* recheck_cache = app.add_subcommand(
      "recheck-cache", "recompute every entry of the --cache file");
  recheck_cache->callback([&]() {
    action = [&](ResultCache& cache) {
      MCG_REQUIRE(cache.persistent(), "recheck-cache needs --cache");
      return CmdRecheckCache(config, cache);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    config.symmetric = !no_symmetry;
    config.format = format == "table" ? Format::kTable : Format::kJson;
    ResultCache cache(config.cache_path);
    cache.Load();
    Json result = action(cache);
    cache.Save();
    if (config.format == Format::kTable) {
      out << RenderTable(result, config.approx);
    } else {
      out << result.dump(2) << "\n";
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.ExitCode();
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace mcg::cli
