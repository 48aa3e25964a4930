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
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "mcg/accumulation.h"
#include "mcg/cli/cache.h"
#include "mcg/cli/commands.h"
#include "mcg/families.h"
#include "mcg/fractional.h"
#include "mcg/json_io.h"

namespace mcg::cli {
namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
  Json json() const { return ParseJson(out); }
};

Run Cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.code = RunCli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// A fresh scratch directory per test case.
class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("mcg_cli_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter_++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string File(const std::string& name) const {
    return (path_ / name).string();
  }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream(path) << text;
}

std::string ReadAll(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Json Row(const Json& sweep, int n, int d, int k) {
  for (const Json& row : sweep["rows"]) {
    if (row["n"] == n && row["d"] == d && row["k"] == k) return row;
  }
  return Json();
}

TEST_CASE("solve prints exact values") {
  Run adv = Cli({"solve", "--n", "3", "--d", "3", "--k", "2", "--variant",
                 "adversary"});
  REQUIRE(adv.code == 0);
  CHECK(adv.json()["value"] == "3/5");
  Run rnd = Cli({"solve", "--n", "3", "--d", "3", "--k", "2", "--variant",
                 "random"});
  REQUIRE(rnd.code == 0);
  CHECK(rnd.json()["value"] == "12/19");
  Run all = Cli({"solve", "--n", "2", "--d", "1", "--k", "2"});
  REQUIRE(all.code == 0);
  CHECK(all.json()["value"] == "1/1");
}

TEST_CASE("solve output round-trips through the result schema") {
  Run r = Cli({"solve", "--n", "4", "--d", "2", "--k", "2"});
  REQUIRE(r.code == 0);
  Json j = r.json();
  SolveResult parsed = SolveResultFromJson(j);
  Json again = SolveResultToJson(parsed);
  for (const auto& [key, v] : again.items()) CHECK(j[key] == v);
}

TEST_CASE("exit codes") {
  CHECK(Cli({"solve", "--n", "3", "--d", "0", "--k", "2"}).code == 2);
  CHECK(Cli({"solve", "--n", "2", "--d", "1", "--k", "3"}).code == 2);
  CHECK(Cli({"solve", "--n", "3", "--d", "3", "--k", "2", "--variant",
             "cooperative"})
            .code == 2);
  CHECK(Cli({"solve", "--n", "3"}).code == 2);
  CHECK(Cli({"no-such-command"}).code == 2);
  CHECK(Cli({}).code == 2);
  CHECK(Cli({"--budget", "0", "solve", "--n", "2", "--d", "1", "--k", "1"})
            .code == 2);
  Run budget =
      Cli({"--budget", "100", "solve", "--n", "5", "--d", "4", "--k", "2"});
  CHECK(budget.code == 3);
  CHECK(budget.err.find("budget") != std::string::npos);
  CHECK(Cli({"--help"}).code == 0);
}

TEST_CASE("cache stores, reuses and rechecks values") {
  TempDir dir;
  const std::string cache = dir.File("cache.json");
  std::vector<std::string> solve = {"--cache", cache, "solve", "--n", "3",
                                    "--d",     "3",   "--k",   "2"};
  Run first = Cli(solve);
  REQUIRE(first.code == 0);
  CHECK(first.json()["cached"] == false);
  Json doc = ParseJson(ReadAll(cache));
  CHECK(doc["schema"] == kCacheSchema);
  REQUIRE(doc["entries"].size() == 1);
  CHECK(!std::filesystem::exists(cache + ".tmp"));

  Run second = Cli(solve);
  REQUIRE(second.code == 0);
  CHECK(second.json()["cached"] == true);
  CHECK(second.json()["value"] == "3/5");

  // Symmetry on and off are stored side by side.
  std::vector<std::string> labelled = solve;
  labelled.insert(labelled.begin(), "--no-symmetry");
  Run off = Cli(labelled);
  REQUIRE(off.code == 0);
  CHECK(off.json()["value"] == "3/5");
  doc = ParseJson(ReadAll(cache));
  CHECK(doc["entries"].size() == 2);
  ModelOptions on_flags, off_flags;
  off_flags.symmetric = false;
  CHECK(FlagsHash(on_flags) != FlagsHash(off_flags));
  CHECK(FlagsHash(on_flags) == FlagsHash(ModelOptions()));

  std::vector<std::string> recheck = solve;
  recheck.insert(recheck.begin(), "--recheck");
  Run ok = Cli(recheck);
  REQUIRE(ok.code == 0);
  CHECK(ok.json()["recheck"] == "match");
  Run all = Cli({"--cache", cache, "recheck-cache"});
  REQUIRE(all.code == 0);
  CHECK(all.json()["all_match"] == true);
  CHECK(all.json()["entries"] == 2);

  // A tampered value is caught by the recheck.
  std::string key = CacheKey({3, 3, 2, Variant::kAdversary}, ModelOptions());
  doc["entries"][key]["value"] = "4/5";
  WriteFile(cache, doc.dump());
  CHECK(Cli(solve).json()["value"] == "4/5");
  Run bad = Cli(recheck);
  CHECK(bad.code == 4);
  CHECK(bad.err.find(key) != std::string::npos);
  CHECK(Cli({"--cache", cache, "recheck-cache"}).code == 4);

  // Foreign documents are rejected.
  WriteFile(cache, R"({"schema": "other", "entries": {}})");
  CHECK(Cli(solve).code == 2);
}

TEST_CASE("verify built-in families and strategy files") {
  Run fig = Cli({"verify", "--family", "fig432"});
  REQUIRE(fig.code == 0);
  CHECK(fig.json()["value"] == "2/5");
  CHECK(fig.json()["never_asks_back"] == true);
  CHECK(fig.json()["witness"]["allocation"].size() == 4);
  Run d3 = Cli({"verify", "--family", "d3", "--k", "3"});
  REQUIRE(d3.code == 0);
  CHECK(d3.json()["value"] == "9/28");
  Run coop = Cli({"verify", "--family", "332", "--variant", "cooperative"});
  REQUIRE(coop.code == 0);
  CHECK(coop.json()["value"] == "2/3");
  Run list = Cli({"families"});
  REQUIRE(list.code == 0);
  CHECK(list.json()["rows"].size() == ListFamilies().size());

  TempDir dir;
  const std::string file = dir.File("fig542.json");
  WriteFile(file, StrategyToJson(Fig542()).dump());
  Run from_file = Cli({"verify", "--strategy", file});
  REQUIRE(from_file.code == 0);
  CHECK(from_file.json()["value"] == "8/35");

  CHECK(Cli({"verify"}).code == 2);
  CHECK(Cli({"verify", "--family", "fig432", "--strategy", file}).code == 2);
  CHECK(Cli({"verify", "--family", "nope"}).code == 2);
  CHECK(Cli({"verify", "--strategy", dir.File("missing.json")}).code == 2);
}

TEST_CASE("verify reports the path of a malformed strategy") {
  TempDir dir;
  const std::string file = dir.File("bad.json");
  WriteFile(file, R"({"n":3,"d":3,"k":2,"root":{"mix":[{"p":"1/1",
      "query":[0,1],"branches":{"0":{"mix":[{"p":"x","query":[0]}]}}}]}})");
  Run r = Cli({"verify", "--strategy", file});
  CHECK(r.code == 2);
  CHECK(r.err.find("root.mix[0].branches.0.mix[0].p") != std::string::npos);
  WriteFile(file, "{not json");
  Run s = Cli({"verify", "--strategy", file});
  CHECK(s.code == 2);
  CHECK(s.err.find("JSON") != std::string::npos);
}

TEST_CASE("sweep marks accuracy and reports no contradictions") {
  Run r = Cli({"sweep-accuracy", "--max-n", "5", "--max-d", "3", "--max-k",
               "2", "--threads", "3"});
  REQUIRE(r.code == 0);
  Json j = r.json();
  CHECK(Row(j, 4, 3, 2)["accurate"] == true);
  CHECK(Row(j, 3, 3, 2)["accurate"] == false);
  CHECK(Row(j, 3, 3, 2)["value"] == "3/5");
  CHECK(j["findings"].empty());
  CHECK(j["budget_exceeded"] == 0);

  // d = 2: accurate exactly when n >= 2k - 1.
  Run two = Cli({"sweep-accuracy", "--max-n", "5", "--max-d", "2", "--max-k",
                 "3"});
  REQUIRE(two.code == 0);
  for (const Json& row : two.json()["rows"]) {
    if (row["d"] != 2) continue;
    int n = row["n"], k = row["k"];
    CAPTURE(n);
    CAPTURE(k);
    CHECK(row["accurate"] == (n >= 2 * k - 1));
  }

  Run single = Cli({"sweep-accuracy", "--max-n", "5", "--max-d", "3",
                    "--max-k", "2", "--threads", "1"});
  CHECK(single.json()["rows"] == j["rows"]);

  Run empty = Cli({"sweep-accuracy", "--max-n", "1", "--max-d", "3",
                   "--max-k", "0"});
  REQUIRE(empty.code == 0);
  CHECK(empty.json()["rows"].empty());
}

TEST_CASE("sweep resumes from the cache and skips over-budget triplets") {
  TempDir dir;
  const std::string cache = dir.File("sweep.json");
  std::vector<std::string> args = {"--cache", cache, "sweep-accuracy",
                                   "--max-n", "4",   "--max-d",
                                   "2",       "--max-k", "2"};
  REQUIRE(Cli(args).code == 0);
  Json again = Cli(args).json();
  for (const Json& row : again["rows"]) CHECK(row["status"] == "cached");

  Run tight = Cli({"--budget", "30", "sweep-accuracy", "--max-n", "4",
                   "--max-d", "3", "--max-k", "2"});
  REQUIRE(tight.code == 0);
  CHECK(tight.json()["budget_exceeded"] > 0);
  CHECK(Row(tight.json(), 4, 3, 2)["status"] == "budget-exceeded");
}

TEST_CASE("accumulation modes") {
  Run uniform = Cli({"accumulation", "--n", "5", "--k", "3", "--d", "1",
                     "--mode", "evaluate", "--dist", "1/5,1/5,1/5,1/5,1/5"});
  REQUIRE(uniform.code == 0);
  CHECK(uniform.json()["winning"] == 0);
  CHECK(uniform.json()["total"] == 10);
  CHECK(uniform.json()["probability"] == "0/1");

  Run ruckle = Cli({"accumulation", "--n", "5", "--k", "3", "--d", "1",
                    "--mode", "ruckle"});
  REQUIRE(ruckle.code == 0);
  CHECK(ruckle.json()["winning"] == 0);
  CHECK(ruckle.json()["r"] == 4);

  Run exact = Cli({"accumulation", "--n", "5", "--k", "3", "--d", "2",
                   "--mode", "exact"});
  REQUIRE(exact.code == 0);
  MaxLosingResult m = MaxLosingSubsetsExact({5, 3, Rational(2)});
  Json j = exact.json();
  CHECK(j["losing"] == m.losing);
  CHECK(j["winning"] == m.total - m.losing);
  CHECK(j["witness"].size() == 5);
  CHECK(ParseJson(j.dump()) == j);

  CHECK(Cli({"accumulation", "--n", "5", "--k", "3", "--d", "1", "--mode",
             "evaluate"})
            .code == 2);
  CHECK(Cli({"accumulation", "--n", "5", "--k", "3", "--d", "1", "--dist",
             "1/2,1/2"})
            .code == 2);
  CHECK(Cli({"accumulation", "--n", "5", "--k", "3", "--d", "1", "--mode",
             "guess"})
            .code == 2);
  CHECK(Cli({"accumulation", "--n", "5", "--k", "3", "--d", "1", "--dist",
             "1/5,1/5,1/5,1/5,x"})
            .code == 2);
}

TEST_CASE("plambda and fractional-check") {
  Run full = Cli({"plambda", "--n", "4", "--d", "2", "--lambda", "1,1"});
  REQUIRE(full.code == 0);
  CHECK(full.json()["p_lambda"] == "0/1");
  Run one = Cli({"plambda", "--n", "3", "--d", "2", "--lambda", "1"});
  REQUIRE(one.code == 0);
  CHECK(one.json()["p_lambda"] == PLambda({{1}, 3, 2}).ToString());
  Run deep = Cli({"plambda", "--n", "6", "--d", "4", "--lambda", "2,1"});
  REQUIRE(deep.code == 0);
  CHECK(deep.json()["p_lambda"] == PLambda({{2, 1}, 6, 4}).ToString());
  CHECK(Cli({"plambda", "--n", "3", "--d", "2", "--lambda", "1,a"}).code ==
        2);
  CHECK(Cli({"plambda", "--n", "3", "--d", "2", "--lambda", "3"}).code == 2);

  Run all = Cli({"fractional-check", "--n", "8", "--d", "4", "--k", "3/2"});
  REQUIRE(all.code == 0);
  CHECK(all.json()["all_equal"] == true);
  CHECK(all.json()["checked"] > 0);
  Run single = Cli({"fractional-check", "--n", "6", "--d", "2", "--k", "3/2",
                    "--lambda", "1"});
  REQUIRE(single.code == 0);
  CHECK(single.json()["steps"].size() == 4);
  CHECK(single.json()["rows"].size() == 2);
  Run pre = Cli({"fractional-check", "--n", "3", "--d", "2", "--k", "3/2",
                 "--lambda", "1"});
  CHECK(pre.code == 2);
  CHECK(pre.err.find("precondition") != std::string::npos);
}

TEST_CASE("table format and decimal approximations") {
  Run t = Cli({"--format", "table", "--approx", "solve", "--n", "3", "--d",
               "3", "--k", "2"});
  REQUIRE(t.code == 0);
  CHECK(t.out.find("value: 3/5") != std::string::npos);
  CHECK(t.out.find("0.600000") != std::string::npos);
  CHECK(t.out.find("not authoritative") != std::string::npos);
  Run plain = Cli({"--format", "table", "solve", "--n", "3", "--d", "3",
                   "--k", "2"});
  CHECK(plain.out.find("0.600000") == std::string::npos);
  // Machine output never carries decimal values, even with --approx.
  Run j = Cli({"--approx", "solve", "--n", "3", "--d", "3", "--k", "2"});
  CHECK(j.json()["value"] == "3/5");
  CHECK(j.out.find("0.600000") == std::string::npos);
  CHECK(Cli({"--format", "xml", "solve", "--n", "2", "--d", "1", "--k", "1"})
            .code == 2);
}

}  // namespace
}  // namespace mcg::cli
