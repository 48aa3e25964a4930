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
#include "mcg/json_io.h"

#include <utility>
#include <vector>

#include "mcg/error.h"

namespace mcg {
namespace {

[[noreturn]] void Fail(const std::string& path, const std::string& msg) {
  throw InvalidInput("invalid JSON at " + path + ": " + msg);
}

const Json& Field(const Json& j, const char* name, const std::string& path) {
  if (!j.is_object()) Fail(path, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) Fail(path, std::string("missing field '") + name + "'");
  return *it;
}

int IntFromJson(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) Fail(path, "expected an integer");
  return j.get<int>();
}

std::vector<int> IntsFromJson(const Json& j, const std::string& path) {
  if (!j.is_array()) Fail(path, "expected an array of integers");
  std::vector<int> out;
  for (size_t i = 0; i < j.size(); ++i) {
    out.push_back(IntFromJson(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Json NodeToJson(const StrategyNodePtr& node) {
  if (!node) return "end";
  Json mix = Json::array();
  for (const StrategyChoice& c : node->mix) {
    Json branches = Json::object();
    for (const auto& [label, child] : c.branches) {
      branches[std::to_string(label)] = NodeToJson(child);
    }
    mix.push_back({{"p", RationalToJson(c.probability)},
                   {"query", c.query},
                   {"branches", std::move(branches)}});
  }
  return {{"mix", std::move(mix)}};
}

StrategyNodePtr NodeFromJson(const Json& j, const std::string& path) {
  if (j.is_string()) {
    if (j.get<std::string>() != "end") Fail(path, "expected a node or \"end\"");
    return nullptr;
  }
  const Json& mix = Field(j, "mix", path);
  if (!mix.is_array()) Fail(path + ".mix", "expected an array");
  std::vector<StrategyChoice> choices;
  for (size_t i = 0; i < mix.size(); ++i) {
    std::string here = path + ".mix[" + std::to_string(i) + "]";
    StrategyChoice c;
    c.probability = RationalFromJson(Field(mix[i], "p", here), here + ".p");
    c.query = IntsFromJson(Field(mix[i], "query", here), here + ".query");
    auto it = mix[i].find("branches");
    if (it != mix[i].end()) {
      if (!it->is_object()) Fail(here + ".branches", "expected an object");
      for (const auto& [key, child] : it->items()) {
        std::string bpath = here + ".branches." + key;
        int label;
        try {
          size_t used = 0;
          label = std::stoi(key, &used);
          if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::logic_error&) {
          Fail(bpath, "branch key is not a box index");
        }
        c.branches[label] = NodeFromJson(child, bpath);
      }
    }
    choices.push_back(std::move(c));
  }
  return MakeNode(std::move(choices));
}

Json StatsToJson(const SolveStats& s) {
  return {{"tree_nodes", s.tree_nodes},
          {"searcher_infosets", s.searcher_infosets},
          {"searcher_sequences", s.searcher_sequences},
          {"hider_nodes", s.hider_nodes},
          {"lp_rows", s.lp_rows},
          {"lp_columns", s.lp_columns},
          {"pivots", s.pivots},
          {"build_seconds", s.build_seconds},
          {"solve_seconds", s.solve_seconds}};
}

SolveStats StatsFromJson(const Json& j, const std::string& path) {
  SolveStats s;
  try {
    s.tree_nodes = j.at("tree_nodes").get<long>();
    s.searcher_infosets = j.at("searcher_infosets").get<long>();
    s.searcher_sequences = j.at("searcher_sequences").get<long>();
    s.hider_nodes = j.at("hider_nodes").get<long>();
    s.lp_rows = j.at("lp_rows").get<long>();
    s.lp_columns = j.at("lp_columns").get<long>();
    s.pivots = j.at("pivots").get<long>();
    s.build_seconds = j.at("build_seconds").get<double>();
    s.solve_seconds = j.at("solve_seconds").get<double>();
  } catch (const nlohmann::json::exception& e) {
    Fail(path, e.what());
  }
  return s;
}

}  // namespace

Json RationalToJson(const Rational& r) { return r.ToString(); }

Rational RationalFromJson(const Json& j, const std::string& path) {
  if (!j.is_string()) Fail(path, "expected a \"p/q\" string");
  try {
    return Rational::Parse(j.get<std::string>());
  } catch (const Error& e) {
    Fail(path, e.what());
  }
}

Json StrategyToJson(const StrategyTree& tree) {
  return {{"n", tree.n}, {"d", tree.d}, {"k", tree.k},
          {"root", NodeToJson(tree.root)}};
}

StrategyTree StrategyFromJson(const Json& j) {
  StrategyTree tree;
  tree.n = IntFromJson(Field(j, "n", "strategy"), "strategy.n");
  tree.d = IntFromJson(Field(j, "d", "strategy"), "strategy.d");
  tree.k = IntFromJson(Field(j, "k", "strategy"), "strategy.k");
  tree.root = NodeFromJson(Field(j, "root", "strategy"), "root");
  return tree;
}

Json HistoryToJson(const History& h) {
  Json out = Json::array();
  for (const Step& s : h) out.push_back({{"query", s.query}, {"box", s.label}});
  return out;
}

History HistoryFromJson(const Json& j, const std::string& path) {
  if (!j.is_array()) Fail(path, "expected an array");
  History h;
  for (size_t i = 0; i < j.size(); ++i) {
    std::string here = path + "[" + std::to_string(i) + "]";
    h.push_back(Step{IntsFromJson(Field(j[i], "query", here), here + ".query"),
                     IntFromJson(Field(j[i], "box", here), here + ".box")});
  }
  return h;
}

Json SolveResultToJson(const SolveResult& r) {
  Json searcher_plan = Json::array();
  for (const SequenceWeight& s : r.searcher_plan) {
    searcher_plan.push_back({{"history", HistoryToJson(s.history)},
                             {"query", s.query},
                             {"weight", RationalToJson(s.weight)}});
  }
  Json hider_plan = Json::array();
  for (const HiderWeight& w : r.hider_plan) {
    if (w.key.empty()) {
      hider_plan.push_back({{"allocation", w.allocation},
                            {"weight", RationalToJson(w.weight)}});
    } else {
      hider_plan.push_back({{"position", w.key},
                            {"box", w.box},
                            {"weight", RationalToJson(w.weight)}});
    }
  }
  Json allocations = Json::array();
  for (const auto& [a, w] : r.hider_allocations) {
    allocations.push_back({{"allocation", a}, {"weight", RationalToJson(w)}});
  }
  Json reveals = Json::object();
  for (const auto& [key, probs] : r.hider_reveals) {
    Json row = Json::array();
    for (const Rational& p : probs) row.push_back(RationalToJson(p));
    reveals[key] = std::move(row);
  }
  return {{"n", r.spec.n},
          {"d", r.spec.d},
          {"k", r.spec.k},
          {"variant", VariantName(r.spec.variant)},
          {"symmetric", r.model.symmetric},
          {"relaxed_queries", r.model.relaxed_queries},
          {"value", RationalToJson(r.value)},
          {"searcher_plan", std::move(searcher_plan)},
          {"hider_plan", std::move(hider_plan)},
          {"searcher_strategy", StrategyToJson(r.searcher_strategy)},
          {"hider_allocations", std::move(allocations)},
          {"hider_reveals", std::move(reveals)},
          {"stats", StatsToJson(r.stats)}};
}

SolveResult SolveResultFromJson(const Json& j) {
  const std::string top = "result";
  SolveResult r;
  r.spec.n = IntFromJson(Field(j, "n", top), top + ".n");
  r.spec.d = IntFromJson(Field(j, "d", top), top + ".d");
  r.spec.k = IntFromJson(Field(j, "k", top), top + ".k");
  const Json& variant = Field(j, "variant", top);
  if (!variant.is_string()) Fail(top + ".variant", "expected a string");
  r.spec.variant = ParseVariant(variant.get<std::string>());
  const Json& sym = Field(j, "symmetric", top);
  const Json& rel = Field(j, "relaxed_queries", top);
  if (!sym.is_boolean() || !rel.is_boolean()) Fail(top, "flags must be booleans");
  r.model.symmetric = sym.get<bool>();
  r.model.relaxed_queries = rel.get<bool>();
  r.value = RationalFromJson(Field(j, "value", top), top + ".value");

  const Json& sp = Field(j, "searcher_plan", top);
  if (!sp.is_array()) Fail(top + ".searcher_plan", "expected an array");
  for (size_t i = 0; i < sp.size(); ++i) {
    std::string here = top + ".searcher_plan[" + std::to_string(i) + "]";
    r.searcher_plan.push_back(
        {HistoryFromJson(Field(sp[i], "history", here), here + ".history"),
         IntsFromJson(Field(sp[i], "query", here), here + ".query"),
         RationalFromJson(Field(sp[i], "weight", here), here + ".weight")});
  }
  const Json& hp = Field(j, "hider_plan", top);
  if (!hp.is_array()) Fail(top + ".hider_plan", "expected an array");
  for (size_t i = 0; i < hp.size(); ++i) {
    std::string here = top + ".hider_plan[" + std::to_string(i) + "]";
    HiderWeight w;
    w.weight = RationalFromJson(Field(hp[i], "weight", here), here + ".weight");
    if (hp[i].contains("allocation")) {
      w.allocation = IntsFromJson(hp[i]["allocation"], here + ".allocation");
    } else {
      const Json& key = Field(hp[i], "position", here);
      if (!key.is_string()) Fail(here + ".position", "expected a string");
      w.key = key.get<std::string>();
      w.box = IntFromJson(Field(hp[i], "box", here), here + ".box");
    }
    r.hider_plan.push_back(std::move(w));
  }
  r.searcher_strategy = StrategyFromJson(Field(j, "searcher_strategy", top));
  const Json& ha = Field(j, "hider_allocations", top);
  if (!ha.is_array()) Fail(top + ".hider_allocations", "expected an array");
  for (size_t i = 0; i < ha.size(); ++i) {
    std::string here = top + ".hider_allocations[" + std::to_string(i) + "]";
    r.hider_allocations.emplace_back(
        IntsFromJson(Field(ha[i], "allocation", here), here + ".allocation"),
        RationalFromJson(Field(ha[i], "weight", here), here + ".weight"));
  }
  const Json& hr = Field(j, "hider_reveals", top);
  if (!hr.is_object()) Fail(top + ".hider_reveals", "expected an object");
  for (const auto& [key, row] : hr.items()) {
    std::string here = top + ".hider_reveals." + key;
    if (!row.is_array()) Fail(here, "expected an array");
    std::vector<Rational> probs;
    for (size_t i = 0; i < row.size(); ++i) {
      probs.push_back(
          RationalFromJson(row[i], here + "[" + std::to_string(i) + "]"));
    }
    r.hider_reveals[key] = std::move(probs);
  }
  r.stats = StatsFromJson(Field(j, "stats", top), top + ".stats");
  return r;
}

Json ParseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace mcg
