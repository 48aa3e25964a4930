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
#ifndef MCG_JSON_IO_H_
#define MCG_JSON_IO_H_

#include <string>

#include "json.hpp"
#include "mcg/rational.h"
#include "mcg/search_model.h"
#include "mcg/sequence_form.h"
#include "mcg/strategy_tree.h"

namespace mcg {

// Insertion-ordered JSON so rendered documents keep a stable, readable order.
using Json = nlohmann::ordered_json;

// Rationals cross every JSON boundary as "p/q" strings.
Json RationalToJson(const Rational& r);
// `path` names the value in error messages.
Rational RationalFromJson(const Json& j, const std::string& path);

// {"n":…, "d":…, "k":…, "root": node}, node = {"mix":[{"p":"p/q",
// "query":[…], "branches":{"<box>": node | "end"}}]}; the root may also be
// "end".
Json StrategyToJson(const StrategyTree& tree);
// Throws InvalidInput naming the offending path (for example
// "root.mix[0].branches.2.p").
StrategyTree StrategyFromJson(const Json& j);

Json HistoryToJson(const History& h);
History HistoryFromJson(const Json& j, const std::string& path);

Json SolveResultToJson(const SolveResult& r);
SolveResult SolveResultFromJson(const Json& j);

// Parses text, mapping syntax errors to InvalidInput.
Json ParseJson(const std::string& text);

}  // namespace mcg

#endif  // MCG_JSON_IO_H_
