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

#include "mcg/best_response.h"

#include <algorithm>

#include "mcg/combinatorics.h"
#include "mcg/error.h"

namespace mcg {

RevealPolicy TablePolicy(std::map<std::string, std::vector<Rational>> table) {
  auto shared =
      std::make_shared<std::map<std::string, std::vector<Rational>>>(
          std::move(table));
  return [shared](const RevealContext& ctx) {
    auto it = shared->find(RevealKey(ctx.history, ctx.drawn, ctx.query));
    if (it != shared->end() && it->second.size() == ctx.options.size()) {
      return it->second;
    }
    std::vector<Rational> p(ctx.options.size(), Rational(0));
    if (!p.empty()) p[0] = 1;
    return p;
  };
}

std::vector<std::pair<Allocation, Rational>> UniformAllocations(int n, int d) {
  std::vector<std::pair<Allocation, Rational>> out;
  mpz_class total = Binomial(n + d - 1, d);
  for (auto& a : EnumerateAllocations(n, d)) {
    out.emplace_back(a, Rational(mpq_class(1, total)));
  }
  return out;
}

namespace {

using WeightedNodes = std::vector<std::pair<Rational, const StrategyNode*>>;

// Evaluates a searcher strategy against a hider that has fixed its hidden
// state, resolving each reveal decision by `decide`.
class TreeEvaluator {
 public:
  enum class Mode { kMinimise, kChance, kRule };

  TreeEvaluator(const SearchModel& model, Mode mode, const RevealRule* rule,
                std::map<std::string, int>* choices)
      : model_(model), mode_(mode), rule_(rule), choices_(choices) {}

  Rational Evaluate(const HiddenState& s, int m, History& h,
                    const WeightedNodes& nodes) {
    if (nodes.empty()) return Rational(0);
    // Mixture branches asking the same query are indistinguishable to the
    // hider, so they are resolved together.
    std::map<Query, std::vector<std::pair<Rational, const StrategyChoice*>>>
        by_query;
    for (const auto& [w, node] : nodes) {
      for (const auto& c : node->mix) {
        if (c.probability.IsZero()) continue;
        by_query[c.query].emplace_back(w * c.probability, &c);
      }
    }
    Rational total;
    for (const auto& [q, group] : by_query) {
      Rational mass;
      for (const auto& g : group) mass += g.first;
      int next_m = model_.TouchedAfter(m, q);
      for (const Draw& draw : model_.Draws(s, m, q)) {
        auto options = model_.Reveals(draw.state, m, q);
        if (options.empty()) continue;
        std::vector<Rational> values;
        values.reserve(options.size());
        for (const auto& opt : options) {
          if (opt.next.Remaining() == 0) {
            values.push_back(mass);
            continue;
          }
          WeightedNodes children;
          for (const auto& [w, choice] : group) {
            auto it = choice->branches.find(opt.label);
            if (it != choice->branches.end() && it->second) {
              children.emplace_back(w, it->second.get());
            }
          }
          h.push_back({q, opt.label});
          values.push_back(Evaluate(opt.next, next_m, h, children));
          h.pop_back();
        }
        total += draw.probability * Resolve(h, m, draw.state, q, options,
                                            values);
      }
    }
    return total;
  }

 private:
  Rational Resolve(const History& h, int m, const HiddenState& drawn,
                   const Query& q, const std::vector<RevealOption>& options,
                   const std::vector<Rational>& values) {
    switch (mode_) {
      case Mode::kMinimise: {
        size_t best = 0;
        for (size_t i = 1; i < values.size(); ++i) {
          if (values[i] < values[best]) best = i;
        }
        if (choices_ && options.size() > 1) {
          (*choices_)[RevealKey(h, drawn, q)] = options[best].boxes[0];
        }
        return values[best];
      }
      case Mode::kChance: {
        Rational inside, v;
        for (const auto& o : options) inside += o.weight;
        for (size_t i = 0; i < options.size(); ++i) {
          v += options[i].weight / inside * values[i];
        }
        return v;
      }
      case Mode::kRule: {
        RevealContext ctx{h, m, drawn, q, options};
        int box = (*rule_)(ctx);
        for (size_t i = 0; i < options.size(); ++i) {
          const auto& b = options[i].boxes;
          if (std::find(b.begin(), b.end(), box) != b.end()) {
            if (choices_) (*choices_)[RevealKey(h, drawn, q)] = box;
            return values[i];
          }
        }
        throw InvalidInput("reveal rule chose box " + std::to_string(box) +
                           " holding no treasure in query " +
                           FormatVector(q) + " at " + RevealKey(h, drawn, q));
      }
    }
    throw InternalError("unknown evaluation mode");
  }

  const SearchModel& model_;
  Mode mode_;
  const RevealRule* rule_;
  std::map<std::string, int>* choices_;
};

HiderResponse MinOverAllocations(const SearchModel& model,
                                 const StrategyTree& tree,
                                 TreeEvaluator::Mode mode,
                                 const RevealRule* rule) {
  HiderResponse res;
  bool first = true;
  TreeEvaluator eval(model, mode, rule, &res.reveals);
  for (const auto& a : model.HiderChoices()) {
    History h;
    Rational v = eval.Evaluate(model.RootState(a), model.InitialTouched(), h,
                               {{Rational(1), tree.root.get()}});
    if (first || v < res.value) {
      res.value = v;
      res.allocation = a;
      first = false;
    }
  }
  return res;
}

}  // namespace

HiderResponse BestResponseValue(const GameSpec& spec, const StrategyTree& tree,
                                const ModelOptions& options) {
  ValidateStrategy(tree, spec, options);
  SearchModel model(spec, options);
  switch (spec.variant) {
    case Variant::kAdversary:
      return MinOverAllocations(model, tree, TreeEvaluator::Mode::kMinimise,
                                nullptr);
    case Variant::kRandom:
      return MinOverAllocations(model, tree, TreeEvaluator::Mode::kChance,
                                nullptr);
    case Variant::kCooperative:
      break;
  }
  throw InvalidInput(
      "the cooperative variant needs a reveal rule; use CooperativeValue");
}

HiderResponse CooperativeValue(const GameSpec& spec, const StrategyTree& tree,
                               const RevealRule& rule,
                               const ModelOptions& options) {
  ValidateStrategy(tree, spec, options);
  SearchModel model(spec, options);
  return MinOverAllocations(model, tree, TreeEvaluator::Mode::kRule, &rule);
}

namespace {

using Belief = std::map<HiddenState, Rational>;

class SearcherOptimiser {
 public:
  SearcherOptimiser(const SearchModel& model, const HiderStrategy& hider)
      : model_(model), hider_(hider) {}

  Rational Best(int m, History& h, const Belief& belief,
                StrategyNodePtr* out) {
    Rational best(-1);
    StrategyChoice best_choice;
    for (const Query& q : model_.Queries(m)) {
      int next_m = model_.TouchedAfter(m, q);
      Rational win;
      std::map<int, Belief> next;
      for (const auto& [s, w] : belief) {
        for (const Draw& draw : model_.Draws(s, m, q)) {
          auto options = model_.Reveals(draw.state, m, q);
          if (options.empty()) continue;
          std::vector<Rational> probs = Probabilities(h, m, draw.state, q,
                                                      options);
          for (size_t i = 0; i < options.size(); ++i) {
            Rational pw = w * draw.probability * probs[i];
            if (pw.IsZero()) continue;
            if (options[i].next.Remaining() == 0) {
              win += pw;
            } else {
              next[options[i].label][options[i].next] += pw;
            }
          }
        }
      }
      Rational value = win;
      StrategyChoice choice{Rational(1), q, {}};
      for (const auto& [label, b] : next) {
        h.push_back({q, label});
        StrategyNodePtr child;
        value += Best(next_m, h, b, &child);
        h.pop_back();
        choice.branches[label] = child;
      }
      if (value > best) {
        best = value;
        best_choice = std::move(choice);
      }
    }
    *out = MakeNode({best_choice});
    return best;
  }

 private:
  std::vector<Rational> Probabilities(const History& h, int m,
                                      const HiddenState& drawn, const Query& q,
                                      const std::vector<RevealOption>& options) {
    std::vector<Rational> p;
    if (model_.spec().variant == Variant::kRandom) {
      Rational inside;
      for (const auto& o : options) inside += o.weight;
      for (const auto& o : options) p.push_back(o.weight / inside);
      return p;
    }
    if (options.size() == 1) return {Rational(1)};
    if (!hider_.reveal) {
      throw InvalidInput("hider strategy has no reveal policy");
    }
    RevealContext ctx{h, m, drawn, q, options};
    p = hider_.reveal(ctx);
    if (p.size() != options.size()) {
      throw InvalidInput("reveal policy returned " + std::to_string(p.size()) +
                         " probabilities for " +
                         std::to_string(options.size()) + " options at " +
                         RevealKey(h, drawn, q));
    }
    Rational sum;
    for (const auto& x : p) {
      if (x.Sign() < 0 || x > Rational(1)) {
        throw InvalidInput("reveal probability outside [0,1] at " +
                           RevealKey(h, drawn, q));
      }
      sum += x;
    }
    if (sum != Rational(1)) {
      throw InvalidInput("reveal probabilities sum to " + sum.ToString() +
                         " at " + RevealKey(h, drawn, q));
    }
    return p;
  }

  const SearchModel& model_;
  const HiderStrategy& hider_;
};

}  // namespace

SearcherResponse HiderStrategyValue(const GameSpec& spec,
                                    const HiderStrategy& hider,
                                    const ModelOptions& options) {
  SearchModel model(spec, options);
  Belief root;
  Rational total;
  for (const auto& [a, w] : hider.allocations) {
    if (w.Sign() < 0) throw InvalidInput("negative allocation weight");
    total += w;
    if (!w.IsZero()) root[model.RootState(a)] += w;
  }
  if (total != Rational(1)) {
    throw InvalidInput("allocation weights sum to " + total.ToString());
  }
  SearcherOptimiser opt(model, hider);
  History h;
  SearcherResponse res;
  res.strategy = StrategyTree{spec.n, spec.d, spec.k, nullptr};
  res.value = opt.Best(model.InitialTouched(), h, root, &res.strategy.root);
  return res;
}

}  // namespace mcg
