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

#include "mcg/search_model.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "mcg/combinatorics.h"
#include "mcg/error.h"

namespace mcg {

int HiddenState::Remaining() const {
  return std::accumulate(touched.begin(), touched.end(), 0) +
         std::accumulate(pool.begin(), pool.end(), 0);
}

std::string HiddenState::Key() const {
  std::string s;
  for (size_t i = 0; i < touched.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(touched[i]);
  }
  s += "|";
  for (size_t i = 0; i < pool.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(pool[i]);
  }
  return s;
}

std::string HistoryKey(const History& h) {
  std::string s;
  for (size_t i = 0; i < h.size(); ++i) {
    if (i) s += " ";
    for (size_t j = 0; j < h[i].query.size(); ++j) {
      s += (j ? "," : "{") + std::to_string(h[i].query[j]);
    }
    s += "}:" + std::to_string(h[i].label);
  }
  return s;
}

std::string RevealKey(const History& h, const HiddenState& drawn,
                      const Query& q) {
  return HistoryKey(h) + " / " + drawn.Key() + " / " + FormatVector(q);
}

SearchModel::SearchModel(const GameSpec& spec, const ModelOptions& options)
    : spec_(spec), options_(options) {
  spec_.Validate();
}

std::vector<Allocation> SearchModel::HiderChoices() const {
  if (options_.symmetric) return Partitions(spec_.d, spec_.n);
  return EnumerateAllocations(spec_.n, spec_.d);
}

HiddenState SearchModel::RootState(const Allocation& allocation) const {
  if (static_cast<int>(allocation.size()) != spec_.n) {
    throw InvalidInput("allocation " + FormatVector(allocation) +
                       " has wrong length");
  }
  if (std::accumulate(allocation.begin(), allocation.end(), 0) != spec_.d ||
      std::any_of(allocation.begin(), allocation.end(),
                  [](int c) { return c < 0; })) {
    throw InvalidInput("allocation " + FormatVector(allocation) +
                       " does not place d treasures");
  }
  HiddenState s;
  if (options_.symmetric) {
    s.pool = allocation;
    std::sort(s.pool.begin(), s.pool.end(), std::greater<int>());
  } else {
    s.touched = allocation;
  }
  return s;
}

std::vector<Query> SearchModel::Queries(int m) const {
  std::vector<Query> out;
  int lo = options_.relaxed_queries ? 1 : spec_.k;
  for (int size = lo; size <= spec_.k; ++size) {
    for (int t = 0; t <= std::min(size, m); ++t) {
      int f = size - t;
      if (f > spec_.n - m) continue;
      for (auto q : Subsets(m, t)) {
        for (int i = 0; i < f; ++i) q.push_back(m + i);
        out.push_back(q);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string SearchModel::CheckQuery(int m, const Query& q) const {
  int size = static_cast<int>(q.size());
  if (options_.relaxed_queries ? (size < 1 || size > spec_.k)
                               : size != spec_.k) {
    return "query " + FormatVector(q) + " has size " + std::to_string(size) +
           " but k = " + std::to_string(spec_.k);
  }
  for (int i = 0; i < size; ++i) {
    if (q[i] < 0 || q[i] >= spec_.n) {
      return "query " + FormatVector(q) + " names a box outside [0, n)";
    }
    if (i > 0 && q[i] <= q[i - 1]) {
      return "query " + FormatVector(q) + " is not strictly increasing";
    }
  }
  int expect = m;
  for (int b : q) {
    if (b < m) continue;
    if (b != expect) {
      return "query " + FormatVector(q) + " is not in first-touch labels: " +
             "with " + std::to_string(m) + " touched boxes the next new " +
             "box is " + std::to_string(expect);
    }
    ++expect;
  }
  return "";
}

int SearchModel::FreshCount(int m, const Query& q) const {
  return static_cast<int>(
      std::count_if(q.begin(), q.end(), [m](int b) { return b >= m; }));
}

namespace {

void DrawRec(int remaining_draws, std::vector<int>& pool, const Rational& p,
             std::vector<int>& drawn, const HiddenState& base,
             std::vector<Draw>& out) {
  if (remaining_draws == 0) {
    HiddenState s;
    s.touched = base.touched;
    s.touched.insert(s.touched.end(), drawn.begin(), drawn.end());
    s.pool = pool;
    out.push_back({p, s});
    return;
  }
  std::map<int, int, std::greater<int>> mult;
  for (int v : pool) ++mult[v];
  int size = static_cast<int>(pool.size());
  for (const auto& [v, c] : mult) {
    auto it = std::find(pool.begin(), pool.end(), v);
    pool.erase(it);
    drawn.push_back(v);
    DrawRec(remaining_draws - 1, pool, p * Rational(c, size), drawn, base,
            out);
    drawn.pop_back();
    pool.insert(std::upper_bound(pool.begin(), pool.end(), v,
                                 std::greater<int>()),
                v);
  }
}

}  // namespace

std::vector<Draw> SearchModel::Draws(const HiddenState& s, int m,
                                     const Query& q) const {
  MCG_CHECK(static_cast<int>(s.touched.size()) == m);
  int f = FreshCount(m, q);
  MCG_CHECK(f <= static_cast<int>(s.pool.size()));
  std::vector<Draw> out;
  std::vector<int> pool = s.pool, drawn;
  DrawRec(f, pool, Rational(1), drawn, s, out);
  return out;
}

std::vector<RevealOption> SearchModel::Reveals(const HiddenState& drawn,
                                               int m, const Query& q) const {
  std::vector<RevealOption> out;
  for (int box : q) {
    MCG_CHECK(box < static_cast<int>(drawn.touched.size()));
    int c = drawn.touched[box];
    if (c == 0) continue;
    RevealOption opt;
    opt.boxes = {box};
    opt.next = drawn;
    if (box >= m) {
      std::swap(opt.next.touched[box], opt.next.touched[m]);
      opt.label = m;
    } else {
      opt.label = box;
    }
    --opt.next.touched[opt.label];
    opt.weight = Rational(c);
    auto same = std::find_if(out.begin(), out.end(), [&](const RevealOption& o) {
      return o.label == opt.label && o.next == opt.next;
    });
    if (same != out.end()) {
      same->boxes.push_back(box);
      same->weight += opt.weight;
    } else {
      out.push_back(std::move(opt));
    }
  }
  return out;
}

}  // namespace mcg
