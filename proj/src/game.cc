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

#include "mcg/game.h"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "mcg/error.h"

namespace mcg {

std::string VariantName(Variant v) {
  switch (v) {
    case Variant::kAdversary:
      return "adversary";
    case Variant::kRandom:
      return "random";
    case Variant::kCooperative:
      return "cooperative";
  }
  throw InternalError("unknown variant");
}

Variant ParseVariant(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (s == "adversary") return Variant::kAdversary;
  if (s == "random") return Variant::kRandom;
  if (s == "cooperative") return Variant::kCooperative;
  throw InvalidInput("unknown variant '" + name + "'");
}

void GameSpec::Validate() const {
  if (n < 1) throw InvalidInput("n must be at least 1");
  if (d < 1) throw InvalidInput("d must be at least 1");
  if (k < 1 || k > n) throw InvalidInput("k must satisfy 1 <= k <= n");
}

std::string GameSpec::ToString() const {
  return "(" + std::to_string(n) + "," + std::to_string(d) + "," +
         std::to_string(k) + "," + VariantName(variant) + ")";
}

GameState GameState::Initial(const Allocation& allocation) {
  GameState s;
  s.remaining = allocation;
  return s;
}

int GameState::Remaining() const {
  return std::accumulate(remaining.begin(), remaining.end(), 0);
}

namespace {

void AllocRec(int box, int left, Allocation& cur, std::vector<Allocation>& out) {
  int n = static_cast<int>(cur.size());
  if (box == n - 1) {
    cur[box] = left;
    out.push_back(cur);
    return;
  }
  for (int v = 0; v <= left; ++v) {
    cur[box] = v;
    AllocRec(box + 1, left - v, cur, out);
  }
}

}  // namespace

std::vector<Allocation> EnumerateAllocations(int n, int d) {
  if (n < 1) throw InvalidInput("n must be at least 1");
  if (d < 0) throw InvalidInput("d must be non-negative");
  std::vector<Allocation> out;
  Allocation cur(n, 0);
  AllocRec(0, d, cur, out);
  return out;
}

void ValidateQuery(const Query& q, int n, int k, bool relaxed) {
  int size = static_cast<int>(q.size());
  if (relaxed ? (size < 1 || size > k) : size != k) {
    throw InvalidInput("query " + FormatVector(q) + " has size " +
                       std::to_string(size) + ", expected " +
                       (relaxed ? "1.." : "") + std::to_string(k));
  }
  for (int i = 0; i < size; ++i) {
    if (q[i] < 0 || q[i] >= n) {
      throw InvalidInput("query " + FormatVector(q) + " names a box outside [0," +
                         std::to_string(n) + ")");
    }
    if (i > 0 && q[i] <= q[i - 1]) {
      throw InvalidInput("query " + FormatVector(q) +
                         " is not strictly increasing");
    }
  }
}

std::vector<std::pair<int, Rational>> LegalReveals(const GameState& state,
                                                   const Query& q,
                                                   Variant variant) {
  std::vector<std::pair<int, Rational>> out;
  int inside = 0;
  for (int b : q) {
    if (b < 0 || b >= static_cast<int>(state.remaining.size())) {
      throw InvalidInput("query box out of range");
    }
    inside += state.remaining[b];
  }
  for (int b : q) {
    int c = state.remaining[b];
    if (c == 0) continue;
    if (variant == Variant::kRandom) {
      out.emplace_back(b, Rational(c, inside));
    } else {
      out.emplace_back(b, Rational(1));
    }
  }
  return out;
}

GameState ApplyMove(const GameState& state, const Query& q, int revealed) {
  if (std::find(q.begin(), q.end(), revealed) == q.end()) {
    throw InvalidInput("revealed box " + std::to_string(revealed) +
                       " is not in query " + FormatVector(q));
  }
  if (revealed < 0 || revealed >= static_cast<int>(state.remaining.size()) ||
      state.remaining[revealed] <= 0) {
    throw InvalidInput("revealed box " + std::to_string(revealed) +
                       " holds no treasure");
  }
  GameState next = state;
  --next.remaining[revealed];
  next.history.emplace_back(q, revealed);
  ++next.treasures_found;
  return next;
}

std::string FormatVector(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace mcg
