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

#include "mcg/combinatorics.h"

#include <algorithm>
#include <map>

namespace mcg {

mpz_class Binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

std::vector<std::vector<int>> Subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {

void PartitionsRec(int remaining, int max_part, int slot,
                   std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  if (slot == static_cast<int>(cur.size())) return;
  for (int v = std::min(remaining, max_part); v >= 1; --v) {
    cur[slot] = v;
    PartitionsRec(remaining - v, v, slot + 1, cur, out);
    cur[slot] = 0;
  }
}

}  // namespace

std::vector<std::vector<int>> Partitions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(parts, 0);
  PartitionsRec(total, total, 0, cur, out);
  return out;
}

mpz_class DistinctPermutations(const std::vector<int>& values) {
  std::map<int, long> mult;
  for (int v : values) ++mult[v];
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), values.size());
  for (const auto& [v, c] : mult) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), c);
    r /= f;
  }
  return r;
}

}  // namespace mcg
