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

#ifndef MCG_COMBINATORICS_H_
#define MCG_COMBINATORICS_H_

#include <gmpxx.h>

#include <vector>

namespace mcg {

// Binomial coefficient C(n, k); zero when k < 0 or k > n.
mpz_class Binomial(long n, long k);

// All k-element subsets of {0, ..., n-1} as strictly increasing vectors, in
// lexicographic order.
std::vector<std::vector<int>> Subsets(int n, int k);

// All partitions of `total` into at most `parts` parts, each returned as a
// weakly decreasing vector of length `parts` padded with zeros. Ordered
// lexicographically descending (the all-in-one partition first).
std::vector<std::vector<int>> Partitions(int total, int parts);

// Number of distinct rearrangements of the given vector (multinomial
// coefficient of its value multiplicities).
mpz_class DistinctPermutations(const std::vector<int>& values);

}  // namespace mcg

#endif  // MCG_COMBINATORICS_H_
