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

#ifndef MCG_BOUNDS_H_
#define MCG_BOUNDS_H_

#include "mcg/rational.h"

namespace mcg {

// k^d / C(n+d-1, d): the searcher cannot beat a hider who picks an
// allocation uniformly at random.
Rational UpperBoundCombinatorial(int n, int d, int k);

// k / n: the searcher cannot beat a hider who puts every treasure in one
// uniformly chosen box.
Rational UpperBoundFirstQuery(int n, int k);

// (k/n) * prod_{i=k}^{n-1} (1 - C(i-1,k-1)/C(n-1,k-1)): a guarantee, valid
// for every d, of the strategy that keeps re-querying the box that last
// surrendered a treasure. Requires 2 <= k <= n.
Rational LowerBoundInfiniteD(int n, int k);

}  // namespace mcg

#endif  // MCG_BOUNDS_H_
