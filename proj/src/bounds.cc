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

#include "mcg/bounds.h"

#include "mcg/combinatorics.h"
#include "mcg/error.h"

namespace mcg {

Rational UpperBoundCombinatorial(int n, int d, int k) {
  MCG_REQUIRE(n >= 1 && d >= 0 && k >= 1 && k <= n,
              "bounds require 1 <= k <= n and d >= 0");
  mpz_class kd;
  mpz_ui_pow_ui(kd.get_mpz_t(), static_cast<unsigned long>(k),
                static_cast<unsigned long>(d));
  return Rational(mpq_class(kd, Binomial(n + d - 1, d)));
}

Rational UpperBoundFirstQuery(int n, int k) {
  MCG_REQUIRE(n >= 1 && k >= 1 && k <= n, "bounds require 1 <= k <= n");
  return Rational(k, n);
}

Rational LowerBoundInfiniteD(int n, int k) {
  MCG_REQUIRE(k >= 2 && k <= n, "infinite-d bound requires 2 <= k <= n");
  Rational r(k, n);
  mpz_class denom = Binomial(n - 1, k - 1);
  for (int i = k; i <= n - 1; ++i) {
    r *= Rational(1) - Rational(mpq_class(Binomial(i - 1, k - 1), denom));
  }
  return r;
}

}  // namespace mcg
