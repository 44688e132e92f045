// Copyright 2026 The Authors.
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

#include "timtin/linalg.hpp"

#include <gtest/gtest.h>

#include "support.hpp"
#include "timtin/lp.hpp"

namespace timtin {
namespace {

using Vec = std::vector<Rational>;

TEST(SpanBasis, DetectsDependence) {
  SpanBasis basis(3);
  EXPECT_TRUE(basis.insert(Vec{1, 2, 3}));
  EXPECT_FALSE(basis.insert(Vec{Rational(1, 2), 1, Rational(3, 2)}));
  EXPECT_TRUE(basis.insert(Vec{0, 1, 0}));
  EXPECT_TRUE(basis.contains(Vec{1, 5, 3}));
  EXPECT_FALSE(basis.contains(Vec{0, 0, 1}));
  EXPECT_TRUE(basis.insert(Vec{0, 0, 1}));
  EXPECT_TRUE(basis.full());
  EXPECT_FALSE(basis.insert(Vec{7, -3, 2}));
}

TEST(SpanBasis, RejectsWrongLength) {
  SpanBasis basis(2);
  EXPECT_THROW(basis.insert(Vec{1, 2, 3}), Error);
}

TEST(SpanBasis, ZeroVectorIsNeverIndependent) {
  SpanBasis basis(2);
  EXPECT_FALSE(basis.insert(Vec{0, 0}));
  EXPECT_EQ(basis.rank(), 0u);
}

TEST(SpanBasis, RankMatchesNaiveElimination) {
  testing::Random rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = rng.uniform_int(1, 5);
    const int m = rng.uniform_int(1, 7);
    std::vector<Vec> rows;
    for (int r = 0; r < m; ++r) {
      Vec v;
      for (int c = 0; c < n; ++c) v.push_back(rng.grid(-4, 4, rng.uniform_int(1, 3)));
      // Occasionally make a row a combination of earlier ones.
      if (r >= 2 && rng.coin(0.3)) {
        for (int c = 0; c < n; ++c) v[c] = rows[0][c] * 2 - rows[1][c] / 3;
      }
      rows.push_back(v);
    }
    EXPECT_EQ(rank_of(rows, static_cast<std::size_t>(n)), testing::naive_rank(rows));
  }
}

TEST(Simplex, SmallProblem) {
  // max 3x + 2y  s.t.  x + y <= 4, x + 3y <= 6, x <= 3
  const LpResult r = simplex_max({{1, 1}, {1, 3}, {1, 0}}, {4, 6, 3}, {3, 2});
  EXPECT_EQ(r.objective, Rational(11));
  EXPECT_EQ(r.primal, (Vec{3, 1}));
  // Duals certify optimality: b.y equals the objective and A^T y >= c.
  EXPECT_EQ(r.dual[0] * 4 + r.dual[1] * 6 + r.dual[2] * 3, Rational(11));
  EXPECT_GE(r.dual[0] + r.dual[1] + r.dual[2], Rational(3));
  EXPECT_GE(r.dual[0] + 3 * r.dual[1], Rational(2));
}

TEST(Simplex, Unbounded) {
  EXPECT_THROW(simplex_max({{1, -1}}, {1}, {1, 1}), Error);
}

}  // namespace
}  // namespace timtin
