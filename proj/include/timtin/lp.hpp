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

#ifndef TIMTIN_LP_HPP_
#define TIMTIN_LP_HPP_

#include <cstddef>
#include <vector>

#include "timtin/error.hpp"
#include "timtin/rational.hpp"

namespace timtin {

struct LpResult {
  Rational objective;
  std::vector<Rational> primal;  // x, one per column
  std::vector<Rational> dual;    // y, one per row
};

/// Exact dense simplex for  max c.x  s.t.  A x <= b, x >= 0  with b >= 0, so
/// the slack basis is feasible from the start. Bland's rule rules out cycling.
/// Throws when the problem is unbounded.
inline LpResult simplex_max(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                            const std::vector<Rational>& c) {
  const std::size_t rows = a.size();
  const std::size_t cols = c.size();
  if (b.size() != rows) throw Error(ErrorCode::kDimensionMismatch, "rhs size differs from row count");
  for (const Rational& v : b) {
    if (v < 0) throw Error(ErrorCode::kInvalidArgument, "simplex_max needs a nonnegative rhs");
  }
  const std::size_t width = cols + rows;
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(width + 1));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != cols) throw Error(ErrorCode::kDimensionMismatch, "constraint row has wrong width");
    for (std::size_t j = 0; j < cols; ++j) t[i][j] = a[i][j];
    t[i][cols + i] = 1;
    t[i][width] = b[i];
    basis[i] = cols + i;
  }
  std::vector<Rational> reduced(width + 1);
  for (std::size_t j = 0; j < cols; ++j) reduced[j] = c[j];

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < width; ++j) {
      if (reduced[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = rows;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][width] / t[i][enter];
      if (leave == rows || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = std::move(ratio);
      }
    }
    if (leave == rows) throw Error(ErrorCode::kNumericalFailure, "linear program is unbounded");

    const Rational pivot = t[leave][enter];
    for (Rational& v : t[leave]) v /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational factor = t[i][enter];
      for (std::size_t j = 0; j <= width; ++j) t[i][j] -= factor * t[leave][j];
    }
    const Rational factor = reduced[enter];
    for (std::size_t j = 0; j <= width; ++j) reduced[j] -= factor * t[leave][j];
    basis[leave] = enter;
  }

  LpResult out;
  out.primal.assign(cols, Rational(0));
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] < cols) out.primal[basis[i]] = t[i][width];
  }
  out.objective = -reduced[width];
  out.dual.resize(rows);
  for (std::size_t i = 0; i < rows; ++i) out.dual[i] = -reduced[cols + i];
  return out;
}

}  // namespace timtin

#endif  // TIMTIN_LP_HPP_
