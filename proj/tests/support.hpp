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

// Test-only oracles and random instance generators. Nothing here calls into
// the code paths it is used to check: ranks use plain Gaussian elimination
// over rationals, TIN feasibility is a grid search over power exponents.

#ifndef TIMTIN_TESTS_SUPPORT_HPP_
#define TIMTIN_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "timtin/evaluator.hpp"
#include "timtin/model.hpp"
#include "timtin/rational.hpp"

namespace timtin::testing {

/// Rank by textbook row reduction with rational division.
inline std::size_t naive_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t j = 0; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Maximum total weight over all linearly independent subsets.
inline Rational brute_force_exponent(const WeightedVectorSet& set) {
  const auto& items = set.items();
  const std::size_t m = items.size();
  Rational best = 0;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<std::vector<Rational>> rows;
    Rational total = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1u) {
        rows.push_back(items[i].vector);
        total += items[i].kappa;
      }
    }
    if (total > best && naive_rank(rows) == rows.size()) best = total;
  }
  return best;
}

/// Grid search for TIN feasibility in integer milli-units: is there r with
/// every r_k in {0, -50, ..., -2000} such that for all k
/// target_k <= max(0, a_kk + r_k - max(0, max_{j != k} (a_kj + r_j)))?
/// (a_kj = 0 links contribute through r_j <= 0 and never bind.)
inline bool grid_tin_feasible(const std::vector<std::vector<long>>& alpha, const std::vector<long>& target) {
  const std::size_t k_users = alpha.size();
  std::vector<long> r(k_users, 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t u) -> bool {
    if (u == k_users) {
      for (std::size_t k = 0; k < k_users; ++k) {
        long interference = 0;
        for (std::size_t j = 0; j < k_users; ++j) {
          if (j != k && alpha[k][j] > 0) interference = std::max(interference, alpha[k][j] + r[j]);
        }
        if (std::max(0L, alpha[k][k] + r[k] - interference) < target[k]) return false;
      }
      return true;
    }
    // Only grid points with a_uu + r_u >= target_u can work for user u.
    for (long v = 0; v >= -2000; v -= 50) {
      if (alpha[u][u] + v < target[u] && target[u] > 0) break;
      r[u] = v;
      if (rec(u + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

inline Rational milli(long v) {
  Rational q(v, 1000);
  q.canonicalize();
  return q;
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : gen_(seed) {}

  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen_); }

  /// Multiple of 1/denominator in [lo, hi] (given in those units).
  Rational grid(int lo, int hi, int denominator) {
    Rational q(uniform_int(lo, hi), denominator);
    q.canonicalize();
    return q;
  }

  std::vector<Rational> small_vector(int n, int bound = 3) {
    for (;;) {
      std::vector<Rational> v;
      bool nonzero = false;
      for (int c = 0; c < n; ++c) {
        v.emplace_back(uniform_int(-bound, bound));
        nonzero = nonzero || v.back() != 0;
      }
      if (nonzero) return v;
    }
  }

  /// Random channel: direct strengths in [1/2, 1], each cross link present
  /// with probability `density`, strengths on a 1/10 grid in (0, 1].
  ChannelMatrix channel(int users, double density = 0.6) {
    std::vector<std::vector<Rational>> raw(static_cast<std::size_t>(users),
                                           std::vector<Rational>(static_cast<std::size_t>(users), Rational(0)));
    for (int k = 0; k < users; ++k) {
      for (int i = 0; i < users; ++i) {
        if (k == i) raw[k][i] = grid(5, 10, 10);
        else if (coin(density)) raw[k][i] = grid(1, 10, 10);
      }
    }
    return ChannelMatrix::from_rows(raw);
  }

  /// Random scheme: 1..max_streams streams per user, small integer
  /// directions, power exponents on a 1/10 grid in [min_power/10, 0].
  Scheme scheme(int users, int n, int max_streams, int min_power = -10) {
    Scheme s;
    s.n = n;
    for (int k = 0; k < users; ++k) {
      const int b = uniform_int(1, max_streams);
      for (int l = 0; l < b; ++l) s.streams.push_back({k, small_vector(n), grid(min_power, 0, 10)});
    }
    // Interleave users so per-user order is not just list order.
    std::shuffle(s.streams.begin(), s.streams.end(), gen_);
    return s;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace timtin::testing

#endif  // TIMTIN_TESTS_SUPPORT_HPP_
