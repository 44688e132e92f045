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

#ifndef TIMTIN_LINALG_HPP_
#define TIMTIN_LINALG_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "timtin/error.hpp"
#include "timtin/rational.hpp"

namespace timtin {

/// Clears denominators: returns an integer vector parallel to `v`.
inline std::vector<Integer> to_integer_direction(std::span<const Rational> v) {
  Integer common = 1;
  for (const Rational& x : v) common = lcm_of(common, x.get_den());
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const Rational& x : v) out.push_back(x.get_num() * (common / x.get_den()));
  return out;
}

/// Incrementally maintained basis of a subspace of Q^n. Rows are kept as
/// primitive integer vectors and reduced fraction-free (cross multiplication
/// followed by content removal), so rank decisions are exact.
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == dim_; }

  /// Adds `v` when it lies outside the current span. Returns whether it did.
  bool insert(std::span<const Rational> v) {
    std::vector<Integer> x = reduce(v);
    std::size_t pivot = first_nonzero(x);
    if (pivot == dim_) return false;
    rows_.push_back(std::move(x));
    pivots_.push_back(pivot);
    return true;
  }

  bool contains(std::span<const Rational> v) const {
    std::vector<Integer> x = reduce(v);
    return first_nonzero(x) == dim_;
  }

 private:
  std::vector<Integer> reduce(std::span<const Rational> v) const {
    if (v.size() != dim_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "vector has " + std::to_string(v.size()) + " components, expected " + std::to_string(dim_));
    }
    std::vector<Integer> x = to_integer_direction(v);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t p = pivots_[r];
      if (x[p] == 0) continue;
      const Integer a = rows_[r][p];
      const Integer b = x[p];
      for (std::size_t c = 0; c < dim_; ++c) x[c] = a * x[c] - b * rows_[r][c];
      make_primitive(x);
    }
    return x;
  }

  std::size_t first_nonzero(const std::vector<Integer>& x) const {
    for (std::size_t c = 0; c < dim_; ++c) {
      if (x[c] != 0) return c;
    }
    return dim_;
  }

  static void make_primitive(std::vector<Integer>& x) {
    Integer g = 0;
    for (const Integer& e : x) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    if (g > 1) {
      for (Integer& e : x) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
    }
  }

  std::size_t dim_;
  std::vector<std::vector<Integer>> rows_;
  std::vector<std::size_t> pivots_;
};

inline std::size_t rank_of(const std::vector<std::vector<Rational>>& vectors, std::size_t dim) {
  SpanBasis basis(dim);
  for (const auto& v : vectors) basis.insert(v);
  return basis.rank();
}

inline bool linearly_independent(const std::vector<std::vector<Rational>>& vectors, std::size_t dim) {
  return rank_of(vectors, dim) == vectors.size();
}

}  // namespace timtin

#endif  // TIMTIN_LINALG_HPP_
