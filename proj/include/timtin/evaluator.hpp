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

// Exact GDoF of linear schemes.
//
// For a term log det(I + sum_i P^kappa_i v_i v_i^H), the growth rate in log P
// is the largest total weight of a linearly independent subset of the v_i.
// Independent sets of vectors form a matroid, so scanning by decreasing kappa
// and keeping each vector outside the span of those already kept attains that
// maximum. Everything below is exact rational arithmetic.

#ifndef TIMTIN_EVALUATOR_HPP_
#define TIMTIN_EVALUATOR_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <vector>

#include "timtin/error.hpp"
#include "timtin/linalg.hpp"
#include "timtin/model.hpp"
#include "timtin/rational.hpp"

namespace timtin {

struct StreamLabel {
  int user = 0;
  int stream = 0;

  friend auto operator<=>(const StreamLabel&, const StreamLabel&) = default;
};

struct WeightedVector {
  std::vector<Rational> vector;
  Rational kappa;
  StreamLabel label;
};

/// Directions with nonnegative receive exponents, all of the same length.
class WeightedVectorSet {
 public:
  explicit WeightedVectorSet(std::size_t dim) : dim_(dim) {}

  void add(std::vector<Rational> vector, Rational kappa, StreamLabel label = {}) {
    if (vector.size() != dim_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "vector has " + std::to_string(vector.size()) + " components, expected " + std::to_string(dim_));
    }
    if (kappa < 0) throw Error(ErrorCode::kNegativeExponent, "receive exponent must be nonnegative");
    items_.push_back({std::move(vector), std::move(kappa), label});
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return items_.size(); }
  const std::vector<WeightedVector>& items() const { return items_; }

 private:
  std::size_t dim_;
  std::vector<WeightedVector> items_;
};

/// Indices of the vectors the greedy scan keeps, in scan order. Ties on kappa
/// are broken by (user, stream) so the kept set is reproducible.
inline std::vector<std::size_t> greedy_independent_subset(const WeightedVectorSet& set) {
  const auto& items = set.items();
  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (items[a].kappa != items[b].kappa) return items[a].kappa > items[b].kappa;
    return items[a].label < items[b].label;
  });
  SpanBasis basis(set.dim());
  std::vector<std::size_t> kept;
  for (std::size_t idx : order) {
    if (basis.full()) break;
    if (basis.insert(items[idx].vector)) kept.push_back(idx);
  }
  return kept;
}

/// Exponent of log det(I + sum P^kappa v v^H): sum of kappa over the greedily
/// kept independent vectors.
inline Rational log_det_exponent(const WeightedVectorSet& set) {
  Rational total = 0;
  for (std::size_t idx : greedy_independent_subset(set)) total += set.items()[idx].kappa;
  return total;
}

namespace detail {

inline void require_valid(const Scheme& scheme, const ChannelMatrix& channel, int user) {
  if (user < 0 || user >= channel.users()) {
    throw Error(ErrorCode::kUserOutOfRange, "user " + std::to_string(user + 1) + " out of range");
  }
  for (const Stream& s : scheme.streams) {
    if (s.vector.size() != static_cast<std::size_t>(scheme.n)) {
      throw Error(ErrorCode::kDimensionMismatch, "stream vector length differs from block length");
    }
    if (s.user < 0 || s.user >= channel.users()) {
      throw Error(ErrorCode::kUserOutOfRange, "stream user out of range");
    }
  }
}

}  // namespace detail

/// Streams seen at `receiver`: all interference, plus the receiver's own
/// streams from decoding position `first_desired` onwards. Streams whose
/// receive exponent is negative sit below the noise floor and are dropped.
inline WeightedVectorSet received_set(const Scheme& scheme, const ChannelMatrix& channel, int receiver,
                                      std::size_t first_desired) {
  WeightedVectorSet set(static_cast<std::size_t>(scheme.n));
  std::vector<int> position(static_cast<std::size_t>(channel.users()), 0);
  for (const Stream& s : scheme.streams) {
    const int l = position[static_cast<std::size_t>(s.user)]++;
    if (s.user == receiver && static_cast<std::size_t>(l) < first_desired) continue;
    Rational kappa = channel.alpha(receiver, s.user) + s.power_exp;
    if (kappa < 0) continue;
    set.add(s.vector, std::move(kappa), {s.user, l});
  }
  return set;
}

/// GDoF of `user`: d' from desired plus interference, d'' from interference
/// alone, gdof = (d' - d'') / n.
inline UserGdof user_gdof(const Scheme& scheme, const ChannelMatrix& channel, int user) {
  detail::require_valid(scheme, channel, user);
  UserGdof out;
  out.d_prime = log_det_exponent(received_set(scheme, channel, user, 0));
  out.d_dprime = log_det_exponent(received_set(scheme, channel, user, scheme.streams.size()));
  if (out.d_prime < out.d_dprime) {
    throw Error(ErrorCode::kNumericalFailure, "interference exponent exceeds total exponent");
  }
  out.gdof = (out.d_prime - out.d_dprime) / scheme.n;
  return out;
}

/// Per-stream GDoF under decode-and-subtract in the scheme's stream order:
/// stream l gets (E_l - E_{l+1}) / n where E_l covers the user's streams from
/// l onwards plus all interference. The entries telescope to user_gdof.
inline std::vector<Rational> successive_gdof(const Scheme& scheme, const ChannelMatrix& channel, int user) {
  detail::require_valid(scheme, channel, user);
  const std::size_t count = scheme.streams_of(user).size();
  std::vector<Rational> exponents;
  exponents.reserve(count + 1);
  for (std::size_t l = 0; l <= count; ++l) {
    exponents.push_back(log_det_exponent(received_set(scheme, channel, user, l)));
  }
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t l = 0; l < count; ++l) out.push_back(Rational((exponents[l] - exponents[l + 1]) / scheme.n));
  return out;
}

/// Full report for every user; `with_streams` adds the per-stream split.
inline GDoFReport evaluate_scheme(const Scheme& scheme, const ChannelMatrix& channel, bool with_streams = false) {
  GDoFReport report;
  report.n = scheme.n;
  for (int k = 0; k < channel.users(); ++k) {
    UserGdof u = user_gdof(scheme, channel, k);
    if (with_streams) u.streams = successive_gdof(scheme, channel, k);
    report.users.push_back(std::move(u));
  }
  return report;
}

/// Single-stream, single-dimension closed form:
/// max(0, a_kk + r_k - max(0, max_{j != k} (a_kj + r_j))).
inline Rational tin_closed_form_gdof(const ChannelMatrix& channel, const std::vector<Rational>& power_exp, int user) {
  Rational interference = 0;
  for (int j = 0; j < channel.users(); ++j) {
    if (j == user) continue;
    Rational level = channel.alpha(user, j) + power_exp[static_cast<std::size_t>(j)];
    if (level > interference) interference = level;
  }
  Rational d = channel.alpha(user, user) + power_exp[static_cast<std::size_t>(user)] - interference;
  return d > 0 ? d : Rational(0);
}

/// The n = 1 scheme with one stream per user at the given power exponents.
inline Scheme single_stream_scheme(const std::vector<Rational>& power_exp) {
  Scheme out;
  out.n = 1;
  for (std::size_t k = 0; k < power_exp.size(); ++k) {
    out.streams.push_back({static_cast<int>(k), {Rational(1)}, power_exp[k]});
  }
  return out;
}

}  // namespace timtin

#endif  // TIMTIN_EVALUATOR_HPP_
