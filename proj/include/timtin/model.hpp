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

#ifndef TIMTIN_MODEL_HPP_
#define TIMTIN_MODEL_HPP_

#include <algorithm>
#include <compare>
#include <iterator>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "timtin/error.hpp"
#include "timtin/rational.hpp"

namespace timtin {

/// Interfering link heard by `receiver` from `transmitter` (0-based, distinct).
struct CrossLink {
  int receiver = 0;
  int transmitter = 0;

  friend auto operator<=>(const CrossLink&, const CrossLink&) = default;
};

/// K x K grid of channel strength exponents; alpha(k, i) is the exponent of
/// the link from transmitter i to receiver k. Zero means no link.
class ChannelMatrix {
 public:
  /// Validates raw strengths: the matrix must be square with K >= 1, negative
  /// entries are clamped to zero and every direct link must stay positive.
  static ChannelMatrix from_rows(const std::vector<std::vector<Rational>>& raw) {
    const std::size_t k = raw.size();
    if (k == 0) throw Error(ErrorCode::kNonSquare, "channel matrix has no rows");
    ChannelMatrix out;
    out.users_ = static_cast<int>(k);
    out.alpha_.reserve(k * k);
    for (std::size_t row = 0; row < k; ++row) {
      if (raw[row].size() != k) {
        throw Error(ErrorCode::kNonSquare, "row " + std::to_string(row + 1) + " has " +
                                               std::to_string(raw[row].size()) + " entries, expected " +
                                               std::to_string(k));
      }
      for (const Rational& x : raw[row]) out.alpha_.push_back(x < 0 ? Rational(0) : x);
    }
    for (int u = 0; u < out.users_; ++u) {
      if (out.alpha(u, u) <= 0) {
        throw Error(ErrorCode::kZeroDirectLink, "direct link of user " + std::to_string(u + 1) + " has zero strength");
      }
    }
    return out;
  }

  int users() const { return users_; }
  const Rational& alpha(int receiver, int transmitter) const {
    return alpha_[static_cast<std::size_t>(receiver * users_ + transmitter)];
  }
  bool has_link(int receiver, int transmitter) const { return alpha(receiver, transmitter) > 0; }

  /// Present interfering links in (receiver, transmitter) lexicographic order.
  std::vector<CrossLink> cross_links() const {
    std::vector<CrossLink> out;
    for (int k = 0; k < users_; ++k) {
      for (int i = 0; i < users_; ++i) {
        if (k != i && has_link(k, i)) out.push_back({k, i});
      }
    }
    return out;
  }

  std::vector<std::vector<Rational>> rows() const {
    std::vector<std::vector<Rational>> out(static_cast<std::size_t>(users_));
    for (int k = 0; k < users_; ++k) {
      for (int i = 0; i < users_; ++i) out[static_cast<std::size_t>(k)].push_back(alpha(k, i));
    }
    return out;
  }

  /// Copy with the given cross link set to zero.
  ChannelMatrix without_link(CrossLink link) const {
    ChannelMatrix out = *this;
    out.alpha_[static_cast<std::size_t>(link.receiver * users_ + link.transmitter)] = 0;
    return out;
  }

  friend bool operator==(const ChannelMatrix& a, const ChannelMatrix& b) {
    return a.users_ == b.users_ && a.alpha_ == b.alpha_;
  }

 private:
  ChannelMatrix() = default;

  int users_ = 0;
  std::vector<Rational> alpha_;
};

inline ChannelMatrix validate_channel(const std::vector<std::vector<Rational>>& raw) {
  return ChannelMatrix::from_rows(raw);
}

/// One scalar data stream: beamforming direction over the block and its
/// transmit power exponent (power P^power_exp).
struct Stream {
  int user = 0;
  std::vector<Rational> vector;
  Rational power_exp;

  friend bool operator==(const Stream&, const Stream&) = default;
};

/// Linear scheme over a block of `n` channel uses. Per user, the relative
/// order of its streams is the successive-cancellation decoding order.
struct Scheme {
  int n = 1;
  std::vector<Stream> streams;

  /// Indices into `streams` belonging to `user`, in decoding order.
  std::vector<std::size_t> streams_of(int user) const {
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < streams.size(); ++s) {
      if (streams[s].user == user) out.push_back(s);
    }
    return out;
  }

  std::vector<int> stream_counts(int users) const {
    std::vector<int> out(static_cast<std::size_t>(users), 0);
    for (const Stream& s : streams) {
      if (s.user >= 0 && s.user < users) ++out[static_cast<std::size_t>(s.user)];
    }
    return out;
  }

  friend bool operator==(const Scheme&, const Scheme&) = default;
};

/// Scales `v` so its first nonzero coordinate is 1.
inline std::vector<Rational> normalize_direction(std::vector<Rational> v) {
  auto lead = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
  if (lead == v.end()) throw Error(ErrorCode::kEmptyVector, "beamforming vector is zero");
  const Rational scale = *lead;
  for (Rational& x : v) x /= scale;
  return v;
}

/// Checks a scheme against a channel and returns it with every direction
/// normalized. GDoF values are invariant under that scaling.
inline Scheme validate_scheme(const Scheme& scheme, const ChannelMatrix& channel) {
  if (scheme.n < 1) throw Error(ErrorCode::kDimensionMismatch, "block length must be at least 1");
  Scheme out;
  out.n = scheme.n;
  out.streams.reserve(scheme.streams.size());
  for (std::size_t s = 0; s < scheme.streams.size(); ++s) {
    const Stream& st = scheme.streams[s];
    const std::string where = "stream " + std::to_string(s + 1);
    if (st.user < 0 || st.user >= channel.users()) {
      throw Error(ErrorCode::kUserOutOfRange, where + ": user " + std::to_string(st.user + 1) + " out of range");
    }
    if (st.vector.size() != static_cast<std::size_t>(scheme.n)) {
      throw Error(ErrorCode::kDimensionMismatch, where + ": vector has " + std::to_string(st.vector.size()) +
                                                     " components, block length is " + std::to_string(scheme.n));
    }
    if (st.power_exp > 0) {
      throw Error(ErrorCode::kPositivePowerExponent, where + ": power exponent " + format_rational(st.power_exp) +
                                                         " exceeds 0");
    }
    Stream norm;
    norm.user = st.user;
    try {
      norm.vector = normalize_direction(st.vector);
    } catch (const Error&) {
      throw Error(ErrorCode::kEmptyVector, where + ": beamforming vector is zero");
    }
    norm.power_exp = st.power_exp;
    out.streams.push_back(std::move(norm));
  }
  return out;
}

/// GDoF of one user: exponents of the two log-det terms and their scaled
/// difference, plus the successive-cancellation split when computed.
struct UserGdof {
  Rational d_prime;
  Rational d_dprime;
  Rational gdof;
  std::vector<Rational> streams;
};

struct GDoFReport {
  int n = 1;
  std::vector<UserGdof> users;

  std::vector<Rational> gdof() const {
    std::vector<Rational> out;
    for (const UserGdof& u : users) out.push_back(u.gdof);
    return out;
  }
};

enum class LinkTag { kTim, kTin };

/// Assignment of each present cross link to exactly one component.
class DecompositionMap {
 public:
  DecompositionMap() = default;
  DecompositionMap(int users, std::vector<CrossLink> tim, std::vector<CrossLink> tin)
      : users_(users), tim_(std::move(tim)), tin_(std::move(tin)) {
    std::sort(tim_.begin(), tim_.end());
    std::sort(tin_.begin(), tin_.end());
    for (const auto* set : {&tim_, &tin_}) {
      for (const CrossLink& l : *set) {
        if (l.receiver == l.transmitter || l.receiver < 0 || l.transmitter < 0 || l.receiver >= users ||
            l.transmitter >= users) {
          throw Error(ErrorCode::kMapMismatch, "invalid cross link (" + std::to_string(l.receiver + 1) + "," +
                                                   std::to_string(l.transmitter + 1) + ")");
        }
      }
    }
    std::vector<CrossLink> both;
    std::set_intersection(tim_.begin(), tim_.end(), tin_.begin(), tin_.end(), std::back_inserter(both));
    if (!both.empty() || std::adjacent_find(tim_.begin(), tim_.end()) != tim_.end() ||
        std::adjacent_find(tin_.begin(), tin_.end()) != tin_.end()) {
      throw Error(ErrorCode::kMapMismatch, "a cross link is tagged more than once");
    }
  }

  /// Map over the channel's present cross links; bit b of `tim_bits` set
  /// means the b-th link of `cross_links()` goes to TIM.
  static DecompositionMap from_bits(const ChannelMatrix& channel, unsigned long long tim_bits) {
    std::vector<CrossLink> tim, tin;
    const std::vector<CrossLink> links = channel.cross_links();
    for (std::size_t b = 0; b < links.size(); ++b) {
      ((tim_bits >> b) & 1ull ? tim : tin).push_back(links[b]);
    }
    return DecompositionMap(channel.users(), std::move(tim), std::move(tin));
  }

  int users() const { return users_; }
  const std::vector<CrossLink>& tim_links() const { return tim_; }
  const std::vector<CrossLink>& tin_links() const { return tin_; }

  std::optional<LinkTag> tag(CrossLink link) const {
    if (std::binary_search(tim_.begin(), tim_.end(), link)) return LinkTag::kTim;
    if (std::binary_search(tin_.begin(), tin_.end(), link)) return LinkTag::kTin;
    return std::nullopt;
  }

  /// Bit b set iff cross_links()[b] is TIM. Requires the map to cover exactly
  /// the channel's present cross links.
  unsigned long long bits(const ChannelMatrix& channel) const {
    const std::vector<CrossLink> links = channel.cross_links();
    unsigned long long out = 0;
    for (std::size_t b = 0; b < links.size(); ++b) {
      if (tag(links[b]) == LinkTag::kTim) out |= 1ull << b;
    }
    return out;
  }

  friend bool operator==(const DecompositionMap&, const DecompositionMap&) = default;

 private:
  int users_ = 0;
  std::vector<CrossLink> tim_;
  std::vector<CrossLink> tin_;
};

}  // namespace timtin

#endif  // TIMTIN_MODEL_HPP_
