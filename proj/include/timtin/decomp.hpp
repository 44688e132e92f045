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

// TIM-TIN decompositions: every interfering link goes either to a binary
// topology handled by signal-space avoidance or to a strength-aware channel
// handled by power control. Per user, the product of the two fractions is the
// claim; the combined scheme is then built and checked by the evaluator.

#ifndef TIMTIN_DECOMP_HPP_
#define TIMTIN_DECOMP_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "timtin/error.hpp"
#include "timtin/evaluator.hpp"
#include "timtin/model.hpp"
#include "timtin/rational.hpp"
#include "timtin/tim.hpp"
#include "timtin/tin.hpp"

namespace timtin {

struct SplitChannel {
  ChannelMatrix tin_channel;
  TimTopology tim_topology;
};

/// Two copies of the network sharing the direct links; TIM-tagged links are
/// removed from the TIN copy and form the TIM topology.
inline SplitChannel split(const ChannelMatrix& channel, const DecompositionMap& map) {
  if (map.users() != channel.users()) {
    throw Error(ErrorCode::kMapMismatch, "map is for " + std::to_string(map.users()) + " users, channel has " +
                                             std::to_string(channel.users()));
  }
  std::vector<CrossLink> tagged = map.tim_links();
  tagged.insert(tagged.end(), map.tin_links().begin(), map.tin_links().end());
  std::sort(tagged.begin(), tagged.end());
  if (tagged != channel.cross_links()) {
    throw Error(ErrorCode::kMapMismatch, "map does not tag exactly the channel's present cross links");
  }
  ChannelMatrix tin_channel = channel;
  for (const CrossLink& l : map.tim_links()) tin_channel = tin_channel.without_link(l);
  return {std::move(tin_channel), TimTopology(channel.users(), map.tim_links())};
}

/// Combined scheme: every TIM direction of a user becomes one stream carrying
/// that user's TIN power exponent unchanged.
inline Scheme synthesize_scheme(const TinSolution& tin, const TimSolution& tim, const ChannelMatrix& channel) {
  if (!tin.feasible) throw Error(ErrorCode::kInvalidArgument, "TIN solution is infeasible");
  const auto users = static_cast<std::size_t>(channel.users());
  if (tin.r.size() != users || tim.directions.size() != users) {
    throw Error(ErrorCode::kDimensionMismatch, "component solutions do not match the channel's user count");
  }
  return validate_scheme(tim_scheme(tim, tin.r), channel);
}

struct DecompositionResult {
  DecompositionMap map;
  std::vector<bool> tim_mask;  // parallel to channel.cross_links()
  std::vector<Rational> tin_fractions;
  std::vector<Rational> tim_fractions;
  TimMethod tim_method = TimMethod::kFull;
  std::vector<Rational> products;
  std::vector<Rational> power_exp;
  Scheme scheme;
  std::vector<Rational> verified;
  bool verdict = false;
};

inline std::vector<bool> tim_mask_of(const ChannelMatrix& channel, const DecompositionMap& map) {
  std::vector<bool> mask;
  for (const CrossLink& l : channel.cross_links()) mask.push_back(map.tag(l) == LinkTag::kTim);
  return mask;
}

/// Orders masks as binary numbers with link 0 as the least significant bit.
inline bool mask_less(const std::vector<bool>& a, const std::vector<bool>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i];
  }
  return false;
}

inline std::string mask_string(const std::vector<bool>& mask) {
  std::string out;
  for (bool b : mask) out.push_back(b ? '1' : '0');
  return out;
}

/// Runs both components for one map and checks the combined scheme. TIN uses
/// the symmetric objective unless per-user targets are supplied.
inline DecompositionResult evaluate_map(const ChannelMatrix& channel, const DecompositionMap& map,
                                        const std::optional<std::vector<Rational>>& tin_targets = std::nullopt) {
  const SplitChannel parts = split(channel, map);
  DecompositionResult out;
  out.map = map;
  out.tim_mask = tim_mask_of(channel, map);

  TinSolution tin;
  if (tin_targets) {
    tin = tin_feasible(parts.tin_channel, *tin_targets);
    if (!tin.feasible) throw Error(ErrorCode::kInvalidArgument, "TIN targets are infeasible for this map");
    out.tin_fractions = *tin_targets;
  } else {
    TinSymmetric sym = tin_symmetric(parts.tin_channel);
    tin = std::move(sym.solution);
    out.tin_fractions.assign(static_cast<std::size_t>(channel.users()), sym.d_sym);
  }
  const TimSolution tim = tim_solve(parts.tim_topology);
  out.tim_fractions = tim.fractions;
  out.tim_method = tim.method;
  out.power_exp = tin.r;
  for (std::size_t k = 0; k < out.tin_fractions.size(); ++k) {
    out.products.push_back(Rational(out.tin_fractions[k] * out.tim_fractions[k]));
  }
  out.scheme = synthesize_scheme(tin, tim, channel);
  out.verdict = true;
  for (int k = 0; k < channel.users(); ++k) {
    out.verified.push_back(user_gdof(out.scheme, channel, k).gdof);
    if (out.verified.back() < out.products[static_cast<std::size_t>(k)]) out.verdict = false;
  }
  return out;
}

struct SearchBudget {
  int exhaustive_cap = 16;
};

struct SearchReport {
  bool exhaustive = true;
  std::vector<DecompositionResult> results;  // sorted by mask
  std::vector<std::size_t> frontier;         // indices into results
};

inline bool dominates(std::span<const Rational> a, std::span<const Rational> b) {
  bool strict = false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] < b[k]) return false;
    if (a[k] > b[k]) strict = true;
  }
  return strict;
}

/// Indices of results with a passing verdict whose verified tuple no other
/// passing result dominates; equal tuples keep the earliest index.
inline std::vector<std::size_t> pareto_frontier(const std::vector<DecompositionResult>& results) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!results[i].verdict) continue;
    bool keep = true;
    for (std::size_t j = 0; j < results.size() && keep; ++j) {
      if (j == i || !results[j].verdict) continue;
      if (dominates(results[j].verified, results[i].verified)) keep = false;
      if (j < i && results[j].verified == results[i].verified) keep = false;
    }
    if (keep) out.push_back(i);
  }
  return out;
}

/// Maps sending every link at least as strong as some observed strength to
/// TIM (plus the all-TIN map), and every single-link flip of those.
inline std::vector<std::vector<bool>> threshold_family(const ChannelMatrix& channel) {
  const std::vector<CrossLink> links = channel.cross_links();
  std::set<Rational> strengths;
  for (const CrossLink& l : links) strengths.insert(channel.alpha(l.receiver, l.transmitter));
  std::vector<std::vector<bool>> bases;
  bases.emplace_back(links.size(), false);
  for (const Rational& tau : strengths) {
    std::vector<bool> mask;
    for (const CrossLink& l : links) mask.push_back(channel.alpha(l.receiver, l.transmitter) >= tau);
    bases.push_back(std::move(mask));
  }
  std::vector<std::vector<bool>> out = bases;
  for (const auto& base : bases) {
    for (std::size_t b = 0; b < links.size(); ++b) {
      std::vector<bool> flipped = base;
      flipped[b] = !flipped[b];
      out.push_back(std::move(flipped));
    }
  }
  std::sort(out.begin(), out.end(), mask_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline DecompositionMap map_from_mask(const ChannelMatrix& channel, const std::vector<bool>& mask) {
  const std::vector<CrossLink> links = channel.cross_links();
  std::vector<CrossLink> tim, tin;
  for (std::size_t b = 0; b < links.size(); ++b) (mask[b] ? tim : tin).push_back(links[b]);
  return DecompositionMap(channel.users(), std::move(tim), std::move(tin));
}

/// Evaluates every map when the link count is within the exhaustive cap,
/// otherwise the threshold family, and Pareto-filters the verified tuples.
inline SearchReport search(const ChannelMatrix& channel, const SearchBudget& budget = {}) {
  const std::size_t link_count = channel.cross_links().size();
  if (budget.exhaustive_cap < 0 || budget.exhaustive_cap > 30) {
    throw Error(ErrorCode::kInvalidArgument, "exhaustive cap must lie in [0, 30]");
  }
  SearchReport report;
  std::vector<std::vector<bool>> masks;
  if (link_count <= static_cast<std::size_t>(budget.exhaustive_cap)) {
    const unsigned long long total = 1ull << link_count;
    masks.reserve(static_cast<std::size_t>(total));
    for (unsigned long long bits = 0; bits < total; ++bits) {
      std::vector<bool> mask(link_count);
      for (std::size_t b = 0; b < link_count; ++b) mask[b] = (bits >> b) & 1ull;
      masks.push_back(std::move(mask));
    }
  } else {
    report.exhaustive = false;
    masks = threshold_family(channel);
  }
  report.results.reserve(masks.size());
  for (const auto& mask : masks) report.results.push_back(evaluate_map(channel, map_from_mask(channel, mask)));
  report.frontier = pareto_frontier(report.results);
  return report;
}

/// Convex combination of GDoF tuples.
inline std::vector<Rational> time_share(std::span<const std::vector<Rational>> tuples,
                                        std::span<const Rational> weights) {
  if (tuples.size() != weights.size() || tuples.empty()) {
    throw Error(ErrorCode::kWeightMismatch, "need one weight per tuple");
  }
  Rational sum = 0;
  for (const Rational& w : weights) {
    if (w < 0) throw Error(ErrorCode::kWeightMismatch, "weights must be nonnegative");
    sum += w;
  }
  if (sum != 1) throw Error(ErrorCode::kWeightMismatch, "weights sum to " + format_rational(sum) + ", not 1");
  const std::size_t users = tuples.front().size();
  std::vector<Rational> out(users, Rational(0));
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    if (tuples[t].size() != users) throw Error(ErrorCode::kWeightMismatch, "tuples have different lengths");
    for (std::size_t k = 0; k < users; ++k) out[k] += weights[t] * tuples[t][k];
  }
  return out;
}

}  // namespace timtin

#endif  // TIMTIN_DECOMP_HPP_
