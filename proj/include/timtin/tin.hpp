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

// Power control for treating interference as noise.
//
// With one stream per user and n = 1, user k reaches GDoF d_k iff
//   r_k <= 0,
//   r_k >= d_k - a_kk,
//   r_k - r_j >= d_k - a_kk + a_kj     for every present link (k, j).
// These are difference constraints over the potentials r_1..r_K measured
// against a reference node fixed at 0, so feasibility is the absence of a
// negative cycle and shortest-path distances from the reference give the
// componentwise largest feasible exponents.

#ifndef TIMTIN_TIN_HPP_
#define TIMTIN_TIN_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "timtin/error.hpp"
#include "timtin/evaluator.hpp"
#include "timtin/model.hpp"
#include "timtin/rational.hpp"

namespace timtin {

/// x[to] - x[from] <= weight. Node 0 is the reference; node k + 1 is user k.
/// `target_user` names the user whose target was subtracted into the weight,
/// or -1 for the power-budget edges that carry no target.
struct DifferenceEdge {
  int from = 0;
  int to = 0;
  Rational weight;
  int target_user = -1;
};

struct ShortestPaths {
  bool feasible = true;
  std::vector<Rational> distance;          // valid when feasible
  std::vector<DifferenceEdge> negative_cycle;  // valid when infeasible
};

/// Bellman-Ford from node 0. Every node must be reachable from it.
inline ShortestPaths bellman_ford(int nodes, std::span<const DifferenceEdge> edges) {
  const auto count = static_cast<std::size_t>(nodes);
  std::vector<Rational> dist(count);
  std::vector<bool> reached(count, false);
  std::vector<int> pred_edge(count, -1);
  reached[0] = true;

  auto relax_round = [&]() {
    bool relaxed = false;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const DifferenceEdge& edge = edges[e];
      const auto from = static_cast<std::size_t>(edge.from);
      const auto to = static_cast<std::size_t>(edge.to);
      if (!reached[from]) continue;
      Rational candidate = dist[from] + edge.weight;
      if (!reached[to] || candidate < dist[to]) {
        dist[to] = std::move(candidate);
        reached[to] = true;
        pred_edge[to] = static_cast<int>(e);
        relaxed = true;
      }
    }
    return relaxed;
  };

  bool relaxed = true;
  for (int round = 0; round < nodes && relaxed; ++round) relaxed = relax_round();
  ShortestPaths out;
  if (!relaxed) {
    out.distance = std::move(dist);
    return out;
  }

  // A negative cycle is reachable. Any cycle of the predecessor graph is one;
  // keep relaxing until such a cycle shows up.
  out.feasible = false;
  for (;;) {
    std::vector<int> seen_in(count, -1);
    for (int startv = 0; startv < nodes; ++startv) {
      int node = startv;
      while (node >= 0 && seen_in[static_cast<std::size_t>(node)] < 0) {
        seen_in[static_cast<std::size_t>(node)] = startv;
        const int e = pred_edge[static_cast<std::size_t>(node)];
        node = e < 0 ? -1 : edges[static_cast<std::size_t>(e)].from;
      }
      if (node < 0 || seen_in[static_cast<std::size_t>(node)] != startv) continue;
      const int start = node;
      do {
        const DifferenceEdge& edge = edges[static_cast<std::size_t>(pred_edge[static_cast<std::size_t>(node)])];
        out.negative_cycle.push_back(edge);
        node = edge.from;
      } while (node != start);
      std::reverse(out.negative_cycle.begin(), out.negative_cycle.end());
      return out;
    }
    relax_round();
  }
}

struct TinSolution {
  bool feasible = false;
  std::vector<Rational> r;                     // per-user exponents when feasible
  std::vector<DifferenceEdge> negative_cycle;  // certificate when infeasible
  Rational cycle_weight;                       // sum over negative_cycle, < 0
};

/// Constraint graph for per-user targets. Users with a zero target impose
/// nothing: a GDoF of zero is always reached.
inline std::vector<DifferenceEdge> tin_constraints(const ChannelMatrix& channel, std::span<const Rational> target) {
  const int users = channel.users();
  std::vector<DifferenceEdge> edges;
  for (int k = 0; k < users; ++k) edges.push_back({0, k + 1, Rational(0), -1});
  for (int k = 0; k < users; ++k) {
    const Rational& d = target[static_cast<std::size_t>(k)];
    if (d == 0) continue;
    const Rational& direct = channel.alpha(k, k);
    edges.push_back({k + 1, 0, Rational(direct - d), k});
    for (int j = 0; j < users; ++j) {
      if (j == k || !channel.has_link(k, j)) continue;
      edges.push_back({k + 1, j + 1, Rational(direct - channel.alpha(k, j) - d), k});
    }
  }
  return edges;
}

/// Decides whether the per-user GDoF targets are reachable by power control
/// with interference treated as noise, returning the largest exponents if so.
inline TinSolution tin_feasible(const ChannelMatrix& channel, std::span<const Rational> target) {
  if (target.size() != static_cast<std::size_t>(channel.users())) {
    throw Error(ErrorCode::kInvalidArgument, "target has " + std::to_string(target.size()) + " entries for " +
                                                 std::to_string(channel.users()) + " users");
  }
  for (const Rational& d : target) {
    if (d < 0) throw Error(ErrorCode::kInvalidArgument, "GDoF targets must be nonnegative");
  }
  const std::vector<DifferenceEdge> edges = tin_constraints(channel, target);
  ShortestPaths paths = bellman_ford(channel.users() + 1, edges);
  TinSolution out;
  out.feasible = paths.feasible;
  if (paths.feasible) {
    out.r.assign(paths.distance.begin() + 1, paths.distance.end());
  } else {
    out.negative_cycle = std::move(paths.negative_cycle);
    out.cycle_weight = 0;
    for (const DifferenceEdge& e : out.negative_cycle) out.cycle_weight += e.weight;
  }
  return out;
}

inline TinSolution tin_feasible_symmetric(const ChannelMatrix& channel, const Rational& level) {
  const std::vector<Rational> target(static_cast<std::size_t>(channel.users()), level);
  return tin_feasible(channel, target);
}

struct TinSymmetric {
  Rational d_sym;
  TinSolution solution;
};

inline const Rational& tin_search_precision() {
  static const Rational value(1, 1000000000);
  return value;
}

inline const Rational& tin_gap_check() {
  static const Rational value(1, 1000000);
  return value;
}

inline constexpr long kTinSnapDenominator = 10000;

/// Largest symmetric GDoF reachable by power control and TIN. Bisection to
/// 1e-9, then the simplest rational in the final bracket is taken when its
/// denominator is at most 1e4 and it checks out exactly (feasible, and
/// infeasible 1e-6 above). Otherwise the ratio of the last negative cycle is
/// tried, and failing that the bisection's feasible end is returned.
inline TinSymmetric tin_symmetric(const ChannelMatrix& channel) {
  Rational hi = channel.alpha(0, 0);
  for (int k = 1; k < channel.users(); ++k) hi = std::min(hi, channel.alpha(k, k));

  TinSolution at_hi = tin_feasible_symmetric(channel, hi);
  if (at_hi.feasible) return {hi, std::move(at_hi)};

  Rational lo = 0;
  TinSolution at_lo = tin_feasible_symmetric(channel, lo);
  while (hi - lo > tin_search_precision()) {
    Rational mid = (lo + hi) / 2;
    TinSolution at_mid = tin_feasible_symmetric(channel, mid);
    if (at_mid.feasible) {
      lo = std::move(mid);
      at_lo = std::move(at_mid);
    } else {
      hi = std::move(mid);
      at_hi = std::move(at_mid);
    }
  }

  auto certify = [&](const Rational& level) -> std::optional<TinSymmetric> {
    if (level < lo || level >= hi) return std::nullopt;
    TinSolution sol = tin_feasible_symmetric(channel, level);
    if (!sol.feasible) return std::nullopt;
    if (tin_feasible_symmetric(channel, level + tin_gap_check()).feasible) return std::nullopt;
    return TinSymmetric{level, std::move(sol)};
  };

  const Rational snapped = simplest_between(lo, hi);
  if (snapped.get_den() <= kTinSnapDenominator) {
    if (auto ok = certify(snapped)) return std::move(*ok);
  }
  // Along the critical cycle the weights are (base - level) per target edge.
  Rational base = 0;
  long target_edges = 0;
  for (const DifferenceEdge& e : at_hi.negative_cycle) {
    base += e.weight;
    if (e.target_user >= 0) {
      base += hi;
      ++target_edges;
    }
  }
  if (target_edges > 0) {
    Rational ratio = base / target_edges;
    ratio.canonicalize();
    if (auto ok = certify(ratio)) return std::move(*ok);
  }
  return {lo, std::move(at_lo)};
}

/// True when the exponents reach every target under the n = 1 closed form.
inline bool tin_certifies(const ChannelMatrix& channel, const std::vector<Rational>& r,
                          std::span<const Rational> target) {
  for (int k = 0; k < channel.users(); ++k) {
    if (r[static_cast<std::size_t>(k)] > 0) return false;
    if (tin_closed_form_gdof(channel, r, k) < target[static_cast<std::size_t>(k)]) return false;
  }
  return true;
}

}  // namespace timtin

#endif  // TIMTIN_TIN_HPP_
