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

// Interference avoidance on a binary topology (every link equally strong).
//
// Messages are vertices. Two messages are aligned when some third receiver
// hears both, so they must share a direction there; a conflict joins a
// message with the receiver it interferes at. When no alignment class holds
// a conflict, one direction per class in two dimensions gives every user half
// of the signal space. Otherwise users fall back to orthogonal time sharing
// from a (fractional) coloring of the conflict graph.

#ifndef TIMTIN_TIM_HPP_
#define TIMTIN_TIM_HPP_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "timtin/error.hpp"
#include "timtin/lp.hpp"
#include "timtin/model.hpp"
#include "timtin/rational.hpp"

namespace timtin {

/// Directed interfering links of a binary topology; (k, i) means receiver k
/// hears transmitter i.
class TimTopology {
 public:
  TimTopology() = default;
  TimTopology(int users, std::vector<CrossLink> links) : users_(users), links_(std::move(links)) {
    if (users < 1) throw Error(ErrorCode::kInvalidArgument, "topology needs at least one user");
    for (const CrossLink& l : links_) {
      if (l.receiver == l.transmitter) throw Error(ErrorCode::kInvalidArgument, "self link in TIM topology");
      if (l.receiver < 0 || l.transmitter < 0 || l.receiver >= users || l.transmitter >= users) {
        throw Error(ErrorCode::kUserOutOfRange, "TIM link index out of range");
      }
    }
    std::sort(links_.begin(), links_.end());
    links_.erase(std::unique(links_.begin(), links_.end()), links_.end());
  }

  /// Links of `channel` whose strength exceeds `threshold`.
  static TimTopology from_channel(const ChannelMatrix& channel, const Rational& threshold = Rational(0)) {
    std::vector<CrossLink> links;
    for (const CrossLink& l : channel.cross_links()) {
      if (channel.alpha(l.receiver, l.transmitter) > threshold) links.push_back(l);
    }
    return TimTopology(channel.users(), std::move(links));
  }

  int users() const { return users_; }
  const std::vector<CrossLink>& links() const { return links_; }
  bool hears(int receiver, int transmitter) const {
    return std::binary_search(links_.begin(), links_.end(), CrossLink{receiver, transmitter});
  }

  friend bool operator==(const TimTopology&, const TimTopology&) = default;

 private:
  int users_ = 0;
  std::vector<CrossLink> links_;
};

/// Binary channel of a topology: strength 1 on direct and listed links.
inline ChannelMatrix binary_channel(const TimTopology& topology) {
  const auto k = static_cast<std::size_t>(topology.users());
  std::vector<std::vector<Rational>> raw(k, std::vector<Rational>(k, Rational(0)));
  for (std::size_t u = 0; u < k; ++u) raw[u][u] = 1;
  for (const CrossLink& l : topology.links()) {
    raw[static_cast<std::size_t>(l.receiver)][static_cast<std::size_t>(l.transmitter)] = 1;
  }
  return ChannelMatrix::from_rows(raw);
}

using UserPair = std::pair<int, int>;  // unordered, first < second

struct TimGraphs {
  std::vector<UserPair> alignment;
  std::vector<UserPair> conflict;
};

inline TimGraphs build_graphs(const TimTopology& topology) {
  const int users = topology.users();
  TimGraphs out;
  for (int i = 0; i < users; ++i) {
    for (int j = i + 1; j < users; ++j) {
      bool aligned = false;
      for (int k = 0; k < users && !aligned; ++k) {
        aligned = k != i && k != j && topology.hears(k, i) && topology.hears(k, j);
      }
      if (aligned) out.alignment.emplace_back(i, j);
      if (topology.hears(i, j) || topology.hears(j, i)) out.conflict.emplace_back(i, j);
    }
  }
  return out;
}

enum class TimMethod { kFull, kHalfRate, kColoring };

inline std::string_view method_name(TimMethod m) {
  switch (m) {
    case TimMethod::kFull: return "full";
    case TimMethod::kHalfRate: return "half_rate";
    case TimMethod::kColoring: return "coloring";
  }
  return "unknown";
}

struct TimSolution {
  std::vector<Rational> fractions;
  TimMethod method = TimMethod::kFull;       // strongest fallback used anywhere
  std::vector<TimMethod> user_methods;
  int n = 1;
  /// Per user, the directions of its streams over the n-dimensional block.
  std::vector<std::vector<std::vector<Rational>>> directions;
};

inline constexpr int kExactColoringLimit = 12;

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

/// Groups of `members` joined by `edges`, each sorted, ordered by first member.
inline std::vector<std::vector<int>> components(int users, const std::vector<int>& members,
                                                const std::vector<UserPair>& edges) {
  DisjointSets sets(users);
  for (const auto& [a, b] : edges) sets.unite(a, b);
  std::vector<std::vector<int>> out;
  std::vector<int> slot(static_cast<std::size_t>(users), -1);
  for (int u : members) {
    const int root = sets.find(u);
    if (slot[static_cast<std::size_t>(root)] < 0) {
      slot[static_cast<std::size_t>(root)] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[static_cast<std::size_t>(root)])].push_back(u);
  }
  return out;
}

/// Local schedule for one connected sub-problem before block replication.
struct LocalSchedule {
  int n = 1;
  Rational fraction = 1;
  TimMethod method = TimMethod::kFull;
  std::vector<std::vector<std::vector<Rational>>> directions;  // parallel to members
};

inline std::vector<Rational> unit_vector(int n, int axis) {
  std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
  v[static_cast<std::size_t>(axis)] = 1;
  return v;
}

}  // namespace detail

/// Maximal independent sets of a graph on `m` vertices given adjacency
/// bitmasks. Brute force over subsets; intended for m <= 12.
inline std::vector<unsigned> maximal_independent_sets(int m, const std::vector<unsigned>& adjacency) {
  std::vector<unsigned> out;
  const unsigned limit = 1u << m;
  for (unsigned set = 1; set < limit; ++set) {
    bool independent = true;
    for (int v = 0; v < m && independent; ++v) {
      if ((set >> v) & 1u) independent = (adjacency[static_cast<std::size_t>(v)] & set) == 0;
    }
    if (!independent) continue;
    bool maximal = true;
    for (int v = 0; v < m && maximal; ++v) {
      if (!((set >> v) & 1u) && (adjacency[static_cast<std::size_t>(v)] & set) == 0) maximal = false;
    }
    if (maximal) out.push_back(set);
  }
  return out;
}

struct FractionalColoring {
  Rational chromatic;                 // chi_f
  std::vector<unsigned> sets;         // independent sets with positive weight
  std::vector<Rational> weights;      // parallel to sets, summing to chi_f
};

/// Fractional chromatic number by exact LP: the dual of max sum x_v subject to
/// sum_{v in I} x_v <= 1 over maximal independent sets I is the covering LP
/// whose optimal weights give the coloring.
inline FractionalColoring fractional_coloring(int m, const std::vector<unsigned>& adjacency) {
  const std::vector<unsigned> sets = maximal_independent_sets(m, adjacency);
  std::vector<std::vector<Rational>> a;
  for (unsigned set : sets) {
    std::vector<Rational> row(static_cast<std::size_t>(m), Rational(0));
    for (int v = 0; v < m; ++v) {
      if ((set >> v) & 1u) row[static_cast<std::size_t>(v)] = 1;
    }
    a.push_back(std::move(row));
  }
  const LpResult lp = simplex_max(a, std::vector<Rational>(sets.size(), Rational(1)),
                                  std::vector<Rational>(static_cast<std::size_t>(m), Rational(1)));
  FractionalColoring out;
  out.chromatic = lp.objective;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (lp.dual[i] > 0) {
      out.sets.push_back(sets[i]);
      out.weights.push_back(lp.dual[i]);
    }
  }
  return out;
}

/// Largest-degree-first greedy coloring; returns one color per vertex.
inline std::vector<int> greedy_coloring(int m, const std::vector<std::vector<int>>& neighbors) {
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return neighbors[static_cast<std::size_t>(a)].size() > neighbors[static_cast<std::size_t>(b)].size();
  });
  std::vector<int> color(static_cast<std::size_t>(m), -1);
  for (int v : order) {
    std::vector<bool> used(static_cast<std::size_t>(m) + 1, false);
    for (int w : neighbors[static_cast<std::size_t>(v)]) {
      if (color[static_cast<std::size_t>(w)] >= 0) used[static_cast<std::size_t>(color[static_cast<std::size_t>(w)])] = true;
    }
    int c = 0;
    while (used[static_cast<std::size_t>(c)]) ++c;
    color[static_cast<std::size_t>(v)] = c;
  }
  return color;
}

namespace detail {

inline LocalSchedule coloring_schedule(const std::vector<int>& members, const std::vector<UserPair>& conflict) {
  const int m = static_cast<int>(members.size());
  auto local = [&](int user) {
    return static_cast<int>(std::lower_bound(members.begin(), members.end(), user) - members.begin());
  };
  std::vector<std::vector<int>> neighbors(static_cast<std::size_t>(m));
  for (const auto& [a, b] : conflict) {
    if (!std::binary_search(members.begin(), members.end(), a)) continue;
    neighbors[static_cast<std::size_t>(local(a))].push_back(local(b));
    neighbors[static_cast<std::size_t>(local(b))].push_back(local(a));
  }
  LocalSchedule out;
  out.method = TimMethod::kColoring;
  out.directions.resize(static_cast<std::size_t>(m));

  if (m <= kExactColoringLimit) {
    std::vector<unsigned> adjacency(static_cast<std::size_t>(m), 0u);
    for (int v = 0; v < m; ++v) {
      for (int w : neighbors[static_cast<std::size_t>(v)]) adjacency[static_cast<std::size_t>(v)] |= 1u << w;
    }
    const FractionalColoring fc = fractional_coloring(m, adjacency);
    // Scale weights to integer slot counts; every vertex is covered at least
    // `per_user` times and takes exactly that many slots.
    Integer common = 1;
    for (const Rational& w : fc.weights) common = lcm_of(common, w.get_den());
    std::vector<long> slots;
    long total = 0;
    for (const Rational& w : fc.weights) {
      Rational scaled = w * common;
      slots.push_back(scaled.get_num().get_si());
      total += slots.back();
    }
    const long per_user = common.get_si();
    out.n = static_cast<int>(total);
    out.fraction = Rational(per_user, total);
    out.fraction.canonicalize();
    long next = 0;
    std::vector<std::vector<int>> owned(static_cast<std::size_t>(m));
    for (std::size_t s = 0; s < fc.sets.size(); ++s) {
      for (long slot = next; slot < next + slots[s]; ++slot) {
        for (int v = 0; v < m; ++v) {
          auto& mine = owned[static_cast<std::size_t>(v)];
          if (((fc.sets[s] >> v) & 1u) && static_cast<long>(mine.size()) < per_user) {
            mine.push_back(static_cast<int>(slot));
          }
        }
      }
      next += slots[s];
    }
    for (int v = 0; v < m; ++v) {
      for (int slot : owned[static_cast<std::size_t>(v)]) {
        out.directions[static_cast<std::size_t>(v)].push_back(unit_vector(out.n, slot));
      }
    }
    return out;
  }

  const std::vector<int> color = greedy_coloring(m, neighbors);
  const int colors = *std::max_element(color.begin(), color.end()) + 1;
  out.n = colors;
  out.fraction = Rational(1, colors);
  for (int v = 0; v < m; ++v) {
    out.directions[static_cast<std::size_t>(v)].push_back(unit_vector(colors, color[static_cast<std::size_t>(v)]));
  }
  return out;
}

}  // namespace detail

/// Solves each connected sub-problem of the topology separately: users with
/// no links get the whole space, sub-problems without internal conflicts use
/// the two-dimensional alignment scheme, the rest fall back to coloring. The
/// local schedules are then replicated block-diagonally to a common length.
inline TimSolution tim_solve(const TimTopology& topology) {
  const int users = topology.users();
  const TimGraphs graphs = build_graphs(topology);
  std::vector<UserPair> link_pairs;
  for (const CrossLink& l : topology.links()) link_pairs.emplace_back(l.receiver, l.transmitter);
  std::vector<int> everyone(static_cast<std::size_t>(users));
  std::iota(everyone.begin(), everyone.end(), 0);
  const std::vector<std::vector<int>> subproblems = detail::components(users, everyone, link_pairs);

  std::vector<detail::LocalSchedule> schedules;
  int next_direction = 0;
  for (const std::vector<int>& members : subproblems) {
    detail::LocalSchedule local;
    if (members.size() == 1) {
      local.n = 1;
      local.fraction = 1;
      local.method = TimMethod::kFull;
      local.directions = {{{Rational(1)}}};
      schedules.push_back(std::move(local));
      continue;
    }
    const std::vector<std::vector<int>> classes = detail::components(users, members, graphs.alignment);
    std::vector<int> class_of(static_cast<std::size_t>(users), -1);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (int u : classes[c]) class_of[static_cast<std::size_t>(u)] = static_cast<int>(c);
    }
    bool internal_conflict = false;
    for (const auto& [a, b] : graphs.conflict) {
      if (class_of[static_cast<std::size_t>(a)] >= 0 && class_of[static_cast<std::size_t>(a)] == class_of[static_cast<std::size_t>(b)]) {
        internal_conflict = true;
      }
    }
    if (!internal_conflict) {
      local.n = 2;
      local.fraction = Rational(1, 2);
      local.method = TimMethod::kHalfRate;
      std::vector<int> param(classes.size());
      for (int& p : param) p = next_direction++;
      for (int u : members) {
        const int c = class_of[static_cast<std::size_t>(u)];
        local.directions.push_back({{Rational(1), Rational(param[static_cast<std::size_t>(c)])}});
      }
    } else {
      local = detail::coloring_schedule(members, graphs.conflict);
    }
    schedules.push_back(std::move(local));
  }

  TimSolution out;
  Integer block = 1;
  for (const auto& s : schedules) block = lcm_of(block, Integer(s.n));
  out.n = static_cast<int>(block.get_si());
  out.fractions.assign(static_cast<std::size_t>(users), Rational(0));
  out.user_methods.assign(static_cast<std::size_t>(users), TimMethod::kFull);
  out.directions.resize(static_cast<std::size_t>(users));
  for (std::size_t p = 0; p < subproblems.size(); ++p) {
    const auto& local = schedules[p];
    if (static_cast<int>(local.method) > static_cast<int>(out.method)) out.method = local.method;
    const int copies = out.n / local.n;
    for (std::size_t idx = 0; idx < subproblems[p].size(); ++idx) {
      const auto user = static_cast<std::size_t>(subproblems[p][idx]);
      out.fractions[user] = local.fraction;
      out.user_methods[user] = local.method;
      for (int copy = 0; copy < copies; ++copy) {
        for (const auto& dir : local.directions[idx]) {
          std::vector<Rational> v(static_cast<std::size_t>(out.n), Rational(0));
          for (std::size_t c = 0; c < dir.size(); ++c) v[static_cast<std::size_t>(copy * local.n) + c] = dir[c];
          out.directions[user].push_back(std::move(v));
        }
      }
    }
  }
  return out;
}

/// Scheme realizing a TIM solution at full power: one stream per direction.
inline Scheme tim_scheme(const TimSolution& solution, const std::vector<Rational>& power_exp = {}) {
  Scheme out;
  out.n = solution.n;
  for (std::size_t u = 0; u < solution.directions.size(); ++u) {
    const Rational r = power_exp.empty() ? Rational(0) : power_exp[u];
    for (const auto& dir : solution.directions[u]) out.streams.push_back({static_cast<int>(u), dir, r});
  }
  return out;
}

}  // namespace timtin

#endif  // TIMTIN_TIM_HPP_
