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

#include "timtin/evaluator.hpp"

#include <gtest/gtest.h>

#include "support.hpp"
#include "timtin/fixtures.hpp"

namespace timtin {
namespace {

using Vec = std::vector<Rational>;
using Rows = std::vector<std::vector<Rational>>;

WeightedVectorSet make_set(std::size_t n, const std::vector<std::pair<Vec, Rational>>& items) {
  WeightedVectorSet set(n);
  int label = 0;
  for (const auto& [v, kappa] : items) set.add(v, kappa, {label++, 0});
  return set;
}

TEST(LogDetExponent, SingleVector) {
  EXPECT_EQ(log_det_exponent(make_set(2, {{{1, 0}, Rational(1, 2)}})), Rational(1, 2));
}

TEST(LogDetExponent, EmptySetIsZero) { EXPECT_EQ(log_det_exponent(WeightedVectorSet(3)), Rational(0)); }

// Two strongest vectors span the plane; the rest are dropped. Value frozen
// from the brute-force subset oracle, which is re-run here.
TEST(LogDetExponent, KeepsTwoStrongestInThePlane) {
  const WeightedVectorSet set = make_set(2, {{{1, 0}, 1},
                                             {{0, 1}, Rational(4, 5)},
                                             {{1, 1}, Rational(1, 2)},
                                             {{1, 1}, Rational(3, 10)},
                                             {{1, 2}, Rational(1, 5)}});
  EXPECT_EQ(testing::brute_force_exponent(set), Rational(9, 5));
  EXPECT_EQ(log_det_exponent(set), Rational(9, 5));
}

TEST(LogDetExponent, TwoIndependentVectorsBothKept) {
  const WeightedVectorSet set = make_set(2, {{{1, 1}, Rational(7, 10)}, {{1, 2}, Rational(2, 5)}});
  EXPECT_EQ(testing::brute_force_exponent(set), Rational(11, 10));
  EXPECT_EQ(log_det_exponent(set), Rational(11, 10));
}

TEST(LogDetExponent, ParallelVectorsCountOnce) {
  const WeightedVectorSet set = make_set(2, {{{1, 2}, Rational(3, 10)}, {{-2, -4}, Rational(7, 10)}});
  EXPECT_EQ(log_det_exponent(set), Rational(7, 10));
}

TEST(LogDetExponent, RejectsBadInput) {
  WeightedVectorSet set(2);
  EXPECT_THROW(set.add({1, 0, 0}, 1), Error);
  EXPECT_THROW(set.add({1, 0}, -1), Error);
}

TEST(LogDetExponent, MatchesBruteForceOnRandomSets) {
  testing::Random rng(1001);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.uniform_int(1, 4);
    const int m = rng.uniform_int(1, 8);
    WeightedVectorSet set(static_cast<std::size_t>(n));
    for (int i = 0; i < m; ++i) {
      // Small entries and a coarse kappa grid make ties and dependencies common.
      set.add(rng.small_vector(n, 1), rng.grid(0, 5, 4), {i, 0});
    }
    EXPECT_EQ(log_det_exponent(set), testing::brute_force_exponent(set));
  }
}

// Three users over two channel uses; at receiver 1 the received levels are
// 1 > 4/5 > 1/2 > 3/10 > 1/5 with streams (3,1) and (2,1) aligned.
ChannelMatrix three_user_channel() {
  return validate_channel(Rows{{1, Rational(1, 2), Rational(1, 2)}, {0, 1, 0}, {0, 0, 1}});
}

Scheme three_user_scheme() {
  return Scheme{2,
                {{0, {1, 0}, 0},
                 {0, {0, 1}, Rational(-1, 5)},
                 {1, {1, 1}, Rational(-1, 5)},
                 {1, {1, 2}, Rational(-3, 10)},
                 {2, {1, 1}, 0}}};
}

TEST(UserGdof, SingleUser) {
  const UserGdof u = user_gdof(Scheme{1, {{0, {1}, 0}}}, validate_channel(Rows{{1}}), 0);
  EXPECT_EQ(u.d_prime, Rational(1));
  EXPECT_EQ(u.d_dprime, Rational(0));
  EXPECT_EQ(u.gdof, Rational(1));
}

TEST(UserGdof, ThreeUserExample) {
  const UserGdof u = user_gdof(three_user_scheme(), three_user_channel(), 0);
  EXPECT_EQ(u.d_prime, Rational(9, 5));
  EXPECT_EQ(u.d_dprime, Rational(7, 10));
  EXPECT_EQ(u.gdof, Rational(11, 20));
}

TEST(UserGdof, FiveUserBaselineSchemeReceivers) {
  const ChannelMatrix c = fixtures::five_user_channel();
  const Scheme s = fixtures::five_user_baseline_scheme();
  const UserGdof r1 = user_gdof(s, c, 0);
  EXPECT_EQ(r1.d_prime, Rational(17, 10));
  EXPECT_EQ(r1.d_dprime, Rational(11, 10));
  EXPECT_EQ(r1.gdof, Rational(3, 10));
  const UserGdof r5 = user_gdof(s, c, 4);
  EXPECT_EQ(r5.d_prime, Rational(13, 10));
  EXPECT_EQ(r5.d_dprime, Rational(7, 10));
  EXPECT_EQ(r5.gdof, Rational(3, 10));
}

TEST(UserGdof, DropsStreamsBelowNoise) {
  // Interferer arrives at 1/2 - 1 < 0 and does not count.
  const ChannelMatrix c = validate_channel(Rows{{1, Rational(1, 2)}, {0, 1}});
  const Scheme s{1, {{0, {1}, 0}, {1, {1}, -1}}};
  EXPECT_EQ(user_gdof(s, c, 0).gdof, Rational(1));
}

TEST(UserGdof, RejectsOutOfRangeUser) {
  EXPECT_THROW(user_gdof(Scheme{1, {{0, {1}, 0}}}, validate_channel(Rows{{1}}), 1), Error);
}

TEST(SuccessiveGdof, ThreeUserExample) {
  const std::vector<Rational> d = successive_gdof(three_user_scheme(), three_user_channel(), 0);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0], Rational(1, 4));
  EXPECT_EQ(d[1], Rational(3, 10));
  EXPECT_EQ(d[0] + d[1], user_gdof(three_user_scheme(), three_user_channel(), 0).gdof);
}

TEST(SuccessiveGdof, FiveUserReceiverThree) {
  const std::vector<Rational> d =
      successive_gdof(fixtures::five_user_baseline_scheme(), fixtures::five_user_channel(), 2);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0], Rational(3, 10));
}

TEST(SuccessiveGdof, SingleStreamEqualsUserGdof) {
  const ChannelMatrix c = fixtures::five_user_channel();
  const Scheme s = fixtures::five_user_improved_scheme();
  for (int k = 0; k < 5; ++k) {
    EXPECT_EQ(successive_gdof(s, c, k), (std::vector<Rational>{user_gdof(s, c, k).gdof}));
  }
}

TEST(SuccessiveGdof, DecodingOrderChangesSplitNotSum) {
  Scheme swapped = three_user_scheme();
  std::swap(swapped.streams[0], swapped.streams[1]);
  const std::vector<Rational> d = successive_gdof(swapped, three_user_channel(), 0);
  EXPECT_EQ(d[0] + d[1], Rational(11, 20));
  EXPECT_NE(d[0], Rational(1, 4));
}

class RandomSchemes : public ::testing::TestWithParam<int> {};

TEST_P(RandomSchemes, ChainRuleBoundsAndScaling) {
  testing::Random rng(static_cast<std::uint64_t>(GetParam()));
  for (int trial = 0; trial < 40; ++trial) {
    const int k = rng.uniform_int(1, 4);
    const ChannelMatrix c = rng.channel(k);
    Scheme s = rng.scheme(k, rng.uniform_int(1, 3), 2);
    for (int u = 0; u < k; ++u) {
      const UserGdof g = user_gdof(s, c, u);
      EXPECT_GE(g.d_prime, g.d_dprime);
      EXPECT_GE(g.gdof, 0);
      EXPECT_LE(g.gdof, c.alpha(u, u));
      Rational sum = 0;
      for (const Rational& d : successive_gdof(s, c, u)) sum += d;
      EXPECT_EQ(sum, g.gdof);
    }
    Scheme scaled = s;
    for (Stream& st : scaled.streams) {
      const Rational factor(rng.uniform_int(1, 9) * (rng.coin() ? 1 : -1), rng.uniform_int(1, 9));
      for (Rational& x : st.vector) x *= factor;
    }
    EXPECT_EQ(evaluate_scheme(scaled, c, true).gdof(), evaluate_scheme(s, c, true).gdof());
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomSchemes, ::testing::Values(1, 2, 3, 4, 5));

TEST(TinClosedForm, MatchesEvaluatorForScalarSchemes) {
  testing::Random rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = rng.uniform_int(1, 5);
    const ChannelMatrix c = rng.channel(k, 0.7);
    std::vector<Rational> r;
    for (int u = 0; u < k; ++u) r.push_back(rng.grid(-12, 0, 10));
    const Scheme s = single_stream_scheme(r);
    for (int u = 0; u < k; ++u) EXPECT_EQ(user_gdof(s, c, u).gdof, tin_closed_form_gdof(c, r, u));
  }
}

}  // namespace
}  // namespace timtin
