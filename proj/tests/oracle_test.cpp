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

#include "timtin/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "support.hpp"
#include "timtin/evaluator.hpp"
#include "timtin/fixtures.hpp"

namespace timtin {
namespace {

using Rows = std::vector<std::vector<Rational>>;

TEST(FinitePRate, SingleUserClosedForm) {
  const ChannelMatrix c = validate_channel(Rows{{1}});
  const Scheme s{1, {{0, {1}, 0}}};
  const std::vector<double> rate = finite_p_rate(s, c, 1e6);
  ASSERT_EQ(rate.size(), 1u);
  EXPECT_NEAR(rate[0], std::log2(1.0 + 1e6), 1e-9);
  EXPECT_NEAR(rate[0], 19.93, 0.01);
}

TEST(FinitePRate, ScalesWithPowerExponent) {
  const ChannelMatrix c = validate_channel(Rows{{1}});
  const Scheme s{1, {{0, {1}, Rational(-1, 2)}}};
  EXPECT_NEAR(finite_p_rate(s, c, 1e8)[0], std::log2(1.0 + 1e4), 1e-9);
}

TEST(FinitePRate, RejectsOutOfRangeSnr) {
  const ChannelMatrix c = validate_channel(Rows{{1}});
  const Scheme s{1, {{0, {1}, 0}}};
  EXPECT_THROW(finite_p_rate(s, c, 1.0), Error);
  EXPECT_THROW(finite_p_rate(s, c, 0.5), Error);
  EXPECT_THROW(finite_p_rate(s, c, 1e13), Error);
  EXPECT_THROW(finite_p_rate(s, c, std::nan("")), Error);
  EXPECT_THROW(slope_estimate(s, c, 1e8, 1e6), Error);
}

TEST(SlopeEstimate, SingleUserSlopeIsOne) {
  const ChannelMatrix c = validate_channel(Rows{{1}});
  const Scheme s{1, {{0, {1}, 0}}};
  EXPECT_NEAR(slope_estimate(s, c, 1e6, 1e10)[0], 1.0, 1e-3);
}

TEST(SlopeEstimate, StreamAtNoiseFloorHasNoSlope) {
  const ChannelMatrix c = validate_channel(Rows{{1}});
  const Scheme s{1, {{0, {1}, -1}}};
  EXPECT_NEAR(slope_estimate(s, c, 1e6, 1e10)[0], 0.0, 1e-3);
}

TEST(SlopeEstimate, FiveUserSchemesTrackExactValues) {
  const ChannelMatrix c = fixtures::five_user_channel();
  for (const Scheme& s : {fixtures::five_user_baseline_scheme(), fixtures::five_user_improved_scheme()}) {
    const GDoFReport exact = evaluate_scheme(s, c, false);
    const std::vector<double> slope = slope_estimate(s, c, 1e6, 1e10);
    for (int k = 0; k < 5; ++k) {
      EXPECT_NEAR(slope[static_cast<std::size_t>(k)], to_double(exact.users[static_cast<std::size_t>(k)].gdof), 0.05)
          << "user " << k;
    }
  }
}

TEST(FinitePStreamRates, SumToUserRate) {
  testing::Random rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = rng.uniform_int(1, 4);
    const ChannelMatrix c = rng.channel(k);
    const Scheme s = rng.scheme(k, rng.uniform_int(1, 3), 2);
    const double snr = trial % 2 == 0 ? 1e6 : 1e9;
    const std::vector<double> total = finite_p_rate(s, c, snr, 3);
    for (int u = 0; u < k; ++u) {
      const std::vector<double> parts = finite_p_stream_rates(s, c, u, snr, 3);
      EXPECT_NEAR(std::accumulate(parts.begin(), parts.end(), 0.0), total[static_cast<std::size_t>(u)], 1e-6);
    }
  }
}

TEST(DrawPhases, DeterministicPerSeed) {
  EXPECT_EQ(draw_phases(3, 7), draw_phases(3, 7));
  EXPECT_NE(draw_phases(3, 7), draw_phases(3, 8));
}

}  // namespace
}  // namespace timtin
