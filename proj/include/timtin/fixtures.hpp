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

// Five-user reference network used throughout the tests and docs.
//
// Direct links have strength 1. Strong (1.0) interfering links, written
// receiver <- transmitter: 1<-4, 2<-1, 3<-2, 3<-5, 4<-1, 5<-4. Medium (0.5)
// links: 1<-2, 2<-3, 2<-5, 3<-4, 4<-5. Splitting strong links to TIM and
// medium links to TIN gives 3/5 x 1/2 = 3/10 per user; additionally moving
// 2<-3 to TIM gives 2/3 x 1/2 = 1/3.

#ifndef TIMTIN_FIXTURES_HPP_
#define TIMTIN_FIXTURES_HPP_

#include <vector>

#include "timtin/model.hpp"
#include "timtin/rational.hpp"

namespace timtin::fixtures {

inline std::vector<CrossLink> five_user_strong_links() {
  return {{0, 3}, {1, 0}, {2, 1}, {2, 4}, {3, 0}, {4, 3}};
}

inline std::vector<CrossLink> five_user_medium_links() {
  return {{0, 1}, {1, 2}, {1, 4}, {2, 3}, {3, 4}};
}

inline ChannelMatrix five_user_channel() {
  std::vector<std::vector<Rational>> raw(5, std::vector<Rational>(5, Rational(0)));
  for (int k = 0; k < 5; ++k) raw[k][k] = 1;
  for (const CrossLink& l : five_user_strong_links()) raw[l.receiver][l.transmitter] = 1;
  for (const CrossLink& l : five_user_medium_links()) raw[l.receiver][l.transmitter] = Rational(1, 2);
  return ChannelMatrix::from_rows(raw);
}

/// Strong links to TIM, medium links to TIN.
inline DecompositionMap five_user_baseline_map() {
  return DecompositionMap(5, five_user_strong_links(), five_user_medium_links());
}

/// Baseline with the medium link 2 <- 3 moved to TIM.
inline DecompositionMap five_user_improved_map() {
  std::vector<CrossLink> tim = five_user_strong_links();
  tim.push_back({1, 2});
  std::vector<CrossLink> tin = {{0, 1}, {1, 4}, {2, 3}, {3, 4}};
  return DecompositionMap(5, std::move(tim), std::move(tin));
}

namespace detail {

inline Scheme two_dim_scheme(const std::vector<int>& direction_param, const std::vector<Rational>& power_exp) {
  Scheme s;
  s.n = 2;
  for (int k = 0; k < 5; ++k) {
    s.streams.push_back({k, {Rational(1), Rational(direction_param[k])}, power_exp[k]});
  }
  return s;
}

}  // namespace detail

/// Baseline scheme: 2 dimensions, 4 directions with users 2 and 5 aligned,
/// powers P^0, P^-0.1, ..., P^-0.4.
inline Scheme five_user_baseline_scheme() {
  return detail::two_dim_scheme({0, 1, 2, 3, 1}, {Rational(0), Rational(-1, 10), Rational(-1, 5), Rational(-3, 10),
                                                  Rational(-2, 5)});
}

/// Improved scheme: 3 directions, users 1/3 and 2/5 aligned, powers
/// (0, -1/6, 0, -1/6, -1/3).
inline Scheme five_user_improved_scheme() {
  return detail::two_dim_scheme({0, 1, 0, 2, 1},
                                {Rational(0), Rational(-1, 6), Rational(0), Rational(-1, 6), Rational(-1, 3)});
}

}  // namespace timtin::fixtures

#endif  // TIMTIN_FIXTURES_HPP_
