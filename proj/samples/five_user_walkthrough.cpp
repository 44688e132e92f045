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

// Walks the five-user reference network through both decompositions and
// prints the per-receiver exponent bookkeeping.

#include <iostream>

#include "timtin/decomp.hpp"
#include "timtin/fixtures.hpp"

int main() {
  using namespace timtin;
  const ChannelMatrix channel = fixtures::five_user_channel();
  for (const auto& [name, map] : {std::pair{"baseline", fixtures::five_user_baseline_map()},
                                  std::pair{"improved", fixtures::five_user_improved_map()}}) {
    const DecompositionResult r = evaluate_map(channel, map);
    std::cout << name << ": TIN " << format_rational(r.tin_fractions[0]) << " x TIM "
              << format_rational(r.tim_fractions[0]) << " (" << method_name(r.tim_method) << ")\n";
    for (int k = 0; k < channel.users(); ++k) {
      const UserGdof u = user_gdof(r.scheme, channel, k);
      std::cout << "  receiver " << k + 1 << ": (" << format_rational(u.d_prime) << " - "
                << format_rational(u.d_dprime) << ") / " << r.scheme.n << " = " << format_rational(u.gdof)
                << "  power P^" << format_rational(r.power_exp[static_cast<std::size_t>(k)]) << "\n";
    }
    std::cout << "  verdict: " << (r.verdict ? "verified" : "FAILED") << "\n";
  }
  return 0;
}
