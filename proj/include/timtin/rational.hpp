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

#ifndef TIMTIN_RATIONAL_HPP_
#define TIMTIN_RATIONAL_HPP_

#include <gmpxx.h>

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <string_view>
#include <system_error>

#include "timtin/error.hpp"

namespace timtin {

// Exact arithmetic for exponents and beamforming coordinates. Always spell the
// type out instead of `auto`: gmpxx returns expression templates.
using Rational = mpq_class;
using Integer = mpz_class;

namespace detail {

inline Integer pow10(unsigned long e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, e);
  return out;
}

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace detail

/// Parses "3", "-0.25", "1.5e-3", ".5" or "p/q" into an exact rational.
/// Decimal text is read as a decimal fraction, never through binary floats.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Error {
    return Error(ErrorCode::kParse, "not a decimal or p/q number: '" + std::string(text) + "'");
  };
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw fail();

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
      negative = num.front() == '-';
      num.remove_prefix(1);
    }
    if (!detail::all_digits(num) || !detail::all_digits(den)) throw fail();
    Integer p(std::string(num), 10);
    Integer q(std::string(den), 10);
    if (q == 0) throw Error(ErrorCode::kParse, "zero denominator in '" + std::string(text) + "'");
    Rational out(negative ? Integer(-p) : p, q);
    out.canonicalize();
    return out;
  }

  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc() || ptr != exp_text.data() + exp_text.size() || exp_text.empty()) throw fail();
    s = s.substr(0, e);
  }
  std::string digits;
  long frac_digits = 0;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw fail();
    if ((!whole.empty() && !detail::all_digits(whole)) || (!frac.empty() && !detail::all_digits(frac))) {
      throw fail();
    }
    digits.append(whole).append(frac);
    frac_digits = static_cast<long>(frac.size());
  } else {
    if (!detail::all_digits(s)) throw fail();
    digits.assign(s);
  }
  if (digits.empty()) throw fail();
  Integer mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  long scale = exponent - frac_digits;
  Rational out;
  if (scale >= 0) {
    out = Rational(mantissa * detail::pow10(static_cast<unsigned long>(scale)));
  } else {
    out = Rational(mantissa, detail::pow10(static_cast<unsigned long>(-scale)));
  }
  out.canonicalize();
  return out;
}

/// Exact value of the shortest decimal that round-trips to `x`, so a JSON
/// number 0.1 becomes 1/10 rather than the nearest binary fraction.
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::kParse, "non-finite number");
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) throw Error(ErrorCode::kParse, "cannot format number");
  return parse_rational(std::string_view(buf, static_cast<size_t>(ptr - buf)));
}

/// True when the canonical denominator is 2^a * 5^b.
inline bool has_terminating_decimal(const Rational& q) {
  Integer den = q.get_den();
  for (unsigned long p : {2ul, 5ul}) {
    while (mpz_divisible_ui_p(den.get_mpz_t(), p)) mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), p);
  }
  return den == 1;
}

/// Canonical text form: exact decimal when the denominator is 2^a * 5^b,
/// otherwise "p/q".
inline std::string format_rational(const Rational& q) {
  if (!has_terminating_decimal(q)) return q.get_str();
  if (q.get_den() == 1) return q.get_num().get_str();
  unsigned long twos = mpz_scan1(q.get_den_mpz_t(), 0);
  Integer rest = q.get_den();
  mpz_tdiv_q_2exp(rest.get_mpz_t(), rest.get_mpz_t(), twos);
  unsigned long fives = 0;
  while (rest > 1) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), 5);
    ++fives;
  }
  unsigned long places = std::max(twos, fives);
  Rational scaled_q = q * Rational(detail::pow10(places));
  Integer scaled = scaled_q.get_num();
  std::string sign;
  if (scaled < 0) {
    sign = "-";
    scaled = -scaled;
  }
  std::string digits = scaled.get_str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  return sign + digits;
}

inline Integer floor_of(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

/// The rational with the smallest denominator in the closed interval [lo, hi],
/// found by walking the continued-fraction expansions of both ends.
inline Rational simplest_between(Rational lo, Rational hi) {
  if (lo > hi) std::swap(lo, hi);
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) {
    Rational neg_lo = -hi;
    Rational neg_hi = -lo;
    Rational pos = simplest_between(neg_lo, neg_hi);
    return Rational(-pos);
  }
  Integer fl = floor_of(lo);
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  Rational inv_lo = 1 / (hi - fl);
  Rational inv_hi = 1 / (lo - fl);
  Rational tail = simplest_between(inv_lo, inv_hi);
  Rational out = Rational(fl) + 1 / tail;
  out.canonicalize();
  return out;
}

inline Integer lcm_of(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace timtin

#endif  // TIMTIN_RATIONAL_HPP_
