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

// JSON file formats. Indices are 1-based on disk and 0-based in memory;
// every exact number is written as a string (see format_rational).

#ifndef TIMTIN_IO_HPP_
#define TIMTIN_IO_HPP_

#include <filesystem>
#include <fstream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "timtin/error.hpp"
#include "timtin/model.hpp"
#include "timtin/rational.hpp"

namespace timtin {

using Json = nlohmann::json;

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>()), 10));
  if (j.is_number_unsigned()) return Rational(Integer(std::to_string(j.get<unsigned long long>()), 10));
  if (j.is_number_float()) return rational_from_double(j.get<double>());
  throw Error(ErrorCode::kParse, "expected a number or numeric string, got " + j.dump());
}

inline Json rational_to_json(const Rational& q) { return format_rational(q); }

inline Json rationals_to_json(std::span<const Rational> v) {
  Json out = Json::array();
  for (const Rational& q : v) out.push_back(rational_to_json(q));
  return out;
}

inline std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, "expected an array of numbers");
  std::vector<Rational> out;
  for (const Json& x : j) out.push_back(rational_from_json(x));
  return out;
}

namespace detail {

inline const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::kParse, std::string("missing field '") + key + "'");
  return j.at(key);
}

inline int require_int(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer()) throw Error(ErrorCode::kParse, std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace detail

// Topology: {"K": int, "alpha": [[...]]}

inline ChannelMatrix channel_from_json(const Json& j) {
  const int k = detail::require_int(j, "K");
  const Json& rows = detail::require(j, "alpha");
  if (!rows.is_array()) throw Error(ErrorCode::kParse, "'alpha' must be an array of rows");
  std::vector<std::vector<Rational>> raw;
  for (const Json& row : rows) raw.push_back(rationals_from_json(row));
  if (k < 1 || static_cast<std::size_t>(k) != raw.size()) {
    throw Error(ErrorCode::kNonSquare, "'K' is " + std::to_string(k) + " but 'alpha' has " +
                                           std::to_string(raw.size()) + " rows");
  }
  return ChannelMatrix::from_rows(raw);
}

inline Json channel_to_json(const ChannelMatrix& channel) {
  Json rows = Json::array();
  for (const auto& row : channel.rows()) rows.push_back(rationals_to_json(row));
  return Json{{"K", channel.users()}, {"alpha", rows}};
}

// Scheme: {"n": int, "streams": [{"user", "vector", "power_exp"}]}

inline Scheme scheme_from_json(const Json& j) {
  Scheme out;
  out.n = detail::require_int(j, "n");
  const Json& streams = detail::require(j, "streams");
  if (!streams.is_array()) throw Error(ErrorCode::kParse, "'streams' must be an array");
  for (const Json& s : streams) {
    Stream st;
    st.user = detail::require_int(s, "user") - 1;
    st.vector = rationals_from_json(detail::require(s, "vector"));
    st.power_exp = rational_from_json(detail::require(s, "power_exp"));
    out.streams.push_back(std::move(st));
  }
  return out;
}

inline Json scheme_to_json(const Scheme& scheme) {
  Json streams = Json::array();
  for (const Stream& s : scheme.streams) {
    streams.push_back(
        Json{{"user", s.user + 1}, {"vector", rationals_to_json(s.vector)}, {"power_exp", rational_to_json(s.power_exp)}});
  }
  return Json{{"n", scheme.n}, {"streams", streams}};
}

// Decomposition map: {"tim_links": [[k,i]...], "tin_links": [[k,i]...]}

inline Json links_to_json(std::span<const CrossLink> links) {
  Json out = Json::array();
  for (const CrossLink& l : links) out.push_back(Json::array({l.receiver + 1, l.transmitter + 1}));
  return out;
}

inline std::vector<CrossLink> links_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, "link list must be an array of [receiver, transmitter]");
  std::vector<CrossLink> out;
  for (const Json& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
      throw Error(ErrorCode::kParse, "link must be [receiver, transmitter], got " + pair.dump());
    }
    out.push_back({pair[0].get<int>() - 1, pair[1].get<int>() - 1});
  }
  return out;
}

inline DecompositionMap map_from_json(const Json& j, int users) {
  return DecompositionMap(users, links_from_json(detail::require(j, "tim_links")),
                          links_from_json(detail::require(j, "tin_links")));
}

inline Json map_to_json(const DecompositionMap& map) {
  return Json{{"tim_links", links_to_json(map.tim_links())}, {"tin_links", links_to_json(map.tin_links())}};
}

inline Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParse, "'" + path.string() + "': " + e.what());
  }
}

inline void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kParse, "cannot write '" + path.string() + "'");
  out << j.dump(2) << '\n';
}

}  // namespace timtin

#endif  // TIMTIN_IO_HPP_
