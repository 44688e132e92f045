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

// Command-line front end. Exit codes: 0 success, 1 domain error (reported as
// {"error": ..., "kind": ...} on stdout), 2 usage error (on stderr).

#ifndef TIMTIN_TOOLS_CLI_HPP_
#define TIMTIN_TOOLS_CLI_HPP_

#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "timtin/decomp.hpp"
#include "timtin/evaluator.hpp"
#include "timtin/io.hpp"
#include "timtin/oracle.hpp"
#include "timtin/tim.hpp"
#include "timtin/tin.hpp"

namespace timtin::cli {

namespace detail {

inline std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

inline std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const std::string& item : split_list(text, ',')) out.push_back(parse_rational(item));
  return out;
}

inline std::vector<double> parse_snr_list(const std::string& text) {
  std::vector<double> out;
  for (const std::string& item : split_list(text, ',')) {
    std::size_t used = 0;
    double value = 0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty()) throw Error(ErrorCode::kParse, "bad P value '" + item + "'");
    out.push_back(value);
  }
  return out;
}

/// "1-4,2-1": receiver 1 hears transmitter 4, receiver 2 hears transmitter 1.
/// Shortest decimal string that reads back as the same double.
inline Json float_to_json(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

inline Json floats_to_json(const std::vector<double>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(float_to_json(x));
  return out;
}

inline std::vector<CrossLink> parse_link_list(const std::string& text) {
  std::vector<CrossLink> out;
  for (const std::string& item : split_list(text, ',')) {
    const std::vector<std::string> ends = split_list(item, '-');
    if (ends.size() != 2) throw Error(ErrorCode::kParse, "link '" + item + "' is not receiver-transmitter");
    try {
      out.push_back({std::stoi(ends[0]) - 1, std::stoi(ends[1]) - 1});
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParse, "link '" + item + "' is not receiver-transmitter");
    }
  }
  return out;
}

inline Json report_json(const GDoFReport& report, bool with_streams) {
  Json d_prime = Json::array(), d_dprime = Json::array(), gdof = Json::array(), streams = Json::array();
  for (const UserGdof& u : report.users) {
    d_prime.push_back(rational_to_json(u.d_prime));
    d_dprime.push_back(rational_to_json(u.d_dprime));
    gdof.push_back(rational_to_json(u.gdof));
    streams.push_back(rationals_to_json(u.streams));
  }
  Json out{{"n", report.n}, {"d_prime", d_prime}, {"d_dprime", d_dprime}, {"gdof", gdof}};
  if (with_streams) out["streams"] = streams;
  return out;
}

inline Json tim_json(const TimSolution& sol) {
  Json methods = Json::array(), directions = Json::array();
  for (TimMethod m : sol.user_methods) methods.push_back(std::string(method_name(m)));
  for (const auto& user_dirs : sol.directions) {
    Json dirs = Json::array();
    for (const auto& d : user_dirs) dirs.push_back(rationals_to_json(d));
    directions.push_back(dirs);
  }
  return Json{{"fractions", rationals_to_json(sol.fractions)},
              {"method", std::string(method_name(sol.method))},
              {"user_methods", methods},
              {"n", sol.n},
              {"directions", directions}};
}

inline Json result_json(const DecompositionResult& r) {
  return Json{{"mask", mask_string(r.tim_mask)},
              {"map", map_to_json(r.map)},
              {"tin_fractions", rationals_to_json(r.tin_fractions)},
              {"tim_fractions", rationals_to_json(r.tim_fractions)},
              {"tim_method", std::string(method_name(r.tim_method))},
              {"products", rationals_to_json(r.products)},
              {"power_exp", rationals_to_json(r.power_exp)},
              {"n", r.scheme.n},
              {"verified", rationals_to_json(r.verified)},
              {"verdict", r.verdict}};
}

struct Options {
  std::string topology;
  std::string scheme;
  std::string snr_list = "1e6,1e10";
  std::uint64_t seed = 0;
  std::string target;
  std::string threshold = "0";
  std::string links;
  int users = 0;
  int exhaustive_cap = 16;
  std::string emit_dir;
  std::string map_file;
  std::string tin_targets;
  std::string weights;
  std::vector<std::string> tuples;
  std::string report_file;
};

inline ChannelMatrix load_channel(const std::string& path) { return channel_from_json(read_json_file(path)); }

inline Scheme load_scheme(const std::string& path, const ChannelMatrix& channel) {
  return validate_scheme(scheme_from_json(read_json_file(path)), channel);
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized degrees of freedom of TIM-TIN schemes", "timtin"};
  app.require_subcommand(1);
  detail::Options opt;

  auto add_topology = [&](CLI::App* cmd) {
    cmd->add_option("-t,--topology", opt.topology, "Topology JSON file")->required();
  };
  auto add_scheme = [&](CLI::App* cmd) {
    cmd->add_option("-s,--scheme", opt.scheme, "Scheme JSON file")->required();
  };

  CLI::App* eval = app.add_subcommand("eval", "GDoF of a scheme on a channel");
  add_topology(eval);
  add_scheme(eval);
  CLI::App* sc = app.add_subcommand("sc", "GDoF with per-stream successive-cancellation breakdown");
  add_topology(sc);
  add_scheme(sc);
  CLI::App* oracle = app.add_subcommand("oracle", "Finite-P rates and slope estimates");
  add_topology(oracle);
  add_scheme(oracle);
  oracle->add_option("-P,--snr", opt.snr_list, "Comma-separated P values, e.g. 1e6,1e10");
  oracle->add_option("--seed", opt.seed, "Phase seed");
  CLI::App* tin = app.add_subcommand("tin", "Power control with interference treated as noise");
  add_topology(tin);
  tin->add_option("--target", opt.target, "Comma-separated per-user GDoF targets (feasibility mode)");
  CLI::App* tim = app.add_subcommand("tim", "Interference avoidance on a binary topology");
  tim->add_option("-t,--topology", opt.topology, "Topology JSON file");
  tim->add_option("--threshold", opt.threshold, "Links stronger than this become TIM links");
  tim->add_option("--links", opt.links, "Explicit links receiver-transmitter, e.g. 1-4,2-1");
  tim->add_option("-K,--users", opt.users, "User count for --links");
  CLI::App* decompose = app.add_subcommand("decompose", "Search TIM-TIN decompositions");
  add_topology(decompose);
  decompose->add_option("--exhaustive-cap", opt.exhaustive_cap, "Enumerate all maps up to this many links");
  decompose->add_option("--emit-schemes", opt.emit_dir, "Write one scheme JSON per frontier point here");
  decompose->add_option("--map", opt.map_file, "Evaluate only this decomposition map");
  decompose->add_option("--tin-targets", opt.tin_targets, "Per-user TIN targets for --map");
  CLI::App* timeshare = app.add_subcommand("timeshare", "Convex combination of GDoF tuples");
  timeshare->add_option("-w,--weights", opt.weights, "Comma-separated weights summing to 1")->required();
  timeshare->add_option("--tuple", opt.tuples, "Comma-separated GDoF tuple (repeatable)");
  timeshare->add_option("-r,--report", opt.report_file, "Use the frontier of a decompose report");

  std::vector<std::string> argv_store;
  argv_store.push_back("timtin");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "timtin: " << e.what() << "\n" << "Run with --help for usage.\n";
    return 2;
  }

  try {
    Json result;
    if (eval->parsed() || sc->parsed()) {
      const ChannelMatrix channel = detail::load_channel(opt.topology);
      const Scheme scheme = detail::load_scheme(opt.scheme, channel);
      const bool with_streams = sc->parsed();
      result = detail::report_json(evaluate_scheme(scheme, channel, with_streams), with_streams);
    } else if (oracle->parsed()) {
      const ChannelMatrix channel = detail::load_channel(opt.topology);
      const Scheme scheme = detail::load_scheme(opt.scheme, channel);
      const std::vector<double> snrs = detail::parse_snr_list(opt.snr_list);
      if (snrs.empty()) throw Error(ErrorCode::kInvalidArgument, "no P values given");
      Json rates = Json::array();
      for (double p : snrs) rates.push_back(detail::floats_to_json(finite_p_rate(scheme, channel, p, opt.seed)));
      result = Json{{"P", detail::floats_to_json(snrs)}, {"seed", opt.seed}, {"rates", rates},
                    {"gdof", rationals_to_json(evaluate_scheme(scheme, channel).gdof())}};
      if (snrs.size() >= 2) {
        result["slopes"] = detail::floats_to_json(slope_estimate(scheme, channel, snrs.front(), snrs.back(), opt.seed));
      }
    } else if (tin->parsed()) {
      const ChannelMatrix channel = detail::load_channel(opt.topology);
      if (!opt.target.empty()) {
        const std::vector<Rational> target = detail::parse_rational_list(opt.target);
        const TinSolution sol = tin_feasible(channel, target);
        result = Json{{"feasible", sol.feasible}, {"target", rationals_to_json(target)}};
        if (sol.feasible) result["r"] = rationals_to_json(sol.r);
        else result["cycle_weight"] = rational_to_json(sol.cycle_weight);
      } else {
        const TinSymmetric sym = tin_symmetric(channel);
        result = Json{{"d_sym", rational_to_json(sym.d_sym)},
                      {"feasible", sym.solution.feasible},
                      {"r", rationals_to_json(sym.solution.r)}};
      }
    } else if (tim->parsed()) {
      TimTopology topology;
      if (!opt.links.empty()) {
        if (!opt.topology.empty()) throw CLI::ValidationError("--links and --topology are exclusive");
        if (opt.users < 1) throw CLI::ValidationError("--links needs -K");
        topology = TimTopology(opt.users, detail::parse_link_list(opt.links));
      } else {
        if (opt.topology.empty()) throw CLI::ValidationError("tim needs --topology or --links");
        topology = TimTopology::from_channel(detail::load_channel(opt.topology), parse_rational(opt.threshold));
      }
      result = detail::tim_json(tim_solve(topology));
    } else if (decompose->parsed()) {
      const ChannelMatrix channel = detail::load_channel(opt.topology);
      Json links = links_to_json(channel.cross_links());
      if (!opt.map_file.empty()) {
        const DecompositionMap map = map_from_json(read_json_file(opt.map_file), channel.users());
        std::optional<std::vector<Rational>> targets;
        if (!opt.tin_targets.empty()) targets = detail::parse_rational_list(opt.tin_targets);
        const DecompositionResult r = evaluate_map(channel, map, targets);
        result = detail::result_json(r);
        result["links"] = links;
        result["scheme"] = scheme_to_json(r.scheme);
      } else {
        if (!opt.tin_targets.empty()) throw CLI::ValidationError("--tin-targets requires --map");
        const SearchReport report = search(channel, {opt.exhaustive_cap});
        Json results = Json::array(), frontier = Json::array();
        std::size_t failed = 0;
        for (const auto& r : report.results) {
          results.push_back(detail::result_json(r));
          if (!r.verdict) ++failed;
        }
        if (!opt.emit_dir.empty()) std::filesystem::create_directories(opt.emit_dir);
        for (std::size_t idx : report.frontier) {
          const auto& r = report.results[idx];
          Json point{{"index", idx}, {"mask", mask_string(r.tim_mask)}, {"verified", rationals_to_json(r.verified)}};
          if (!opt.emit_dir.empty()) {
            const std::filesystem::path path =
                std::filesystem::path(opt.emit_dir) / ("scheme_" + mask_string(r.tim_mask) + ".json");
            write_json_file(path, scheme_to_json(r.scheme));
            point["scheme_file"] = path.filename().string();
          }
          frontier.push_back(point);
        }
        result = Json{{"K", channel.users()},         {"links", links},   {"exhaustive", report.exhaustive},
                      {"maps_evaluated", report.results.size()}, {"failed_verdicts", failed},
                      {"results", results},             {"frontier", frontier}};
      }
    } else if (timeshare->parsed()) {
      const std::vector<Rational> weights = detail::parse_rational_list(opt.weights);
      std::vector<std::vector<Rational>> tuples;
      for (const std::string& t : opt.tuples) tuples.push_back(detail::parse_rational_list(t));
      if (!opt.report_file.empty()) {
        const Json report = read_json_file(opt.report_file);
        const Json& frontier = report.at("frontier");
        for (const Json& point : frontier) tuples.push_back(rationals_from_json(point.at("verified")));
      }
      result = Json{{"gdof", rationals_to_json(time_share(tuples, weights))}};
    }
    out << result.dump(2) << "\n";
    return 0;
  } catch (const CLI::ValidationError& e) {
    err << "timtin: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    out << Json{{"error", e.what()}, {"kind", std::string(e.kind())}}.dump(2) << "\n";
    return 1;
  } catch (const Json::exception& e) {
    out << Json{{"error", e.what()}, {"kind", "ParseError"}}.dump(2) << "\n";
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    out << Json{{"error", e.what()}, {"kind", "IoError"}}.dump(2) << "\n";
    return 1;
  }
}

}  // namespace timtin::cli

#endif  // TIMTIN_TOOLS_CLI_HPP_
