// Copyright 2026 The wpolar Authors
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

#include <chrono>
#include <ostream>

#include "commands.hpp"
#include "wpolar/errors.hpp"
#include "wpolar/io.hpp"
#include "wpolar/polarity.hpp"

namespace wpolar::cli {
namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
MethodResult timed(std::string method, F&& compute) {
  const auto start = Clock::now();
  const std::int64_t value = compute();
  const std::chrono::duration<double, std::milli> elapsed = Clock::now() - start;
  return {std::move(method), value, elapsed.count(), {}};
}

MethodResult unavailable(std::string method, std::string why) {
  return {std::move(method), std::nullopt, 0.0, std::move(why)};
}

std::int64_t cut_for(const Structure& s) {
  if (const auto* b = s.benzenoid()) return wp_cut_method(*b);
  if (const auto* t = s.tubulene()) return wp_cut_method(*t);
  throw Error(ErrorCode::kFormulaUnavailable,
              "the cut method needs hexagon metadata; a raw graph has none");
}

std::int64_t formula_for(const Structure& s) {
  if (const auto* b = s.benzenoid()) return wp_closed(*b);
  if (const auto* t = s.tubulene()) return wp_closed(*t);
  throw Error(ErrorCode::kFormulaUnavailable,
              "no closed formula for a raw graph; use a benzenoid or tubulene input");
}

}  // namespace

int cmd_generate(const TargetOptions& target, std::ostream& out, std::istream& in) {
  const Structure s = resolve_target(target, in);
  nlohmann::ordered_json doc;
  doc["graph"] = graph_to_json(s.graph());
  doc["stats"] = s.stats();
  out << doc.dump() << '\n';
  return kExitOk;
}

int cmd_stats(const TargetOptions& target, std::ostream& out, std::istream& in) {
  const Structure s = resolve_target(target, in);
  out << s.stats().dump() << '\n';
  return kExitOk;
}

Method parse_method(std::string_view text) {
  if (text == "brute") return Method::kBrute;
  if (text == "cut") return Method::kCut;
  if (text == "formula") return Method::kFormula;
  if (text == "all") return Method::kAll;
  throw Error(ErrorCode::kInvalidArgument, "unknown method '" + std::string(text) + "'");
}

nlohmann::ordered_json RunReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["structure"] = structure;
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json entry;
    entry["method"] = r.method;
    if (r.value) {
      entry["value"] = *r.value;
      entry["ms"] = r.ms;
    } else {
      entry["value"] = nullptr;
      entry["note"] = r.note;
    }
    list.push_back(std::move(entry));
  }
  doc["results"] = std::move(list);
  doc["agreement"] = agreement;
  doc["stats"] = stats;
  return doc;
}

RunReport compute_wp(const WpOptions& options, std::istream& in) {
  RunReport report;

  if (!options.benzenoid_params.empty()) {
    const auto& p = options.benzenoid_params;
    if (p.size() != 4) throw Error(ErrorCode::kInvalidArgument, "--benzenoid-params needs H H1 H2 H3");
    if (!options.target.positional.empty() || !options.target.hexes_path.empty() ||
        !options.target.graph_path.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "--benzenoid-params cannot be combined with a structure");
    }
    if (options.method == Method::kBrute || options.method == Method::kCut) {
      throw Error(ErrorCode::kInvalidArgument,
                  "--benzenoid-params only supports --method formula (no graph to traverse)");
    }
    report.structure["kind"] = "benzenoid-params";
    report.structure["h"] = p[0];
    report.structure["external"] = {p[1], p[2], p[3]};
    report.results.push_back(
        timed("formula", [&] { return wp_benzenoid_closed(p[0], p[1], p[2], p[3]); }));
    report.stats = nlohmann::ordered_json::object();
    return report;
  }

  const Structure s = resolve_target(options.target, in);
  report.structure = s.descriptor();
  report.stats = s.stats();

  const bool all = options.method == Method::kAll;
  if (all || options.method == Method::kBrute) {
    report.results.push_back(timed("brute", [&] { return wp_bruteforce(s.graph()); }));
  }
  if (all || options.method == Method::kCut) {
    if (all && s.is_raw_graph()) {
      report.results.push_back(unavailable("cut", "raw graph has no hexagon metadata"));
    } else {
      report.results.push_back(timed("cut", [&] { return cut_for(s); }));
    }
  }
  if (all || options.method == Method::kFormula) {
    if (all && s.is_raw_graph()) {
      report.results.push_back(unavailable("formula", "raw graph has no family metadata"));
    } else {
      report.results.push_back(timed("formula", [&] { return formula_for(s); }));
    }
  }

  std::optional<std::int64_t> first;
  for (const auto& r : report.results) {
    if (!r.value) continue;
    if (!first) first = r.value;
    if (*first != *r.value) report.agreement = false;
  }
  return report;
}

int cmd_wp(const WpOptions& options, std::ostream& out, std::istream& in) {
  const RunReport report = compute_wp(options, in);
  if (options.json) {
    out << report.to_json().dump() << '\n';
  } else {
    out << "structure: " << describe(report.structure) << '\n';
    for (const auto& r : report.results) {
      if (r.value) {
        out << r.method << ": " << *r.value << " (" << r.ms << " ms)\n";
      } else {
        out << r.method << ": unavailable (" << r.note << ")\n";
      }
    }
    if (options.method == Method::kAll) {
      out << "agreement: " << (report.agreement ? "true" : "false") << '\n';
    }
  }
  return report.agreement ? kExitOk : kExitViolation;
}

}  // namespace wpolar::cli
