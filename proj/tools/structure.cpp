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

#include "structure.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "wpolar/errors.hpp"
#include "wpolar/io.hpp"

namespace wpolar::cli {
namespace {

[[noreturn]] void bad_target(const std::string& message) {
  throw Error(ErrorCode::kInvalidArgument, message);
}

int parse_int(const std::string& text, const char* what) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) bad_target(std::string(what) + " must be an integer, got '" + text + "'");
  return value;
}

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

Structure load_benzenoid(const std::string& path, std::istream& in) {
  std::istringstream text(slurp(path, in));
  const auto hexes = parse_hex_set(text);
  nlohmann::ordered_json desc;
  desc["kind"] = "benzenoid";
  desc["source"] = path;
  return {build_benzenoid(hexes), std::move(desc)};
}

Structure load_graph(const std::string& path, std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(slurp(path, in));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, std::string("graph JSON: ") + e.what());
  }
  // Accept the bare graph object or a `generate` document that wraps it.
  if (doc.is_object() && doc.contains("graph")) doc = doc["graph"];
  nlohmann::ordered_json desc;
  desc["kind"] = "graph";
  desc["source"] = path;
  return {graph_from_json(doc), std::move(desc)};
}

}  // namespace

const MolGraph& Structure::graph() const {
  return std::visit(
      [](const auto& p) -> const MolGraph& {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, MolGraph>) {
          return p;
        } else {
          return p.graph();
        }
      },
      payload_);
}

nlohmann::ordered_json Structure::stats() const {
  if (const auto* b = benzenoid()) return stats_json(*b);
  if (const auto* t = tubulene()) return stats_json(*t);
  nlohmann::ordered_json doc;
  doc["n"] = graph().vertex_count();
  doc["m"] = graph().edge_count();
  return doc;
}

Structure resolve_target(const TargetOptions& options, std::istream& in) {
  const auto& args = options.positional;
  if (args.empty()) {
    if (!options.hexes_path.empty()) return load_benzenoid(options.hexes_path, in);
    if (!options.graph_path.empty()) return load_graph(options.graph_path, in);
    bad_target("no structure given (zigzag R H | armchair R H | random H | benzenoid --hexes PATH | graph PATH)");
  }

  const std::string& kind = args.front();
  auto expect_args = [&](std::size_t count, const char* usage) {
    if (args.size() != count + 1) bad_target(std::string("usage: ") + usage);
  };

  if (kind == "zigzag" || kind == "armchair") {
    expect_args(2, kind == "zigzag" ? "zigzag R H" : "armchair R H");
    const int r = parse_int(args[1], "R");
    const int h = parse_int(args[2], "H");
    nlohmann::ordered_json desc;
    desc["kind"] = kind;
    desc["r"] = r;
    desc["h"] = h;
    return {kind == "zigzag" ? build_zigzag(r, h) : build_armchair(r, h), std::move(desc)};
  }
  if (kind == "random") {
    expect_args(1, "random H [--seed N]");
    const int h = parse_int(args[1], "H");
    nlohmann::ordered_json desc;
    desc["kind"] = "random";
    desc["h"] = h;
    desc["seed"] = options.seed;
    return {random_benzenoid(h, options.seed), std::move(desc)};
  }
  if (kind == "benzenoid") {
    if (args.size() == 2) return load_benzenoid(args[1], in);
    expect_args(0, "benzenoid --hexes PATH");
    if (options.hexes_path.empty()) bad_target("benzenoid needs --hexes PATH");
    return load_benzenoid(options.hexes_path, in);
  }
  if (kind == "graph") {
    if (args.size() == 2) return load_graph(args[1], in);
    expect_args(0, "graph PATH");
    if (options.graph_path.empty()) bad_target("graph needs a PATH");
    return load_graph(options.graph_path, in);
  }
  bad_target("unknown structure kind '" + kind + "'");
}

std::string describe(const nlohmann::ordered_json& descriptor) {
  std::string out = descriptor.value("kind", "?");
  for (const auto& [key, value] : descriptor.items()) {
    if (key == "kind") continue;
    out += " " + key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
  }
  return out;
}

}  // namespace wpolar::cli
