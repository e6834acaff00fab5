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

#include "wpolar/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "wpolar/errors.hpp"

namespace wpolar {
namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorCode::kParseError, "graph JSON: " + what);
}

}  // namespace

std::vector<HexCoord> parse_hex_set(std::istream& in) {
  std::vector<HexCoord> out;
  std::vector<std::pair<HexCoord, int>> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    HexCoord h;
    if (!(fields >> h.q)) {
      fields.clear();
      std::string rest;
      if (fields >> rest) {
        throw Error(ErrorCode::kParseError,
                    "line " + std::to_string(line_no) + ": expected two integers 'q r'");
      }
      continue;
    }
    std::string trailing;
    if (!(fields >> h.r) || (fields >> trailing)) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no) + ": expected two integers 'q r'");
    }
    out.push_back(h);
    seen.emplace_back(h, line_no);
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 1; i < seen.size(); ++i) {
    if (seen[i].first == seen[i - 1].first) {
      throw Error(ErrorCode::kDuplicateHex,
                  "line " + std::to_string(seen[i].second) + ": hexagon (" +
                      std::to_string(seen[i].first.q) + "," + std::to_string(seen[i].first.r) +
                      ") already listed on line " + std::to_string(seen[i - 1].second));
    }
  }
  return out;
}

std::vector<HexCoord> read_hex_set_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path.string());
  return parse_hex_set(in);
}

std::string format_hex_set(std::span<const HexCoord> hexes) {
  std::string out;
  for (HexCoord h : hexes) out += std::to_string(h.q) + " " + std::to_string(h.r) + "\n";
  return out;
}

nlohmann::ordered_json graph_to_json(const MolGraph& g) {
  nlohmann::ordered_json vertices = nlohmann::ordered_json::array();
  for (VertexId id = 0; id < static_cast<VertexId>(g.vertex_count()); ++id) {
    const LatticeVertex& v = g.vertex(id);
    nlohmann::ordered_json entry;
    entry["id"] = id;
    entry["x"] = v.x;
    entry["y"] = v.y;
    vertices.push_back(std::move(entry));
  }
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back(nlohmann::ordered_json::array({e.u, e.v, std::string(to_string(e.direction))}));
  }
  nlohmann::ordered_json doc;
  doc["vertices"] = std::move(vertices);
  doc["edges"] = std::move(edges);
  return doc;
}

MolGraph graph_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) schema_error("top level must be an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) schema_error("missing 'vertices' array");
  if (!doc.contains("edges") || !doc["edges"].is_array()) schema_error("missing 'edges' array");

  const auto& vs = doc["vertices"];
  std::vector<LatticeVertex> vertices(vs.size());
  std::vector<bool> assigned(vs.size(), false);
  for (const auto& entry : vs) {
    if (!entry.is_object()) schema_error("vertex entries must be objects");
    for (const char* key : {"id", "x", "y"}) {
      if (!entry.contains(key) || !entry[key].is_number_integer()) {
        schema_error(std::string("vertex entry needs integer '") + key + "'");
      }
    }
    const auto id = entry["id"].get<long long>();
    if (id < 0 || static_cast<std::size_t>(id) >= vs.size() || assigned[static_cast<std::size_t>(id)]) {
      schema_error("vertex ids must be exactly 0.." + std::to_string(vs.size() - 1));
    }
    assigned[static_cast<std::size_t>(id)] = true;
    vertices[static_cast<std::size_t>(id)] = {entry["x"].get<int>(), entry["y"].get<int>()};
  }

  std::vector<Edge> edges;
  edges.reserve(doc["edges"].size());
  for (const auto& entry : doc["edges"]) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer() || !entry[2].is_string()) {
      schema_error("edges must be [u, v, \"D1\"|\"D2\"|\"D3\"]");
    }
    edges.push_back({entry[0].get<VertexId>(), entry[1].get<VertexId>(),
                     parse_direction(entry[2].get<std::string>())});
  }
  return MolGraph(std::move(vertices), std::move(edges));
}

nlohmann::ordered_json stats_json(const BenzenoidSystem& b) {
  const CutStats cuts = cut_stats(b);
  const ExternalHexTally tally = classify_external_hexagons(b);
  nlohmann::ordered_json doc;
  doc["h"] = b.hexagon_count();
  doc["n"] = b.graph().vertex_count();
  doc["m"] = b.graph().edge_count();
  doc["boundary"] = b.boundary().size();
  doc["internal"] = internal_vertex_count(b);
  doc["alpha"] = {cuts.alpha[0], cuts.alpha[1], cuts.alpha[2]};
  doc["external"] = {tally.h1, tally.h2, tally.h3};
  return doc;
}

nlohmann::ordered_json stats_json(const Tubulene& t) {
  const ExternalHexTally tally = classify_external_hexagons_tub(t);
  nlohmann::ordered_json doc;
  doc["kind"] = std::string(to_string(t.kind()));
  doc["r"] = t.r();
  doc["h"] = t.h();
  doc["n"] = t.graph().vertex_count();
  doc["hexagons"] = t.hexagon_count();
  doc["external"] = {tally.h1, tally.h2, tally.h3};
  return doc;
}

}  // namespace wpolar
