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

#pragma once

// Text and JSON exchange formats.
//
// Hexagon-set text: one "q r" pair per line; '#' starts a comment; blank
// lines are ignored; a repeated pair is an error.
//
// Graph JSON:
//   {"vertices":[{"id":0,"x":0,"y":0},...],"edges":[[0,1,"D2"],...]}

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wpolar/benzenoid.hpp"
#include "wpolar/graph.hpp"
#include "wpolar/tubulene.hpp"

namespace wpolar {

/// Throws Error(kParseError) with the offending line number, or
/// Error(kDuplicateHex).
std::vector<HexCoord> parse_hex_set(std::istream& in);
std::vector<HexCoord> read_hex_set_file(const std::filesystem::path& path);
std::string format_hex_set(std::span<const HexCoord> hexes);

nlohmann::ordered_json graph_to_json(const MolGraph& g);
/// Vertex ids must be exactly 0..n-1 (in any order). Throws
/// Error(kParseError) on schema problems and Error(kMalformedGraph) for
/// graphs that are not simple.
MolGraph graph_from_json(const nlohmann::json& doc);

/// {"h","n","m","boundary","internal","alpha":[a1,a2,a3],"external":[h1,h2,h3]}
nlohmann::ordered_json stats_json(const BenzenoidSystem& b);
/// {"kind","r","h","n","hexagons","external":[h1,h2,h3]}
nlohmann::ordered_json stats_json(const Tubulene& t);

}  // namespace wpolar
