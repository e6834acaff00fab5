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

#include "wpolar/hexcore.hpp"

#include <string>

#include "wpolar/errors.hpp"

namespace wpolar {

std::string_view to_string(DirectionClass d) {
  switch (d) {
    case DirectionClass::D1: return "D1";
    case DirectionClass::D2: return "D2";
    case DirectionClass::D3: return "D3";
  }
  return "D?";
}

DirectionClass parse_direction(std::string_view text) {
  if (text == "D1") return DirectionClass::D1;
  if (text == "D2") return DirectionClass::D2;
  if (text == "D3") return DirectionClass::D3;
  throw Error(ErrorCode::kParseError, "unknown direction class '" + std::string(text) + "'");
}

HexCoord hexagon_from_anchor(LatticeVertex anchor) {
  if (!is_even(anchor.x + anchor.y)) {
    throw Error(ErrorCode::kInvalidArgument, "hexagon anchor must have even x + y");
  }
  return {(anchor.x - anchor.y) / 2, anchor.y};
}

std::array<LatticeVertex, 6> hexagon_vertices(HexCoord h) {
  const LatticeVertex a = hexagon_anchor(h);
  return {{{a.x, a.y},
           {a.x + 1, a.y},
           {a.x + 2, a.y},
           {a.x + 2, a.y + 1},
           {a.x + 1, a.y + 1},
           {a.x, a.y + 1}}};
}

std::array<HexCoord, 6> hex_neighbors(HexCoord h) {
  return {{{h.q + 1, h.r},
           {h.q - 1, h.r},
           {h.q, h.r + 1},
           {h.q, h.r - 1},
           {h.q + 1, h.r - 1},
           {h.q - 1, h.r + 1}}};
}

bool is_lattice_edge(LatticeVertex u, LatticeVertex v) {
  if (u.y == v.y) return u.x - v.x == 1 || v.x - u.x == 1;
  if (u.x != v.x) return false;
  const int low = u.y < v.y ? u.y : v.y;
  const int gap = u.y < v.y ? v.y - u.y : u.y - v.y;
  return gap == 1 && is_even(u.x + low);
}

DirectionClass edge_direction(LatticeVertex u, LatticeVertex v) {
  if (!is_lattice_edge(u, v)) {
    throw Error(ErrorCode::kInvalidEdge,
                "(" + std::to_string(u.x) + "," + std::to_string(u.y) + ")-(" +
                    std::to_string(v.x) + "," + std::to_string(v.y) + ") is not a lattice edge");
  }
  if (u.x == v.x) return DirectionClass::D1;
  const LatticeVertex& left = u.x < v.x ? u : v;
  return is_even(left.x + left.y) ? DirectionClass::D2 : DirectionClass::D3;
}

}  // namespace wpolar
