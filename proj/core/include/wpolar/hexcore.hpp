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

// Integer coordinates for the hexagonal lattice.
//
// Hexagons use axial coordinates (q, r). Vertices live on a brick-wall grid:
// every (x, y) is a vertex, horizontal edges (x, y)-(x+1, y) always exist and
// the vertical edge (x, y)-(x, y+1) exists iff x + y is even. Hexagon (q, r)
// is the 3x2 block of vertices anchored at (2q + r, r).

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>

namespace wpolar {

struct HexCoord {
  int q = 0;
  int r = 0;

  friend auto operator<=>(const HexCoord&, const HexCoord&) = default;
};

/// Vertex of the brick-wall embedding. Ordered by (y, x), which is the
/// order used for dense vertex ids.
struct LatticeVertex {
  int x = 0;
  int y = 0;

  friend bool operator==(const LatticeVertex&, const LatticeVertex&) = default;
  friend std::strong_ordering operator<=>(const LatticeVertex& a, const LatticeVertex& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

/// Integer translation in brick-wall coordinates.
struct BrickVector {
  int dx = 0;
  int dy = 0;

  friend bool operator==(const BrickVector&, const BrickVector&) = default;
};

/// The three edge orientations of the lattice.
///   D1: vertical edges
///   D2: horizontal edges whose left endpoint has x + y even
///   D3: horizontal edges whose left endpoint has x + y odd
enum class DirectionClass : std::uint8_t { D1 = 0, D2 = 1, D3 = 2 };

inline constexpr std::array<DirectionClass, 3> kAllDirections = {
    DirectionClass::D1, DirectionClass::D2, DirectionClass::D3};

constexpr std::size_t index_of(DirectionClass d) { return static_cast<std::size_t>(d); }

std::string_view to_string(DirectionClass d);
/// Parses "D1" / "D2" / "D3"; throws Error(kParseError) otherwise.
DirectionClass parse_direction(std::string_view text);

constexpr bool is_even(int v) { return (v & 1) == 0; }

/// Anchor (lower-left vertex) of a hexagon; always has even x + y.
constexpr LatticeVertex hexagon_anchor(HexCoord h) { return {2 * h.q + h.r, h.r}; }

/// Inverse of hexagon_anchor. Requires an anchor with even x + y.
HexCoord hexagon_from_anchor(LatticeVertex anchor);

/// The 6 vertices of a hexagon in cyclic order, starting at the anchor and
/// walking the bottom row left to right. Consecutive pairs (with wrap) are
/// the hexagon's edges, classed D2, D3, D1, D2, D3, D1.
std::array<LatticeVertex, 6> hexagon_vertices(HexCoord h);

/// The 6 edge-adjacent hexagons: (q+-1, r), (q, r+-1), (q+1, r-1), (q-1, r+1).
std::array<HexCoord, 6> hex_neighbors(HexCoord h);

/// True iff u-v is an edge of the infinite lattice.
bool is_lattice_edge(LatticeVertex u, LatticeVertex v);

/// Direction class of a lattice edge; throws Error(kInvalidEdge) if u and v
/// are not adjacent.
DirectionClass edge_direction(LatticeVertex u, LatticeVertex v);

}  // namespace wpolar

template <>
struct std::hash<wpolar::HexCoord> {
  std::size_t operator()(const wpolar::HexCoord& h) const noexcept {
    const auto a = static_cast<std::uint64_t>(static_cast<std::uint32_t>(h.q));
    const auto b = static_cast<std::uint64_t>(static_cast<std::uint32_t>(h.r));
    return std::hash<std::uint64_t>{}((a << 32) | b);
  }
};

template <>
struct std::hash<wpolar::LatticeVertex> {
  std::size_t operator()(const wpolar::LatticeVertex& v) const noexcept {
    const auto a = static_cast<std::uint64_t>(static_cast<std::uint32_t>(v.x));
    const auto b = static_cast<std::uint64_t>(static_cast<std::uint32_t>(v.y));
    return std::hash<std::uint64_t>{}((a << 32) | b);
  }
};
