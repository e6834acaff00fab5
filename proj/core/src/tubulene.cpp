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

#include "wpolar/tubulene.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "wpolar/errors.hpp"

namespace wpolar {
namespace {

void check_wrap(BrickVector wrap) {
  if (wrap.dx <= 0 || !is_even(wrap.dx + wrap.dy)) {
    throw Error(ErrorCode::kInvalidArgument,
                "wrap vector must have dx > 0 and even dx + dy");
  }
}

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::vector<HexCoord> canonical_set(std::span<const HexCoord> hexes, BrickVector wrap) {
  std::vector<HexCoord> out;
  out.reserve(hexes.size());
  for (HexCoord h : hexes) out.push_back(canonical_hexagon(h, wrap));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

LatticeVertex canonical_vertex(LatticeVertex v, BrickVector wrap) {
  check_wrap(wrap);
  const int k = floor_div(v.x, wrap.dx);
  return {v.x - k * wrap.dx, v.y - k * wrap.dy};
}

HexCoord canonical_hexagon(HexCoord h, BrickVector wrap) {
  return hexagon_from_anchor(canonical_vertex(hexagon_anchor(h), wrap));
}

MolGraph quotient_graph(std::span<const HexCoord> hexes, BrickVector wrap) {
  check_wrap(wrap);
  std::vector<LatticeVertex> coords;
  coords.reserve(hexes.size() * 6);
  for (HexCoord h : hexes) {
    for (LatticeVertex v : hexagon_vertices(h)) coords.push_back(canonical_vertex(v, wrap));
  }
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());

  auto id_of = [&](LatticeVertex v) {
    const LatticeVertex c = canonical_vertex(v, wrap);
    return static_cast<VertexId>(std::lower_bound(coords.begin(), coords.end(), c) - coords.begin());
  };

  std::vector<Edge> edges;
  for (HexCoord h : hexes) {
    const auto ring = hexagon_vertices(h);
    for (std::size_t i = 0; i < 6; ++i) {
      const LatticeVertex a = ring[i];
      const LatticeVertex b = ring[(i + 1) % 6];
      VertexId u = id_of(a);
      VertexId v = id_of(b);
      if (u > v) std::swap(u, v);
      edges.push_back({u, v, edge_direction(a, b)});
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    if (a.u != b.u) return a.u < b.u;
    if (a.v != b.v) return a.v < b.v;
    return a.direction < b.direction;
  });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return MolGraph(std::move(coords), std::move(edges));
}

Tubulene::Tubulene(Kind kind, int r, int h, BrickVector wrap, std::span<const HexCoord> hexes)
    : kind_(kind), r_(r), h_(h), wrap_(wrap), hexes_(canonical_set(hexes, wrap)),
      graph_(quotient_graph(hexes_, wrap)) {}

bool Tubulene::contains(HexCoord hex) const {
  return std::binary_search(hexes_.begin(), hexes_.end(), canonical(hex));
}

std::string_view to_string(Tubulene::Kind kind) {
  return kind == Tubulene::Kind::kZigZag ? "zigzag" : "armchair";
}

Tubulene build_zigzag(int r, int h) {
  if (r < 1 || h < 3) {
    throw Error(ErrorCode::kParamOutOfRange,
                "zig-zag tubulene needs r >= 1 and h >= 3, got r=" + std::to_string(r) +
                    " h=" + std::to_string(h));
  }
  std::vector<HexCoord> hexes;
  hexes.reserve(static_cast<std::size_t>(r) * h);
  for (int layer = 0; layer < r; ++layer) {
    for (int q = 0; q < h; ++q) hexes.push_back({q, layer});
  }
  return Tubulene(Tubulene::Kind::kZigZag, r, h, {2 * h, 0}, hexes);
}

Tubulene build_armchair(int r, int h) {
  if (r < 4 || !is_even(r) || h < 1) {
    throw Error(ErrorCode::kParamOutOfRange,
                "armchair tubulene needs even r >= 4 and h >= 1, got r=" + std::to_string(r) +
                    " h=" + std::to_string(h));
  }
  // Neighboring columns alternate between a +(1,0) and a +(1,-1) step, so odd
  // columns sit half a hexagon higher along the tube axis.
  std::vector<HexCoord> hexes;
  hexes.reserve(static_cast<std::size_t>(r) * h);
  for (int column = 0; column < r; ++column) {
    const HexCoord base{column, -(column / 2)};
    for (int k = 0; k < h; ++k) hexes.push_back({base.q, base.r + k});
  }
  return Tubulene(Tubulene::Kind::kArmchair, r, h, {3 * r / 2, -r / 2}, hexes);
}

int max_shared_edges(const Tubulene& t) {
  const MolGraph& g = t.graph();
  std::vector<std::vector<std::pair<VertexId, VertexId>>> rings;
  rings.reserve(t.hexes().size());
  for (HexCoord h : t.hexes()) {
    const auto coords = hexagon_vertices(h);
    std::vector<std::pair<VertexId, VertexId>> ring;
    for (std::size_t i = 0; i < 6; ++i) {
      VertexId u = *g.find_vertex(t.canonical(coords[i]));
      VertexId v = *g.find_vertex(t.canonical(coords[(i + 1) % 6]));
      ring.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(ring.begin(), ring.end());
    rings.push_back(std::move(ring));
  }
  int best = 0;
  for (std::size_t a = 0; a < rings.size(); ++a) {
    for (std::size_t b = a + 1; b < rings.size(); ++b) {
      std::vector<std::pair<VertexId, VertexId>> common;
      std::set_intersection(rings[a].begin(), rings[a].end(), rings[b].begin(), rings[b].end(),
                            std::back_inserter(common));
      best = std::max(best, static_cast<int>(common.size()));
    }
  }
  return best;
}

ExternalHexTally classify_external_hexagons_tub(const Tubulene& t) {
  std::vector<HexCoord> outside;
  for (HexCoord h : t.hexes()) {
    for (HexCoord n : hex_neighbors(h)) {
      if (!t.contains(n)) outside.push_back(t.canonical(n));
    }
  }
  std::sort(outside.begin(), outside.end());
  outside.erase(std::unique(outside.begin(), outside.end()), outside.end());

  const MolGraph& g = t.graph();
  ExternalHexTally tally;
  for (HexCoord h : outside) {
    std::array<std::optional<VertexId>, 6> ring;
    const auto coords = hexagon_vertices(h);
    for (std::size_t i = 0; i < 6; ++i) ring[i] = g.find_vertex(t.canonical(coords[i]));
    const HexIntersection cap = intersect_hexagon(g, ring);
    if (cap.closed) {
      throw Error(ErrorCode::kValidationError, "external hexagon (" + std::to_string(h.q) + "," +
                                                   std::to_string(h.r) + ") is closed");
    }
    switch (cap.largest_component) {
      case 4: ++tally.h1; break;
      case 5: ++tally.h2; break;
      case 6: ++tally.h3; break;
      default: break;
    }
  }
  return tally;
}

}  // namespace wpolar
