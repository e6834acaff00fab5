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

#include "wpolar/benzenoid.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <unordered_set>

#include "wpolar/errors.hpp"
#include "wpolar/rng.hpp"

namespace wpolar {
namespace {

std::vector<HexCoord> normalized(std::span<const HexCoord> hexes) {
  std::vector<HexCoord> out(hexes.begin(), hexes.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool sorted_contains(const std::vector<HexCoord>& sorted, HexCoord h) {
  return std::binary_search(sorted.begin(), sorted.end(), h);
}

// Non-member hexagons sharing an edge with a member, sorted.
std::vector<HexCoord> frontier(const std::vector<HexCoord>& sorted) {
  const std::unordered_set<HexCoord> members(sorted.begin(), sorted.end());
  std::unordered_set<HexCoord> outside;
  for (HexCoord h : sorted) {
    for (HexCoord n : hex_neighbors(h)) {
      if (!members.contains(n)) outside.insert(n);
    }
  }
  std::vector<HexCoord> out(outside.begin(), outside.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::string hex_string(HexCoord h) {
  return "(" + std::to_string(h.q) + "," + std::to_string(h.r) + ")";
}

// Edges of g that lie on exactly one member hexagon form the outer boundary
// of a simply connected system. Walk them as a single cycle.
std::vector<VertexId> trace_boundary(const std::vector<HexCoord>& hexes, const MolGraph& g) {
  const auto& edges = g.edges();
  std::vector<int> incidence(edges.size(), 0);
  auto edge_index = [&edges](VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::pair{u, v},
                               [](const Edge& e, const std::pair<VertexId, VertexId>& key) {
                                 return e.u != key.first ? e.u < key.first : e.v < key.second;
                               });
    return static_cast<std::size_t>(it - edges.begin());
  };
  for (HexCoord h : hexes) {
    const auto ring = hexagon_vertices(h);
    for (std::size_t i = 0; i < 6; ++i) {
      ++incidence[edge_index(*g.find_vertex(ring[i]), *g.find_vertex(ring[(i + 1) % 6]))];
    }
  }

  std::vector<std::vector<VertexId>> next(g.vertex_count());
  std::size_t boundary_edges = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (incidence[i] != 1) continue;
    ++boundary_edges;
    next[edges[i].u].push_back(edges[i].v);
    next[edges[i].v].push_back(edges[i].u);
  }
  VertexId start = -1;
  for (VertexId v = 0; v < static_cast<VertexId>(next.size()); ++v) {
    if (next[v].empty()) continue;
    if (next[v].size() != 2) {
      throw Error(ErrorCode::kValidationError,
                  "boundary vertex " + std::to_string(v) + " has " +
                      std::to_string(next[v].size()) + " boundary edges");
    }
    std::sort(next[v].begin(), next[v].end());
    if (start < 0) start = v;
  }
  if (start < 0) throw Error(ErrorCode::kValidationError, "no boundary edges");

  std::vector<VertexId> cycle{start};
  VertexId prev = start;
  VertexId cur = next[start][0];
  while (cur != start) {
    cycle.push_back(cur);
    const VertexId step = next[cur][0] == prev ? next[cur][1] : next[cur][0];
    prev = cur;
    cur = step;
  }
  if (cycle.size() != boundary_edges) {
    throw Error(ErrorCode::kValidationError, "boundary is not a single cycle");
  }
  return cycle;
}

}  // namespace

bool BenzenoidSystem::contains(HexCoord h) const { return sorted_contains(hexes_, h); }

bool hexes_connected(std::span<const HexCoord> hexes) {
  const auto sorted = normalized(hexes);
  if (sorted.empty()) return true;
  std::vector<bool> seen(sorted.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const HexCoord h = sorted[stack.back()];
    stack.pop_back();
    for (HexCoord n : hex_neighbors(h)) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), n);
      if (it == sorted.end() || *it != n) continue;
      const auto idx = static_cast<std::size_t>(it - sorted.begin());
      if (!seen[idx]) {
        seen[idx] = true;
        ++reached;
        stack.push_back(idx);
      }
    }
  }
  return reached == sorted.size();
}

std::vector<HexCoord> enclosed_hexagons(std::span<const HexCoord> hexes) {
  const auto sorted = normalized(hexes);
  if (sorted.empty()) return {};
  int qmin = sorted.front().q, qmax = qmin, rmin = sorted.front().r, rmax = rmin;
  for (HexCoord h : sorted) {
    qmin = std::min(qmin, h.q);
    qmax = std::max(qmax, h.q);
    rmin = std::min(rmin, h.r);
    rmax = std::max(rmax, h.r);
  }
  --qmin;
  --rmin;
  ++qmax;
  ++rmax;
  const int width = qmax - qmin + 1;
  const int height = rmax - rmin + 1;
  auto cell = [&](HexCoord h) { return static_cast<std::size_t>((h.r - rmin) * width + (h.q - qmin)); };

  // 0 = unvisited non-member, 1 = member, 2 = reached from outside
  std::vector<char> state(static_cast<std::size_t>(width) * height, 0);
  for (HexCoord h : sorted) state[cell(h)] = 1;

  std::vector<HexCoord> stack{{qmin, rmin}};
  state[cell({qmin, rmin})] = 2;
  while (!stack.empty()) {
    const HexCoord h = stack.back();
    stack.pop_back();
    for (HexCoord n : hex_neighbors(h)) {
      if (n.q < qmin || n.q > qmax || n.r < rmin || n.r > rmax) continue;
      char& s = state[cell(n)];
      if (s == 0) {
        s = 2;
        stack.push_back(n);
      }
    }
  }

  std::vector<HexCoord> holes;
  for (int r = rmin; r <= rmax; ++r) {
    for (int q = qmin; q <= qmax; ++q) {
      if (state[cell({q, r})] == 0) holes.push_back({q, r});
    }
  }
  std::sort(holes.begin(), holes.end());
  return holes;
}

BenzenoidSystem build_benzenoid(std::span<const HexCoord> hexes) {
  auto sorted = normalized(hexes);
  if (sorted.empty()) throw Error(ErrorCode::kInvalidArgument, "a benzenoid needs at least one hexagon");
  if (!hexes_connected(sorted)) {
    throw Error(ErrorCode::kDisconnectedHexes, "hexagons are not connected by shared edges");
  }
  if (auto holes = enclosed_hexagons(sorted); !holes.empty()) {
    throw Error(ErrorCode::kHasHoles, "hexagon set encloses " + std::to_string(holes.size()) +
                                          " empty hexagon(s), first at " + hex_string(holes.front()));
  }
  MolGraph g = build_graph(sorted);
  auto boundary = trace_boundary(sorted, g);
  return BenzenoidSystem(std::move(sorted), std::move(g), std::move(boundary));
}

const std::vector<VertexId>& boundary_cycle(const BenzenoidSystem& b) { return b.boundary(); }

int internal_vertex_count(const BenzenoidSystem& b) {
  const MolGraph& g = b.graph();
  std::vector<int> on_hexagons(g.vertex_count(), 0);
  for (HexCoord h : b.hexes()) {
    for (LatticeVertex v : hexagon_vertices(h)) ++on_hexagons[*g.find_vertex(v)];
  }
  return static_cast<int>(std::count(on_hexagons.begin(), on_hexagons.end(), 3));
}

CutStats cut_stats(const BenzenoidSystem& b) {
  CutStats out;
  for (DirectionClass d : kAllDirections) {
    out.alpha[index_of(d)] = static_cast<int>(connected_components(delete_direction(b.graph(), d)).size()) - 1;
  }
  return out;
}

CutStats count_elementary_cuts(const BenzenoidSystem& b) {
  static constexpr std::array<HexCoord, 3> kStep = {{{1, 0}, {0, 1}, {1, -1}}};
  CutStats out;
  for (std::size_t i = 0; i < kStep.size(); ++i) {
    // A run starts at every member whose predecessor along the line is absent.
    for (HexCoord h : b.hexes()) {
      if (!b.contains({h.q - kStep[i].q, h.r - kStep[i].r})) ++out.alpha[i];
    }
  }
  return out;
}

ExternalHexTally classify_external_hexagons(const BenzenoidSystem& b) {
  const MolGraph& g = b.graph();
  ExternalHexTally tally;
  for (HexCoord h : frontier(b.hexes())) {
    std::array<std::optional<VertexId>, 6> ring;
    const auto coords = hexagon_vertices(h);
    for (std::size_t i = 0; i < 6; ++i) ring[i] = g.find_vertex(coords[i]);
    const HexIntersection cap = intersect_hexagon(g, ring);
    if (cap.closed) {
      throw Error(ErrorCode::kValidationError,
                  "external hexagon " + hex_string(h) + " has all six edges in the graph");
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

BenzenoidSystem random_benzenoid(int h, std::uint64_t seed) {
  if (h < 1) throw Error(ErrorCode::kParamOutOfRange, "random benzenoid needs h >= 1");
  std::mt19937_64 rng(seed);
  std::vector<HexCoord> members{{0, 0}};
  while (static_cast<int>(members.size()) < h) {
    auto candidates = frontier(members);
    while (true) {
      if (candidates.empty()) {
        throw Error(ErrorCode::kValidationError, "no hexagon can be added without closing a hole");
      }
      const auto pick = static_cast<std::size_t>(uniform_below(rng, candidates.size()));
      const HexCoord next = candidates[pick];
      auto grown = members;
      grown.insert(std::upper_bound(grown.begin(), grown.end(), next), next);
      if (enclosed_hexagons(grown).empty()) {
        members = std::move(grown);
        break;
      }
      candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(pick));
    }
  }
  return build_benzenoid(members);
}

}  // namespace wpolar
