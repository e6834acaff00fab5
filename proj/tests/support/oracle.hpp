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

// Test-only reference implementations. Nothing here calls the BFS or cut
// code under test: distances come from Floyd-Warshall over the edge list.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "wpolar/graph.hpp"

namespace wpolar::testing {

inline constexpr int kUnreachable = std::numeric_limits<int>::max() / 4;

inline std::vector<std::vector<int>> floyd_warshall(const MolGraph& g) {
  const auto n = g.vertex_count();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kUnreachable));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const Edge& e : g.edges()) {
    d[e.u][e.v] = 1;
    d[e.v][e.u] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

/// Unordered pairs at each distance 1..cap.
inline std::vector<std::int64_t> oracle_census(const MolGraph& g, int cap) {
  const auto d = floyd_warshall(g);
  std::vector<std::int64_t> out(static_cast<std::size_t>(cap), 0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[i][j] >= 1 && d[i][j] <= cap) ++out[static_cast<std::size_t>(d[i][j] - 1)];
    }
  }
  return out;
}

inline std::int64_t oracle_wp(const MolGraph& g) { return oracle_census(g, 3)[2]; }

/// Path on n vertices laid along y = 0 (a genuine lattice path).
inline MolGraph path_graph(int n) {
  std::vector<LatticeVertex> vs;
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) vs.push_back({i, 0});
  for (int i = 0; i + 1 < n; ++i) {
    es.push_back({i, i + 1, is_even(i) ? DirectionClass::D2 : DirectionClass::D3});
  }
  return MolGraph(std::move(vs), std::move(es));
}

/// Cycle on n vertices. Coordinates are placeholders; only adjacency matters.
inline MolGraph cycle_graph(int n) {
  std::vector<LatticeVertex> vs;
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) vs.push_back({i, 0});
  for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n, kAllDirections[static_cast<std::size_t>(i % 3)]});
  return MolGraph(std::move(vs), std::move(es));
}

/// Vertex and edge counts of a hexagon union, computed straight from the
/// anchor rule with std::set.
inline std::pair<std::size_t, std::size_t> union_counts(const std::vector<HexCoord>& hexes) {
  std::set<std::pair<int, int>> vertices;
  std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> edges;
  for (HexCoord h : hexes) {
    const int ax = 2 * h.q + h.r;
    const int ay = h.r;
    const std::pair<int, int> ring[6] = {{ax, ay},         {ax + 1, ay},     {ax + 2, ay},
                                         {ax + 2, ay + 1}, {ax + 1, ay + 1}, {ax, ay + 1}};
    for (int i = 0; i < 6; ++i) {
      vertices.insert(ring[i]);
      auto a = ring[i];
      auto b = ring[(i + 1) % 6];
      if (b < a) std::swap(a, b);
      edges.insert({a, b});
    }
  }
  return {vertices.size(), edges.size()};
}

inline HexCoord random_hex(std::mt19937_64& rng, int radius) {
  std::uniform_int_distribution<int> coord(-radius, radius);
  return {coord(rng), coord(rng)};
}

}  // namespace wpolar::testing
