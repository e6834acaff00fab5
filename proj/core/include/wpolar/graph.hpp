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

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wpolar/hexcore.hpp"

namespace wpolar {

using VertexId = std::int32_t;

/// Undirected edge, stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  DirectionClass direction = DirectionClass::D1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite simple graph embedded in the hexagonal lattice. Every vertex
/// carries its lattice coordinate and every edge its direction class.
///
/// Construction only enforces that the graph is simple and that vertex
/// coordinates are unique; the lattice properties (max degree 3, no two
/// same-class edges sharing a vertex, bipartite) are reported by
/// lattice_invariant_violations() so that malformed inputs stay
/// representable.
class MolGraph {
 public:
  MolGraph() = default;
  /// Throws Error(kMalformedGraph) on out-of-range ids, loops, parallel edges
  /// or duplicate coordinates.
  MolGraph(std::vector<LatticeVertex> vertices, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<LatticeVertex>& vertices() const { return vertices_; }
  /// Sorted by (u, v).
  const std::vector<Edge>& edges() const { return edges_; }

  bool contains(VertexId id) const {
    return id >= 0 && static_cast<std::size_t>(id) < vertices_.size();
  }
  const LatticeVertex& vertex(VertexId id) const;

  /// Neighbors in increasing id order.
  std::span<const VertexId> neighbors(VertexId id) const;
  std::size_t degree(VertexId id) const { return neighbors(id).size(); }

  std::optional<VertexId> find_vertex(LatticeVertex coord) const;
  std::optional<DirectionClass> edge_between(VertexId a, VertexId b) const;

  friend bool operator==(const MolGraph& a, const MolGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<LatticeVertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adjacency_;
  std::vector<DirectionClass> adjacency_direction_;
  std::vector<std::pair<LatticeVertex, VertexId>> lookup_;
};

/// Union-of-hexagons graph. Vertex ids follow (y, x) order; duplicate
/// hexagons in the input are ignored.
MolGraph build_graph(std::span<const HexCoord> hexes);

/// Distances from src to every vertex at distance <= cap.
/// Throws Error(kInvalidVertex) for an unknown src.
std::map<VertexId, int> bfs_distances_capped(const MolGraph& g, VertexId src, int cap);

/// Same vertex set, edges of class d removed.
MolGraph delete_direction(const MolGraph& g, DirectionClass d);

/// Components as sorted id lists, ordered by smallest id.
std::vector<std::vector<VertexId>> connected_components(const MolGraph& g);

struct ComponentShape {
  enum class Kind { kPath, kCycle, kOther };

  Kind kind = Kind::kOther;
  int vertices = 0;

  static ComponentShape path(int n) { return {Kind::kPath, n}; }
  static ComponentShape cycle(int n) { return {Kind::kCycle, n}; }
  static ComponentShape other(int n) { return {Kind::kOther, n}; }

  bool is_path() const { return kind == Kind::kPath; }
  bool is_cycle() const { return kind == Kind::kCycle; }

  friend bool operator==(const ComponentShape&, const ComponentShape&) = default;
};

std::string to_string(const ComponentShape& shape);

/// Classifies a connected component by its degree census. Isolated vertices
/// are Path(1). Throws Error(kNotConnected) if comp is not a connected
/// component of g.
ComponentShape component_shape(const MolGraph& g, std::span<const VertexId> comp);

bool is_bipartite(const MolGraph& g);

/// Length of a shortest cycle, or nullopt for a forest.
std::optional<int> girth(const MolGraph& g);

/// Human-readable list of broken lattice properties; empty when the graph
/// has max degree 3, no two same-class edges at a vertex, and is bipartite.
std::vector<std::string> lattice_invariant_violations(const MolGraph& g);

/// Intersection of a lattice hexagon (given by its 6 cyclic vertices) with a
/// graph: vertices of the hexagon present in g, and hexagon edges present in g.
struct HexIntersection {
  int shared_edges = 0;
  /// Vertex count of the largest connected piece.
  int largest_component = 0;
  /// All 6 edges present, so the largest piece is a 6-cycle, not a path.
  bool closed = false;
};

HexIntersection intersect_hexagon(const MolGraph& g,
                                  const std::array<std::optional<VertexId>, 6>& ring);

}  // namespace wpolar
