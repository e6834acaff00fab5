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
#include <cstdint>
#include <span>
#include <vector>

#include "wpolar/graph.hpp"
#include "wpolar/hexcore.hpp"

namespace wpolar {

/// Elementary-cut counts per direction class, indexed by index_of(D).
struct CutStats {
  std::array<int, 3> alpha{};

  int total() const { return alpha[0] + alpha[1] + alpha[2]; }
  friend bool operator==(const CutStats&, const CutStats&) = default;
};

/// Number of external hexagons whose largest intersection with the graph is
/// a path on 4, 5 and 6 vertices respectively.
struct ExternalHexTally {
  int h1 = 0;
  int h2 = 0;
  int h3 = 0;

  friend bool operator==(const ExternalHexTally&, const ExternalHexTally&) = default;
};

/// A validated, simply connected set of lattice hexagons with its graph and
/// outer boundary cycle. Immutable once built.
class BenzenoidSystem {
 public:
  /// Sorted, without duplicates.
  const std::vector<HexCoord>& hexes() const { return hexes_; }
  const MolGraph& graph() const { return graph_; }
  /// Boundary cycle as a vertex sequence (first vertex not repeated).
  const std::vector<VertexId>& boundary() const { return boundary_; }
  int hexagon_count() const { return static_cast<int>(hexes_.size()); }

  bool contains(HexCoord h) const;

 private:
  friend BenzenoidSystem build_benzenoid(std::span<const HexCoord> hexes);

  BenzenoidSystem(std::vector<HexCoord> hexes, MolGraph graph, std::vector<VertexId> boundary)
      : hexes_(std::move(hexes)), graph_(std::move(graph)), boundary_(std::move(boundary)) {}

  std::vector<HexCoord> hexes_;
  MolGraph graph_;
  std::vector<VertexId> boundary_;
};

/// True iff the hexagons form one piece under edge adjacency.
bool hexes_connected(std::span<const HexCoord> hexes);

/// Non-member hexagons cut off from the outer face: flood fill over
/// non-members starting outside the bounding box inflated by one.
std::vector<HexCoord> enclosed_hexagons(std::span<const HexCoord> hexes);

/// Throws Error(kInvalidArgument) for an empty set, kDisconnectedHexes,
/// or kHasHoles. Duplicate hexagons are ignored.
BenzenoidSystem build_benzenoid(std::span<const HexCoord> hexes);

/// Outer boundary cycle Z. Starts at the smallest boundary vertex id and
/// continues toward its smaller boundary neighbor.
const std::vector<VertexId>& boundary_cycle(const BenzenoidSystem& b);

/// Vertices lying on three hexagons of the system.
int internal_vertex_count(const BenzenoidSystem& b);

/// alpha_i = (components of G - D_i) - 1.
CutStats cut_stats(const BenzenoidSystem& b);

/// Elementary cuts counted geometrically: a cut orthogonal to D1, D2 or D3
/// crosses a maximal run of member hexagons along (1,0), (0,1) or (1,-1)
/// respectively. Independent of cut_stats(), which counts components.
CutStats count_elementary_cuts(const BenzenoidSystem& b);

/// Throws Error(kValidationError) if some external hexagon has all six of
/// its edges in the graph.
ExternalHexTally classify_external_hexagons(const BenzenoidSystem& b);

/// Grows a random system from {(0,0)} by adding uniformly drawn boundary
/// hexagons (rejecting those that close a hole) until it has h hexagons.
/// Deterministic for a fixed (h, seed). Throws Error(kParamOutOfRange) for h < 1.
BenzenoidSystem random_benzenoid(int h, std::uint64_t seed);

}  // namespace wpolar
