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

#include <span>
#include <vector>

#include "wpolar/benzenoid.hpp"
#include "wpolar/graph.hpp"
#include "wpolar/hexcore.hpp"

namespace wpolar {

/// Representative of v's orbit under translation by wrap: the preimage with
/// 0 <= x < wrap.dx. Requires wrap.dx > 0 and wrap.dx + wrap.dy even.
LatticeVertex canonical_vertex(LatticeVertex v, BrickVector wrap);

/// Hexagon whose anchor is the canonical anchor of h's orbit.
HexCoord canonical_hexagon(HexCoord h, BrickVector wrap);

/// Graph of a hexagon set on the cylinder obtained by identifying lattice
/// points that differ by a multiple of wrap. Direction classes come from the
/// lattice, which the (parity-preserving) wrap leaves unchanged.
/// Throws Error(kInvalidArgument) for an unusable wrap and
/// Error(kMalformedGraph) if the identification creates loops or multi-edges.
MolGraph quotient_graph(std::span<const HexCoord> hexes, BrickVector wrap);

/// Open-ended zig-zag or armchair nanotube with straight ends.
class Tubulene {
 public:
  enum class Kind { kZigZag, kArmchair };

  Kind kind() const { return kind_; }
  /// Layers (zig-zag) or columns (armchair).
  int r() const { return r_; }
  /// Hexagons per layer (zig-zag) or per column (armchair).
  int h() const { return h_; }

  const MolGraph& graph() const { return graph_; }
  BrickVector wrap() const { return wrap_; }
  /// Canonical hexagons of the tube, sorted.
  const std::vector<HexCoord>& hexes() const { return hexes_; }
  int hexagon_count() const { return static_cast<int>(hexes_.size()); }

  LatticeVertex canonical(LatticeVertex v) const { return canonical_vertex(v, wrap_); }
  HexCoord canonical(HexCoord hex) const { return canonical_hexagon(hex, wrap_); }
  bool contains(HexCoord hex) const;

 private:
  friend Tubulene build_zigzag(int r, int h);
  friend Tubulene build_armchair(int r, int h);

  Tubulene(Kind kind, int r, int h, BrickVector wrap, std::span<const HexCoord> hexes);

  Kind kind_;
  int r_;
  int h_;
  BrickVector wrap_;
  std::vector<HexCoord> hexes_;
  MolGraph graph_;
};

std::string_view to_string(Tubulene::Kind kind);

/// ZT(r, h): r layers of h hexagons, rolled up along the zig-zag direction.
/// Wrap vector (2h, 0). Throws Error(kParamOutOfRange) unless r >= 1, h >= 3.
Tubulene build_zigzag(int r, int h);

/// AT(r, h): r columns of h hexagons, rolled up along the armchair direction
/// parallel to the D2 edges. Wrap vector (3r/2, -r/2). Throws
/// Error(kParamOutOfRange) unless r is even, r >= 4, h >= 1.
Tubulene build_armchair(int r, int h);

/// Largest number of edges shared by two distinct hexagons of the tube.
int max_shared_edges(const Tubulene& t);

/// Tally of external hexagons at the two open ends, classified exactly as
/// for benzenoids. Throws Error(kValidationError) on a closed intersection.
ExternalHexTally classify_external_hexagons_tub(const Tubulene& t);

}  // namespace wpolar
