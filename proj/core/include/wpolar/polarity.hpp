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

// Wiener polarity index W_p: the number of unordered vertex pairs at
// distance exactly three. Three routes are provided: a BFS count, the
// hexagon/component decomposition, and closed formulas per family.

#include <array>
#include <cstdint>
#include <vector>

#include "wpolar/benzenoid.hpp"
#include "wpolar/graph.hpp"
#include "wpolar/tubulene.hpp"

namespace wpolar {

/// Counts pairs at distance 3 with a BFS capped at depth 3 from every vertex.
std::int64_t wp_bruteforce(const MolGraph& g);

/// W_p of the path on n vertices: 0 for n <= 2, else n - 3.
/// Throws Error(kInvalidArgument) for n < 1.
std::int64_t wp_path_formula(int n);

/// W_p of the cycle on n vertices: 0 for n in {3,4,5}, 3 for n = 6, n otherwise.
/// Throws Error(kInvalidArgument) for n < 3.
std::int64_t wp_cycle_formula(int n);

struct ScoredComponent {
  ComponentShape shape;
  std::int64_t wp = 0;
};

/// Components of G - D_i for each direction class, each scored with the
/// path or cycle formula, plus the hexagon-local data the sum needs.
struct CutDecomposition {
  std::array<std::vector<ScoredComponent>, 3> per_direction;
  int hexagon_count = 0;
  ExternalHexTally external;

  std::int64_t direction_term(DirectionClass d) const;
  /// Sum of W_p over all components of all three deletions.
  std::int64_t component_term() const;
  /// 3h + h1 + 2 h2 + 3 h3.
  std::int64_t hexagon_term() const;
  std::int64_t total() const { return hexagon_term() + component_term(); }
};

/// Throws Error(kMalformedComponent) if some G - D_i has a component that is
/// neither a path nor a cycle.
CutDecomposition cut_decomposition(const MolGraph& g, int hexagon_count,
                                   const ExternalHexTally& external);

/// 3h + h1 + 2 h2 + 3 h3 + sum of component W_p.
std::int64_t wp_cut_method(const MolGraph& g, int hexagon_count, const ExternalHexTally& external);

/// 9h + h1 + 2 h2 + 3 h3 - 6. Throws Error(kInvalidArgument) for h < 1 or a
/// negative tally.
std::int64_t wp_benzenoid_closed(int h, int h1, int h2, int h3);

/// 24r - 3 for h = 3, 9rh for h >= 4. Throws Error(kParamOutOfRange) unless
/// r >= 1 and h >= 3.
std::int64_t wp_zigzag_closed(int r, int h);

/// 9rh + r. Throws Error(kParamOutOfRange) unless r is even, r >= 4, h >= 1.
std::int64_t wp_armchair_closed(int r, int h);

/// Unordered pair counts at distances 1..cap; element [d - 1] is the count
/// at distance d. Throws Error(kInvalidArgument) for cap < 1.
std::vector<std::int64_t> distance_distribution(const MolGraph& g, int cap);

// Family conveniences: compute the tally from the structure, then dispatch.
std::int64_t wp_cut_method(const BenzenoidSystem& b);
std::int64_t wp_cut_method(const Tubulene& t);
std::int64_t wp_closed(const BenzenoidSystem& b);
std::int64_t wp_closed(const Tubulene& t);

}  // namespace wpolar
