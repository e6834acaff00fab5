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

#include "wpolar/polarity.hpp"

#include <string>

#include "wpolar/errors.hpp"

namespace wpolar {
namespace {

// Ordered pair counts at each distance 1..cap, BFS from every source.
std::vector<std::int64_t> ordered_census(const MolGraph& g, int cap) {
  const auto n = g.vertex_count();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(cap), 0);
  std::vector<int> dist(n, -1);
  std::vector<VertexId> queue;
  queue.reserve(n);
  for (VertexId s = 0; s < static_cast<VertexId>(n); ++s) {
    queue.clear();
    queue.push_back(s);
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId u = queue[head];
      if (dist[u] == cap) continue;
      for (VertexId w : g.neighbors(u)) {
        if (dist[w] >= 0) continue;
        dist[w] = dist[u] + 1;
        ++counts[static_cast<std::size_t>(dist[w] - 1)];
        queue.push_back(w);
      }
    }
    for (VertexId v : queue) dist[v] = -1;
  }
  return counts;
}

std::int64_t halve(std::int64_t ordered) {
  if (ordered % 2 != 0) {
    throw Error(ErrorCode::kValidationError, "ordered pair count is odd: " + std::to_string(ordered));
  }
  return ordered / 2;
}

}  // namespace

std::int64_t wp_bruteforce(const MolGraph& g) { return halve(ordered_census(g, 3)[2]); }

std::int64_t wp_path_formula(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "path needs n >= 1, got " + std::to_string(n));
  return n <= 2 ? 0 : n - 3;
}

std::int64_t wp_cycle_formula(int n) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "cycle needs n >= 3, got " + std::to_string(n));
  if (n <= 5) return 0;
  if (n == 6) return 3;
  return n;
}

std::int64_t CutDecomposition::direction_term(DirectionClass d) const {
  std::int64_t sum = 0;
  for (const auto& c : per_direction[index_of(d)]) sum += c.wp;
  return sum;
}

std::int64_t CutDecomposition::component_term() const {
  std::int64_t sum = 0;
  for (DirectionClass d : kAllDirections) sum += direction_term(d);
  return sum;
}

std::int64_t CutDecomposition::hexagon_term() const {
  return 3LL * hexagon_count + external.h1 + 2LL * external.h2 + 3LL * external.h3;
}

CutDecomposition cut_decomposition(const MolGraph& g, int hexagon_count,
                                   const ExternalHexTally& external) {
  CutDecomposition out;
  out.hexagon_count = hexagon_count;
  out.external = external;
  for (DirectionClass d : kAllDirections) {
    const MolGraph rest = delete_direction(g, d);
    for (const auto& comp : connected_components(rest)) {
      const ComponentShape shape = component_shape(rest, comp);
      ScoredComponent scored{shape, 0};
      switch (shape.kind) {
        case ComponentShape::Kind::kPath: scored.wp = wp_path_formula(shape.vertices); break;
        case ComponentShape::Kind::kCycle: scored.wp = wp_cycle_formula(shape.vertices); break;
        case ComponentShape::Kind::kOther:
          throw Error(ErrorCode::kMalformedComponent,
                      "component of G - " + std::string(to_string(d)) + " containing vertex " +
                          std::to_string(comp.front()) + " is neither a path nor a cycle");
      }
      out.per_direction[index_of(d)].push_back(scored);
    }
  }
  return out;
}

std::int64_t wp_cut_method(const MolGraph& g, int hexagon_count, const ExternalHexTally& external) {
  return cut_decomposition(g, hexagon_count, external).total();
}

std::int64_t wp_benzenoid_closed(int h, int h1, int h2, int h3) {
  if (h < 1) throw Error(ErrorCode::kInvalidArgument, "benzenoid needs h >= 1");
  if (h1 < 0 || h2 < 0 || h3 < 0) {
    throw Error(ErrorCode::kInvalidArgument, "external hexagon counts must be non-negative");
  }
  return 9LL * h + h1 + 2LL * h2 + 3LL * h3 - 6;
}

std::int64_t wp_zigzag_closed(int r, int h) {
  if (r < 1 || h < 3) throw Error(ErrorCode::kParamOutOfRange, "zig-zag formula needs r >= 1, h >= 3");
  if (h == 3) return 24LL * r - 3;
  return 9LL * r * h;
}

std::int64_t wp_armchair_closed(int r, int h) {
  if (r < 4 || !is_even(r) || h < 1) {
    throw Error(ErrorCode::kParamOutOfRange, "armchair formula needs even r >= 4, h >= 1");
  }
  return 9LL * r * h + r;
}

std::vector<std::int64_t> distance_distribution(const MolGraph& g, int cap) {
  if (cap < 1) throw Error(ErrorCode::kInvalidArgument, "cap must be >= 1");
  auto counts = ordered_census(g, cap);
  for (auto& c : counts) c = halve(c);
  return counts;
}

std::int64_t wp_cut_method(const BenzenoidSystem& b) {
  return wp_cut_method(b.graph(), b.hexagon_count(), classify_external_hexagons(b));
}

std::int64_t wp_cut_method(const Tubulene& t) {
  return wp_cut_method(t.graph(), t.hexagon_count(), classify_external_hexagons_tub(t));
}

std::int64_t wp_closed(const BenzenoidSystem& b) {
  const auto tally = classify_external_hexagons(b);
  return wp_benzenoid_closed(b.hexagon_count(), tally.h1, tally.h2, tally.h3);
}

std::int64_t wp_closed(const Tubulene& t) {
  return t.kind() == Tubulene::Kind::kZigZag ? wp_zigzag_closed(t.r(), t.h())
                                             : wp_armchair_closed(t.r(), t.h());
}

}  // namespace wpolar
