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

#include "wpolar/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "wpolar/errors.hpp"

namespace wpolar {
namespace {

std::string coord_string(LatticeVertex v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

}  // namespace

MolGraph::MolGraph(std::vector<LatticeVertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  const auto n = static_cast<VertexId>(vertices_.size());
  if (vertices_.size() > static_cast<std::size_t>(std::numeric_limits<VertexId>::max())) {
    throw Error(ErrorCode::kMalformedGraph, "too many vertices");
  }

  lookup_.reserve(vertices_.size());
  for (VertexId id = 0; id < n; ++id) lookup_.emplace_back(vertices_[id], id);
  std::sort(lookup_.begin(), lookup_.end());
  for (std::size_t i = 1; i < lookup_.size(); ++i) {
    if (lookup_[i - 1].first == lookup_[i].first) {
      throw Error(ErrorCode::kMalformedGraph,
                  "duplicate vertex coordinate " + coord_string(lookup_[i].first));
    }
  }

  for (Edge& e : edges_) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(ErrorCode::kMalformedGraph,
                  "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                      " references an unknown vertex");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kMalformedGraph, "loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v) {
      throw Error(ErrorCode::kMalformedGraph, "parallel edge " + std::to_string(edges_[i].u) +
                                                  "-" + std::to_string(edges_[i].v));
    }
  }

  // CSR adjacency; neighbors come out sorted because edges are sorted by (u, v)
  // and each list is filled in two passes below.
  std::vector<std::size_t> degree(vertices_.size(), 0);
  for (const Edge& e : edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_.assign(vertices_.size() + 1, 0);
  for (std::size_t i = 0; i < vertices_.size(); ++i) offsets_[i + 1] = offsets_[i] + degree[i];
  adjacency_.resize(offsets_.back());
  adjacency_direction_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[fill[e.u]] = e.v;
    adjacency_direction_[fill[e.u]++] = e.direction;
    adjacency_[fill[e.v]] = e.u;
    adjacency_direction_[fill[e.v]++] = e.direction;
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto begin = offsets_[i];
    const auto end = offsets_[i + 1];
    std::vector<std::pair<VertexId, DirectionClass>> row;
    for (auto k = begin; k < end; ++k) row.emplace_back(adjacency_[k], adjacency_direction_[k]);
    std::sort(row.begin(), row.end());
    for (auto k = begin; k < end; ++k) {
      adjacency_[k] = row[k - begin].first;
      adjacency_direction_[k] = row[k - begin].second;
    }
  }
}

const LatticeVertex& MolGraph::vertex(VertexId id) const {
  if (!contains(id)) throw Error(ErrorCode::kInvalidVertex, "unknown vertex id " + std::to_string(id));
  return vertices_[static_cast<std::size_t>(id)];
}

std::span<const VertexId> MolGraph::neighbors(VertexId id) const {
  if (!contains(id)) throw Error(ErrorCode::kInvalidVertex, "unknown vertex id " + std::to_string(id));
  const auto i = static_cast<std::size_t>(id);
  return {adjacency_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
}

std::optional<VertexId> MolGraph::find_vertex(LatticeVertex coord) const {
  auto it = std::lower_bound(lookup_.begin(), lookup_.end(), coord,
                             [](const auto& entry, const LatticeVertex& c) { return entry.first < c; });
  if (it == lookup_.end() || it->first != coord) return std::nullopt;
  return it->second;
}

std::optional<DirectionClass> MolGraph::edge_between(VertexId a, VertexId b) const {
  if (!contains(a) || !contains(b)) return std::nullopt;
  const auto i = static_cast<std::size_t>(a);
  for (auto k = offsets_[i]; k < offsets_[i + 1]; ++k) {
    if (adjacency_[k] == b) return adjacency_direction_[k];
  }
  return std::nullopt;
}

MolGraph build_graph(std::span<const HexCoord> hexes) {
  std::vector<LatticeVertex> coords;
  coords.reserve(hexes.size() * 6);
  for (HexCoord h : hexes) {
    for (LatticeVertex v : hexagon_vertices(h)) coords.push_back(v);
  }
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());

  auto id_of = [&coords](LatticeVertex v) {
    return static_cast<VertexId>(std::lower_bound(coords.begin(), coords.end(), v) - coords.begin());
  };

  std::vector<Edge> edges;
  edges.reserve(hexes.size() * 6);
  for (HexCoord h : hexes) {
    const auto ring = hexagon_vertices(h);
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const LatticeVertex a = ring[i];
      const LatticeVertex b = ring[(i + 1) % ring.size()];
      VertexId u = id_of(a);
      VertexId v = id_of(b);
      if (u > v) std::swap(u, v);
      edges.push_back({u, v, edge_direction(a, b)});
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  return MolGraph(std::move(coords), std::move(edges));
}

std::map<VertexId, int> bfs_distances_capped(const MolGraph& g, VertexId src, int cap) {
  if (!g.contains(src)) throw Error(ErrorCode::kInvalidVertex, "unknown vertex id " + std::to_string(src));
  if (cap < 0) throw Error(ErrorCode::kInvalidArgument, "cap must be non-negative");

  std::map<VertexId, int> dist{{src, 0}};
  std::queue<VertexId> frontier;
  frontier.push(src);
  while (!frontier.empty()) {
    const VertexId u = frontier.front();
    frontier.pop();
    const int du = dist[u];
    if (du == cap) continue;
    for (VertexId w : g.neighbors(u)) {
      if (dist.emplace(w, du + 1).second) frontier.push(w);
    }
  }
  return dist;
}

MolGraph delete_direction(const MolGraph& g, DirectionClass d) {
  std::vector<Edge> kept;
  kept.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    if (e.direction != d) kept.push_back(e);
  }
  return MolGraph(g.vertices(), std::move(kept));
}

std::vector<std::vector<VertexId>> connected_components(const MolGraph& g) {
  const auto n = static_cast<VertexId>(g.vertex_count());
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> stack;
  for (VertexId start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<VertexId> comp;
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (VertexId w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::string to_string(const ComponentShape& shape) {
  switch (shape.kind) {
    case ComponentShape::Kind::kPath: return "Path(" + std::to_string(shape.vertices) + ")";
    case ComponentShape::Kind::kCycle: return "Cycle(" + std::to_string(shape.vertices) + ")";
    case ComponentShape::Kind::kOther: return "Other(" + std::to_string(shape.vertices) + ")";
  }
  return "?";
}

ComponentShape component_shape(const MolGraph& g, std::span<const VertexId> comp) {
  if (comp.empty()) throw Error(ErrorCode::kNotConnected, "empty component");

  std::vector<VertexId> members(comp.begin(), comp.end());
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw Error(ErrorCode::kNotConnected, "component lists a vertex twice");
  }
  auto is_member = [&members](VertexId v) {
    return std::binary_search(members.begin(), members.end(), v);
  };

  std::size_t degree_sum = 0;
  std::size_t max_degree = 0;
  for (VertexId v : members) {
    for (VertexId w : g.neighbors(v)) {
      if (!is_member(w)) {
        throw Error(ErrorCode::kNotConnected,
                    "vertex " + std::to_string(v) + " has a neighbor outside the component");
      }
    }
    degree_sum += g.degree(v);
    max_degree = std::max(max_degree, g.degree(v));
  }

  // Reachability from the first member must cover the whole set.
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> stack{members.front()};
  seen[members.front()] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != members.size()) {
    throw Error(ErrorCode::kNotConnected, "vertex set is not connected");
  }

  const auto n = static_cast<int>(members.size());
  const std::size_t edge_count = degree_sum / 2;
  if (max_degree <= 2) {
    if (edge_count + 1 == members.size()) return ComponentShape::path(n);
    if (edge_count == members.size() && n >= 3) return ComponentShape::cycle(n);
  }
  return ComponentShape::other(n);
}

bool is_bipartite(const MolGraph& g) {
  std::vector<int> color(g.vertex_count(), -1);
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < static_cast<VertexId>(g.vertex_count()); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbors(u)) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          stack.push_back(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<int> girth(const MolGraph& g) {
  const auto n = g.vertex_count();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n);
  std::vector<VertexId> parent(n);
  std::vector<VertexId> queue;
  queue.reserve(n);
  for (VertexId s = 0; s < static_cast<VertexId>(n); ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    dist[s] = 0;
    parent[s] = -1;
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId u = queue[head];
      // Nothing shorter can be found beyond this depth.
      if (2 * dist[u] + 1 >= best) break;
      for (VertexId w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::vector<std::string> lattice_invariant_violations(const MolGraph& g) {
  std::vector<std::string> out;
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
    if (g.degree(v) > 3) {
      out.push_back("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    }
    std::array<int, 3> per_class{};
    for (VertexId w : g.neighbors(v)) ++per_class[index_of(*g.edge_between(v, w))];
    for (DirectionClass d : kAllDirections) {
      if (per_class[index_of(d)] > 1) {
        out.push_back("vertex " + std::to_string(v) + " has " +
                      std::to_string(per_class[index_of(d)]) + " edges of class " +
                      std::string(to_string(d)));
      }
    }
  }
  if (!is_bipartite(g)) out.emplace_back("graph is not bipartite");
  return out;
}

HexIntersection intersect_hexagon(const MolGraph& g,
                                  const std::array<std::optional<VertexId>, 6>& ring) {
  std::array<bool, 6> edge{};
  HexIntersection out;
  for (std::size_t i = 0; i < 6; ++i) {
    const auto& a = ring[i];
    const auto& b = ring[(i + 1) % 6];
    edge[i] = a && b && g.edge_between(*a, *b).has_value();
    if (edge[i]) ++out.shared_edges;
  }
  if (out.shared_edges == 6) {
    out.largest_component = 6;
    out.closed = true;
    return out;
  }

  for (const auto& v : ring) {
    if (v) out.largest_component = std::max(out.largest_component, 1);
  }
  // Longest run of consecutive present edges, walking around the ring twice
  // so that runs crossing index 0 are counted whole.
  int run = 0;
  for (std::size_t i = 0; i < 12; ++i) {
    run = edge[i % 6] ? run + 1 : 0;
    out.largest_component = std::max(out.largest_component, run > 0 ? run + 1 : 0);
  }
  return out;
}

}  // namespace wpolar
