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

#include "wpolar/hexcore.hpp"

#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "support/oracle.hpp"
#include "wpolar/errors.hpp"

namespace wpolar {
namespace {

std::set<LatticeVertex> as_set(const std::array<LatticeVertex, 6>& ring) {
  return {ring.begin(), ring.end()};
}

std::set<LatticeVertex> shared(HexCoord a, HexCoord b) {
  const auto sa = as_set(hexagon_vertices(a));
  const auto sb = as_set(hexagon_vertices(b));
  std::set<LatticeVertex> out;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(out, out.end()));
  return out;
}

TEST(HexagonVertices, Origin) {
  const std::set<LatticeVertex> expected{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}};
  EXPECT_EQ(as_set(hexagon_vertices({0, 0})), expected);
}

TEST(HexagonVertices, RightNeighborSharesVerticalEdge) {
  const std::set<LatticeVertex> expected{{2, 0}, {3, 0}, {4, 0}, {2, 1}, {3, 1}, {4, 1}};
  EXPECT_EQ(as_set(hexagon_vertices({1, 0})), expected);
  EXPECT_EQ(shared({0, 0}, {1, 0}), (std::set<LatticeVertex>{{2, 0}, {2, 1}}));
}

TEST(HexagonVertices, UpperNeighborSharesHorizontalEdge) {
  EXPECT_EQ(hexagon_anchor({0, 1}), (LatticeVertex{1, 1}));
  EXPECT_EQ(shared({0, 0}, {0, 1}), (std::set<LatticeVertex>{{1, 1}, {2, 1}}));
}

TEST(HexagonVertices, AnchorRoundTrip) {
  for (int q = -4; q <= 4; ++q) {
    for (int r = -4; r <= 4; ++r) {
      const LatticeVertex a = hexagon_anchor({q, r});
      EXPECT_TRUE(is_even(a.x + a.y));
      EXPECT_EQ(hexagon_from_anchor(a), (HexCoord{q, r}));
    }
  }
  EXPECT_THROW(hexagon_from_anchor({1, 0}), Error);
}

TEST(HexNeighbors, SixDistinctEachSharingOneEdge) {
  const HexCoord h{3, -2};
  const auto ns = hex_neighbors(h);
  EXPECT_EQ(std::set<HexCoord>(ns.begin(), ns.end()).size(), 6u);
  for (HexCoord n : ns) {
    const auto common = shared(h, n);
    ASSERT_EQ(common.size(), 2u);
    EXPECT_TRUE(is_lattice_edge(*common.begin(), *common.rbegin()));
  }
  // Non-neighbours share no vertex at all.
  EXPECT_TRUE(shared(h, {h.q + 1, h.r + 1}).empty());
  EXPECT_TRUE(shared(h, {h.q + 2, h.r}).empty());
}

TEST(EdgeDirection, Examples) {
  EXPECT_EQ(edge_direction({0, 0}, {0, 1}), DirectionClass::D1);
  EXPECT_EQ(edge_direction({0, 0}, {1, 0}), DirectionClass::D2);
  EXPECT_EQ(edge_direction({1, 0}, {2, 0}), DirectionClass::D3);
  EXPECT_EQ(edge_direction({2, 0}, {1, 0}), DirectionClass::D3);
}

TEST(EdgeDirection, RejectsNonEdges) {
  EXPECT_THROW(edge_direction({1, 0}, {1, 1}), Error);  // odd column, no vertical edge
  EXPECT_THROW(edge_direction({0, 0}, {2, 0}), Error);
  EXPECT_THROW(edge_direction({0, 0}, {1, 1}), Error);
  try {
    edge_direction({0, 0}, {0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidEdge);
  }
}

TEST(LatticeEdges, VerticalIffEvenParity) {
  for (int x = -3; x <= 3; ++x) {
    for (int y = -3; y <= 3; ++y) {
      EXPECT_EQ(is_lattice_edge({x, y}, {x, y + 1}), is_even(x + y));
      EXPECT_TRUE(is_lattice_edge({x, y}, {x + 1, y}));
    }
  }
}

// Every hexagon: consecutive ring pairs are lattice edges, classed
// D2, D3, D1, D2, D3, D1, so each class appears exactly twice.
TEST(HexagonVertices, RandomHexagonsAlternateClasses) {
  std::mt19937_64 rng(2024);
  constexpr std::array<DirectionClass, 6> kPattern = {DirectionClass::D2, DirectionClass::D3,
                                                      DirectionClass::D1, DirectionClass::D2,
                                                      DirectionClass::D3, DirectionClass::D1};
  for (int trial = 0; trial < 500; ++trial) {
    const HexCoord h = testing::random_hex(rng, 1000);
    const auto ring = hexagon_vertices(h);
    std::array<int, 3> per_class{};
    for (std::size_t i = 0; i < 6; ++i) {
      const DirectionClass d = edge_direction(ring[i], ring[(i + 1) % 6]);
      EXPECT_EQ(d, kPattern[i]);
      ++per_class[index_of(d)];
    }
    EXPECT_EQ(per_class, (std::array<int, 3>{2, 2, 2}));
    // The two D1 edges sit at the x-extremes.
    EXPECT_EQ(ring[2].x, ring[0].x + 2);
    EXPECT_EQ(ring[5].x, ring[0].x);
  }
}

TEST(DirectionNames, RoundTrip) {
  for (DirectionClass d : kAllDirections) EXPECT_EQ(parse_direction(to_string(d)), d);
  EXPECT_THROW(parse_direction("D4"), Error);
}

}  // namespace
}  // namespace wpolar
