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

#include <gtest/gtest.h>

#include "wpolar/errors.hpp"

namespace wpolar {
namespace {

ErrorCode tube_error(bool zigzag, int r, int h) {
  try {
    if (zigzag) {
      build_zigzag(r, h);
    } else {
      build_armchair(r, h);
    }
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a throw for (" << r << "," << h << ")";
  return ErrorCode::kInvalidArgument;
}

std::vector<ComponentShape> shapes_after(const MolGraph& g, DirectionClass d) {
  const MolGraph rest = delete_direction(g, d);
  std::vector<ComponentShape> out;
  for (const auto& comp : connected_components(rest)) out.push_back(component_shape(rest, comp));
  return out;
}

TEST(CanonicalVertex, ReducesModuloWrap) {
  const BrickVector wrap{8, 0};
  EXPECT_EQ(canonical_vertex({9, 2}, wrap), (LatticeVertex{1, 2}));
  EXPECT_EQ(canonical_vertex({-1, 2}, wrap), (LatticeVertex{7, 2}));
  const BrickVector tilted{6, -2};
  EXPECT_EQ(canonical_vertex({7, 0}, tilted), (LatticeVertex{1, 2}));
  EXPECT_EQ(canonical_vertex({-6, 5}, tilted), (LatticeVertex{0, 3}));
}

TEST(BuildZigzag, Sizes) {
  const auto t = build_zigzag(3, 4);
  EXPECT_EQ(t.graph().vertex_count(), 32u);
  EXPECT_EQ(t.hexagon_count(), 12);
  EXPECT_EQ(t.graph().edge_count(), 44u);
  EXPECT_EQ(build_zigzag(1, 3).graph().vertex_count(), 12u);
}

TEST(BuildArmchair, Sizes) {
  EXPECT_EQ(build_armchair(6, 4).graph().vertex_count(), 60u);
  EXPECT_EQ(build_armchair(4, 1).graph().vertex_count(), 16u);
  EXPECT_EQ(build_armchair(6, 4).hexagon_count(), 24);
}

TEST(BuildTubes, ParameterErrors) {
  EXPECT_EQ(tube_error(true, 1, 2), ErrorCode::kParamOutOfRange);
  EXPECT_EQ(tube_error(true, 0, 3), ErrorCode::kParamOutOfRange);
  EXPECT_EQ(tube_error(false, 5, 2), ErrorCode::kParamOutOfRange);
  EXPECT_EQ(tube_error(false, 2, 2), ErrorCode::kParamOutOfRange);
  EXPECT_EQ(tube_error(false, 4, 0), ErrorCode::kParamOutOfRange);
}

TEST(BuildTubes, VertexCountsOverGrid) {
  for (int r = 1; r <= 6; ++r) {
    for (int h = 3; h <= 8; ++h) {
      const auto t = build_zigzag(r, h);
      EXPECT_EQ(t.graph().vertex_count(), static_cast<std::size_t>(2 * h * (r + 1)));
      EXPECT_EQ(t.hexagon_count(), r * h);
    }
  }
  for (int r = 4; r <= 10; r += 2) {
    for (int h = 1; h <= 6; ++h) {
      const auto t = build_armchair(r, h);
      EXPECT_EQ(t.graph().vertex_count(), static_cast<std::size_t>(r * (2 * h + 2)));
      EXPECT_EQ(t.hexagon_count(), r * h);
    }
  }
}

TEST(BuildTubes, GirthAndOverlap) {
  for (const auto& t : {build_zigzag(1, 3), build_zigzag(4, 5), build_armchair(4, 1),
                        build_armchair(8, 3)}) {
    EXPECT_EQ(girth(t.graph()), 6);
    EXPECT_TRUE(is_bipartite(t.graph()));
    EXPECT_LE(max_shared_edges(t), 1);
    EXPECT_TRUE(lattice_invariant_violations(t.graph()).empty());
  }
}

TEST(BuildTubes, DegreesAreTwoOrThree) {
  const auto t = build_armchair(6, 3);
  int rim = 0;
  for (VertexId v = 0; v < static_cast<VertexId>(t.graph().vertex_count()); ++v) {
    const int d = t.graph().degree(v);
    EXPECT_TRUE(d == 2 || d == 3);
    rim += d == 2;
  }
  // Each rim holds r degree-2 vertices.
  EXPECT_EQ(rim, 12);
}

TEST(ZigzagComponents, Structure) {
  const int r = 3;
  const int h = 4;
  const auto g = build_zigzag(r, h).graph();
  // Deleting D1 leaves r + 1 circumferential cycles.
  const auto d1 = shapes_after(g, DirectionClass::D1);
  ASSERT_EQ(d1.size(), static_cast<std::size_t>(r + 1));
  for (const auto& s : d1) EXPECT_EQ(s, ComponentShape::cycle(2 * h));
  for (DirectionClass d : {DirectionClass::D2, DirectionClass::D3}) {
    const auto shapes = shapes_after(g, d);
    ASSERT_EQ(shapes.size(), static_cast<std::size_t>(h));
    for (const auto& s : shapes) EXPECT_EQ(s, ComponentShape::path(2 * r + 2));
  }
}

TEST(ArmchairComponents, Structure) {
  const int r = 6;
  const int h = 4;
  const auto g = build_armchair(r, h).graph();
  const auto d2 = shapes_after(g, DirectionClass::D2);
  ASSERT_EQ(d2.size(), static_cast<std::size_t>(r));
  for (const auto& s : d2) EXPECT_EQ(s, ComponentShape::path(2 * h + 2));
  for (DirectionClass d : {DirectionClass::D1, DirectionClass::D3}) {
    const auto shapes = shapes_after(g, d);
    ASSERT_EQ(shapes.size(), static_cast<std::size_t>(r / 2));
    for (const auto& s : shapes) EXPECT_EQ(s.kind, ComponentShape::Kind::kPath);
  }
}

TEST(ExternalHexagons, TubeTallies) {
  EXPECT_EQ(classify_external_hexagons_tub(build_zigzag(3, 4)), ExternalHexTally{});
  EXPECT_EQ(classify_external_hexagons_tub(build_armchair(6, 4)), (ExternalHexTally{6, 0, 0}));
  EXPECT_EQ(classify_external_hexagons_tub(build_armchair(4, 1)), (ExternalHexTally{4, 0, 0}));
}

TEST(Tubulene, CanonicalMembership) {
  const auto t = build_zigzag(2, 3);
  EXPECT_TRUE(t.contains({0, 0}));
  EXPECT_TRUE(t.contains({3, 0}));
  EXPECT_TRUE(t.contains({-1, 1}));
  EXPECT_FALSE(t.contains({0, 2}));
  EXPECT_EQ(to_string(t.kind()), "zigzag");
  EXPECT_EQ(to_string(build_armchair(4, 1).kind()), "armchair");
}

}  // namespace
}  // namespace wpolar
