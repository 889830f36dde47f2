// Copyright 2026 The Geomink Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "hull.hpp"
#include "meshes.hpp"

using namespace geomink;
using namespace geomink::testing;

TEST(Hull, Tetrahedron) {
  Mesh m = convex_hull_3({V(0, 0, 0), V(1, 0, 0), V(0, 1, 0), V(0, 0, 1)});
  EXPECT_EQ(m.vertices.size(), 4u);
  EXPECT_EQ(m.facets.size(), 4u);
  EXPECT_TRUE(mesh_is_valid(m));
}

TEST(Hull, CubeWithCenterAndEdgePoints) {
  std::vector<Vec3> p;
  for (int i = 0; i < 8; ++i) p.push_back(V(2 * (i & 1), i & 2, (i & 4) / 2));
  p.push_back(V(1, 1, 1));
  p.push_back(V(1, 0, 0));  // on an edge
  p.push_back(V(1, 1, 0));  // on a facet
  p.push_back(V(0, 0, 0));  // duplicate
  Mesh m = convex_hull_3(p);
  EXPECT_EQ(m.vertices.size(), 8u);
  EXPECT_EQ(m.facets.size(), 6u);
  EXPECT_TRUE(mesh_is_valid(m));
}

TEST(Hull, DegenerateInput) {
  auto code = [](const std::vector<Vec3>& p) {
    try {
      convex_hull_3(p);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInternal;
  };
  EXPECT_EQ(code({V(0, 0, 0), V(1, 0, 0), V(0, 1, 0), V(1, 1, 0)}), ErrorCode::kDegenerateInput);
  EXPECT_EQ(code({V(0, 0, 0), V(1, 1, 1), V(2, 2, 2), V(3, 3, 3)}), ErrorCode::kDegenerateInput);
  EXPECT_EQ(code({V(0, 0, 0), V(1, 1, 1), V(0, 0, 0)}), ErrorCode::kDegenerateInput);
}

TEST(Hull, RandomCloudsAreValidAndIdempotent) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> u(-6, 6);
  for (int t = 0; t < 30; ++t) {
    std::vector<Vec3> p;
    for (int i = 0; i < 60; ++i) p.push_back(V(u(rng), u(rng), u(rng)));
    Mesh m = convex_hull_3(p);
    std::string why;
    EXPECT_TRUE(mesh_is_valid(m, &why)) << why;
    for (const auto& q : p)
      for (const auto& [n, off] : facet_planes(m)) EXPECT_LE(dot(n, q), off);
    EXPECT_TRUE(meshes_equivalent(convex_hull_3(m.vertices), m));
  }
}

TEST(Hull, PairwiseSums) {
  Mesh t = convex_hull_3({V(0, 0, 0), V(1, 0, 0), V(0, 1, 0), V(0, 0, 1)});
  EXPECT_EQ(pairwise_sums(t, cube()).size(), 32u);
  auto s = pairwise_sums(t, t);
  for (const auto& v : t.vertices) EXPECT_NE(std::find(s.begin(), s.end(), Rational(2) * v), s.end());
}

TEST(Hull, Equivalence) {
  Mesh c = cube();
  Mesh perm = c;
  std::reverse(perm.facets.begin(), perm.facets.end());
  for (auto& f : perm.facets) std::rotate(f.begin(), f.begin() + 1, f.end());
  EXPECT_TRUE(meshes_equivalent(c, perm));
  EXPECT_FALSE(meshes_equivalent(c, translated(c, V(1, 0, 0))));
}
