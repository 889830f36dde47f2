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
#include <set>

#include "assembly.hpp"
#include "io.hpp"
#include "meshes.hpp"
#include "minkowski.hpp"

using namespace geomink;
using namespace geomink::testing;

namespace {

int64_t mask_at(const SphereArrangement& a, const Vec3& d) {
  Cell c = a.locate(classify(d));
  if (c.kind == CellKind::VERTEX) return a.vertex(c.id).data;
  if (c.kind == CellKind::EDGE) return a.halfedge(c.id).data;
  return a.face(c.id).data;
}

std::vector<Vec3> probe_directions(std::mt19937& rng, int count, const SphereArrangement* extra = nullptr) {
  std::uniform_int_distribution<int> u(-6, 6);
  std::vector<Vec3> out;
  while (static_cast<int>(out.size()) < count) {
    Vec3 d = V(u(rng), u(rng), u(rng));
    if (!d.is_zero()) out.push_back(d);
  }
  if (extra) {
    for (int v = 0; v < extra->num_vertices(); ++v) out.push_back(extra->vertex(v).p.dir);
    for (int h = 0; h < extra->num_halfedges(); h += 2) out.push_back(arc_midpoint(extra->halfedge(h).arc));
  }
  return out;
}

// Projection of `m` must agree with the exact ray test everywhere, including on its own boundary.
void expect_projection_matches(const GaussianMap& m, std::mt19937& rng, int probes) {
  SphericalRegion r = project_polytope(m);
  EXPECT_TRUE(r.validate().empty());
  for (const Vec3& d : probe_directions(rng, probes, &r))
    ASSERT_EQ(mask_at(r, d) != 0, ray_pierces(m, d)) << to_string(d);
}

GaussianMap difference(const Mesh& moving, const Mesh& fixed) {
  return minkowski(build_gaussian_map(fixed), reflect(build_gaussian_map(moving)));
}

Mesh box(long x0, long y0, long z0, long x1, long y1, long z1) {
  std::vector<Vec3> p;
  for (int i = 0; i < 8; ++i) p.push_back(V(i & 1 ? x1 : x0, i & 2 ? y1 : y0, i & 4 ? z1 : z0));
  return hull_of(p);
}

struct Oracle {
  const Assembly& a;
  std::map<SumKey, FacetTable> tables;
  explicit Oracle(const Assembly& as) : a(as) {
    for (const auto& [k, g] : pairwise_subpart_sums(a, false, 1)) tables.emplace(k, facet_table(g));
  }
  bool blocked(int i, int j, const Vec3& d) const {
    for (const auto& [k, t] : tables)
      if (k[0] == i && k[1] == j && ray_pierces(t, d)) return true;
    return false;
  }
  bool separates(const std::vector<int>& s, const Vec3& d) const {
    std::set<int> in(s.begin(), s.end());
    if (in.empty() || static_cast<int>(in.size()) == a.size()) return false;
    for (int i : in)
      for (int j = 0; j < a.size(); ++j)
        if (!in.count(j) && blocked(i, j, d)) return false;
    return true;
  }
  bool any_partition(const Vec3& d) const {
    MotionSpace ms;
    ms.parts = a.size();
    int64_t mask = 0;
    for (int i = 0; i < a.size(); ++i)
      for (int j = 0; j < a.size(); ++j)
        if (i != j && blocked(i, j, d)) mask |= int64_t(1) << (i * a.size() + j);
    return !movable_subset(ms, mask).empty();
  }
};

std::vector<std::vector<char>> closure(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (int s = 0; s < n; ++s) {
    std::vector<int> st{s};
    r[s][s] = 1;
    while (!st.empty()) {
      int u = st.back();
      st.pop_back();
      for (int v : adj[u])
        if (!r[s][v]) r[s][v] = 1, st.push_back(v);
    }
  }
  return r;
}

std::string subset_name(const Assembly& a, const std::vector<int>& s) {
  std::string out;
  for (int i : s) out += a.names[i];
  return out;
}

}  // namespace

TEST(Projection, FacetEdgeVertexContact) {
  std::mt19937 rng(7);
  // Origin inside a facet, on an edge, at a vertex, outside, inside.
  GaussianMap facet = build_gaussian_map(box(-1, -1, 0, 1, 1, 2));
  GaussianMap edge = build_gaussian_map(box(0, 0, -1, 2, 2, 1));
  GaussianMap vertex = build_gaussian_map(box(0, 0, 0, 1, 1, 1));
  GaussianMap apart = build_gaussian_map(box(2, 1, -1, 3, 4, 1));
  GaussianMap around = build_gaussian_map(box(-1, -1, -1, 1, 1, 1));
  for (const GaussianMap* g : {&facet, &edge, &vertex, &apart, &around}) expect_projection_matches(*g, rng, 300);

  SphericalRegion h = project_polytope(facet);
  EXPECT_NE(mask_at(h, V(1, 2, 1)), 0);
  EXPECT_EQ(mask_at(h, V(1, 2, 0)), 0);
  EXPECT_EQ(mask_at(h, V(1, 2, -1)), 0);
  SphericalRegion l = project_polytope(edge);
  EXPECT_NE(mask_at(l, V(1, 1, 5)), 0);
  EXPECT_EQ(mask_at(l, V(0, 1, 0)), 0);
  EXPECT_EQ(mask_at(l, V(-1, 1, 0)), 0);
  SphericalRegion all = project_polytope(around);
  EXPECT_EQ(all.num_edges(), 0);
  EXPECT_NE(mask_at(all, V(0, 0, 1)), 0);
}

TEST(Projection, RandomSumsAgreeWithRayTest) {
  std::mt19937 rng(11);
  int checked = 0;
  for (int trial = 0; trial < 12; ++trial) {
    Mesh p = random_polytope(rng, 9, 20), q = random_polytope(rng, 9, 20);
    // Slide q along a random direction until the two only touch, or leave a gap.
    Vec3 shift = V(40 + trial, (trial % 5) - 2, 3 - (trial % 7));
    GaussianMap m = difference(p, translated(q, shift));
    expect_projection_matches(m, rng, 40);
    ++checked;
  }
  // Touching configurations: origin on a facet, edge or vertex of the sum.
  const std::vector<std::pair<Mesh, Mesh>> touching = {
      {cube(0, 1), translated(cube(0, 1), V(1, 0, 0))},
      {cube(0, 1), translated(cube(0, 1), V(1, 1, 0))},
      {cube(0, 1), translated(cube(0, 1), V(1, 1, 1))},
      {octahedron(), translated(octahedron(), V(1, 1, 0))},
      {icosahedron(), translated(cube(-1, 1), V(3, 0, 0))}};
  for (const auto& [p, q] : touching) {
    expect_projection_matches(difference(p, q), rng, 60);
    ++checked;
  }
  EXPECT_EQ(checked, 17);
}

TEST(Projection, UnionOfOppositeHemispheres) {
  GaussianMap up = build_gaussian_map(box(-1, -1, 0, 1, 1, 1));
  GaussianMap down = build_gaussian_map(box(-1, -1, -1, 1, 1, 0));
  SphericalRegion u = union_regions({project_polytope(up), project_polytope(down)});
  EXPECT_TRUE(u.validate().empty());
  EXPECT_NE(mask_at(u, V(0, 0, 1)), 0);
  EXPECT_NE(mask_at(u, V(3, -1, -2)), 0);
  // The shared equator stays free: sliding sideways is allowed.
  EXPECT_EQ(mask_at(u, V(1, 0, 0)), 0);
  EXPECT_EQ(mask_at(u, V(-2, 5, 0)), 0);
  EXPECT_EQ(u.num_faces(), 2);
}

TEST(Partition, TarjanMatchesReachability) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && rng() % 4 == 0) adj[i].push_back(j);
    int count = 0;
    std::vector<int> comp = strong_components(adj, &count);
    auto r = closure(adj);
    std::set<int> ids(comp.begin(), comp.end());
    EXPECT_EQ(static_cast<int>(ids.size()), count);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) EXPECT_EQ(comp[i] == comp[j], r[i][j] && r[j][i]);
  }
}

TEST(Partition, SeparatedCubes) {
  Assembly a;
  a.names = {"A", "B"};
  a.parts = {{cube(0, 1)}, {translated(cube(0, 1), V(2, 0, 0))}};
  PartitionResult r = partition(a, PartitionMode::ALL, 1);
  ASSERT_FALSE(r.interlocked);
  Oracle o(a);
  bool face_moves_b = false;
  for (const Solution& s : r.solutions) {
    EXPECT_TRUE(o.separates(s.subset, s.direction)) << to_string(s.direction);
    face_moves_b |= s.kind == CellKind::FACE && s.subset == std::vector<int>{1};
  }
  EXPECT_TRUE(face_moves_b);
  // FIRST stops at the first solution cell.
  PartitionResult first = partition(a, PartitionMode::FIRST, 1);
  EXPECT_EQ(first.solutions.size(), 1u);
}

TEST(Partition, HollowBoxIsInterlocked) {
  Assembly a = read_assembly("data/hollow_box.asm");
  PartitionResult r = partition(a, PartitionMode::ALL, 1);
  EXPECT_TRUE(r.interlocked);
  EXPECT_TRUE(r.solutions.empty());
  Oracle o(a);
  std::mt19937 rng(2026);
  std::uniform_int_distribution<int> u(-1000, 1000);
  int sampled = 0;
  while (sampled < 10000) {
    Vec3 d = V(u(rng), u(rng), u(rng));
    if (d.is_zero()) continue;
    ASSERT_FALSE(o.any_partition(d)) << to_string(d);
    ++sampled;
  }
}

TEST(Partition, SplitStarEightVertexSolutions) {
  Assembly a = read_assembly("data/split_star.asm");
  ASSERT_EQ(a.size(), 6);
  const std::map<std::array<int, 3>, std::string> table = {
      {{-1, -1, -1}, "GBT"}, {{-1, -1, 1}, "RBT"}, {{-1, 1, -1}, "GPT"}, {{-1, 1, 1}, "RPT"},
      {{1, -1, -1}, "GBY"},  {{1, -1, 1}, "RBY"},  {{1, 1, -1}, "GPY"},  {{1, 1, 1}, "RPY"}};
  int sums = 0;
  MotionSpace ms = assembly_motion_space(a, 2, &sums);
  EXPECT_EQ(sums, 270);
  EXPECT_TRUE(ms.arr.validate().empty());
  PartitionResult r = find_partitions(ms, PartitionMode::ALL);
  ASSERT_EQ(r.solutions.size(), 8u);
  Oracle o(a);
  std::set<std::string> seen;
  for (const Solution& s : r.solutions) {
    EXPECT_EQ(s.kind, CellKind::VERTEX);
    const Vec3& d = s.direction;
    std::array<int, 3> sg{static_cast<int>(sign_of(d.x)), static_cast<int>(sign_of(d.y)), static_cast<int>(sign_of(d.z))};
    ASSERT_TRUE(codirectional(d, V(sg[0], sg[1], sg[2]))) << to_string(d);
    std::string name = subset_name(a, s.subset);
    std::sort(name.begin(), name.end());
    std::string want = table.at(sg);
    std::sort(want.begin(), want.end());
    EXPECT_EQ(name, want);
    EXPECT_TRUE(o.separates(s.subset, d));
    seen.insert(name);
  }
  EXPECT_EQ(seen.size(), 8u);
  // No other integer direction of small height admits a partition.
  for (int x = -2; x <= 2; ++x)
    for (int y = -2; y <= 2; ++y)
      for (int z = -2; z <= 2; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        if (std::abs(x) == std::abs(y) && std::abs(y) == std::abs(z)) continue;
        EXPECT_FALSE(o.any_partition(V(x, y, z))) << x << " " << y << " " << z;
      }
}

TEST(Partition, SplitStarMotionSpaceIsMonotone) {
  Assembly a = read_assembly("data/split_star.asm");
  MotionSpace ms = assembly_motion_space(a, 2);
  const SphereArrangement& m = ms.arr;
  // Boundary cells carry at most the constraints of the cells around them.
  for (int h = 0; h < m.num_halfedges(); ++h) {
    int64_t e = m.halfedge(h).data;
    EXPECT_EQ(e & ~m.face(m.halfedge(h).face).data, 0);
    int64_t v = m.vertex(m.halfedge(h).origin).data;
    EXPECT_EQ(v & ~e, 0);
  }
  // And every cell agrees with the brute-force ray test.
  Oracle o(a);
  std::mt19937 rng(5);
  for (const Vec3& d : probe_directions(rng, 200, &m)) {
    int64_t mask = mask_at(m, d);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        if (i != j) ASSERT_EQ(ms.blocked(mask, i, j), o.blocked(i, j, d)) << to_string(d);
  }
}

TEST(Partition, ReflectedSumsMatchDirectSums) {
  Assembly a = read_assembly("data/split_star.asm");
  auto fast = pairwise_subpart_sums(a, true, 2);
  auto slow = pairwise_subpart_sums(a, false, 2);
  ASSERT_EQ(fast.size(), 270u);
  ASSERT_EQ(slow.size(), 270u);
  for (const auto& [k, g] : slow) {
    ASSERT_TRUE(fast.count(k));
    EXPECT_TRUE(meshes_equivalent(primal_mesh(g), primal_mesh(fast.at(k))));
  }
}

TEST(Partition, RejectsOverlapAndTinyAssemblies) {
  Assembly one;
  one.names = {"A"};
  one.parts = {{cube(0, 1)}};
  EXPECT_THROW(partition(one, PartitionMode::FIRST, 1), Error);
  Assembly overlap;
  overlap.names = {"A", "B"};
  overlap.parts = {{cube(0, 2)}, {cube(1, 3)}};
  try {
    partition(overlap, PartitionMode::FIRST, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPrecondition);
  }
}
