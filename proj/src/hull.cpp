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

#include "hull.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace geomink {

namespace {

struct Tri {
  int a, b, c;
  bool alive = true;
};

Vec3 tri_normal(const std::vector<Vec3>& p, const Tri& t) {
  return cross(p[t.b] - p[t.a], p[t.c] - p[t.a]);
}

bool sees(const std::vector<Vec3>& p, const Tri& t, const Vec3& q) {
  return dot_sign(tri_normal(p, t), q - p[t.a]) == Sign::POSITIVE;
}

int find(std::vector<int>& uf, int x) {
  while (uf[x] != x) x = uf[x] = uf[uf[x]];
  return x;
}

}  // namespace

Mesh convex_hull_3(const std::vector<Vec3>& input) {
  std::set<Vec3, Vec3Less> uniq(input.begin(), input.end());
  std::vector<Vec3> p(uniq.begin(), uniq.end());
  std::mt19937 rng(20260);
  std::shuffle(p.begin(), p.end(), rng);
  const int n = static_cast<int>(p.size());
  if (n < 4) fail(ErrorCode::kDegenerateInput, "hull needs at least 4 distinct points");

  // Initial simplex.
  int i1 = 1, i2 = -1, i3 = -1;
  for (int i = 2; i < n && i2 < 0; ++i)
    if (!cross(p[1] - p[0], p[i] - p[0]).is_zero()) i2 = i;
  if (i2 < 0) fail(ErrorCode::kDegenerateInput, "points are collinear");
  for (int i = 2; i < n && i3 < 0; ++i)
    if (orient3d(p[0], p[i1], p[i2], p[i]) != Sign::ZERO) i3 = i;
  if (i3 < 0) fail(ErrorCode::kDegenerateInput, "points are coplanar");
  std::swap(p[2], p[i2]);
  if (i3 == 2) i3 = i2;
  std::swap(p[3], p[i3]);

  std::vector<Tri> tris;
  auto add = [&](int a, int b, int c, const Vec3& inside) {
    Tri t{a, b, c};
    if (dot_sign(tri_normal(p, t), inside - p[a]) == Sign::POSITIVE) std::swap(t.b, t.c);
    tris.push_back(t);
  };
  add(0, 1, 2, p[3]);
  add(0, 1, 3, p[2]);
  add(0, 2, 3, p[1]);
  add(1, 2, 3, p[0]);

  for (int i = 4; i < n; ++i) {
    std::vector<int> vis;
    for (int t = 0; t < static_cast<int>(tris.size()); ++t)
      if (tris[t].alive && sees(p, tris[t], p[i])) vis.push_back(t);
    if (vis.empty()) continue;
    std::set<std::pair<int, int>> vis_edges;
    for (int t : vis) {
      const Tri& r = tris[t];
      vis_edges.insert({r.a, r.b});
      vis_edges.insert({r.b, r.c});
      vis_edges.insert({r.c, r.a});
    }
    for (int t : vis) tris[t].alive = false;
    for (const auto& [a, b] : vis_edges)
      if (!vis_edges.count({b, a})) tris.push_back({a, b, i});
  }

  std::vector<Tri> live;
  for (const auto& t : tris)
    if (t.alive) live.push_back(t);
  const int nt = static_cast<int>(live.size());
  std::map<std::pair<int, int>, int> owner;
  for (int t = 0; t < nt; ++t) {
    owner[{live[t].a, live[t].b}] = t;
    owner[{live[t].b, live[t].c}] = t;
    owner[{live[t].c, live[t].a}] = t;
  }
  std::vector<Vec3> nrm(nt);
  for (int t = 0; t < nt; ++t) nrm[t] = tri_normal(p, live[t]);
  std::vector<int> uf(nt);
  std::iota(uf.begin(), uf.end(), 0);
  for (const auto& [e, t] : owner) {
    int u = owner.at({e.second, e.first});
    if (codirectional(nrm[t], nrm[u])) uf[find(uf, t)] = find(uf, u);
  }

  // Boundary cycle of every group, then drop collinear corners.
  std::map<int, std::map<int, int>> succ;  // group -> (a -> b)
  for (const auto& [e, t] : owner) {
    int g = find(uf, t);
    if (find(uf, owner.at({e.second, e.first})) != g) succ[g][e.first] = e.second;
  }
  Mesh m;
  std::map<int, int> index;
  for (auto& [g, next] : succ) {
    int start = next.begin()->first;
    std::vector<int> cyc{start};
    for (int v = next.at(start); v != start; v = next.at(v)) cyc.push_back(v);
    if (cyc.size() != next.size()) fail(ErrorCode::kInternal, "hull facet boundary is not one cycle");
    std::vector<int> keep;
    const size_t k = cyc.size();
    for (size_t j = 0; j < k; ++j) {
      const Vec3& a = p[cyc[(j + k - 1) % k]];
      const Vec3& b = p[cyc[j]];
      const Vec3& c = p[cyc[(j + 1) % k]];
      if (!cross(b - a, c - b).is_zero()) keep.push_back(cyc[j]);
    }
    std::vector<int> facet;
    for (int v : keep) {
      auto [it, fresh] = index.emplace(v, static_cast<int>(m.vertices.size()));
      if (fresh) m.vertices.push_back(p[v]);
      facet.push_back(it->second);
    }
    m.facets.push_back(std::move(facet));
  }
  return m;
}

std::vector<Vec3> pairwise_sums(const Mesh& a, const Mesh& b) {
  std::vector<Vec3> out;
  out.reserve(a.vertices.size() * b.vertices.size());
  for (const auto& v : a.vertices)
    for (const auto& w : b.vertices) out.push_back(v + w);
  return out;
}

std::vector<std::pair<Vec3, Rational>> facet_planes(const Mesh& m) {
  std::vector<std::pair<Vec3, Rational>> planes;
  for (int f = 0; f < static_cast<int>(m.facets.size()); ++f) {
    Vec3 n = primitive_direction(facet_normal(m, f));
    planes.push_back({n, dot(n, m.vertices[m.facets[f][0]])});
  }
  std::sort(planes.begin(), planes.end(), [](const auto& x, const auto& y) {
    if (x.first == y.first) return x.second < y.second;
    return lex_less(x.first, y.first);
  });
  return planes;
}

bool meshes_equivalent(const Mesh& a, const Mesh& b) {
  std::set<Vec3, Vec3Less> va(a.vertices.begin(), a.vertices.end());
  std::set<Vec3, Vec3Less> vb(b.vertices.begin(), b.vertices.end());
  if (va.size() != vb.size() || !std::equal(va.begin(), va.end(), vb.begin())) return false;
  return facet_planes(a) == facet_planes(b);
}

}  // namespace geomink
