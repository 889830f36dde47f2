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

#include "gaussian_map.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace geomink {

namespace {

struct EdgeIndex {
  // Directed edge (a,b) -> facet containing it as a boundary step.
  std::map<std::pair<int, int>, int> facet_of;
  // Undirected edges as (a,b) with a<b.
  std::vector<std::pair<int, int>> edges;
};

[[noreturn]] void bad(const std::string& why) { fail(ErrorCode::kInvalidMesh, why); }

EdgeIndex index_edges(const Mesh& m) {
  EdgeIndex ix;
  const int n = static_cast<int>(m.vertices.size());
  for (int f = 0; f < static_cast<int>(m.facets.size()); ++f) {
    const auto& c = m.facets[f];
    if (c.size() < 3) bad("facet " + std::to_string(f) + " has fewer than 3 vertices");
    std::set<int> seen;
    for (size_t i = 0; i < c.size(); ++i) {
      int a = c[i], b = c[(i + 1) % c.size()];
      if (a < 0 || a >= n) bad("facet " + std::to_string(f) + " references a missing vertex");
      if (!seen.insert(a).second) bad("facet " + std::to_string(f) + " repeats a vertex");
      if (!ix.facet_of.emplace(std::make_pair(a, b), f).second)
        bad("edge " + std::to_string(a) + "-" + std::to_string(b) + " is used twice in one direction");
    }
  }
  for (const auto& [e, f] : ix.facet_of) {
    if (!ix.facet_of.count({e.second, e.first}))
      bad("edge " + std::to_string(e.first) + "-" + std::to_string(e.second) + " is on one facet only");
    if (e.first < e.second) ix.edges.push_back(e);
  }
  return ix;
}

}  // namespace

Vec3 facet_normal(const Mesh& m, int f) {
  const auto& c = m.facets[f];
  const size_t k = c.size();
  for (size_t i = 0; i < k; ++i) {
    const Vec3& a = m.vertices[c[i]];
    const Vec3& b = m.vertices[c[(i + 1) % k]];
    const Vec3& d = m.vertices[c[(i + 2) % k]];
    Vec3 n = cross(b - a, d - b);
    if (!n.is_zero()) return n;
  }
  return Vec3();
}

int mesh_edge_count(const Mesh& m) {
  size_t s = 0;
  for (const auto& c : m.facets) s += c.size();
  return static_cast<int>(s / 2);
}

void validate_mesh(const Mesh& m) {
  const int nv = static_cast<int>(m.vertices.size());
  const int nf = static_cast<int>(m.facets.size());
  if (nv < 4) bad("fewer than 4 vertices");
  if (nf < 4) bad("fewer than 4 facets");
  {
    std::set<Vec3, Vec3Less> uniq(m.vertices.begin(), m.vertices.end());
    if (static_cast<int>(uniq.size()) != nv) bad("duplicate vertex coordinates");
  }
  EdgeIndex ix = index_edges(m);

  std::vector<Vec3> normal(nf);
  for (int f = 0; f < nf; ++f) {
    const auto& c = m.facets[f];
    normal[f] = facet_normal(m, f);
    if (normal[f].is_zero()) bad("facet " + std::to_string(f) + " is degenerate");
    const Vec3& o = m.vertices[c[0]];
    for (int v : c)
      if (sign_of(dot(normal[f], m.vertices[v] - o)) != Sign::ZERO)
        bad("facet " + std::to_string(f) + " is not planar");
    for (size_t i = 0; i < c.size(); ++i) {
      const Vec3& a = m.vertices[c[i]];
      const Vec3& b = m.vertices[c[(i + 1) % c.size()]];
      const Vec3& d = m.vertices[c[(i + 2) % c.size()]];
      if (dot_sign(cross(b - a, d - b), normal[f]) != Sign::POSITIVE)
        bad("facet " + std::to_string(f) + " is not strictly convex");
    }
    bool inside = false;
    for (int v = 0; v < nv; ++v) {
      Sign s = sign_of(dot(normal[f], m.vertices[v] - o));
      if (s == Sign::POSITIVE) bad("vertex " + std::to_string(v) + " lies outside facet " + std::to_string(f));
      if (s == Sign::NEGATIVE) inside = true;
    }
    if (!inside) bad("all vertices are coplanar");
  }

  for (const auto& e : ix.edges) {
    int f = ix.facet_of.at(e), g = ix.facet_of.at({e.second, e.first});
    if (codirectional(normal[f], normal[g]))
      bad("facets " + std::to_string(f) + " and " + std::to_string(g) + " are coplanar");
  }

  // Vertex links: the facets around each vertex form a single cycle.
  std::vector<std::map<int, int>> next_out(nv);  // v -> (w -> u): after v->w comes v->u
  std::vector<int> deg(nv, 0);
  for (const auto& c : m.facets) {
    const size_t k = c.size();
    for (size_t i = 0; i < k; ++i) {
      int u = c[i], v = c[(i + 1) % k], w = c[(i + 2) % k];
      // Around v, the outgoing edge v->u follows v->w (twin of u->v is v->u).
      next_out[v][w] = u;
      ++deg[v];
    }
  }
  for (int v = 0; v < nv; ++v) {
    if (deg[v] == 0) bad("vertex " + std::to_string(v) + " is not on any facet");
    if (deg[v] < 3) bad("vertex " + std::to_string(v) + " has degree below 3");
    int start = next_out[v].begin()->first, w = start, steps = 0;
    do {
      auto it = next_out[v].find(w);
      if (it == next_out[v].end()) bad("vertex " + std::to_string(v) + " is not manifold");
      w = it->second;
      ++steps;
    } while (w != start && steps <= deg[v]);
    if (steps != deg[v]) bad("vertex " + std::to_string(v) + " is not manifold");
  }

  if (nv - static_cast<int>(ix.edges.size()) + nf != 2) bad("Euler characteristic is not 2");
}

bool mesh_is_valid(const Mesh& m, std::string* why) {
  try {
    validate_mesh(m);
    return true;
  } catch (const Error& e) {
    if (why) *why = e.what();
    return false;
  }
}

int identification_crossings(const Mesh& m) {
  EdgeIndex ix = index_edges(m);
  std::vector<DirPoint> n(m.facets.size());
  for (size_t f = 0; f < m.facets.size(); ++f) n[f] = classify(facet_normal(m, static_cast<int>(f)));
  int s = 0;
  for (const auto& e : ix.edges) {
    int f = ix.facet_of.at(e), g = ix.facet_of.at({e.second, e.first});
    s += static_cast<int>(make_arc(n[f], n[g]).size()) - 1;
  }
  return s;
}

GaussianMap build_gaussian_map(const Mesh& mesh) {
  validate_mesh(mesh);
  EdgeIndex ix = index_edges(mesh);
  const int nf = static_cast<int>(mesh.facets.size());
  std::vector<DirPoint> n(nf);
  for (int f = 0; f < nf; ++f) n[f] = classify(facet_normal(mesh, f));

  // Facet adjacency with the mesh edge between.
  std::vector<std::vector<std::pair<int, int>>> adj(nf);
  for (int e = 0; e < static_cast<int>(ix.edges.size()); ++e) {
    int f = ix.facet_of.at(ix.edges[e]);
    int g = ix.facet_of.at({ix.edges[e].second, ix.edges[e].first});
    adj[f].push_back({g, e});
    adj[g].push_back({f, e});
  }

  GaussianMap g;
  g.points = mesh.vertices;
  SphereArrangement& arr = g.arr;
  std::vector<int> vid(nf, -1);
  std::vector<char> done_edge(ix.edges.size(), 0), seen(nf, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    for (auto [h, e] : adj[f]) {
      if (!done_edge[e]) {
        done_edge[e] = 1;
        std::vector<GeodesicArc> pieces = make_arc(n[f], n[h]);
        int anchor = vid[f];
        for (size_t i = 0; i < pieces.size(); ++i) {
          bool last = i + 1 == pieces.size();
          int he = arr.insert_disjoint_arc(pieces[i], anchor, last ? vid[h] : -1);
          arr.halfedge(he).data = arr.halfedge(arr.halfedge(he).twin).data = e;
          if (i == 0) vid[f] = arr.halfedge(he).origin;
          anchor = arr.target(he);
          if (last) vid[h] = anchor;
        }
      }
      if (!seen[h]) {
        seen[h] = 1;
        queue.push_back(h);
      }
    }
  }

  // Decorate faces: the face left of an arc with normal m is the edge
  // endpoint extreme in direction m.
  std::vector<char> used(mesh.vertices.size(), 0);
  for (int fc = 0; fc < arr.num_faces(); ++fc) {
    const auto& face = arr.face(fc);
    if (face.ccbs.empty()) fail(ErrorCode::kInternal, "gaussian map face without boundary");
    const auto& he = arr.halfedge(face.ccbs[0]);
    auto [a, b] = ix.edges[he.data];
    int v = dot_sign(he.arc.normal, mesh.vertices[a] - mesh.vertices[b]) == Sign::POSITIVE ? a : b;
    if (used[v]) fail(ErrorCode::kInternal, "two faces decorated with one vertex");
    used[v] = 1;
    arr.face(fc).data = v;
  }
  if (arr.num_faces() != static_cast<int>(mesh.vertices.size()))
    fail(ErrorCode::kInternal, "face count differs from vertex count");
  return g;
}

bool GaussianMap::is_facet_vertex(int v) const {
  if (arr.degree(v) != 2) return true;
  std::vector<int> out = arr.outgoing(v);
  return !parallel(arr.halfedge(out[0]).arc.normal, arr.halfedge(out[1]).arc.normal);
}

int GaussianMap::facet_count() const {
  int c = 0;
  for (int v = 0; v < arr.num_vertices(); ++v) c += is_facet_vertex(v);
  return c;
}

Mesh primal_mesh(const GaussianMap& g) {
  Mesh m;
  std::map<int64_t, int> index;
  auto vertex_of = [&](int face) {
    int64_t key = g.arr.face(face).data;
    auto [it, fresh] = index.emplace(key, static_cast<int>(m.vertices.size()));
    if (fresh) m.vertices.push_back(g.points.at(key));
    return it->second;
  };
  for (int f = 0; f < g.arr.num_faces(); ++f) vertex_of(f);
  for (int v = 0; v < g.arr.num_vertices(); ++v) {
    if (!g.is_facet_vertex(v)) continue;
    std::vector<int> cyc;
    for (int h : g.arr.outgoing(v)) {
      int p = vertex_of(g.arr.halfedge(h).face);
      if (cyc.empty() || (cyc.back() != p)) cyc.push_back(p);
    }
    while (cyc.size() > 1 && cyc.front() == cyc.back()) cyc.pop_back();
    // Orient counterclockwise around the facet normal.
    const Vec3& nrm = g.arr.vertex(v).p.dir;
    if (cyc.size() >= 3) {
      Vec3 area;
      for (size_t i = 1; i + 1 < cyc.size(); ++i)
        area = area + cross(m.vertices[cyc[i]] - m.vertices[cyc[0]], m.vertices[cyc[i + 1]] - m.vertices[cyc[0]]);
      if (dot_sign(area, nrm) == Sign::NEGATIVE) std::reverse(cyc.begin(), cyc.end());
    }
    m.facets.push_back(std::move(cyc));
  }
  try {
    validate_mesh(m);
  } catch (const Error& e) {
    fail(ErrorCode::kInvalidGaussianMap, std::string("primal polytope is invalid: ") + e.what());
  }
  return m;
}

GaussianMap reflect(const GaussianMap& g) {
  Mesh m = primal_mesh(g);
  for (auto& v : m.vertices) v = -v;
  for (auto& c : m.facets) std::reverse(c.begin(), c.end());
  return build_gaussian_map(m);
}

Support support(const GaussianMap& g, const Vec3& d) {
  if (d.is_zero()) fail(ErrorCode::kZeroVector, "support direction is zero");
  Support best{Rational(0), Vec3()};
  bool first = true;
  for (int f = 0; f < g.arr.num_faces(); ++f) {
    const Vec3& p = g.primal(f);
    Rational s = dot(d, p);
    if (first || s > best.value || (s == best.value && lex_less(p, best.vertex))) {
      best = {s, p};
      first = false;
    }
  }
  return best;
}

FacetTable facet_table(const GaussianMap& g) {
  FacetTable t;
  std::vector<int> slot(g.arr.num_vertices(), -1);
  for (int v = 0; v < g.arr.num_vertices(); ++v) {
    if (!g.is_facet_vertex(v)) continue;
    slot[v] = static_cast<int>(t.vertex.size());
    t.vertex.push_back(v);
    t.normal.push_back(g.arr.vertex(v).p.dir);
    const auto& out = g.arr.outgoing(v);
    t.offset.push_back(dot(t.normal.back(), g.primal(g.arr.halfedge(out[0]).face)));
  }
  t.adj.resize(t.vertex.size());
  for (size_t i = 0; i < t.vertex.size(); ++i) {
    for (int h : g.arr.outgoing(t.vertex[i])) {
      int w = g.arr.target(h);
      while (slot[w] < 0) {
        // Continue straight through a split point.
        for (int o : g.arr.outgoing(w))
          if (g.arr.halfedge(o).twin != h) {
            h = o;
            break;
          }
        w = g.arr.target(h);
      }
      t.adj[i].push_back(slot[w]);
    }
  }
  return t;
}

}  // namespace geomink
