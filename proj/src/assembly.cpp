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

#include "assembly.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include "minkowski.hpp"

namespace geomink {

int default_threads() {
  // GEOMINK_THREADS=0 means sequential.
  if (const char* env = std::getenv("GEOMINK_THREADS"); env && *env) return std::max(1, std::atoi(env));
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

namespace {

// Runs fn(0..n-1) on up to `threads` workers; rethrows the first failure.
void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
  if (threads <= 0) threads = default_threads();
  threads = std::max(1, std::min(threads, n));
  if (threads == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr err;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!err) err = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

Vec3 some_perpendicular(const Vec3& a) {
  Vec3 best;
  for (const Vec3& e : {Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)}) {
    Vec3 c = cross(a, e);
    if (!c.is_zero() && (best.is_zero() || norm2(c) > norm2(best))) best = c;
  }
  return best;
}

void add_arc(std::vector<GeodesicArc>& arcs, const Vec3& s, const Vec3& t) {
  for (auto& a : make_arc(classify(s), classify(t))) arcs.push_back(a);
}

SphericalRegion region_from_arcs(const std::vector<GeodesicArc>& arcs, const Vec3& inside, int64_t mask) {
  SphericalRegion r = sweep_build(arcs);
  Cell c = r.locate(classify(inside));
  if (c.kind != CellKind::FACE) fail(ErrorCode::kInternal, "interior probe is not inside a face");
  // Boundary cells stay clear: grazing rays do not pierce the interior.
  for (int v = 0; v < r.num_vertices(); ++v) r.vertex(v).data = 0;
  for (int h = 0; h < r.num_halfedges(); ++h) r.halfedge(h).data = 0;
  for (int f = 0; f < r.num_faces(); ++f) r.face(f).data = 0;
  r.face(c.id).data = mask;
  return r;
}

// Region of directions strictly inside the cone spanned by `gens`; every
// generator has a positive component along `axis`.
SphericalRegion cone_region(const std::vector<Vec3>& gens, const Vec3& axis, int64_t mask) {
  Vec3 u1 = some_perpendicular(axis), u2 = cross(axis, u1);
  struct P2 {
    Rational x, y;
    int src;
  };
  std::vector<P2> pts;
  for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
    Rational h = dot(axis, gens[i]);
    pts.push_back({dot(u1, gens[i]) / h, dot(u2, gens[i]) / h, i});
  }
  std::sort(pts.begin(), pts.end(), [](const P2& a, const P2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end(), [](const P2& a, const P2& b) { return a.x == b.x && a.y == b.y; }),
            pts.end());
  auto turn = [](const P2& o, const P2& a, const P2& b) -> Rational {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  std::vector<P2> hull;
  for (int pass = 0; pass < 2; ++pass) {
    size_t base = hull.size();
    for (size_t k = 0; k < pts.size(); ++k) {
      const P2& p = pass == 0 ? pts[k] : pts[pts.size() - 1 - k];
      while (hull.size() >= base + 2 && sign_of(turn(hull[hull.size() - 2], hull.back(), p)) != Sign::POSITIVE)
        hull.pop_back();
      hull.push_back(p);
    }
    hull.pop_back();
  }
  if (hull.size() < 3) fail(ErrorCode::kInternal, "projected cone is flat");
  std::vector<GeodesicArc> arcs;
  Vec3 inside;
  for (size_t k = 0; k < hull.size(); ++k) {
    const Vec3& a = gens[hull[k].src];
    const Vec3& b = gens[hull[(k + 1) % hull.size()].src];
    add_arc(arcs, a, b);
    inside = inside + (1 / dot(axis, a)) * a;
  }
  return region_from_arcs(arcs, inside, mask);
}

bool is_origin(const Vec3& v) { return v.is_zero(); }

}  // namespace

std::map<SumKey, GaussianMap> pairwise_subpart_sums(const Assembly& a, bool reflect_pairs, int threads) {
  const int n = a.size();
  std::vector<SumKey> keys;
  std::vector<std::pair<int, int>> flat;
  for (int i = 0; i < n; ++i)
    for (size_t k = 0; k < a.parts[i].size(); ++k) flat.push_back({i, static_cast<int>(k)});
  std::vector<GaussianMap> maps(flat.size()), refl(flat.size());
  parallel_for(static_cast<int>(flat.size()), threads, [&](int x) {
    maps[x] = build_gaussian_map(a.parts[flat[x].first][flat[x].second]);
    refl[x] = reflect(maps[x]);
  });
  std::map<std::pair<int, int>, int> slot;
  for (size_t x = 0; x < flat.size(); ++x) slot[flat[x]] = static_cast<int>(x);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || (reflect_pairs && i > j)) continue;
      for (size_t k = 0; k < a.parts[i].size(); ++k)
        for (size_t l = 0; l < a.parts[j].size(); ++l)
          keys.push_back({i, j, static_cast<int>(k), static_cast<int>(l)});
    }
  std::vector<GaussianMap> out(keys.size()), mirrored(reflect_pairs ? keys.size() : 0);
  parallel_for(static_cast<int>(keys.size()), threads, [&](int x) {
    auto [i, j, k, l] = keys[x];
    out[x] = minkowski(maps[slot.at({j, l})], refl[slot.at({i, k})]);
    if (reflect_pairs) mirrored[x] = reflect(out[x]);
  });
  std::map<SumKey, GaussianMap> sums;
  for (size_t x = 0; x < keys.size(); ++x) {
    auto [i, j, k, l] = keys[x];
    if (reflect_pairs) sums.emplace(SumKey{j, i, l, k}, std::move(mirrored[x]));
    sums.emplace(keys[x], std::move(out[x]));
  }
  return sums;
}

SphericalRegion project_polytope(const GaussianMap& g, int64_t mask) {
  FacetTable t = facet_table(g);
  std::vector<int> zero;
  int violated = -1;
  for (int f = 0; f < static_cast<int>(t.normal.size()); ++f) {
    Sign s = sign_of(t.offset[f]);
    if (s == Sign::ZERO) zero.push_back(f);
    if (s == Sign::NEGATIVE && violated < 0) violated = f;
  }
  if (violated < 0 && zero.empty()) {
    // Origin inside: every ray pierces.
    SphericalRegion r;
    r.face(0).data = mask;
    return r;
  }
  std::vector<Vec3> verts;
  bool origin_vertex = false;
  for (int f = 0; f < g.arr.num_faces(); ++f) {
    if (is_origin(g.primal(f)))
      origin_vertex = true;
    else
      verts.push_back(g.primal(f));
  }
  if (violated >= 0) return cone_region(verts, -t.normal[violated], mask);
  if (origin_vertex) {
    Vec3 axis;
    for (int f : zero) axis = axis - t.normal[f];
    return cone_region(verts, axis, mask);
  }
  std::vector<GeodesicArc> arcs;
  if (zero.size() == 1) {
    // Origin inside a facet: the open hemisphere behind it.
    const Vec3& n = t.normal[zero[0]];
    Vec3 u = some_perpendicular(n), w = cross(n, u);
    add_arc(arcs, u, w);
    add_arc(arcs, w, -u);
    add_arc(arcs, -u, -w);
    add_arc(arcs, -w, u);
    return region_from_arcs(arcs, -n, mask);
  }
  if (zero.size() != 2) fail(ErrorCode::kInternal, "origin on an edge with more than two planes");
  // Origin inside an edge: the lune between the two planes.
  const Vec3& n1 = t.normal[zero[0]];
  const Vec3& n2 = t.normal[zero[1]];
  Vec3 e = cross(n1, n2);
  Vec3 m1 = cross(n1, e), m2 = cross(n2, e);
  if (dot_sign(n2, m1) == Sign::POSITIVE) m1 = -m1;
  if (dot_sign(n1, m2) == Sign::POSITIVE) m2 = -m2;
  add_arc(arcs, e, m1);
  add_arc(arcs, m1, -e);
  add_arc(arcs, e, m2);
  add_arc(arcs, m2, -e);
  return region_from_arcs(arcs, m1 + m2, mask);
}

bool ray_pierces(const GaussianMap& g, const Vec3& d) { return ray_pierces(facet_table(g), d); }

bool ray_pierces(const FacetTable& t, const Vec3& d) {
  // Feasible t > 0 with <n_f, t d> < h_f for every facet.
  Rational lo = 0, hi;
  bool bounded = false;
  for (size_t f = 0; f < t.normal.size(); ++f) {
    Rational nd = dot(t.normal[f], d);
    Sign s = sign_of(nd);
    if (s == Sign::ZERO) {
      if (sign_of(t.offset[f]) != Sign::POSITIVE) return false;
    } else if (s == Sign::POSITIVE) {
      Rational x = t.offset[f] / nd;
      if (!bounded || x < hi) hi = x;
      bounded = true;
    } else {
      Rational x = t.offset[f] / nd;
      if (x > lo) lo = x;
    }
  }
  return !bounded || lo < hi;
}

SphericalRegion cleanup_region(const SphericalRegion& r) {
  const int H = r.num_halfedges(), V = r.num_vertices();
  std::vector<char> keep_edge(H, 0), keep_vertex(V, 0);
  for (int h = 0; h < H; h += 2) {
    int64_t m = r.halfedge(h).data;
    bool redundant = m == r.face(r.halfedge(h).face).data && m == r.face(r.halfedge(h + 1).face).data;
    keep_edge[h] = keep_edge[h + 1] = !redundant;
  }
  for (int v = 0; v < V; ++v) {
    int64_t m = r.vertex(v).data;
    if (r.vertex(v).out < 0) {
      keep_vertex[v] = m != r.face(r.vertex(v).iso_face).data;
      continue;
    }
    bool any_kept = false, differs = false;
    for (int h : r.outgoing(v)) {
      if (!keep_edge[h]) continue;
      any_kept = true;
      differs |= r.halfedge(h).data != m;
    }
    keep_vertex[v] = any_kept ? differs : m != r.face(r.halfedge(r.vertex(v).out).face).data;
  }
  return rebuild_subset(r, keep_edge, keep_vertex, true);
}

SphericalRegion union_regions(const std::vector<SphericalRegion>& rs) {
  if (rs.empty()) fail(ErrorCode::kPrecondition, "union of no regions");
  OverlayCallbacks cb;
  auto bit_or = [](int64_t a, int64_t b) { return a | b; };
  cb.vertex_vertex = cb.vertex_edge = cb.edge_vertex = cb.vertex_face = cb.face_vertex = bit_or;
  cb.edge_edge_crossing = cb.edge_edge_overlap = cb.edge_face = cb.face_edge = cb.face_face = bit_or;
  SphericalRegion acc = cleanup_region(rs[0]);
  for (size_t i = 1; i < rs.size(); ++i) acc = cleanup_region(overlay(acc, rs[i], cb));
  return acc;
}

MotionSpace build_motion_space(int parts, const std::map<std::pair<int, int>, SphericalRegion>& q) {
  if (parts < 1 || parts > 8) fail(ErrorCode::kPrecondition, "motion space supports 1 to 8 parts");
  MotionSpace ms;
  ms.parts = parts;
  std::vector<SphericalRegion> tagged;
  for (const auto& [ij, r] : q) {
    SphericalRegion c = r;
    const int64_t bit = int64_t(1) << (ij.first * parts + ij.second);
    for (int v = 0; v < c.num_vertices(); ++v) c.vertex(v).data = c.vertex(v).data ? bit : 0;
    for (int h = 0; h < c.num_halfedges(); ++h) c.halfedge(h).data = c.halfedge(h).data ? bit : 0;
    for (int f = 0; f < c.num_faces(); ++f) c.face(f).data = c.face(f).data ? bit : 0;
    tagged.push_back(std::move(c));
  }
  if (tagged.empty()) {
    ms.arr.face(0).data = 0;
    return ms;
  }
  ms.arr = union_regions(tagged);
  return ms;
}

std::vector<int> strong_components(const std::vector<std::vector<int>>& adj, int* count) {
  // Iterative Tarjan.
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<char> on(n, 0);
  int counter = 0, ncomp = 0;
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    std::vector<std::pair<int, size_t>> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on[root] = 1;
    while (!call.empty()) {
      auto& [v, it] = call.back();
      if (it < adj[v].size()) {
        int w = adj[v][it++];
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on[w] = 1;
          call.push_back({w, 0});
        } else if (on[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        for (;;) {
          int w = stack.back();
          stack.pop_back();
          on[w] = 0;
          comp[w] = ncomp;
          if (w == v) break;
        }
        ++ncomp;
      }
      int done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  if (count) *count = ncomp;
  return comp;
}

std::vector<int> movable_subset(const MotionSpace& ms, int64_t mask) {
  const int n = ms.parts;
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && ms.blocked(mask, i, j)) adj[i].push_back(j);
  int count = 0;
  std::vector<int> comp = strong_components(adj, &count);
  if (count <= 1) return {};
  // An edge i -> j means i is blocked by j. A component nobody is blocked by
  // stays behind; everything else moves.
  std::vector<char> has_in(count, 0);
  for (int i = 0; i < n; ++i)
    for (int j : adj[i])
      if (comp[i] != comp[j]) has_in[comp[j]] = 1;
  int stay = -1;
  for (int i = 0; i < n && stay < 0; ++i)
    if (!has_in[comp[i]]) stay = comp[i];
  std::vector<int> s;
  for (int i = 0; i < n; ++i)
    if (comp[i] != stay) s.push_back(i);
  return s;
}

Vec3 cell_direction(const SphereArrangement& arr, CellKind kind, int id) {
  if (kind == CellKind::VERTEX) return arr.vertex(id).p.dir;
  if (kind == CellKind::EDGE) return arc_midpoint(arr.halfedge(id).arc);
  const auto& face = arr.face(id);
  if (face.ccbs.empty()) {
    for (const Vec3& d : {Vec3(0, 0, 1), Vec3(1, 2, 3), Vec3(-3, 1, 2)}) {
      Cell c = arr.locate(classify(d));
      if (c.kind == CellKind::FACE && c.id == id) return d;
    }
    fail(ErrorCode::kInternal, "no interior direction found");
  }
  // Step off the middle of a boundary arc toward the face.
  const auto& he = arr.halfedge(face.ccbs[0]);
  Vec3 m = arc_midpoint(he.arc);
  Rational eps = 1;
  for (int k = 0; k < 200; ++k, eps /= 2) {
    Vec3 d = m + eps * he.arc.normal;
    Cell c = arr.locate(classify(d));
    if (c.kind == CellKind::FACE && c.id == id) return primitive_direction(d);
  }
  fail(ErrorCode::kInternal, "no interior direction found");
}

PartitionResult find_partitions(const MotionSpace& ms, PartitionMode mode) {
  PartitionResult r;
  const SphereArrangement& a = ms.arr;
  r.motion_vertices = a.num_vertices();
  r.motion_edges = a.num_edges();
  r.motion_faces = a.num_faces();
  auto consider = [&](CellKind kind, int id, int64_t mask) {
    std::vector<int> s = movable_subset(ms, mask);
    if (s.empty()) return false;
    r.solutions.push_back({kind, id, cell_direction(a, kind, id), std::move(s)});
    return mode == PartitionMode::FIRST;
  };
  // Constraints only grow from vertices to edges to faces, so a level with
  // no solution ends the search.
  bool found = false;
  for (int v = 0; v < a.num_vertices(); ++v)
    if (consider(CellKind::VERTEX, v, a.vertex(v).data)) return r;
  found = !r.solutions.empty();
  if (a.num_vertices() == 0 || found) {
    size_t before = r.solutions.size();
    for (int h = 0; h < a.num_halfedges(); h += 2)
      if (consider(CellKind::EDGE, h, a.halfedge(h).data)) return r;
    if (a.num_halfedges() == 0 || r.solutions.size() > before)
      for (int f = 0; f < a.num_faces(); ++f)
        if (consider(CellKind::FACE, f, a.face(f).data)) return r;
  }
  r.interlocked = r.solutions.empty();
  return r;
}

MotionSpace assembly_motion_space(const Assembly& a, int threads, int* sum_count) {
  const int n = a.size();
  if (n < 2) fail(ErrorCode::kPrecondition, "an assembly needs at least two parts");
  std::map<SumKey, GaussianMap> sums = pairwise_subpart_sums(a, true, threads);
  for (const auto& [key, g] : sums) {
    bool inside = true;
    FacetTable t = facet_table(g);
    for (const auto& h : t.offset) inside &= sign_of(h) == Sign::POSITIVE;
    if (inside)
      fail(ErrorCode::kPrecondition, "sub-parts of parts " + std::to_string(key[0]) + " and " +
                                         std::to_string(key[1]) + " overlap");
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) pairs.push_back({i, j});
  std::vector<SphericalRegion> q(pairs.size());
  parallel_for(static_cast<int>(pairs.size()), threads, [&](int x) {
    auto [i, j] = pairs[x];
    std::vector<SphericalRegion> rs;
    for (size_t k = 0; k < a.parts[i].size(); ++k)
      for (size_t l = 0; l < a.parts[j].size(); ++l)
        rs.push_back(project_polytope(sums.at({i, j, static_cast<int>(k), static_cast<int>(l)})));
    q[x] = union_regions(rs);
  });
  std::map<std::pair<int, int>, SphericalRegion> qm;
  for (size_t x = 0; x < pairs.size(); ++x) qm.emplace(pairs[x], std::move(q[x]));
  if (sum_count) *sum_count = static_cast<int>(sums.size());
  return build_motion_space(n, qm);
}

PartitionResult partition(const Assembly& a, PartitionMode mode, int threads) {
  int sums = 0;
  MotionSpace ms = assembly_motion_space(a, threads, &sums);
  PartitionResult r = find_partitions(ms, mode);
  r.sums = sums;
  return r;
}

}  // namespace geomink
