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

#include "arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace geomink {

namespace {

// Counterclockwise angular order of tangent vectors around axis `a`.
int tangent_class(const Vec3& a, const Vec3& s, const Vec3& x) {
  int c = sgn(dot(a, cross(s, x)));
  if (c > 0) return 1;
  if (c < 0) return 3;
  return sgn(dot(s, x)) > 0 ? 0 : 2;
}

bool ccw_before3(const Vec3& a, const Vec3& start, const Vec3& probe, const Vec3& target) {
  int cp = tangent_class(a, start, probe);
  int ct = tangent_class(a, start, target);
  if (cp == 0) return false;
  if (ct == 0) return true;
  if (cp != ct) return cp < ct;
  if (cp == 2) return false;
  return sgn(dot(a, cross(probe, target))) > 0;
}

// Sweep event rank: south pole, identification curve, interior, north pole.
int event_rank(const DirPoint& p) {
  switch (p.bc) {
    case BoundaryClass::SOUTH_POLE: return 0;
    case BoundaryClass::ON_IDENTIFICATION: return 1;
    case BoundaryClass::INTERIOR: return 2;
    case BoundaryClass::NORTH_POLE: return 3;
  }
  return 2;
}

bool event_less(const DirPoint& a, const DirPoint& b) {
  int ra = event_rank(a), rb = event_rank(b);
  if (ra != rb) return ra < rb;
  if (ra == 1) return compare_v(a, b) == SMALLER;
  if (ra == 2) return compare_uv(a, b) == SMALLER;
  return false;
}

// Conservative double-precision bounding box of an arc on the unit sphere.
struct Box {
  double lo[3], hi[3];
};

Box arc_box(const GeodesicArc& a) {
  Box b;
  auto unit = [](const Vec3& v) {
    auto d = to_doubles(v);
    double n = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
    return std::array<double, 3>{d[0] / n, d[1] / n, d[2] / n};
  };
  auto s = unit(a.source.dir), t = unit(a.target.dir);
  for (int i = 0; i < 3; ++i) {
    b.lo[i] = std::min(s[i], t[i]);
    b.hi[i] = std::max(s[i], t[i]);
  }
  // Axis extremes of the great circle that fall inside the arc.
  Rational nn = norm2(a.normal);
  for (int i = 0; i < 3; ++i) {
    Vec3 e(0, 0, 0);
    e[i] = 1;
    Vec3 q = e - (a.normal[i] / nn) * a.normal;
    if (q.is_zero()) continue;
    for (const Vec3& c : {q, -q}) {
      if (arc_contains_interior(a, c)) {
        auto u = unit(c);
        for (int k = 0; k < 3; ++k) {
          b.lo[k] = std::min(b.lo[k], u[k]);
          b.hi[k] = std::max(b.hi[k], u[k]);
        }
      }
    }
  }
  for (int i = 0; i < 3; ++i) {
    b.lo[i] -= 1e-7;
    b.hi[i] += 1e-7;
  }
  return b;
}

bool boxes_meet(const Box& a, const Box& b) {
  for (int i = 0; i < 3; ++i)
    if (a.hi[i] < b.lo[i] || b.hi[i] < a.lo[i]) return false;
  return true;
}

struct BuildResult {
  SphereArrangement arr;
  // Input arcs covering each halfedge pair, indexed by halfedge id.
  std::vector<std::vector<int>> cover;
};

// Inserts interior-disjoint arcs with vertex anchors in sweep order.
void insert_pieces(SphereArrangement& arr, std::vector<std::pair<GeodesicArc, std::vector<int>>> pieces,
                   const std::vector<DirPoint>& points, std::vector<std::vector<int>>* cover) {
  std::sort(pieces.begin(), pieces.end(), [](const auto& x, const auto& y) {
    const DirPoint &xl = x.first.left(), &yl = y.first.left();
    if (xl != yl) return event_less(xl, yl) || (!event_less(yl, xl) && lex_less(xl.dir, yl.dir));
    const DirPoint &xr = x.first.right(), &yr = y.first.right();
    if (event_less(xr, yr) != event_less(yr, xr)) return event_less(xr, yr);
    return lex_less(xr.dir, yr.dir);
  });
  std::map<DirPoint, int, DirPointLess> vid;
  for (auto& [arc, tags] : pieces) {
    auto a = vid.find(arc.source), b = vid.find(arc.target);
    int h = arr.insert_disjoint_arc(arc, a == vid.end() ? -1 : a->second,
                                    b == vid.end() ? -1 : b->second);
    vid[arc.source] = arr.halfedge(h).origin;
    vid[arc.target] = arr.target(h);
    int64_t d = tags.empty() ? 0 : tags.front();
    arr.halfedge(h).data = d;
    arr.halfedge(arr.halfedge(h).twin).data = d;
    if (cover) {
      cover->resize(arr.num_halfedges());
      (*cover)[h] = tags;
      (*cover)[arr.halfedge(h).twin] = tags;
    }
  }
  for (const DirPoint& p : points)
    if (!vid.count(p)) vid[p] = arr.insert_point(p);
  if (cover) cover->resize(arr.num_halfedges());
}

BuildResult build_impl(const std::vector<GeodesicArc>& input, const std::vector<int>& color,
                       const std::vector<DirPoint>& points) {
  struct Piece {
    GeodesicArc arc;
    int tag;
  };
  std::vector<Piece> arcs;
  for (size_t i = 0; i < input.size(); ++i) {
    const GeodesicArc& a = input[i];
    if (a.source == a.target || parallel(a.source.dir, a.target.dir))
      fail(ErrorCode::kInvalidArc, "arc " + std::to_string(i) + " is degenerate");
    if (sgn(dot(a.normal, a.source.dir)) != 0 || sgn(dot(a.normal, a.target.dir)) != 0)
      fail(ErrorCode::kInvalidArc, "arc " + std::to_string(i) + " has an inconsistent normal");
    for (auto& p : make_arc(a.source, a.target)) arcs.push_back({p, static_cast<int>(i)});
  }
  size_t n = arcs.size();
  std::vector<Box> boxes(n);
  for (size_t i = 0; i < n; ++i) boxes[i] = arc_box(arcs[i].arc);
  std::vector<std::vector<DirPoint>> cuts(n);
  auto add_cut = [&](size_t i, const DirPoint& p) {
    if (arc_contains_interior(arcs[i].arc, p.dir)) cuts[i].push_back(p);
  };
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (!color.empty() && color[arcs[i].tag] == color[arcs[j].tag]) continue;
      if (!boxes_meet(boxes[i], boxes[j])) continue;
      IntersectionResult r = intersect(arcs[i].arc, arcs[j].arc);
      for (const DirPoint& p : r.points) {
        add_cut(i, p);
        add_cut(j, p);
      }
      if (r.overlap) {
        for (const DirPoint* p : {&r.overlap->source, &r.overlap->target}) {
          add_cut(i, *p);
          add_cut(j, *p);
        }
      }
    }
    for (const DirPoint& p : points) add_cut(i, p);
  }
  std::map<std::pair<Vec3, Vec3>, size_t, std::function<bool(const std::pair<Vec3, Vec3>&,
                                                             const std::pair<Vec3, Vec3>&)>>
      seen([](const std::pair<Vec3, Vec3>& x, const std::pair<Vec3, Vec3>& y) {
        if (x.first != y.first) return lex_less(x.first, y.first);
        return lex_less(x.second, y.second);
      });
  std::vector<std::pair<GeodesicArc, std::vector<int>>> pieces;
  for (size_t i = 0; i < n; ++i) {
    const GeodesicArc& a = arcs[i].arc;
    auto& c = cuts[i];
    std::sort(c.begin(), c.end(), [&](const DirPoint& x, const DirPoint& y) {
      return sgn(dot(cross(x.dir, y.dir), a.normal)) > 0;
    });
    c.erase(std::unique(c.begin(), c.end()), c.end());
    std::vector<DirPoint> chain{a.source};
    chain.insert(chain.end(), c.begin(), c.end());
    chain.push_back(a.target);
    for (size_t k = 0; k + 1 < chain.size(); ++k) {
      GeodesicArc piece = a;
      piece.source = chain[k];
      piece.target = chain[k + 1];
      std::pair<Vec3, Vec3> key = lex_less(piece.source.dir, piece.target.dir)
                                      ? std::make_pair(piece.source.dir, piece.target.dir)
                                      : std::make_pair(piece.target.dir, piece.source.dir);
      auto it = seen.find(key);
      if (it != seen.end()) {
        auto& tags = pieces[it->second].second;
        if (std::find(tags.begin(), tags.end(), arcs[i].tag) == tags.end())
          tags.push_back(arcs[i].tag);
        continue;
      }
      seen.emplace(key, pieces.size());
      pieces.push_back({piece, {arcs[i].tag}});
    }
  }
  BuildResult res;
  insert_pieces(res.arr, std::move(pieces), points, &res.cover);
  return res;
}

}  // namespace

SphereArrangement::SphereArrangement() { faces_.emplace_back(); }

std::vector<int> SphereArrangement::outgoing(int v) const {
  std::vector<int> res;
  int h0 = vertices_[v].out;
  if (h0 < 0) return res;
  int h = h0;
  do {
    res.push_back(h);
    h = halfedges_[halfedges_[h].twin].next;
  } while (h != h0 && res.size() <= halfedges_.size());
  std::reverse(res.begin() + 1, res.end());
  return res;
}

int SphereArrangement::degree(int v) const { return static_cast<int>(outgoing(v).size()); }

std::vector<int> SphereArrangement::cycle(int h0) const {
  std::vector<int> res;
  int h = h0;
  do {
    res.push_back(h);
    h = halfedges_[h].next;
  } while (h != h0 && res.size() <= halfedges_.size());
  return res;
}

int SphereArrangement::new_vertex(const DirPoint& p) {
  Vertex v;
  v.p = p;
  vertices_.push_back(v);
  return num_vertices() - 1;
}

int SphereArrangement::new_edge(const GeodesicArc& arc, int from, int to) {
  int h = num_halfedges();
  Halfedge a, b;
  a.twin = h + 1;
  b.twin = h;
  a.origin = from;
  b.origin = to;
  a.arc = arc;
  b.arc = arc.reversed();
  halfedges_.push_back(a);
  halfedges_.push_back(b);
  return h;
}

int SphereArrangement::find_vertex(const DirPoint& p) const {
  for (int v = 0; v < num_vertices(); ++v)
    if (vertices_[v].p == p) return v;
  return -1;
}

std::pair<int, int> SphereArrangement::slot(int v, const Vec3& t) const {
  std::vector<int> outs = outgoing(v);
  if (outs.empty()) return {-1, -1};
  if (outs.size() == 1) return {outs[0], outs[0]};
  const Vec3& axis = vertices_[v].p.dir;
  size_t k = outs.size();
  std::vector<Vec3> tan(k);
  for (size_t i = 0; i < k; ++i) tan[i] = tangent_from(halfedges_[outs[i]].arc, vertices_[v].p);
  for (size_t i = 0; i < k; ++i) {
    size_t pi = (i + k - 1) % k;
    if (ccw_before3(axis, tan[pi], t, tan[i])) return {outs[pi], outs[i]};
  }
  fail(ErrorCode::kPrecondition, "arc overlaps an edge at vertex " + to_string(vertices_[v].p.dir));
}

int SphereArrangement::face_at_slot(int v, int pred) const {
  return pred < 0 ? vertices_[v].iso_face : halfedges_[pred].face;
}

void SphereArrangement::relink(int h, int v1, int v2, int p1, int s1, int p2, int s2) {
  int g = halfedges_[h].twin;
  auto link = [&](int a, int b) {
    halfedges_[a].next = b;
    halfedges_[b].prev = a;
  };
  if (p1 < 0) {
    link(g, h);
  } else {
    link(halfedges_[s1].twin, h);
    link(g, p1);
  }
  if (p2 < 0) {
    link(h, g);
  } else {
    link(halfedges_[s2].twin, g);
    link(h, p2);
  }
  vertices_[v1].out = h;
  vertices_[v2].out = g;
}

void SphereArrangement::remove_ccb_entry(int f, const std::vector<char>& in_cycle) {
  auto& c = faces_[f].ccbs;
  c.erase(std::remove_if(c.begin(), c.end(), [&](int r) { return in_cycle[r]; }), c.end());
}

int SphereArrangement::insert_point(const DirPoint& p) {
  Cell c = locate(p);
  if (c.kind == CellKind::VERTEX) return c.id;
  if (c.kind == CellKind::EDGE)
    fail(ErrorCode::kPrecondition, "insert_point: point lies on an edge");
  int v = new_vertex(p);
  vertices_[v].iso_face = c.id;
  faces_[c.id].isolated.push_back(v);
  return v;
}

int SphereArrangement::insert_disjoint_arc(const GeodesicArc& arc, int v1, int v2) {
  if (arc.source == arc.target || parallel(arc.source.dir, arc.target.dir))
    fail(ErrorCode::kInvalidArc, "degenerate arc");
  if (v1 >= 0 && vertices_[v1].p != arc.source)
    fail(ErrorCode::kAnchorMismatch, "source anchor does not match the arc");
  if (v2 >= 0 && vertices_[v2].p != arc.target)
    fail(ErrorCode::kAnchorMismatch, "target anchor does not match the arc");
  int face1 = -1;
  if (v1 < 0) v1 = find_vertex(arc.source);
  if (v2 < 0) v2 = find_vertex(arc.target);
  if (v1 < 0 && v2 < 0) {
    Cell c = locate(arc.source);
    if (c.kind != CellKind::FACE) fail(ErrorCode::kPrecondition, "arc endpoint lies on an edge");
    face1 = c.id;
  } else {
    for (int side = 0; side < 2; ++side) {
      const DirPoint& p = side == 0 ? arc.source : arc.target;
      if ((side == 0 ? v1 : v2) >= 0) continue;
      for (int h = 0; h < num_halfedges(); h += 2)
        if (arc_contains_interior(halfedges_[h].arc, p.dir))
          fail(ErrorCode::kPrecondition, "arc endpoint lies on an edge");
    }
  }

  if (v1 < 0 && v2 < 0) {
    int a = new_vertex(arc.source), b = new_vertex(arc.target);
    int h = new_edge(arc, a, b);
    relink(h, a, b, -1, -1, -1, -1);
    halfedges_[h].face = halfedges_[h + 1].face = face1;
    faces_[face1].ccbs.push_back(h);
    return h;
  }

  if (v1 < 0 || v2 < 0) {
    bool from_source = v1 >= 0;
    int v = from_source ? v1 : v2;
    const DirPoint& p = from_source ? arc.source : arc.target;
    auto [pred, succ] = slot(v, tangent_from(arc, p));
    int f = face_at_slot(v, pred);
    int w = new_vertex(from_source ? arc.target : arc.source);
    int h = new_edge(arc, from_source ? v : w, from_source ? w : v);
    if (from_source)
      relink(h, v, w, pred, succ, -1, -1);
    else
      relink(h, w, v, -1, -1, pred, succ);
    halfedges_[h].face = halfedges_[h + 1].face = f;
    if (pred < 0) {
      auto& iso = faces_[f].isolated;
      iso.erase(std::remove(iso.begin(), iso.end(), v), iso.end());
      vertices_[v].iso_face = -1;
      faces_[f].ccbs.push_back(h);
    }
    return h;
  }

  auto [p1, s1] = slot(v1, tangent_from(arc, arc.source));
  auto [p2, s2] = slot(v2, tangent_from(arc, arc.target));
  int f = face_at_slot(v1, p1);
  if (f != face_at_slot(v2, p2))
    fail(ErrorCode::kPrecondition, "arc endpoints lie in different faces");
  std::vector<char> in_c1(num_halfedges() + 2, 0);
  bool same = false;
  if (p1 >= 0 && p2 >= 0) {
    for (int x : cycle(p1)) in_c1[x] = 1;
    same = in_c1[p2];
  }
  int h = new_edge(arc, v1, v2);
  int g = h + 1;
  halfedges_[h].face = halfedges_[g].face = f;

  if (!same) {
    if (p1 >= 0 && p2 >= 0) {
      std::vector<char> in_c2(num_halfedges(), 0);
      for (int x : cycle(p2)) in_c2[x] = 1;
      remove_ccb_entry(f, in_c2);
    }
    for (int v : {v1, v2}) {
      if (vertices_[v].out < 0) {
        auto& iso = faces_[f].isolated;
        iso.erase(std::remove(iso.begin(), iso.end(), v), iso.end());
        vertices_[v].iso_face = -1;
      }
    }
    bool had_ccb = p1 >= 0 || p2 >= 0;
    relink(h, v1, v2, p1, s1, p2, s2);
    if (!had_ccb) faces_[f].ccbs.push_back(h);
    return h;
  }

  relink(h, v1, v2, p1, s1, p2, s2);
  std::vector<char> in_h(num_halfedges(), 0), in_g(num_halfedges(), 0);
  std::vector<int> ch = cycle(h), cg = cycle(g);
  for (int x : ch) in_h[x] = 1;
  for (int x : cg) in_g[x] = 1;
  std::vector<char> either(num_halfedges(), 0);
  for (int i = 0; i < num_halfedges(); ++i) either[i] = in_h[i] || in_g[i];
  remove_ccb_entry(f, either);
  int nf = num_faces();
  faces_.emplace_back();
  faces_[nf].data = faces_[f].data;
  for (int x : ch) halfedges_[x].face = nf;
  faces_[nf].ccbs.push_back(h);

  // Other boundary cycles and isolated vertices follow the side they lie on.
  std::vector<char> use(num_halfedges(), 0);
  for (int x : ch) use[x] = use[halfedges_[x].twin] = 1;
  std::vector<int> keep_ccbs, keep_iso;
  for (int r : faces_[f].ccbs) {
    int hit = facing_halfedge(vertices_[halfedges_[r].origin].p.dir, use);
    if (hit >= 0 && in_h[hit]) {
      for (int x : cycle(r)) halfedges_[x].face = nf;
      faces_[nf].ccbs.push_back(r);
    } else {
      keep_ccbs.push_back(r);
    }
  }
  for (int v : faces_[f].isolated) {
    int hit = facing_halfedge(vertices_[v].p.dir, use);
    if (hit >= 0 && in_h[hit]) {
      vertices_[v].iso_face = nf;
      faces_[nf].isolated.push_back(v);
    } else {
      keep_iso.push_back(v);
    }
  }
  faces_[f].ccbs = keep_ccbs;
  faces_[f].ccbs.push_back(g);
  faces_[f].isolated = keep_iso;
  return h;
}

namespace {

enum class CastStatus { kDegenerate, kHit, kMiss };

// First edge crossed by the short arc from p to t. Degenerate when the arc
// runs through a vertex or along an edge.
CastStatus cast(const std::vector<SphereArrangement::Halfedge>& hs, const std::vector<int>& edges,
                const Vec3& p, const Vec3& t, int* hit) {
  Vec3 m = cross(p, t);
  int best = -1;
  Vec3 best_x;
  for (int e : edges) {
    const GeodesicArc& ea = hs[e].arc;
    Vec3 l = cross(m, ea.normal);
    if (l.is_zero()) {
      if (!intersect(raw_arc(classify(p), classify(t)), ea).empty()) return CastStatus::kDegenerate;
      continue;
    }
    for (const Vec3& x : {l, -l}) {
      if (sgn(dot(cross(p, x), m)) < 0 || sgn(dot(cross(x, t), m)) < 0) continue;
      if (!arc_contains(ea, x)) continue;
      if (codirectional(x, ea.source.dir) || codirectional(x, ea.target.dir)) return CastStatus::kDegenerate;
      if (best < 0 || sgn(dot(cross(x, best_x), m)) > 0) {
        best = e;
        best_x = x;
      }
    }
  }
  if (best < 0) return CastStatus::kMiss;
  *hit = sgn(dot(hs[best].arc.normal, p)) > 0 ? best : hs[best].twin;
  return CastStatus::kHit;
}

const Vec3 kProbeDirs[] = {Vec3(1, 2, 3),  Vec3(-3, 1, 2), Vec3(2, -3, 1),  Vec3(1, 1, -3),
                           Vec3(-2, -3, -1), Vec3(5, -1, -2), Vec3(-1, 5, -3), Vec3(3, 4, 7),
                           Vec3(-7, 2, 3), Vec3(2, 9, -4),  Vec3(11, 3, 5),  Vec3(-4, -9, 6)};

}  // namespace

int SphereArrangement::facing_halfedge(const Vec3& p, const std::vector<char>& use) const {
  std::vector<int> edges;
  for (int h = 0; h < num_halfedges(); h += 2)
    if (use[h] || use[h + 1]) edges.push_back(h);
  if (edges.empty()) return -1;
  auto toward_edges = [&](const Vec3& from, int* hit) {
    for (int weight = 1; weight < 6; ++weight) {
      for (int host : edges) {
        const GeodesicArc& ha = halfedges_[host].arc;
        Vec3 t = ha.source.dir + Rational(weight) * ha.target.dir;
        if (parallel(t, from)) continue;
        if (cast(halfedges_, edges, from, t, hit) == CastStatus::kHit) return true;
      }
    }
    return false;
  };
  int hit = -1;
  if (toward_edges(p, &hit)) return hit;
  // Every edge shares a great circle with p or the casts hit vertices: step to
  // an auxiliary point first.
  for (int scale = 1; scale < 4; ++scale) {
    for (const Vec3& v : kProbeDirs) {
      Vec3 q = Rational(scale) * v + p;
      if (q.is_zero() || parallel(q, p)) continue;
      CastStatus s = cast(halfedges_, edges, p, q, &hit);
      if (s == CastStatus::kHit) return hit;
      if (s == CastStatus::kMiss && toward_edges(q, &hit)) return hit;
    }
  }
  fail(ErrorCode::kInternal, "point location found no non-degenerate ray");
}

SphereArrangement::Cell SphereArrangement::locate(const DirPoint& p) const {
  for (int v = 0; v < num_vertices(); ++v)
    if (vertices_[v].p == p) return {CellKind::VERTEX, v};
  for (int h = 0; h < num_halfedges(); h += 2)
    if (arc_contains_interior(halfedges_[h].arc, p.dir)) return {CellKind::EDGE, h};
  if (halfedges_.empty()) return {CellKind::FACE, 0};
  std::vector<char> use(num_halfedges(), 1);
  return {CellKind::FACE, halfedges_[facing_halfedge(p.dir, use)].face};
}

int SphereArrangement::face_of_north_pole() const {
  Cell c = locate(north_pole());
  return c.kind == CellKind::FACE ? c.id : -1;
}

namespace {

const Vec3 kReferencePoints[] = {Vec3(0, 0, 1), Vec3(1, 2, 1000), Vec3(-3, 1, 997),
                                 Vec3(2, -5, 991), Vec3(7, 3, 983)};

}  // namespace

std::vector<int> SphereArrangement::outer_ccbs(int f) const {
  std::vector<int> res;
  for (const Vec3& r : kReferencePoints) {
    Cell c = locate(classify(r));
    if (c.kind != CellKind::FACE) continue;
    if (c.id == f) return res;
    for (int rep : faces_[f].ccbs) {
      std::vector<char> use(num_halfedges(), 0), in(num_halfedges(), 0);
      for (int x : cycle(rep)) {
        in[x] = 1;
        use[x] = use[halfedges_[x].twin] = 1;
      }
      int hit = facing_halfedge(r, use);
      if (hit < 0 || !in[hit]) res.push_back(rep);
    }
    return res;
  }
  return res;
}

std::vector<int> SphereArrangement::inner_ccbs(int f) const {
  std::vector<int> outer = outer_ccbs(f), res;
  for (int r : faces_[f].ccbs)
    if (std::find(outer.begin(), outer.end(), r) == outer.end()) res.push_back(r);
  return res;
}

std::vector<int> SphereArrangement::identification_vertices() const {
  std::vector<int> res;
  for (int v = 0; v < num_vertices(); ++v)
    if (vertices_[v].p.bc == BoundaryClass::ON_IDENTIFICATION) res.push_back(v);
  std::sort(res.begin(), res.end(), [&](int a, int b) {
    return compare_v(vertices_[a].p, vertices_[b].p) == SMALLER;
  });
  return res;
}

int SphereArrangement::north_pole_vertex() const { return find_vertex(north_pole()); }
int SphereArrangement::south_pole_vertex() const { return find_vertex(south_pole()); }

int SphereArrangement::connected_components() const {
  std::vector<int> parent(num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int h = 0; h < num_halfedges(); h += 2)
    parent[find(halfedges_[h].origin)] = find(halfedges_[h + 1].origin);
  int c = 0;
  for (int v = 0; v < num_vertices(); ++v) c += find(v) == v;
  return c;
}

std::vector<std::string> SphereArrangement::validate() const {
  std::vector<std::string> errs;
  auto err = [&](const std::string& s) { errs.push_back(s); };
  int H = num_halfedges(), V = num_vertices(), F = num_faces();
  if (H % 2) err("odd halfedge count");
  for (int h = 0; h < H; ++h) {
    const Halfedge& e = halfedges_[h];
    std::string id = "halfedge " + std::to_string(h) + ": ";
    if (e.twin < 0 || e.twin >= H || e.twin == h || halfedges_[e.twin].twin != h) {
      err(id + "bad twin");
      continue;
    }
    if (e.next < 0 || e.next >= H || halfedges_[e.next].prev != h) err(id + "next/prev mismatch");
    if (e.prev < 0 || e.prev >= H || halfedges_[e.prev].next != h) err(id + "prev/next mismatch");
    if (e.origin < 0 || e.origin >= V) {
      err(id + "bad origin");
      continue;
    }
    if (e.next >= 0 && e.next < H && halfedges_[e.next].origin != halfedges_[e.twin].origin)
      err(id + "next does not start at target");
    if (e.face < 0 || e.face >= F) err(id + "bad face");
    if (e.next >= 0 && e.next < H && halfedges_[e.next].face != e.face) err(id + "face differs along cycle");
    if (e.arc.source != vertices_[e.origin].p || e.arc.target != vertices_[halfedges_[e.twin].origin].p)
      err(id + "arc endpoints disagree with vertices");
    if (sgn(dot(e.arc.normal, e.arc.source.dir)) != 0 || sgn(dot(e.arc.normal, e.arc.target.dir)) != 0)
      err(id + "normal not orthogonal to endpoints");
    if (sgn(dot(cross(e.arc.source.dir, e.arc.target.dir), e.arc.normal)) <= 0)
      err(id + "arc not counterclockwise about its normal");
    if (halfedges_[e.twin].arc.normal != -e.arc.normal) err(id + "twin normal not reversed");
  }
  if (!errs.empty()) return errs;
  for (int v = 0; v < V; ++v) {
    const Vertex& x = vertices_[v];
    std::string id = "vertex " + std::to_string(v) + ": ";
    if (x.out >= 0) {
      if (halfedges_[x.out].origin != v) err(id + "outgoing halfedge starts elsewhere");
      std::vector<int> outs = outgoing(v);
      for (int o : outs)
        if (halfedges_[o].origin != v) err(id + "rotation leaves the vertex");
      size_t k = outs.size();
      if (k >= 2) {
        std::vector<Vec3> t(k);
        for (size_t i = 0; i < k; ++i) t[i] = tangent_from(halfedges_[outs[i]].arc, x.p);
        for (size_t i = 0; i < k; ++i) {
          if (codirectional(t[i], t[(i + 1) % k])) err(id + "overlapping outgoing arcs");
          if (k >= 3 && !ccw_before3(x.p.dir, t[i], t[(i + 1) % k], t[(i + 2) % k]))
            err(id + "outgoing halfedges out of counterclockwise order");
        }
      }
    } else {
      if (x.iso_face < 0 || x.iso_face >= F) {
        err(id + "isolated vertex without a face");
      } else {
        auto& iso = faces_[x.iso_face].isolated;
        if (std::count(iso.begin(), iso.end(), v) != 1) err(id + "isolated vertex not listed once");
      }
    }
  }
  std::vector<int> ccb_of(H, -1);
  for (int f = 0; f < F; ++f) {
    for (int r : faces_[f].ccbs) {
      if (r < 0 || r >= H) {
        err("face " + std::to_string(f) + ": bad ccb");
        continue;
      }
      for (int x : cycle(r)) {
        if (ccb_of[x] >= 0) err("halfedge " + std::to_string(x) + " in two listed ccbs");
        ccb_of[x] = r;
        if (halfedges_[x].face != f) err("halfedge " + std::to_string(x) + " ccb listed by another face");
      }
    }
    for (int v : faces_[f].isolated)
      if (v < 0 || v >= V || vertices_[v].iso_face != f || vertices_[v].out >= 0)
        err("face " + std::to_string(f) + ": bad isolated vertex");
  }
  for (int h = 0; h < H; ++h)
    if (ccb_of[h] < 0) err("halfedge " + std::to_string(h) + " not on a listed ccb");
  int C = connected_components();
  if (V - H / 2 + F != 1 + C)
    err("Euler: V - E + F = " + std::to_string(V - H / 2 + F) + ", expected " + std::to_string(1 + C));
  return errs;
}

std::string SphereArrangement::dump() const {
  std::ostringstream os;
  os << "geomink-arrangement 1\n";
  os << "vertices " << num_vertices() << "\n";
  for (const Vertex& v : vertices_)
    os << to_string(v.p.dir) << " " << v.out << " " << v.iso_face << " " << v.data << "\n";
  os << "halfedges " << num_halfedges() << "\n";
  for (const Halfedge& h : halfedges_)
    os << h.twin << " " << h.next << " " << h.prev << " " << h.origin << " " << h.face << " "
       << to_string(h.arc.normal) << " " << h.data << "\n";
  os << "faces " << num_faces() << "\n";
  for (const Face& f : faces_) {
    os << f.data << " " << f.ccbs.size();
    for (int r : f.ccbs) os << " " << r;
    os << " " << f.isolated.size();
    for (int v : f.isolated) os << " " << v;
    os << "\n";
  }
  return os.str();
}

SphereArrangement SphereArrangement::parse_dump(const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  int version = 0;
  auto expect = [&](const char* word) {
    if (!(is >> tok) || tok != word) fail(ErrorCode::kParse, std::string("expected '") + word + "'");
  };
  auto rat = [&]() {
    if (!(is >> tok)) fail(ErrorCode::kParse, "truncated arrangement dump");
    return parse_rational(tok);
  };
  auto num = [&]() -> long long {
    long long x;
    if (!(is >> x)) fail(ErrorCode::kParse, "expected integer in arrangement dump");
    return x;
  };
  expect("geomink-arrangement");
  version = static_cast<int>(num());
  if (version != 1) fail(ErrorCode::kParse, "unsupported arrangement dump version");
  SphereArrangement a;
  a.faces_.clear();
  expect("vertices");
  long long nv = num();
  for (long long i = 0; i < nv; ++i) {
    Vertex v;
    Rational x = rat(), y = rat(), z = rat();
    v.p = classify(Vec3(x, y, z));
    v.out = static_cast<int>(num());
    v.iso_face = static_cast<int>(num());
    v.data = num();
    a.vertices_.push_back(v);
  }
  expect("halfedges");
  long long nh = num();
  for (long long i = 0; i < nh; ++i) {
    Halfedge h;
    h.twin = static_cast<int>(num());
    h.next = static_cast<int>(num());
    h.prev = static_cast<int>(num());
    h.origin = static_cast<int>(num());
    h.face = static_cast<int>(num());
    Rational x = rat(), y = rat(), z = rat();
    h.arc.normal = Vec3(x, y, z);
    h.data = num();
    a.halfedges_.push_back(h);
  }
  for (int i = 0; i < a.num_halfedges(); ++i) {
    Halfedge& h = a.halfedges_[i];
    if (h.twin < 0 || h.twin >= a.num_halfedges() || h.origin < 0 || h.origin >= a.num_vertices() ||
        a.halfedges_[h.twin].origin < 0 || a.halfedges_[h.twin].origin >= a.num_vertices())
      fail(ErrorCode::kParse, "dangling index in arrangement dump");
    Vec3 normal = h.arc.normal;
    h.arc = raw_arc(a.vertices_[h.origin].p, a.vertices_[a.halfedges_[h.twin].origin].p);
    if (h.arc.normal != normal) fail(ErrorCode::kParse, "halfedge normal disagrees with endpoints");
  }
  expect("faces");
  long long nf = num();
  for (long long i = 0; i < nf; ++i) {
    Face f;
    f.data = num();
    long long c = num();
    for (long long k = 0; k < c; ++k) f.ccbs.push_back(static_cast<int>(num()));
    long long s = num();
    for (long long k = 0; k < s; ++k) f.isolated.push_back(static_cast<int>(num()));
    a.faces_.push_back(f);
  }
  if (a.faces_.empty()) fail(ErrorCode::kParse, "arrangement dump has no faces");
  return a;
}

SphereArrangement sweep_build(const std::vector<GeodesicArc>& arcs, const std::vector<DirPoint>& points) {
  return build_impl(arcs, {}, points).arr;
}

const char* overlay_case_name(OverlayCase c) {
  switch (c) {
    case OverlayCase::VERTEX_VERTEX: return "vertex-vertex";
    case OverlayCase::VERTEX_EDGE: return "vertex-edge";
    case OverlayCase::EDGE_VERTEX: return "edge-vertex";
    case OverlayCase::VERTEX_FACE: return "vertex-face";
    case OverlayCase::FACE_VERTEX: return "face-vertex";
    case OverlayCase::EDGE_EDGE_CROSSING: return "edge-edge-crossing";
    case OverlayCase::EDGE_EDGE_OVERLAP: return "edge-edge-overlap";
    case OverlayCase::EDGE_FACE: return "edge-face";
    case OverlayCase::FACE_EDGE: return "face-edge";
    case OverlayCase::FACE_FACE: return "face-face";
  }
  return "?";
}

const OverlayCallbacks::Fn& OverlayCallbacks::get(OverlayCase c) const {
  switch (c) {
    case OverlayCase::VERTEX_VERTEX: return vertex_vertex;
    case OverlayCase::VERTEX_EDGE: return vertex_edge;
    case OverlayCase::EDGE_VERTEX: return edge_vertex;
    case OverlayCase::VERTEX_FACE: return vertex_face;
    case OverlayCase::FACE_VERTEX: return face_vertex;
    case OverlayCase::EDGE_EDGE_CROSSING: return edge_edge_crossing;
    case OverlayCase::EDGE_EDGE_OVERLAP: return edge_edge_overlap;
    case OverlayCase::EDGE_FACE: return edge_face;
    case OverlayCase::FACE_EDGE: return face_edge;
    case OverlayCase::FACE_FACE: return face_face;
  }
  return face_face;
}

OverlayCallbacks OverlayCallbacks::zero() {
  Fn z = [](int64_t, int64_t) -> int64_t { return 0; };
  return {z, z, z, z, z, z, z, z, z, z};
}

namespace {

OverlayCase case_of(CellKind a, CellKind b, bool is_vertex) {
  using K = CellKind;
  if (a == K::VERTEX && b == K::VERTEX) return OverlayCase::VERTEX_VERTEX;
  if (a == K::VERTEX && b == K::EDGE) return OverlayCase::VERTEX_EDGE;
  if (a == K::EDGE && b == K::VERTEX) return OverlayCase::EDGE_VERTEX;
  if (a == K::VERTEX) return OverlayCase::VERTEX_FACE;
  if (b == K::VERTEX) return OverlayCase::FACE_VERTEX;
  if (a == K::EDGE && b == K::EDGE)
    return is_vertex ? OverlayCase::EDGE_EDGE_CROSSING : OverlayCase::EDGE_EDGE_OVERLAP;
  if (a == K::EDGE) return OverlayCase::EDGE_FACE;
  if (b == K::EDGE) return OverlayCase::FACE_EDGE;
  return OverlayCase::FACE_FACE;
}

int64_t payload(const SphereArrangement& a, const Cell& c) {
  switch (c.kind) {
    case CellKind::VERTEX: return a.vertex(c.id).data;
    case CellKind::EDGE: return a.halfedge(c.id).data;
    case CellKind::FACE: return a.face(c.id).data;
  }
  return 0;
}

// Cells of one overlay input that contain the output cells.
struct SideMap {
  std::vector<Cell> vertex, edge;
  std::vector<int> face;
};

SideMap map_side(const SphereArrangement& in, const SphereArrangement& out,
                 const std::vector<std::vector<int>>& cover, const std::vector<int>& arc_halfedge,
                 int first_arc, int end_arc) {
  SideMap m;
  int H = out.num_halfedges();
  m.edge.assign(H, Cell{CellKind::FACE, -1});
  for (int h = 0; h < H; ++h) {
    for (int t : cover[h]) {
      if (t < first_arc || t >= end_arc) continue;
      int ih = arc_halfedge[t];
      if (in.halfedge(ih).arc.normal != out.halfedge(h).arc.normal) ih = in.halfedge(ih).twin;
      m.edge[h] = {CellKind::EDGE, ih};
    }
  }
  // Faces: from covered boundary halfedges, then across uncovered edges.
  m.face.assign(out.num_faces(), -1);
  std::vector<int> queue;
  for (int h = 0; h < H; ++h) {
    if (m.edge[h].id >= 0) {
      int f = out.halfedge(h).face;
      if (m.face[f] < 0) {
        m.face[f] = in.halfedge(m.edge[h].id).face;
        queue.push_back(f);
      }
    }
  }
  if (queue.empty()) {
    Cell c = in.locate(north_pole());
    int f0 = c.kind == CellKind::FACE ? c.id : 0;
    if (in.num_halfedges() > 0 && c.kind != CellKind::FACE) fail(ErrorCode::kInternal, "overlay face map");
    for (int f = 0; f < out.num_faces(); ++f) m.face[f] = f0;
  }
  std::vector<std::vector<int>> face_edges(out.num_faces());
  for (int h = 0; h < H; ++h) face_edges[out.halfedge(h).face].push_back(h);
  while (!queue.empty()) {
    int f = queue.back();
    queue.pop_back();
    for (int h : face_edges[f]) {
      if (m.edge[h].id >= 0) continue;
      int g = out.halfedge(out.halfedge(h).twin).face;
      if (m.face[g] < 0) {
        m.face[g] = m.face[f];
        queue.push_back(g);
      }
    }
  }
  for (int f = 0; f < out.num_faces(); ++f)
    if (m.face[f] < 0) fail(ErrorCode::kInternal, "overlay left a face without provenance");
  for (int h = 0; h < H; ++h)
    if (m.edge[h].id < 0) m.edge[h] = {CellKind::FACE, m.face[out.halfedge(h).face]};
  std::map<DirPoint, int, DirPointLess> vid;
  for (int v = 0; v < in.num_vertices(); ++v) vid[in.vertex(v).p] = v;
  m.vertex.resize(out.num_vertices());
  for (int v = 0; v < out.num_vertices(); ++v) {
    auto it = vid.find(out.vertex(v).p);
    if (it != vid.end()) {
      m.vertex[v] = {CellKind::VERTEX, it->second};
      continue;
    }
    const auto& ov = out.vertex(v);
    if (ov.out < 0) {
      m.vertex[v] = {CellKind::FACE, m.face[ov.iso_face]};
      continue;
    }
    Cell c{CellKind::FACE, m.face[out.halfedge(ov.out).face]};
    for (int o : out.outgoing(v))
      if (m.edge[o].kind == CellKind::EDGE) c = {CellKind::EDGE, m.edge[o].id};
    m.vertex[v] = c;
  }
  return m;
}

}  // namespace

SphereArrangement overlay(const SphereArrangement& a, const SphereArrangement& b,
                          const OverlayCallbacks& cb, OverlayProvenance* prov) {
  std::vector<GeodesicArc> arcs;
  std::vector<int> color, arc_halfedge;
  for (int h = 0; h < a.num_halfedges(); h += 2) {
    arcs.push_back(a.halfedge(h).arc);
    color.push_back(0);
    arc_halfedge.push_back(h);
  }
  int na = static_cast<int>(arcs.size());
  for (int h = 0; h < b.num_halfedges(); h += 2) {
    arcs.push_back(b.halfedge(h).arc);
    color.push_back(1);
    arc_halfedge.push_back(h);
  }
  std::vector<DirPoint> points;
  for (int v = 0; v < a.num_vertices(); ++v) points.push_back(a.vertex(v).p);
  for (int v = 0; v < b.num_vertices(); ++v) points.push_back(b.vertex(v).p);
  BuildResult r = build_impl(arcs, color, points);
  SphereArrangement& out = r.arr;
  SideMap ma = map_side(a, out, r.cover, arc_halfedge, 0, na);
  SideMap mb = map_side(b, out, r.cover, arc_halfedge, na, static_cast<int>(arcs.size()));
  if (prov) *prov = OverlayProvenance{};
  for (int v = 0; v < out.num_vertices(); ++v) {
    OverlayCase c = case_of(ma.vertex[v].kind, mb.vertex[v].kind, true);
    out.vertex(v).data = cb.get(c)(payload(a, ma.vertex[v]), payload(b, mb.vertex[v]));
    if (prov) {
      prov->vertex_case.push_back(c);
      prov->vertex_a.push_back(ma.vertex[v]);
      prov->vertex_b.push_back(mb.vertex[v]);
    }
  }
  for (int h = 0; h < out.num_halfedges(); ++h) {
    OverlayCase c = case_of(ma.edge[h].kind, mb.edge[h].kind, false);
    out.halfedge(h).data = cb.get(c)(payload(a, ma.edge[h]), payload(b, mb.edge[h]));
    if (prov) {
      prov->edge_case.push_back(c);
      prov->edge_a.push_back(ma.edge[h]);
      prov->edge_b.push_back(mb.edge[h]);
    }
  }
  for (int f = 0; f < out.num_faces(); ++f) {
    out.face(f).data = cb.face_face(a.face(ma.face[f]).data, b.face(mb.face[f]).data);
    if (prov) {
      prov->face_case.push_back(OverlayCase::FACE_FACE);
      prov->face_a.push_back(ma.face[f]);
      prov->face_b.push_back(mb.face[f]);
    }
  }
  return out;
}

SphereArrangement rebuild_subset(const SphereArrangement& a, const std::vector<char>& keep_edge,
                                 const std::vector<char>& keep_vertex, bool merge_collinear) {
  int H = a.num_halfedges(), V = a.num_vertices();
  // Kept edges as directed halfedge ids (even representative).
  std::vector<char> kept(H, 0);
  for (int h = 0; h < H; h += 2) kept[h] = keep_edge[h] || keep_edge[h + 1];
  std::vector<int> deg(V, 0);
  for (int h = 0; h < H; h += 2)
    if (kept[h]) {
      ++deg[a.halfedge(h).origin];
      ++deg[a.target(h)];
    }
  struct Chain {
    GeodesicArc arc;
    int64_t data;
  };
  std::vector<Chain> chains;
  std::vector<char> used(H, 0);
  auto mergeable_at = [&](int v) {
    if (!merge_collinear || deg[v] != 2 || keep_vertex[v]) return false;
    if (a.vertex(v).p.on_boundary()) return false;
    return true;
  };
  for (int h0 = 0; h0 < H; h0 += 2) {
    if (!kept[h0] || used[h0]) continue;
    // Extend backwards then forwards through mergeable vertices.
    int start = h0;
    for (int guard = 0; guard < H; ++guard) {
      int v = a.halfedge(start).origin;
      if (!mergeable_at(v)) break;
      int prev = -1;
      for (int o : a.outgoing(v)) {
        int e = o & ~1;
        if (kept[e] && e != (start & ~1)) prev = a.halfedge(o).twin;
      }
      if (prev < 0 || used[prev & ~1] || !is_mergeable(a.halfedge(prev).arc, a.halfedge(start).arc)) break;
      if ((prev & ~1) == h0) break;
      start = prev;
    }
    GeodesicArc arc = a.halfedge(start).arc;
    int64_t data = a.halfedge(start).data;
    used[start & ~1] = 1;
    int cur = start;
    for (int guard = 0; guard < H; ++guard) {
      int v = a.target(cur);
      if (!mergeable_at(v)) break;
      int nxt = -1;
      for (int o : a.outgoing(v)) {
        int e = o & ~1;
        if (kept[e] && e != (cur & ~1)) nxt = o;
      }
      if (nxt < 0 || used[nxt & ~1] || !is_mergeable(arc, a.halfedge(nxt).arc)) break;
      arc = merge(arc, a.halfedge(nxt).arc);
      used[nxt & ~1] = 1;
      cur = nxt;
    }
    chains.push_back({arc, data});
    // The backward walk may have started a chain that stops short of h0.
    if (!used[h0]) h0 -= 2;
  }
  std::vector<std::pair<GeodesicArc, std::vector<int>>> pieces;
  for (size_t i = 0; i < chains.size(); ++i) pieces.push_back({chains[i].arc, {static_cast<int>(i)}});
  std::vector<DirPoint> points;
  for (int v = 0; v < V; ++v)
    if (keep_vertex[v]) points.push_back(a.vertex(v).p);
  SphereArrangement out;
  insert_pieces(out, pieces, points, nullptr);
  for (int h = 0; h < out.num_halfedges(); ++h) out.halfedge(h).data = chains[out.halfedge(h).data].data;
  std::map<DirPoint, int, DirPointLess> vid;
  for (int v = 0; v < V; ++v) vid[a.vertex(v).p] = v;
  for (int v = 0; v < out.num_vertices(); ++v) out.vertex(v).data = a.vertex(vid.at(out.vertex(v).p)).data;
  // Face data from the input halfedge leaving the same vertex along the same arc.
  std::map<std::pair<Vec3, Vec3>, int, std::function<bool(const std::pair<Vec3, Vec3>&, const std::pair<Vec3, Vec3>&)>>
      by_start([](const std::pair<Vec3, Vec3>& x, const std::pair<Vec3, Vec3>& y) {
        if (x.first != y.first) return lex_less(x.first, y.first);
        return lex_less(x.second, y.second);
      });
  for (int h = 0; h < H; ++h) by_start[{a.halfedge(h).arc.source.dir, a.halfedge(h).arc.normal}] = h;
  std::vector<char> done(out.num_faces(), 0);
  for (int h = 0; h < out.num_halfedges(); ++h) {
    int f = out.halfedge(h).face;
    if (done[f]) continue;
    int ih = by_start.at({out.halfedge(h).arc.source.dir, out.halfedge(h).arc.normal});
    out.face(f).data = a.face(a.halfedge(ih).face).data;
    done[f] = 1;
  }
  for (int f = 0; f < out.num_faces(); ++f) {
    if (done[f]) continue;
    Cell c = a.locate(north_pole());
    int af = c.kind == CellKind::FACE ? c.id
             : c.kind == CellKind::EDGE ? a.halfedge(c.id).face
             : a.vertex(c.id).out >= 0  ? a.halfedge(a.vertex(c.id).out).face
                                        : a.vertex(c.id).iso_face;
    out.face(f).data = a.face(af).data;
  }
  return out;
}

}  // namespace geomink
