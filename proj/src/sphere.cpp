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

#include "sphere.hpp"

namespace geomink {

DirPoint classify(const Vec3& dir) {
  if (dir.is_zero()) fail(ErrorCode::kZeroVector, "classify");
  DirPoint p;
  p.dir = primitive_direction(dir);
  const Vec3& d = p.dir;
  if (sgn(d.x) == 0 && sgn(d.y) == 0)
    p.bc = sgn(d.z) > 0 ? BoundaryClass::NORTH_POLE : BoundaryClass::SOUTH_POLE;
  else if (sgn(d.y) == 0 && sgn(d.x) < 0)
    p.bc = BoundaryClass::ON_IDENTIFICATION;
  else
    p.bc = BoundaryClass::INTERIOR;
  return p;
}

DirPoint north_pole() { return classify(Vec3(0, 0, 1)); }
DirPoint south_pole() { return classify(Vec3(0, 0, -1)); }
DirPoint antipode(const DirPoint& p) { return classify(-p.dir); }

namespace {

Vec2 xy(const Vec3& v) { return {v.x, v.y}; }

void require_interior(const DirPoint& p, const char* op) {
  if (p.on_boundary())
    fail(ErrorCode::kPrecondition, std::string(op) + " on a pole or identification point");
}

bool same_ray2(const Vec2& a, const Vec2& b) {
  return sgn(a.x * b.y - a.y * b.x) == 0 && sgn(a.x * b.x + a.y * b.y) > 0;
}

bool is_seam2(const Vec2& a) { return sgn(a.y) == 0 && sgn(a.x) < 0; }

// u order of two nonzero planar azimuth vectors; the seam ray counts as -pi.
Sign compare_azimuth(const Vec2& a, const Vec2& b) {
  bool sa = is_seam2(a), sb = is_seam2(b);
  if (sa || sb) return sa && sb ? EQUAL : (sa ? SMALLER : LARGER);
  if (same_ray2(a, b)) return EQUAL;
  return ccw_strictly_before(a, Vec2{-1, 0}, b) ? LARGER : SMALLER;
}

// Azimuth of a vertical arc: projection of an interior point.
Vec2 vertical_azimuth(const GeodesicArc& a) { return xy(arc_midpoint(a)); }

}  // namespace

Sign compare_u(const DirPoint& p1, const DirPoint& p2) {
  require_interior(p1, "compare_u");
  require_interior(p2, "compare_u");
  Vec2 a = xy(p1.dir), b = xy(p2.dir);
  if (same_ray2(a, b)) return EQUAL;
  return ccw_strictly_before(a, Vec2{-1, 0}, b) ? LARGER : SMALLER;
}

Sign compare_v(const DirPoint& p1, const DirPoint& p2) {
  const Vec3& a = p1.dir;
  const Vec3& b = p2.dir;
  if (a.is_zero() || b.is_zero()) fail(ErrorCode::kZeroVector, "compare_v");
  int sa = sgn(a.z), sb = sgn(b.z);
  if (sa != sb) return to_sign(sa < sb ? -1 : 1);
  if (sa == 0) return EQUAL;
  // z_a^2/|a|^2 vs z_b^2/|b|^2, flipped below the equator.
  int c = cmp(a.z * a.z * norm2(b), b.z * b.z * norm2(a));
  return to_sign(sa > 0 ? c : -c);
}

Sign compare_uv(const DirPoint& p1, const DirPoint& p2) {
  Sign s = compare_u(p1, p2);
  return s != EQUAL ? s : compare_v(p1, p2);
}

GeodesicArc raw_arc(const DirPoint& s, const DirPoint& t) {
  GeodesicArc a;
  a.source = s;
  a.target = t;
  a.normal = primitive_direction(cross(s.dir, t.dir));
  a.is_vertical = sgn(a.normal.z) == 0;
  for (int i = 0; i < 3; ++i) a.axis_zero[i] = sgn(a.normal[i]) == 0;
  return a;
}

GeodesicArc GeodesicArc::reversed() const {
  GeodesicArc r = *this;
  std::swap(r.source, r.target);
  r.normal = -normal;
  return r;
}

bool GeodesicArc::directed_right() const {
  if (!is_vertical) return sgn(normal.z) > 0;
  return compare_v(source, target) == SMALLER;
}

bool arc_contains_interior(const GeodesicArc& a, const Vec3& p) {
  if (sgn(dot(a.normal, p)) != 0) return false;
  return sgn(dot(cross(a.source.dir, p), a.normal)) > 0 &&
         sgn(dot(cross(p, a.target.dir), a.normal)) > 0;
}

bool arc_contains(const GeodesicArc& a, const Vec3& p) {
  if (codirectional(p, a.source.dir) || codirectional(p, a.target.dir)) return true;
  return arc_contains_interior(a, p);
}

Vec3 arc_midpoint(const GeodesicArc& a) { return a.source.dir + a.target.dir; }

std::vector<GeodesicArc> make_arc(const DirPoint& source, const DirPoint& target) {
  if (source == target) fail(ErrorCode::kDegenerateArc, "equal endpoints");
  if (parallel(source.dir, target.dir)) fail(ErrorCode::kDegenerateArc, "antipodal endpoints");
  GeodesicArc a = raw_arc(source, target);
  std::optional<Vec3> cut;
  if (!a.is_vertical) {
    Vec3 q(-a.normal.z, Rational(0), a.normal.x);
    if (sgn(q.x) > 0) q = -q;
    if (arc_contains_interior(a, q)) cut = q;
  } else {
    for (int s : {1, -1}) {
      Vec3 pole(0, 0, s);
      if (arc_contains_interior(a, pole)) cut = pole;
    }
  }
  if (!cut) return {a};
  auto [l, r] = split(a, classify(*cut));
  return {l, r};
}

Sign compare_v_at_u(const DirPoint& p, const GeodesicArc& arc) {
  if (!arc.is_vertical) return side_of_origin_plane(arc.normal, p.dir) * to_sign(sgn(arc.normal.z));
  if (sgn(dot(arc.normal, p.dir)) != 0 && !p.is_pole())
    fail(ErrorCode::kPrecondition, "compare_v_at_u: point off the vertical arc's meridian");
  const DirPoint& lo = arc.left();
  const DirPoint& hi = arc.right();
  if (compare_v(p, lo) == SMALLER) return SMALLER;
  if (compare_v(p, hi) == LARGER) return LARGER;
  return EQUAL;
}

Vec3 tangent_from(const GeodesicArc& a, const DirPoint& p) {
  if (p == a.source) return cross(a.normal, p.dir);
  if (p == a.target) return cross(p.dir, a.normal);
  fail(ErrorCode::kPrecondition, "tangent_from: point is not an arc endpoint");
}

Sign compare_v_at_u_right(const GeodesicArc& a1, const GeodesicArc& a2, const DirPoint& p) {
  if (!(a1.left() == p && a2.left() == p))
    fail(ErrorCode::kPrecondition, "compare_v_at_u_right: arcs must share left endpoint");
  Vec3 t1 = tangent_from(a1, p), t2 = tangent_from(a2, p);
  return dot_sign(cross(t2, t1), p.dir);
}

Sign compare_v_at_u_left(const GeodesicArc& a1, const GeodesicArc& a2, const DirPoint& p) {
  if (!(a1.right() == p && a2.right() == p))
    fail(ErrorCode::kPrecondition, "compare_v_at_u_left: arcs must share right endpoint");
  Vec3 t1 = tangent_from(a1, p), t2 = tangent_from(a2, p);
  return dot_sign(cross(t1, t2), p.dir);
}

IntersectionResult intersect(const GeodesicArc& a1, const GeodesicArc& a2) {
  IntersectionResult r;
  Vec3 l = cross(a1.normal, a2.normal);
  if (!l.is_zero()) {
    for (const Vec3& q : {l, -l})
      if (arc_contains(a1, q) && arc_contains(a2, q)) r.points.push_back(classify(q));
    return r;
  }
  // Same great circle.
  GeodesicArc b = a1.normal == a2.normal ? a2 : a2.reversed();
  std::vector<DirPoint> pts;
  auto add = [&](const DirPoint& p) {
    for (const auto& q : pts)
      if (q == p) return;
    pts.push_back(p);
  };
  for (const DirPoint* p : {&a1.source, &a1.target})
    if (arc_contains(b, p->dir)) add(*p);
  for (const DirPoint* p : {&b.source, &b.target})
    if (arc_contains(a1, p->dir)) add(*p);
  if (pts.size() == 1) {
    r.points = pts;
  } else if (pts.size() == 2) {
    if (sgn(dot(cross(pts[0].dir, pts[1].dir), a1.normal)) < 0) std::swap(pts[0], pts[1]);
    r.overlap = raw_arc(pts[0], pts[1]);
  }
  return r;
}

std::pair<GeodesicArc, GeodesicArc> split(const GeodesicArc& arc, const DirPoint& p) {
  if (!arc_contains_interior(arc, p.dir))
    fail(ErrorCode::kPointNotInterior, "split point " + to_string(p.dir));
  GeodesicArc l = arc, r = arc;
  l.target = p;
  r.source = p;
  return {l, r};
}

bool is_mergeable(const GeodesicArc& a1, const GeodesicArc& a2) {
  if (a1.normal != a2.normal) return false;
  const GeodesicArc* f = &a1;
  const GeodesicArc* s = &a2;
  if (a1.target != a2.source) {
    if (a2.target != a1.source) return false;
    std::swap(f, s);
  }
  if (f->source == s->target) return false;
  return sgn(dot(cross(f->source.dir, s->target.dir), a1.normal)) > 0;
}

GeodesicArc merge(const GeodesicArc& a1, const GeodesicArc& a2) {
  if (!is_mergeable(a1, a2)) fail(ErrorCode::kNotMergeable, "arcs cannot be merged");
  GeodesicArc m = a1;
  if (a1.target == a2.source) {
    m.target = a2.target;
  } else {
    m.source = a2.source;
  }
  return m;
}

BoundaryDescriptor boundary_predicates(const GeodesicArc& arc, ArcEnd end) {
  const DirPoint& p = end == ArcEnd::MIN ? arc.left() : arc.right();
  BoundaryDescriptor d;
  if (p.bc == BoundaryClass::NORTH_POLE) d.v_side = BoundarySide::TOP;
  if (p.bc == BoundaryClass::SOUTH_POLE) d.v_side = BoundarySide::BOTTOM;
  if (p.bc == BoundaryClass::ON_IDENTIFICATION)
    d.u_side = end == ArcEnd::MIN ? BoundarySide::LEFT : BoundarySide::RIGHT;
  return d;
}

Sign compare_u_near_boundary(const GeodesicArc& a1, ArcEnd e1, const GeodesicArc& a2,
                             ArcEnd e2) {
  if (!a1.is_vertical || !a2.is_vertical)
    fail(ErrorCode::kPrecondition, "compare_u_near_boundary expects vertical arcs");
  const DirPoint& p1 = e1 == ArcEnd::MIN ? a1.left() : a1.right();
  const DirPoint& p2 = e2 == ArcEnd::MIN ? a2.left() : a2.right();
  if (!p1.is_pole() || !p2.is_pole())
    fail(ErrorCode::kPrecondition, "compare_u_near_boundary: ends must be poles");
  Sign s = compare_azimuth(vertical_azimuth(a1), vertical_azimuth(a2));
  if (s != EQUAL) return s;
  // Same meridian: fall back to the lexicographic order of the normals.
  if (a1.normal == a2.normal) return EQUAL;
  return lex_less(a1.normal, a2.normal) ? SMALLER : LARGER;
}

Sign compare_u_near_boundary(const DirPoint& p, const GeodesicArc& a, ArcEnd e) {
  require_interior(p, "compare_u_near_boundary");
  const DirPoint& q = e == ArcEnd::MIN ? a.left() : a.right();
  if (!a.is_vertical || !q.is_pole())
    fail(ErrorCode::kPrecondition, "compare_u_near_boundary: arc end must be a pole");
  return compare_azimuth(xy(p.dir), vertical_azimuth(a));
}

Sign compare_v_on_identification(const DirPoint& p1, const DirPoint& p2) {
  if (p1.bc != BoundaryClass::ON_IDENTIFICATION && !p1.is_pole())
    fail(ErrorCode::kPrecondition, "compare_v_on_identification: point off the curve");
  if (p2.bc != BoundaryClass::ON_IDENTIFICATION && !p2.is_pole())
    fail(ErrorCode::kPrecondition, "compare_v_on_identification: point off the curve");
  return compare_v(p1, p2);
}

Sign compare_v_near_boundary(const GeodesicArc& a1, const GeodesicArc& a2, ArcEnd end) {
  const DirPoint& p1 = end == ArcEnd::MIN ? a1.left() : a1.right();
  const DirPoint& p2 = end == ArcEnd::MIN ? a2.left() : a2.right();
  if (p1.bc != BoundaryClass::ON_IDENTIFICATION || p2.bc != BoundaryClass::ON_IDENTIFICATION)
    fail(ErrorCode::kPrecondition, "compare_v_near_boundary: ends must lie on the identification");
  Sign s = compare_v(p1, p2);
  if (s != EQUAL) return s;
  return end == ArcEnd::MIN ? compare_v_at_u_right(a1, a2, p1) : compare_v_at_u_left(a1, a2, p1);
}

}  // namespace geomink
