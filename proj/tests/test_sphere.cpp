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

#include "sphere.hpp"

using namespace geomink;

namespace {

DirPoint P(long x, long y, long z) { return classify(Vec3(x, y, z)); }

GeodesicArc A(const DirPoint& s, const DirPoint& t) {
  auto pieces = make_arc(s, t);
  EXPECT_EQ(pieces.size(), 1u);
  return pieces.front();
}

}  // namespace

TEST(Sphere, Classify) {
  EXPECT_EQ(P(0, 0, -5).bc, BoundaryClass::SOUTH_POLE);
  EXPECT_EQ(P(0, 0, 2).bc, BoundaryClass::NORTH_POLE);
  EXPECT_EQ(P(-3, 0, 1).bc, BoundaryClass::ON_IDENTIFICATION);
  EXPECT_EQ(P(1, 1, 1).bc, BoundaryClass::INTERIOR);
  EXPECT_EQ(P(3, 0, 1).bc, BoundaryClass::INTERIOR);
  EXPECT_THROW(classify(Vec3(0, 0, 0)), Error);
  EXPECT_EQ(P(2, 4, 6), P(1, 2, 3));
  EXPECT_NE(P(1, 2, 3), P(-1, -2, -3));
}

TEST(Sphere, CompareU) {
  EXPECT_EQ(compare_u(P(1, 1, 5), P(1, -1, -3)), LARGER);
  EXPECT_EQ(compare_u(P(2, 6, 1), P(1, 3, -4)), EQUAL);
  EXPECT_EQ(compare_u(P(1, -1, 0), P(1, 1, 0)), SMALLER);
  EXPECT_THROW(compare_u(P(0, 0, 1), P(1, 1, 0)), Error);
  EXPECT_THROW(compare_u(P(-1, 0, 1), P(1, 1, 0)), Error);
}

TEST(Sphere, CompareV) {
  EXPECT_EQ(compare_v(P(1, 0, 1), P(1, 0, 2)), SMALLER);
  EXPECT_EQ(compare_v(P(5, 5, 0), P(-1, 2, 0)), EQUAL);
  EXPECT_EQ(compare_v(P(1, 0, -1), P(1, 0, 1)), SMALLER);
  EXPECT_EQ(compare_v(P(1, 0, -2), P(1, 0, -1)), SMALLER);
  EXPECT_EQ(compare_v(P(0, 0, 1), P(1, 0, 100)), LARGER);
}

TEST(Sphere, CompareUV) {
  EXPECT_EQ(compare_uv(P(1, 1, 5), P(1, -1, -3)), LARGER);
  EXPECT_EQ(compare_uv(P(1, 1, 0), P(2, 2, 1)), SMALLER);
  EXPECT_EQ(compare_uv(P(3, -2, 7), P(3, -2, 7)), EQUAL);
}

TEST(Sphere, PredicateOrderProperties) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-6, 6);
  std::vector<DirPoint> pts;
  while (pts.size() < 40) {
    Vec3 v(d(rng), d(rng), d(rng));
    if (v.is_zero()) continue;
    DirPoint p = classify(v);
    if (!p.on_boundary()) pts.push_back(p);
  }
  for (auto& a : pts) {
    EXPECT_EQ(compare_uv(a, a), EQUAL);
    for (auto& b : pts) {
      EXPECT_EQ(compare_u(a, b), -compare_u(b, a));
      EXPECT_EQ(compare_v(a, b), -compare_v(b, a));
      EXPECT_EQ(compare_uv(a, b), -compare_uv(b, a));
      // Positive scaling never changes the answer.
      DirPoint s{Rational(3, 7) * b.dir, b.bc};
      EXPECT_EQ(compare_uv(a, s), compare_uv(a, b));
      for (auto& c : pts)
        if (compare_uv(a, b) == SMALLER && compare_uv(b, c) == SMALLER)
          EXPECT_EQ(compare_uv(a, c), SMALLER);
    }
  }
}

TEST(Sphere, MakeArc) {
  auto a = make_arc(P(1, 0, 0), P(0, 1, 0));
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].normal, Vec3(0, 0, 1));
  EXPECT_FALSE(a[0].is_vertical);

  auto b = make_arc(P(-1, -1, 0), P(-1, 1, 0));
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0].target, P(-1, 0, 0));
  EXPECT_EQ(b[1].source, P(-1, 0, 0));
  EXPECT_EQ(b[0].source, P(-1, -1, 0));
  EXPECT_EQ(b[1].target, P(-1, 1, 0));

  auto c = make_arc(P(1, 1, -1), P(1, 1, 1));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_TRUE(c[0].is_vertical);
  EXPECT_TRUE(codirectional(c[0].normal, Vec3(2, -2, 0)));

  auto d = make_arc(P(1, 1, 1), P(-1, -1, 1));
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].target, north_pole());

  EXPECT_THROW(make_arc(P(1, 2, 3), P(2, 4, 6)), Error);
  EXPECT_THROW(make_arc(P(1, 2, 3), P(-1, -2, -3)), Error);
}

TEST(Sphere, MakeArcInvariants) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-4, 4);
  int n = 0;
  while (n < 300) {
    Vec3 s(d(rng), d(rng), d(rng)), t(d(rng), d(rng), d(rng));
    if (s.is_zero() || t.is_zero() || parallel(s, t)) continue;
    ++n;
    auto pieces = make_arc(classify(s), classify(t));
    EXPECT_EQ(pieces.front().source, classify(s));
    EXPECT_EQ(pieces.back().target, classify(t));
    for (size_t i = 0; i + 1 < pieces.size(); ++i) EXPECT_EQ(pieces[i].target, pieces[i + 1].source);
    for (auto& a : pieces) {
      EXPECT_EQ(dot_sign(a.normal, a.source.dir), Sign::ZERO);
      EXPECT_EQ(dot_sign(a.normal, a.target.dir), Sign::ZERO);
      // No interior boundary point, except on the identification meridian itself.
      bool on_seam_plane = a.is_vertical && sgn(a.normal.x) == 0;
      if (!on_seam_plane) EXPECT_FALSE(classify(arc_midpoint(a)).on_boundary());
      for (const Vec3& q : {Vec3(0, 0, 1), Vec3(0, 0, -1)}) EXPECT_FALSE(arc_contains_interior(a, q));
      if (!a.is_vertical) {
        Vec3 q(-a.normal.z, Rational(0), a.normal.x);
        if (sgn(q.x) > 0) q = -q;
        EXPECT_FALSE(arc_contains_interior(a, q));
      }
    }
  }
}

TEST(Sphere, CompareVAtU) {
  GeodesicArc eq = A(P(1, 0, 0), P(0, 1, 0));
  EXPECT_EQ(compare_v_at_u(P(1, 1, 1), eq), LARGER);
  EXPECT_EQ(compare_v_at_u(P(1, 1, 0), eq), EQUAL);
  EXPECT_EQ(compare_v_at_u(P(1, 1, -2), eq), SMALLER);
  // Same answers for the reversed arc.
  EXPECT_EQ(compare_v_at_u(P(1, 1, 1), eq.reversed()), LARGER);
  GeodesicArc vert = A(P(1, 1, -1), P(1, 1, 1));
  EXPECT_EQ(compare_v_at_u(P(1, 1, 0), vert), EQUAL);
  EXPECT_EQ(compare_v_at_u(P(1, 1, 5), vert), LARGER);
  EXPECT_EQ(compare_v_at_u(P(1, 1, -5), vert), SMALLER);
}

TEST(Sphere, CompareVAtURight) {
  DirPoint p = P(1, 0, 0);
  GeodesicArc eq = A(p, P(1, 1, 0));
  GeodesicArc up = A(p, P(1, 1, 1));
  GeodesicArc down = A(p, P(1, 1, -1));
  EXPECT_EQ(compare_v_at_u_right(eq, up, p), SMALLER);
  EXPECT_EQ(compare_v_at_u_right(eq, A(p, P(2, 1, 0)), p), EQUAL);
  EXPECT_EQ(compare_v_at_u_right(down, eq, p), SMALLER);
  EXPECT_EQ(compare_v_at_u_right(eq, down, p), LARGER);
}

TEST(Sphere, CompareVAtULeftMirrors) {
  // Reflection x -> -x maps right-hand configurations to left-hand ones.
  DirPoint p = P(-1, 1, 0);
  DirPoint q = P(1, 1, 0);
  GeodesicArc eq = A(P(1, 1, 0), P(0, 1, 0));
  GeodesicArc eqm = A(P(0, 1, 0), P(-1, 1, 0));
  GeodesicArc upm = A(P(0, 1, 1), P(-1, 1, 0));
  GeodesicArc downm = A(P(0, 1, -1), P(-1, 1, 0));
  (void)q;
  (void)eq;
  EXPECT_EQ(compare_v_at_u_left(eqm, upm, p), SMALLER);
  EXPECT_EQ(compare_v_at_u_left(eqm, A(P(1, 2, 0), P(-1, 1, 0)), p), EQUAL);
  EXPECT_EQ(compare_v_at_u_left(downm, eqm, p), SMALLER);
  EXPECT_EQ(compare_v_at_u_left(eqm, downm, p), LARGER);
  EXPECT_THROW(compare_v_at_u_left(eqm, A(P(-1, 1, 0), P(-2, 1, 1)), p), Error);
}

TEST(Sphere, Intersect) {
  GeodesicArc eq = A(P(1, 0, 0), P(0, 1, 0));
  auto r = intersect(eq, A(P(1, 1, -1), P(1, 1, 1)));
  ASSERT_EQ(r.points.size(), 1u);
  EXPECT_EQ(r.points[0], P(1, 1, 0));
  EXPECT_TRUE(intersect(eq, A(P(-1, 0, 0), P(0, -1, 0))).empty());
  auto o = intersect(eq, A(P(1, 1, 0), P(-1, 2, 0)));
  ASSERT_TRUE(o.overlap.has_value());
  EXPECT_EQ(o.overlap->source, P(1, 1, 0));
  EXPECT_EQ(o.overlap->target, P(0, 1, 0));
  auto touch = intersect(eq, A(P(0, 1, 0), P(-1, 1, 0)));
  ASSERT_EQ(touch.points.size(), 1u);
  EXPECT_FALSE(touch.overlap.has_value());
}

TEST(Sphere, IntersectSymmetricAndOnBoth) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> d(-3, 3);
  auto rnd = [&]() {
    for (;;) {
      Vec3 s(d(rng), d(rng), d(rng)), t(d(rng), d(rng), d(rng));
      if (s.is_zero() || t.is_zero() || parallel(s, t)) continue;
      return raw_arc(classify(s), classify(t));
    }
  };
  for (int i = 0; i < 300; ++i) {
    GeodesicArc a = rnd(), b = rnd();
    auto ab = intersect(a, b), ba = intersect(b, a);
    EXPECT_EQ(ab.points.size(), ba.points.size());
    EXPECT_EQ(ab.overlap.has_value(), ba.overlap.has_value());
    for (auto& p : ab.points) {
      EXPECT_TRUE(arc_contains(a, p.dir));
      EXPECT_TRUE(arc_contains(b, p.dir));
      EXPECT_EQ(dot_sign(a.normal, p.dir), Sign::ZERO);
      EXPECT_EQ(dot_sign(b.normal, p.dir), Sign::ZERO);
    }
  }
}

TEST(Sphere, SplitMerge) {
  GeodesicArc eq = A(P(1, 0, 0), P(0, 1, 0));
  auto [l, r] = split(eq, P(1, 1, 0));
  EXPECT_EQ(l.target, P(1, 1, 0));
  EXPECT_EQ(r.source, P(1, 1, 0));
  EXPECT_EQ(l.normal, eq.normal);
  EXPECT_TRUE(is_mergeable(l, r));
  EXPECT_EQ(merge(l, r), eq);
  EXPECT_EQ(merge(r, l), eq);
  EXPECT_THROW(split(eq, P(1, 0, 0)), Error);
  EXPECT_FALSE(is_mergeable(A(P(1, 0, 0), P(1, 1, 1)), A(P(1, 1, 1), P(0, 1, 0))));
  GeodesicArc x = A(P(1, 0, 0), P(-1, 1, 0));
  GeodesicArc y = A(P(-1, 1, 0), P(-1, 0, 0));
  EXPECT_FALSE(is_mergeable(x, y));
  EXPECT_THROW(merge(x, y), Error);
}

TEST(Sphere, BoundaryPredicates) {
  GeodesicArc up = A(P(1, 1, 0), P(0, 0, 1));
  EXPECT_EQ(boundary_predicates(up, ArcEnd::MAX).v_side, BoundarySide::TOP);
  EXPECT_EQ(boundary_predicates(up, ArcEnd::MIN).v_side, BoundarySide::NONE);
  GeodesicArc seam_left = A(P(-1, 0, 0), P(-1, -1, 0));
  EXPECT_EQ(boundary_predicates(seam_left, ArcEnd::MIN).u_side, BoundarySide::LEFT);
  GeodesicArc seam_right = A(P(-1, 1, 0), P(-1, 0, 0));
  EXPECT_EQ(boundary_predicates(seam_right, ArcEnd::MAX).u_side, BoundarySide::RIGHT);
}

TEST(Sphere, CompareUNearPoles) {
  // Two vertical arcs reaching the north pole; the first lies at smaller u.
  GeodesicArc c4 = A(P(1, -1, 1), P(0, 0, 1));
  GeodesicArc c5 = A(P(1, 1, 1), P(0, 0, 1));
  EXPECT_EQ(compare_u_near_boundary(c4, ArcEnd::MAX, c5, ArcEnd::MAX), SMALLER);
  EXPECT_EQ(compare_u_near_boundary(c5, ArcEnd::MAX, c4, ArcEnd::MAX), LARGER);
  EXPECT_EQ(compare_u_near_boundary(c5.source, c4, ArcEnd::MAX), LARGER);
  EXPECT_EQ(compare_u_near_boundary(c4, ArcEnd::MAX, c4, ArcEnd::MAX), EQUAL);
}

TEST(Sphere, CompareVOnIdentification) {
  // Left ends on the identification curve, in increasing order.
  GeodesicArc c1 = A(P(-1, 0, -1), P(-1, -1, -1));
  GeodesicArc c2 = A(P(-1, 0, 0), P(-1, -1, 0));
  GeodesicArc c3 = A(P(-1, 0, 0), P(-1, -1, 1));
  EXPECT_EQ(compare_v_near_boundary(c1, c2, ArcEnd::MIN), SMALLER);
  EXPECT_EQ(compare_v_near_boundary(c2, c3, ArcEnd::MIN), SMALLER);
  EXPECT_EQ(compare_v_near_boundary(c3, c1, ArcEnd::MIN), LARGER);
  EXPECT_EQ(compare_v_on_identification(P(-1, 0, 2), P(-2, 0, 1)), LARGER);
}
