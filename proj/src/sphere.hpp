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

#pragma once

#include <optional>
#include <vector>

#include "kernel.hpp"

namespace geomink {

enum class BoundaryClass { SOUTH_POLE, NORTH_POLE, ON_IDENTIFICATION, INTERIOR };

// A point on the unit sphere named by an unnormalized direction. The stored
// direction is the primitive integer representative, so two DirPoints name
// the same point iff their `dir` fields are equal.
struct DirPoint {
  Vec3 dir;
  BoundaryClass bc = BoundaryClass::INTERIOR;

  bool operator==(const DirPoint& o) const { return dir == o.dir; }
  bool operator!=(const DirPoint& o) const { return !(dir == o.dir); }
  bool is_pole() const {
    return bc == BoundaryClass::NORTH_POLE || bc == BoundaryClass::SOUTH_POLE;
  }
  bool on_boundary() const { return bc != BoundaryClass::INTERIOR; }
};

struct DirPointLess {
  bool operator()(const DirPoint& a, const DirPoint& b) const { return lex_less(a.dir, b.dir); }
};

DirPoint classify(const Vec3& dir);
DirPoint north_pole();
DirPoint south_pole();
DirPoint antipode(const DirPoint& p);

Sign compare_u(const DirPoint& p1, const DirPoint& p2);
Sign compare_v(const DirPoint& p1, const DirPoint& p2);
Sign compare_uv(const DirPoint& p1, const DirPoint& p2);

// Directed short arc of a great circle, counterclockwise about `normal`.
struct GeodesicArc {
  DirPoint source;
  DirPoint target;
  Vec3 normal;  // primitive multiple of cross(source, target)
  bool is_vertical = false;
  std::array<bool, 3> axis_zero{};

  bool operator==(const GeodesicArc& o) const {
    return source == o.source && target == o.target;
  }
  GeodesicArc reversed() const;
  // True when u grows from source to target (non-vertical arcs), or when v
  // grows (vertical arcs).
  bool directed_right() const;
  const DirPoint& left() const { return directed_right() ? source : target; }
  const DirPoint& right() const { return directed_right() ? target : source; }
};

// Builds the arc without splitting; the caller guarantees validity.
GeodesicArc raw_arc(const DirPoint& s, const DirPoint& t);

// Closed / open membership of a point on the arc.
bool arc_contains(const GeodesicArc& a, const Vec3& p);
bool arc_contains_interior(const GeodesicArc& a, const Vec3& p);
// Point strictly inside the arc (a positive multiple of source + target).
Vec3 arc_midpoint(const GeodesicArc& a);

std::vector<GeodesicArc> make_arc(const DirPoint& source, const DirPoint& target);

Sign compare_v_at_u(const DirPoint& p, const GeodesicArc& arc);
Sign compare_v_at_u_right(const GeodesicArc& a1, const GeodesicArc& a2, const DirPoint& p);
Sign compare_v_at_u_left(const GeodesicArc& a1, const GeodesicArc& a2, const DirPoint& p);

struct IntersectionResult {
  std::vector<DirPoint> points;
  std::optional<GeodesicArc> overlap;
  bool empty() const { return points.empty() && !overlap; }
};
IntersectionResult intersect(const GeodesicArc& a1, const GeodesicArc& a2);

std::pair<GeodesicArc, GeodesicArc> split(const GeodesicArc& arc, const DirPoint& p);
bool is_mergeable(const GeodesicArc& a1, const GeodesicArc& a2);
GeodesicArc merge(const GeodesicArc& a1, const GeodesicArc& a2);

enum class ArcEnd { MIN, MAX };
enum class BoundarySide { NONE, LEFT, RIGHT, BOTTOM, TOP };
struct BoundaryDescriptor {
  BoundarySide u_side = BoundarySide::NONE;  // LEFT (u=-pi) or RIGHT (u=+pi)
  BoundarySide v_side = BoundarySide::NONE;  // BOTTOM (v=-pi/2) or TOP
};
BoundaryDescriptor boundary_predicates(const GeodesicArc& arc, ArcEnd end);
// u order of points near the given ends of two vertical arcs that end at the
// same pole. The seam meridian counts as u = -pi.
Sign compare_u_near_boundary(const GeodesicArc& a1, ArcEnd e1, const GeodesicArc& a2,
                             ArcEnd e2);
// u order of an interior point against a vertical arc near its pole end.
Sign compare_u_near_boundary(const DirPoint& p, const GeodesicArc& a, ArcEnd e);
// v order of two arc ends lying on the same side of the identification.
Sign compare_v_near_boundary(const GeodesicArc& a1, const GeodesicArc& a2, ArcEnd end);
Sign compare_v_on_identification(const DirPoint& p1, const DirPoint& p2);

// Tangent at `p` pointing into the arc; p must be an endpoint.
Vec3 tangent_from(const GeodesicArc& a, const DirPoint& p);

}  // namespace geomink
