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

#include "extremal.hpp"

#include <cmath>

#include "hull.hpp"
#include "minkowski.hpp"

namespace geomink {

namespace {

constexpr long kMaxDen = 1000000;
constexpr int kTuneCap = 64;

// Rational point on the unit circle at the given angle in degrees.
std::pair<Rational, Rational> circle_point(double deg) {
  deg = std::remainder(deg, 360.0);
  bool flip = std::fabs(deg) > 90.0;
  if (flip) deg += deg > 0 ? -180.0 : 180.0;
  Rational t = tan_half_degrees(deg);
  Rational d = 1 + t * t;
  Rational x = (1 - t * t) / d, y = 2 * t / d;
  if (flip) return {-x, -y};
  return {x, y};
}

Rational tan_of(const Rational& th) { return 2 * th / (1 - th * th); }

// Rational approximation of half an angle given by its half tangent.
Rational halve(const Rational& th) { return tan_half_degrees(degrees_of(th) / 2); }

Mesh tetra_witness() {
  // Two vertices on the plane z = 0 and two slightly below it.
  const double ang[4] = {-40, -120, 0, 175};
  const Rational h(1, 100);
  std::vector<Vec3> pts;
  for (int k = 0; k < 4; ++k) {
    auto [x, y] = circle_point(ang[k]);
    pts.push_back(Vec3(x, y, k % 2 ? -h : Rational(0)));
  }
  return convex_hull_3(pts);
}

int sum_facets(const Mesh& a, const Mesh& b, int* crossings) {
  GaussianMap ga = build_gaussian_map(a), gb = build_gaussian_map(b);
  OverlayProvenance prov;
  GaussianMap s = minkowski(ga, gb, &prov);
  if (crossings) *crossings = sum_stats(s, ga, gb, prov).v_x;
  return s.facet_count();
}

}  // namespace

Integer max_complexity(const std::vector<int>& m) {
  if (m.empty()) fail(ErrorCode::kInvalidFacetCount, "no facet counts given");
  for (int x : m)
    if (x < 4) fail(ErrorCode::kInvalidFacetCount, "facet counts must be at least 4");
  Integer total = 0;
  const size_t k = m.size();
  for (size_t i = 0; i < k; ++i) {
    total += m[i];
    for (size_t j = i + 1; j < k; ++j) total += Integer(2 * m[i] - 5) * (2 * m[j] - 5) + 1;
  }
  return total;
}

Vec3 RationalRotation::apply(const Vec3& v) const {
  Vec3 out;
  for (int r = 0; r < 3; ++r) out[r] = m[r][0] * v[0] + m[r][1] * v[1] + m[r][2] * v[2];
  return out;
}

bool RationalRotation::orthogonal() const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rational s = m[0][i] * m[0][j] + m[1][i] * m[1][j] + m[2][i] * m[2][j];
      if (s != (i == j ? 1 : 0)) return false;
    }
  Vec3 c0(m[0][0], m[1][0], m[2][0]), c1(m[0][1], m[1][1], m[2][1]), c2(m[0][2], m[1][2], m[2][2]);
  return det3(c0, c1, c2) == 1;
}

RationalRotation rotation_about_y(const Rational& t) {
  Rational d = 1 + t * t;
  Rational c = (1 - t * t) / d, s = 2 * t / d;
  RationalRotation r;
  r.m = {{{c, 0, s}, {0, 1, 0}, {-s, 0, c}}};
  return r;
}

Mesh rotate(const Mesh& m, const RationalRotation& r) {
  Mesh out = m;
  for (auto& v : out.vertices) v = r.apply(v);
  return out;
}

Rational tan_half_degrees(double deg) {
  return rational_approx(std::tan(deg * M_PI / 360.0), kMaxDen);
}

double degrees_of(const Rational& tan_half) { return std::atan(to_double(tan_half)) * 360.0 / M_PI; }

WitnessParams WitnessParams::defaults(int facets) {
  WitnessParams p;
  p.facets = facets;
  p.alpha = tan_half_degrees(10);
  p.beta = tan_half_degrees(40);
  p.gamma = tan_half_degrees(10);
  return p;
}

Mesh witness_polytope(const WitnessParams& p) {
  const int i = p.facets;
  if (i < 4) fail(ErrorCode::kInvalidFacetCount, "a witness needs at least 4 facets");
  if (sign_of(p.alpha) != Sign::POSITIVE || sign_of(p.beta) != Sign::POSITIVE ||
      sign_of(p.gamma) != Sign::POSITIVE)
    fail(ErrorCode::kParamsRejected, "witness angles must be positive");
  if (i == 4) return tetra_witness();

  const int j0 = 0, j1 = (i - 2) / 2, j2 = j1 + 1, j3 = i - 2, j4 = (3 * i - 7) / 2, n = 2 * i - 4;
  const double b = degrees_of(p.beta), g = degrees_of(p.gamma);
  std::vector<std::pair<Rational, Rational>> pt(n);
  pt[j0] = circle_point(-b);
  pt[j3] = circle_point(180 + b);
  pt[j1] = circle_point(0);
  pt[j2] = circle_point(180);
  for (int t = 1; t < j1; ++t) pt[t] = circle_point(-b + g * t / j1);
  const int k = j3 - j2;
  for (int t = 1; t < k; ++t) pt[j3 - t] = circle_point(180 + b - g * t / k);

  // Lower vertices: second intersection of the line from each upper vertex
  // through Z = (0, 1/ytop) with the unit circle.
  const Rational ytop = pt[j0].second;
  const Rational zy = 1 / ytop;
  for (int t = j0 + 1; t < j3; ++t) {
    int low = t <= j1 ? n - t : j4 + (j2 - t);
    auto [px, py] = pt[t];
    Rational dx = -px, dy = zy - py;
    Rational s = -2 * (px * dx + py * dy) / (dx * dx + dy * dy);
    pt[low] = {px + s * dx, py + s * dy};
  }
  const Rational slope = tan_of(p.alpha);
  std::vector<Vec3> verts;
  for (int idx = 0; idx < n; ++idx) {
    Rational z = idx <= j3 ? Rational(0) : slope * (pt[idx].second - ytop);
    verts.push_back(Vec3(pt[idx].first, pt[idx].second, z));
  }
  Mesh m = convex_hull_3(verts);
  if (static_cast<int>(m.facets.size()) != i || mesh_edge_count(m) != 3 * i - 6 ||
      static_cast<int>(m.vertices.size()) != n)
    fail(ErrorCode::kParamsRejected, "witness parameters give the wrong combinatorics");
  return m;
}

std::pair<WitnessParams, WitnessParams> tune_params(int m, int n, int* iterations) {
  WitnessParams a = WitnessParams::defaults(m), b = WitnessParams::defaults(n);
  const Integer want = max_complexity({m, n});
  const RationalRotation quarter = rotation_about_y(Rational(1));
  for (int it = 1; it <= kTuneCap; ++it) {
    if (iterations) *iterations = it;
    try {
      Mesh pm = witness_polytope(a), pn = rotate(witness_polytope(b), quarter);
      if (sum_facets(pm, pn, nullptr) == want) return {a, b};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kParamsRejected) throw;
    }
    // Only the tilt shrinks: the spread and base angles must stay large
    // relative to it.
    a.alpha = halve(a.alpha);
    b.alpha = halve(b.alpha);
  }
  fail(ErrorCode::kNonTermination, "parameter tuning did not converge");
}

BoundReport verify_bound(int m, int n) {
  BoundReport r;
  r.facets_in = {m, n};
  r.expected = max_complexity({m, n});
  try {
    auto [a, b] = tune_params(m, n, &r.iterations);
    r.params = {a, b};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNonTermination) throw;
    r.params = {WitnessParams::defaults(m), WitnessParams::defaults(n)};
  }
  Mesh pm = witness_polytope(r.params[0]);
  Mesh pn = rotate(witness_polytope(r.params[1]), rotation_about_y(Rational(1)));
  r.facets = sum_facets(pm, pn, &r.crossings);
  r.pass = r.facets == r.expected;
  return r;
}

namespace {

RationalRotation placement_rotation(int i, int k) {
  if (k == 2) return rotation_about_y(Rational(i));
  return rotation_about_y(tan_half_degrees(180.0 * i / k));
}

}  // namespace

BoundReport verify_bound_many(const std::vector<int>& m) {
  BoundReport r;
  r.facets_in = m;
  r.expected = max_complexity(m);
  const int k = static_cast<int>(m.size());
  if (k < 2) fail(ErrorCode::kPrecondition, "need at least two summands");
  if (k == 2) return verify_bound(m[0], m[1]);
  for (int i = 0; i < k; ++i) r.params.push_back(WitnessParams::defaults(m[i]));
  std::vector<GaussianMap> gs;
  for (const Mesh& w : placed_summands(r)) gs.push_back(build_gaussian_map(w));
  GaussianMap s = minkowski_many(gs);
  r.facets = s.facet_count();
  r.crossings = sum_stats(s, gs).v_x;
  r.pass = r.facets == r.expected;
  return r;
}

std::vector<Mesh> placed_summands(const BoundReport& r) {
  const int k = static_cast<int>(r.params.size());
  std::vector<Mesh> out;
  for (int i = 0; i < k; ++i) out.push_back(rotate(witness_polytope(r.params[i]), placement_rotation(i, k)));
  return out;
}

}  // namespace geomink
