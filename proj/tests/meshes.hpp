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

// Shared test meshes.
#pragma once

#include <random>
#include <vector>

#include "hull.hpp"

namespace geomink::testing {

inline Vec3 V(long x, long y, long z) { return Vec3(Rational(x), Rational(y), Rational(z)); }

inline Mesh hull_of(const std::vector<Vec3>& pts) { return convex_hull_3(pts); }

// Base facet on the south pole, a second facet normal on the identification
// curve, so no arc crosses it.
inline Mesh seam_clear_tetrahedron() {
  return hull_of({V(0, -1, 0), V(0, 1, 0), V(2, 0, 0), V(1, 0, 1)});
}

inline Mesh octahedron() {
  return hull_of({V(1, 0, 0), V(-1, 0, 0), V(0, 1, 0), V(0, -1, 0), V(0, 0, 1), V(0, 0, -1)});
}

inline Mesh cube(long lo = 0, long hi = 1) {
  std::vector<Vec3> p;
  for (int i = 0; i < 8; ++i) p.push_back(V(i & 1 ? hi : lo, i & 2 ? hi : lo, i & 4 ? hi : lo));
  return hull_of(p);
}

// Golden ratio replaced by 8/5; the hull stays a combinatorial icosahedron.
inline Mesh icosahedron() {
  Rational t(8, 5);
  std::vector<Vec3> p;
  for (int s1 : {-1, 1})
    for (int s2 : {-1, 1}) {
      p.push_back(Vec3(Rational(0), Rational(s1), t * s2));
      p.push_back(Vec3(Rational(s1), t * s2, Rational(0)));
      p.push_back(Vec3(t * s2, Rational(0), Rational(s1)));
    }
  return hull_of(p);
}

// Hull of k random lattice points near a sphere of radius r.
inline Mesh random_polytope(std::mt19937& rng, int k, long r = 40) {
  std::uniform_int_distribution<long> u(-r, r);
  std::vector<Vec3> p;
  while (static_cast<int>(p.size()) < k) {
    long x = u(rng), y = u(rng), z = u(rng);
    long n2 = x * x + y * y + z * z;
    if (n2 > r * r || n2 < (r * r * 3) / 5) continue;
    p.push_back(V(x, y, z));
  }
  return hull_of(p);
}

inline Mesh translated(Mesh m, const Vec3& t) {
  for (auto& v : m.vertices) v = v + t;
  return m;
}

}  // namespace geomink::testing
