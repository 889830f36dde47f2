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

#include <array>
#include <vector>

#include "gaussian_map.hpp"

namespace geomink {

// Bound on the facet count of a Minkowski sum of polytopes with m_i facets.
Integer max_complexity(const std::vector<int>& m);

struct RationalRotation {
  std::array<std::array<Rational, 3>, 3> m;
  Vec3 apply(const Vec3& v) const;
  bool orthogonal() const;  // R^T R = I and det R = 1
};

// cos = (1-t^2)/(1+t^2), sin = 2t/(1+t^2).
RationalRotation rotation_about_y(const Rational& t);
Mesh rotate(const Mesh& m, const RationalRotation& r);

// Rational tangent of half of an angle given in degrees.
Rational tan_half_degrees(double deg);
double degrees_of(const Rational& tan_half);

// Angles are stored as tangents of their halves so that every vertex is rational.
struct WitnessParams {
  int facets = 5;
  Rational alpha;  // tilt of the lower facet
  Rational beta;   // depression of the two base corners below the x axis
  Rational gamma;  // spread of the projected vertices
  static WitnessParams defaults(int facets);
};

Mesh witness_polytope(const WitnessParams& p);

struct BoundReport {
  std::vector<int> facets_in;
  int facets = 0;
  Integer expected = 0;
  int crossings = 0;  // v_x of the sum
  int iterations = 0;
  bool pass = false;
  std::vector<WitnessParams> params;
};

std::pair<WitnessParams, WitnessParams> tune_params(int m, int n, int* iterations = nullptr);
BoundReport verify_bound(int m, int n);
// k copies of witnesses rotated by about 180 (i-1)/k degrees about Y.
BoundReport verify_bound_many(const std::vector<int>& m);
// The witness polytopes of a report, rotated into the position that was summed.
std::vector<Mesh> placed_summands(const BoundReport& r);

}  // namespace geomink
