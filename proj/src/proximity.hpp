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

#include <memory>
#include <optional>

#include "gaussian_map.hpp"

namespace geomink {

enum class Placement { INSIDE, ON_BOUNDARY, OUTSIDE };
const char* placement_name(Placement p);

struct Witness {
  Placement placement = Placement::INSIDE;
  int facet = -1;       // index into the facet table; doubles as the hint
  Vec3 normal;          // supporting plane <normal, x> = offset
  Rational offset;
  int steps = 0;        // walk length
};

// Precomputed query structure for one polytope given by its Gaussian map.
class PolytopeQuery {
 public:
  explicit PolytopeQuery(GaussianMap m);

  const GaussianMap& map() const { return m_; }
  const FacetTable& facets() const { return t_; }
  const Mesh& mesh() const { return mesh_; }
  const Vec3& center() const { return c_; }

  Witness classify(const Vec3& s, std::optional<int> hint = std::nullopt) const;
  // Facet-by-facet oracle with the same witness choice rules.
  Placement classify_brute(const Vec3& s) const;

 private:
  GaussianMap m_;
  FacetTable t_;
  Mesh mesh_;
  Vec3 c_;
};

Witness classify_point(const PolytopeQuery& q, const Vec3& s, std::optional<int> hint = std::nullopt);

struct Collision {
  bool contact = false;  // closed-set convention
  Witness witness;
};

// Builds P + (-Q) into *cache when it is empty, otherwise reuses it.
Collision collide(const GaussianMap& p, const GaussianMap& q, const Vec3& u, const Vec3& w,
                  std::unique_ptr<PolytopeQuery>* cache = nullptr);

Rational separation_sq(const PolytopeQuery& q, const Vec3& s);

struct Penetration {
  Rational alpha;
  Vec3 exit;
  int facet = -1;
};
Penetration directional_penetration(const PolytopeQuery& q, const Vec3& s, const Vec3& r);

}  // namespace geomink
