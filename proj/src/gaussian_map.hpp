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

#include <string>
#include <vector>

#include "arrangement.hpp"

namespace geomink {

struct Mesh {
  std::vector<Vec3> vertices;
  std::vector<std::vector<int>> facets;  // counterclockwise seen from outside
};

// Throws InvalidMesh naming the first violated condition.
void validate_mesh(const Mesh& m);
bool mesh_is_valid(const Mesh& m, std::string* why = nullptr);
// Outward normal of a facet: cross product of two non-collinear boundary edges.
Vec3 facet_normal(const Mesh& m, int f);
int mesh_edge_count(const Mesh& m);

class GaussianMap {
 public:
  SphereArrangement arr;
  std::vector<Vec3> points;  // face data indexes this table

  const Vec3& primal(int face) const { return points[arr.face(face).data]; }

  struct Counts {
    int v, he, f;
  };
  Counts counts() const { return {arr.num_vertices(), arr.num_halfedges(), arr.num_faces()}; }

  // A vertex is a facet of the primal polytope unless it is a degree-2 split
  // point whose two arcs lie on one great circle.
  bool is_facet_vertex(int v) const;
  int facet_count() const;
};

GaussianMap build_gaussian_map(const Mesh& mesh);
GaussianMap reflect(const GaussianMap& g);
Mesh primal_mesh(const GaussianMap& g);

struct Support {
  Rational value;
  Vec3 vertex;
};
Support support(const GaussianMap& g, const Vec3& d);

// Number of arcs of the map that cross the identification curve when the
// mesh edges are drawn as short arcs between facet normals.
int identification_crossings(const Mesh& m);

// Facet view of a map: one entry per facet vertex with its supporting plane
// and the facets adjacent across primal edges.
struct FacetTable {
  std::vector<int> vertex;         // arrangement vertex id
  std::vector<Vec3> normal;
  std::vector<Rational> offset;    // <normal, x> <= offset on the polytope
  std::vector<std::vector<int>> adj;
};
FacetTable facet_table(const GaussianMap& g);

}  // namespace geomink
