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

#include <utility>
#include <vector>

#include "gaussian_map.hpp"

namespace geomink {

// Exact incremental hull. Coplanar triangles are merged into maximal facets
// and the vertex set is reduced to extreme points.
Mesh convex_hull_3(const std::vector<Vec3>& pts);

std::vector<Vec3> pairwise_sums(const Mesh& a, const Mesh& b);

// Primitive outward normal and offset of every facet, sorted.
std::vector<std::pair<Vec3, Rational>> facet_planes(const Mesh& m);

bool meshes_equivalent(const Mesh& a, const Mesh& b);

}  // namespace geomink
