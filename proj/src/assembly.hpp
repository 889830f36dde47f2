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
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gaussian_map.hpp"

namespace geomink {

struct Assembly {
  std::vector<std::string> names;
  std::vector<std::vector<Mesh>> parts;  // convex sub-parts of each part
  int size() const { return static_cast<int>(parts.size()); }
};

// Cell data of a region arrangement is a bit mask; for a single region bit 0
// means every ray in the cell's directions meets the open solid.
using SphericalRegion = SphereArrangement;

using SumKey = std::array<int, 4>;  // i, j, k, l
// Gaussian maps of P^j_l + (-P^i_k) for every ordered pair of parts. With
// `reflect_pairs` only i<j is summed and the rest is obtained by reflection.
std::map<SumKey, GaussianMap> pairwise_subpart_sums(const Assembly& a, bool reflect_pairs = true,
                                                    int threads = 0);

// Central projection of the polytope onto the sphere of directions; the
// interior is tagged with `mask`.
SphericalRegion project_polytope(const GaussianMap& g, int64_t mask = 1);
// Brute-force test: does the open ray {t d : t > 0} meet the interior?
bool ray_pierces(const GaussianMap& g, const Vec3& d);
bool ray_pierces(const FacetTable& t, const Vec3& d);

// Union with masks or-ed cell by cell, then cleanup.
SphericalRegion union_regions(const std::vector<SphericalRegion>& rs);
// Drops edges and vertices that separate nothing and merges collinear chains.
SphericalRegion cleanup_region(const SphericalRegion& r);

struct MotionSpace {
  SphereArrangement arr;  // cell data: bit (i * n + j) set iff i is blocked by j
  int parts = 0;
  bool blocked(int64_t mask, int i, int j) const { return (mask >> (i * parts + j)) & 1; }
};

MotionSpace build_motion_space(int parts, const std::map<std::pair<int, int>, SphericalRegion>& q);

// Strongly connected components; comp[v] numbered in reverse topological order.
std::vector<int> strong_components(const std::vector<std::vector<int>>& adj, int* count = nullptr);

enum class PartitionMode { FIRST, ALL };

struct Solution {
  CellKind kind = CellKind::VERTEX;
  int cell = -1;
  Vec3 direction;
  std::vector<int> subset;  // parts that move along direction
};

struct PartitionResult {
  bool interlocked = false;
  std::vector<Solution> solutions;
  int sums = 0;
  int motion_vertices = 0, motion_edges = 0, motion_faces = 0;
};

// Movable subset of a DBG given as a blocking mask, or empty when the graph
// is strongly connected.
std::vector<int> movable_subset(const MotionSpace& ms, int64_t mask);
Vec3 cell_direction(const SphereArrangement& arr, CellKind kind, int id);

PartitionResult find_partitions(const MotionSpace& ms, PartitionMode mode);
// Phases up to the motion space; `sums` receives the number of Minkowski sums.
MotionSpace assembly_motion_space(const Assembly& a, int threads = 0, int* sums = nullptr);
PartitionResult partition(const Assembly& a, PartitionMode mode, int threads = 0);

// Worker count from GEOMINK_THREADS, defaulting to the hardware concurrency.
int default_threads();

}  // namespace geomink
