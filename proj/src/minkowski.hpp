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

#include <vector>

#include "gaussian_map.hpp"

namespace geomink {

// Gaussian map of the Minkowski sum: overlay with face payloads summed.
GaussianMap minkowski(const GaussianMap& g1, const GaussianMap& g2,
                      OverlayProvenance* prov = nullptr);
GaussianMap minkowski_many(const std::vector<GaussianMap>& gs);

struct SumStats {
  std::vector<int> summand_facets;
  int facets = 0, edges = 0, vertices = 0;  // of the primal sum
  int v_x = 0;             // arc crossings created by the overlay
  bool degenerate = false; // coinciding features; v_x is then a lower bound
  bool degree_identity = false;  // 2 sum(e_i) + 4 v_x == 2 e_out
};

// Counts for a two-summand sum built with provenance.
SumStats sum_stats(const GaussianMap& out, const GaussianMap& g1, const GaussianMap& g2,
                   const OverlayProvenance& prov);
// Counts only; v_x from the Euler bookkeeping, degeneracy not detected.
SumStats sum_stats(const GaussianMap& out, const std::vector<GaussianMap>& inputs);

}  // namespace geomink
