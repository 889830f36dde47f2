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

#include "minkowski.hpp"

#include <map>

namespace geomink {

namespace {

int primal_edges(const GaussianMap& g) {
  // Edges between facet vertices, counting each chain through split points once.
  int e = 0;
  for (int h = 0; h < g.arr.num_halfedges(); h += 2) e += 1;
  for (int v = 0; v < g.arr.num_vertices(); ++v) e -= !g.is_facet_vertex(v);
  return e;
}

enum class Feature { VERTEX, EDGE, FACE };

Feature feature(const GaussianMap& g, const Cell& c) {
  if (c.kind == CellKind::FACE) return Feature::FACE;
  if (c.kind == CellKind::EDGE) return Feature::EDGE;
  return g.is_facet_vertex(c.id) ? Feature::VERTEX : Feature::EDGE;
}

}  // namespace

GaussianMap minkowski(const GaussianMap& g1, const GaussianMap& g2, OverlayProvenance* prov) {
  const int64_t stride = static_cast<int64_t>(g2.points.size());
  OverlayCallbacks cb = OverlayCallbacks::zero();
  cb.face_face = [stride](int64_t a, int64_t b) { return a * stride + b; };
  GaussianMap out;
  out.arr = overlay(g1.arr, g2.arr, cb, prov);
  std::map<int64_t, int64_t> index;
  for (int f = 0; f < out.arr.num_faces(); ++f) {
    int64_t key = out.arr.face(f).data;
    auto [it, fresh] = index.emplace(key, static_cast<int64_t>(out.points.size()));
    if (fresh) out.points.push_back(g1.points.at(key / stride) + g2.points.at(key % stride));
    out.arr.face(f).data = it->second;
  }
  return out;
}

GaussianMap minkowski_many(const std::vector<GaussianMap>& gs) {
  if (gs.size() < 2) fail(ErrorCode::kPrecondition, "minkowski_many needs at least two summands");
  GaussianMap acc = minkowski(gs[0], gs[1]);
  for (size_t i = 2; i < gs.size(); ++i) acc = minkowski(acc, gs[i]);
  return acc;
}

SumStats sum_stats(const GaussianMap& out, const std::vector<GaussianMap>& inputs) {
  SumStats s;
  int sum_v = 0, sum_e = 0;
  for (const auto& g : inputs) {
    s.summand_facets.push_back(g.facet_count());
    sum_v += g.facet_count();
    sum_e += primal_edges(g);
  }
  s.facets = out.facet_count();
  s.edges = primal_edges(out);
  s.vertices = out.arr.num_faces();
  s.v_x = s.facets - sum_v;
  s.degree_identity = 2 * sum_e + 4 * s.v_x == 2 * s.edges;
  return s;
}

SumStats sum_stats(const GaussianMap& out, const GaussianMap& g1, const GaussianMap& g2,
                   const OverlayProvenance& prov) {
  SumStats s = sum_stats(out, std::vector<GaussianMap>{g1, g2});
  int crossings = 0;
  for (int v = 0; v < out.arr.num_vertices(); ++v) {
    if (!out.is_facet_vertex(v)) continue;
    Feature a = feature(g1, prov.vertex_a[v]), b = feature(g2, prov.vertex_b[v]);
    if (a == Feature::EDGE && b == Feature::EDGE)
      ++crossings;
    else if (!((a == Feature::VERTEX && b == Feature::FACE) || (a == Feature::FACE && b == Feature::VERTEX)))
      s.degenerate = true;
  }
  for (auto c : prov.edge_case)
    if (c == OverlayCase::EDGE_EDGE_OVERLAP) s.degenerate = true;
  s.v_x = crossings;
  s.degree_identity = 2 * (primal_edges(g1) + primal_edges(g2)) + 4 * s.v_x == 2 * s.edges;
  return s;
}

}  // namespace geomink
