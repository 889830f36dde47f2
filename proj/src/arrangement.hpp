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

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sphere.hpp"

namespace geomink {

// Doubly connected edge list on the sphere. The face to the left of a
// halfedge lies on the positive side of the halfedge's arc normal. Outgoing
// halfedges of a vertex, taken counterclockwise as seen from outside the
// sphere, satisfy next(twin(out_i)) = out_{i-1}.
class SphereArrangement {
 public:
  struct Vertex {
    DirPoint p;
    int out = -1;         // some outgoing halfedge, -1 when isolated
    int iso_face = -1;    // owning face of an isolated vertex
    int64_t data = 0;
  };
  struct Halfedge {
    int twin = -1, next = -1, prev = -1;
    int origin = -1;
    int face = -1;
    GeodesicArc arc;  // directed from origin to target
    int64_t data = 0;  // shared by both halves of an edge
  };
  struct Face {
    std::vector<int> ccbs;      // one representative halfedge per boundary cycle
    std::vector<int> isolated;  // isolated vertex ids
    int64_t data = 0;
  };
  enum class CellKind { VERTEX, EDGE, FACE };
  struct Cell {
    CellKind kind = CellKind::FACE;
    int id = 0;  // vertex id, halfedge id, or face id
    bool operator==(const Cell& o) const { return kind == o.kind && id == o.id; }
  };

  SphereArrangement();

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_halfedges() const { return static_cast<int>(halfedges_.size()); }
  int num_edges() const { return num_halfedges() / 2; }
  int num_faces() const { return static_cast<int>(faces_.size()); }

  const Vertex& vertex(int v) const { return vertices_[v]; }
  const Halfedge& halfedge(int h) const { return halfedges_[h]; }
  const Face& face(int f) const { return faces_[f]; }
  Vertex& vertex(int v) { return vertices_[v]; }
  Halfedge& halfedge(int h) { return halfedges_[h]; }
  Face& face(int f) { return faces_[f]; }
  int target(int h) const { return halfedges_[halfedges_[h].twin].origin; }

  // Outgoing halfedges of v in counterclockwise order.
  std::vector<int> outgoing(int v) const;
  int degree(int v) const;
  std::vector<int> cycle(int h) const;

  // Isolated point insertion (located first).
  int insert_point(const DirPoint& p);
  // Inserts an arc whose interior is disjoint from the arrangement. Missing
  // anchors are resolved by locating the endpoint.
  int insert_disjoint_arc(const GeodesicArc& arc, int v1 = -1, int v2 = -1);

  Cell locate(const DirPoint& p) const;
  int face_of_north_pole() const;

  // Boundary cycles of f split by their relation to the north pole: a cycle
  // is outer when it separates f from the north pole.
  std::vector<int> outer_ccbs(int f) const;
  std::vector<int> inner_ccbs(int f) const;

  // Vertices on the identification curve in ascending v order, then poles.
  std::vector<int> identification_vertices() const;
  int north_pole_vertex() const;
  int south_pole_vertex() const;

  int connected_components() const;
  // Empty on success.
  std::vector<std::string> validate() const;

  std::string dump() const;
  static SphereArrangement parse_dump(const std::string& text);

  // Low-level access used by fault-injection tests.
  std::vector<Halfedge>& raw_halfedges() { return halfedges_; }

 private:
  int new_vertex(const DirPoint& p);
  int new_edge(const GeodesicArc& arc, int from, int to);
  int find_vertex(const DirPoint& p) const;
  // Pair (pred, succ) of outgoing halfedges around v bracketing tangent t.
  std::pair<int, int> slot(int v, const Vec3& t) const;
  int face_at_slot(int v, int pred) const;
  void relink(int h, int v1, int v2, int p1, int s1, int p2, int s2);
  // Halfedge facing p among the edges selected by `use` (indexed by halfedge).
  // Returns -1 when there are no such edges.
  int facing_halfedge(const Vec3& p, const std::vector<char>& use) const;
  void remove_ccb_entry(int f, const std::vector<char>& in_cycle);

  std::vector<Vertex> vertices_;
  std::vector<Halfedge> halfedges_;
  std::vector<Face> faces_;
};

using Cell = SphereArrangement::Cell;
using CellKind = SphereArrangement::CellKind;

// Builds the arrangement of arbitrary arcs: arcs are pre-split at the
// identification curve and poles, intersections and overlaps are computed,
// and the interior-disjoint pieces are inserted in sweep order. Edge data of
// every piece is the index of the first input arc that covers it.
SphereArrangement sweep_build(const std::vector<GeodesicArc>& arcs,
                              const std::vector<DirPoint>& points = {});

enum class OverlayCase {
  VERTEX_VERTEX,
  VERTEX_EDGE,
  EDGE_VERTEX,
  VERTEX_FACE,
  FACE_VERTEX,
  EDGE_EDGE_CROSSING,
  EDGE_EDGE_OVERLAP,
  EDGE_FACE,
  FACE_EDGE,
  FACE_FACE,
};
const char* overlay_case_name(OverlayCase c);

// One merge function per case. Each receives the payloads of the two source
// cells and returns the payload of the output cell.
struct OverlayCallbacks {
  using Fn = std::function<int64_t(int64_t, int64_t)>;
  Fn vertex_vertex, vertex_edge, edge_vertex, vertex_face, face_vertex;
  Fn edge_edge_crossing, edge_edge_overlap, edge_face, face_edge, face_face;

  const Fn& get(OverlayCase c) const;
  // Every callback returns 0.
  static OverlayCallbacks zero();
};

struct OverlayProvenance {
  // Per output vertex / halfedge / face: the case and the source cells.
  std::vector<OverlayCase> vertex_case, edge_case, face_case;
  std::vector<Cell> vertex_a, vertex_b, edge_a, edge_b;
  std::vector<int> face_a, face_b;
};

SphereArrangement overlay(const SphereArrangement& a, const SphereArrangement& b,
                          const OverlayCallbacks& cb, OverlayProvenance* prov = nullptr);

// Rebuilds the arrangement keeping only selected edges (by halfedge id, either
// half) and selected vertices; vertices left with no incident edge survive as
// isolated vertices when kept. Degree-2 vertices whose two arcs lie on one
// great circle are merged away when `merge_collinear` is set and the vertex is
// not kept explicitly. Face data of the output is taken from `face_data` of
// the containing input face.
SphereArrangement rebuild_subset(const SphereArrangement& a, const std::vector<char>& keep_edge,
                                 const std::vector<char>& keep_vertex, bool merge_collinear);

}  // namespace geomink
