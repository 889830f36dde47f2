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

#include "geomink/geomink.h"

#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <memory>
#include <new>

#include "assembly.hpp"
#include "extremal.hpp"
#include "hull.hpp"
#include "io.hpp"
#include "minkowski.hpp"
#include "proximity.hpp"

struct geomink_mesh {
  geomink::Mesh m;
};
struct geomink_gmap {
  geomink::GaussianMap g;
};
struct geomink_assembly {
  geomink::Assembly a;
};

namespace {

using geomink::ErrorCode;
using Json = nlohmann::ordered_json;

constexpr const char* kApproxNote = "approx fields are derived-from-exact values, for reading only";

thread_local std::string last_error;

geomink_status status_of(ErrorCode c) { return static_cast<geomink_status>(static_cast<int>(c)); }

template <class F>
geomink_status guard(F&& f) {
  try {
    f();
    last_error.clear();
    return GEOMINK_OK;
  } catch (const geomink::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = std::string("Internal: ") + e.what();
  }
  return GEOMINK_INTERNAL;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const Json& j) {
  if (out) *out = dup(j.dump(2) + "\n");
}

Json vec_json(const geomink::Vec3& v) {
  Json j;
  j["exact"] = {geomink::to_string(v.x), geomink::to_string(v.y), geomink::to_string(v.z)};
  j["approx"] = {geomink::to_double(v.x), geomink::to_double(v.y), geomink::to_double(v.z)};
  return j;
}

Json mesh_counts(const geomink::Mesh& m) {
  return {{"vertices", m.vertices.size()}, {"edges", geomink::mesh_edge_count(m)}, {"facets", m.facets.size()}};
}

Json integer_json(const geomink::Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

const char* cell_name(geomink::CellKind k) {
  switch (k) {
    case geomink::CellKind::VERTEX: return "vertex";
    case geomink::CellKind::EDGE: return "edge";
    case geomink::CellKind::FACE: return "face";
  }
  return "?";
}

}  // namespace

extern "C" {

const char* geomink_version(void) { return "1.0.0"; }

const char* geomink_status_name(geomink_status s) {
  if (s == GEOMINK_OK) return "Ok";
  if (s == GEOMINK_NULL_ARGUMENT) return "NullArgument";
  if (s < 0 || s > GEOMINK_INTERNAL) return "Unknown";
  return geomink::error_name(static_cast<ErrorCode>(s));
}

const char* geomink_last_error(void) { return last_error.c_str(); }

void geomink_string_free(char* s) { std::free(s); }

geomink_status geomink_mesh_read(const char* path, geomink_mesh** out) {
  if (!path || !out) return GEOMINK_NULL_ARGUMENT;
  return guard([&] { *out = new geomink_mesh{geomink::read_mesh(path)}; });
}

geomink_status geomink_mesh_parse(const char* text, geomink_mesh** out) {
  if (!text || !out) return GEOMINK_NULL_ARGUMENT;
  return guard([&] { *out = new geomink_mesh{geomink::parse_mesh(text)}; });
}

geomink_status geomink_mesh_write(const geomink_mesh* m, const char* path) {
  if (!m || !path) return GEOMINK_NULL_ARGUMENT;
  return guard([&] { geomink::write_mesh(m->m, path); });
}

geomink_status geomink_mesh_format(const geomink_mesh* m, char** text) {
  if (!m || !text) return GEOMINK_NULL_ARGUMENT;
  return guard([&] { *text = dup(geomink::format_mesh(m->m)); });
}

geomink_status geomink_mesh_counts(const geomink_mesh* m, size_t* vertices, size_t* edges, size_t* facets) {
  if (!m) return GEOMINK_NULL_ARGUMENT;
  return guard([&] {
    if (vertices) *vertices = m->m.vertices.size();
    if (edges) *edges = static_cast<size_t>(geomink::mesh_edge_count(m->m));
    if (facets) *facets = m->m.facets.size();
  });
}

void geomink_mesh_free(geomink_mesh* m) { delete m; }

geomink_status geomink_hull_read(const char* path, geomink_mesh** out) {
  if (!path || !out) return GEOMINK_NULL_ARGUMENT;
  return guard([&] { *out = new geomink_mesh{geomink::convex_hull_3(geomink::read_points(path))}; });
}

geomink_status geomink_hull_parse(const char* text, geomink_mesh** out) {
  if (!text || !out) return GEOMINK_NULL_ARGUMENT;
  return guard([&] { *out = new geomink_mesh{geomink::convex_hull_3(geomink::parse_points(text))}; });
}

geomink_status geomink_gmap_build(const geomink_mesh* m, geomink_gmap** out) {
  if (!m || !out) return GEOMINK_NULL_ARGUMENT;
  return guard([&] { *out = new geomink_gmap{geomink::build_gaussian_map(m->m)}; });
}

geomink_status geomink_gmap_reflect(const geomink_gmap* g, geomink_gmap** out) {
  if (!g || !out) return GEOMINK_NULL_ARGUMENT;
  return guard([&] { *out = new geomink_gmap{geomink::reflect(g->g)}; });
}

geomink_status geomink_gmap_primal(const geomink_gmap* g, geomink_mesh** out) {
  if (!g || !out) return GEOMINK_NULL_ARGUMENT;
  return guard([&] { *out = new geomink_mesh{geomink::primal_mesh(g->g)}; });
}

geomink_status geomink_gmap_counts(const geomink_gmap* g, size_t* vertices, size_t* halfedges, size_t* faces) {
  if (!g) return GEOMINK_NULL_ARGUMENT;
  return guard([&] {
    auto c = g->g.counts();
    if (vertices) *vertices = static_cast<size_t>(c.v);
    if (halfedges) *halfedges = static_cast<size_t>(c.he);
    if (faces) *faces = static_cast<size_t>(c.f);
  });
}

geomink_status geomink_gmap_report(const geomink_gmap* g, char** json) {
  if (!g || !json) return GEOMINK_NULL_ARGUMENT;
  return guard([&] {
    auto c = g->g.counts();
    geomink::Mesh m = geomink::primal_mesh(g->g);
    Json j;
    j["schema"] = 1;
    j["command"] = "gmap";
    j["arrangement"] = {{"vertices", c.v}, {"halfedges", c.he}, {"faces", c.f}};
    j["primal"] = mesh_counts(m);
    j["identificationCrossings"] = geomink::identification_crossings(m);
    put(json, j);
  });
}

geomink_status geomink_gmap_dump(const geomink_gmap* g, char** text) {
  if (!g || !text) return GEOMINK_NULL_ARGUMENT;
  return guard([&] { *text = dup(g->g.arr.dump()); });
}

geomink_status geomink_gmap_support(const geomink_gmap* g, const char* direction, char** value, char** vertex) {
  if (!g || !direction) return GEOMINK_NULL_ARGUMENT;
  return guard([&] {
    geomink::Support s = geomink::support(g->g, geomink::parse_vec3(direction));
    std::string v = geomink::to_string(s.value);
    std::string p = geomink::to_string(s.vertex);
    if (value) *value = dup(v);
    if (vertex) *vertex = dup(p);
  });
}

void geomink_gmap_free(geomink_gmap* g) { delete g; }

geomink_status geomink_minkowski(const geomink_gmap* a, const geomink_gmap* b, geomink_gmap** out,
                                 char** stats_json) {
  if (!a || !b || !out) return GEOMINK_NULL_ARGUMENT;
  return guard([&] {
    geomink::OverlayProvenance prov;
    auto sum = std::make_unique<geomink_gmap>(geomink_gmap{geomink::minkowski(a->g, b->g, &prov)});
    if (stats_json) {
      geomink::SumStats st = geomink::sum_stats(sum->g, a->g, b->g, prov);
      geomink::Mesh pa = geomink::primal_mesh(a->g), pb = geomink::primal_mesh(b->g);
      geomink::Mesh ps = geomink::primal_mesh(sum->g);
      auto c = sum->g.counts();
      Json j;
      j["schema"] = 1;
      j["command"] = "minkowski";
      j["summands"] = {mesh_counts(pa), mesh_counts(pb)};
      j["sum"] = mesh_counts(ps);
      j["arrangement"] = {{"vertices", c.v}, {"halfedges", c.he}, {"faces", c.f}};
      j["crossings"] = st.v_x;
      j["degenerate"] = st.degenerate;
      j["degreeIdentity"] = st.degree_identity;
      j["bound"] = integer_json(geomink::max_complexity(
          {static_cast<int>(pa.facets.size()), static_cast<int>(pb.facets.size())}));
      put(stats_json, j);
    }
    *out = sum.release();
  });
}

geomink_status geomink_collide(const geomink_gmap* p, const geomink_gmap* q, const char* u, const char* w,
                               char** report_json) {
  if (!p || !q || !u || !w || !report_json) return GEOMINK_NULL_ARGUMENT;
  return guard([&] {
    geomink::Vec3 pu = geomink::parse_vec3(u), pw = geomink::parse_vec3(w);
    std::unique_ptr<geomink::PolytopeQuery> cache;
    geomink::Collision c = geomink::collide(p->g, q->g, pu, pw, &cache);
    Json j;
    j["schema"] = 1;
    j["command"] = "collide";
    j["u"] = vec_json(pu);
    j["w"] = vec_json(pw);
    j["placement"] = geomink::placement_name(c.witness.placement);
    j["contact"] = c.contact;
    j["witness"] = {{"facet", c.witness.facet},
                    {"normal", vec_json(c.witness.normal)},
                    {"offset", geomink::to_string(c.witness.offset)},
                    {"steps", c.witness.steps}};
    if (c.witness.placement == geomink::Placement::OUTSIDE) {
      geomink::Rational d2 = geomink::separation_sq(*cache, pw - pu);
      j["separationSquared"] = {{"exact", geomink::to_string(d2)}, {"approx", geomink::to_double(d2)}};
    }
    j["note"] = kApproxNote;
    put(report_json, j);
  });
}

geomink_status geomink_maxgen(const int* facets, size_t count, int verify, geomink_mesh** mesh, char** report_json,
                              int* passed) {
  if (!facets || count == 0) return GEOMINK_NULL_ARGUMENT;
  return guard([&] {
    std::vector<int> m(facets, facets + count);
    Json j;
    j["schema"] = 1;
    j["command"] = "maxgen";
    j["facets"] = m;
    geomink::Mesh result;
    bool ok = true;
    if (count == 1) {
      geomink::max_complexity(m);
      geomink::WitnessParams wp = geomink::WitnessParams::defaults(m[0]);
      result = geomink::witness_polytope(wp);
      j["witness"] = mesh_counts(result);
      j["params"] = {{{"alpha", geomink::to_string(wp.alpha)},
                      {"beta", geomink::to_string(wp.beta)},
                      {"gamma", geomink::to_string(wp.gamma)}}};
    } else {
      geomink::BoundReport r = geomink::verify_bound_many(m);
      std::vector<geomink::Mesh> parts = geomink::placed_summands(r);
      std::vector<geomink::GaussianMap> gs;
      for (const auto& x : parts) gs.push_back(geomink::build_gaussian_map(x));
      result = geomink::primal_mesh(geomink::minkowski_many(gs));
      j["facetCount"] = r.facets;
      j["bound"] = integer_json(r.expected);
      j["crossings"] = r.crossings;
      j["tuningIterations"] = r.iterations;
      j["attained"] = r.pass;
      Json ps = Json::array();
      for (const auto& wp : r.params)
        ps.push_back({{"alpha", geomink::to_string(wp.alpha)},
                      {"beta", geomink::to_string(wp.beta)},
                      {"gamma", geomink::to_string(wp.gamma)},
                      {"alphaDegreesApprox", geomink::degrees_of(wp.alpha)}});
      j["params"] = ps;
      ok = r.pass;
      if (verify) {
        geomink::Mesh h = parts[0];
        for (size_t i = 1; i < parts.size(); ++i) h = geomink::convex_hull_3(geomink::pairwise_sums(h, parts[i]));
        j["hullFacetCount"] = h.facets.size();
        ok = ok && geomink::meshes_equivalent(h, result);
        j["hullAgrees"] = geomink::meshes_equivalent(h, result);
      }
    }
    if (verify) j["pass"] = ok;
    j["note"] = kApproxNote;
    put(report_json, j);
    if (passed) *passed = ok ? 1 : 0;
    if (mesh) *mesh = new geomink_mesh{std::move(result)};
  });
}

geomink_status geomink_assembly_read(const char* path, geomink_assembly** out) {
  if (!path || !out) return GEOMINK_NULL_ARGUMENT;
  return guard([&] { *out = new geomink_assembly{geomink::read_assembly(path)}; });
}

geomink_status geomink_assembly_parse(const char* text, geomink_assembly** out) {
  if (!text || !out) return GEOMINK_NULL_ARGUMENT;
  return guard([&] { *out = new geomink_assembly{geomink::parse_assembly(text)}; });
}

geomink_status geomink_assembly_parts(const geomink_assembly* a, size_t* parts) {
  if (!a || !parts) return GEOMINK_NULL_ARGUMENT;
  *parts = a->a.parts.size();
  return GEOMINK_OK;
}

void geomink_assembly_free(geomink_assembly* a) { delete a; }

geomink_status geomink_partition(const geomink_assembly* a, geomink_partition_mode mode, int threads,
                                 char** report_json, int* interlocked) {
  if (!a) return GEOMINK_NULL_ARGUMENT;
  return guard([&] {
    const geomink::Assembly& as = a->a;
    geomink::PartitionResult r = geomink::partition(
        as, mode == GEOMINK_ALL ? geomink::PartitionMode::ALL : geomink::PartitionMode::FIRST,
        threads < 0 ? geomink::default_threads() : threads);
    if (interlocked) *interlocked = r.interlocked ? 1 : 0;
    if (!report_json) return;
    Json j;
    j["schema"] = 1;
    j["command"] = "partition";
    j["mode"] = mode == GEOMINK_ALL ? "all" : "first";
    j["parts"] = as.names;
    j["minkowskiSums"] = r.sums;
    j["motionSpace"] = {{"vertices", r.motion_vertices}, {"edges", r.motion_edges}, {"faces", r.motion_faces}};
    j["interlocked"] = r.interlocked;
    Json sols = Json::array();
    for (const auto& s : r.solutions) {
      std::vector<std::string> moving, staying;
      std::vector<char> in(as.parts.size(), 0);
      for (int p : s.subset) in[p] = 1;
      for (size_t p = 0; p < in.size(); ++p) (in[p] ? moving : staying).push_back(as.names[p]);
      sols.push_back({{"cell", cell_name(s.kind)}, {"direction", vec_json(s.direction)},
                      {"moving", moving}, {"staying", staying}});
    }
    j["solutionCount"] = r.solutions.size();
    j["solutions"] = sols;
    j["note"] = kApproxNote;
    put(report_json, j);
  });
}

}  // extern "C"
