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

#ifndef GEOMINK_GEOMINK_H
#define GEOMINK_GEOMINK_H

#include <stddef.h>

#if defined(_WIN32)
#define GEOMINK_API __declspec(dllexport)
#else
#define GEOMINK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Exact convex polytopes, their Gaussian maps, Minkowski sums and assembly
 * partitioning. Coordinates cross this boundary as decimal rational text
 * ("p/q" or integers) so nothing is rounded. Strings returned through char**
 * belong to the caller and are released with geomink_string_free. */

typedef struct geomink_mesh geomink_mesh;
typedef struct geomink_gmap geomink_gmap;
typedef struct geomink_assembly geomink_assembly;

typedef enum geomink_status {
  GEOMINK_OK = 0,
  GEOMINK_ZERO_VECTOR,
  GEOMINK_PRECONDITION,
  GEOMINK_DEGENERATE_ARC,
  GEOMINK_POINT_NOT_INTERIOR,
  GEOMINK_NOT_MERGEABLE,
  GEOMINK_ANCHOR_MISMATCH,
  GEOMINK_INVALID_ARC,
  GEOMINK_INVALID_MESH,
  GEOMINK_INVALID_GAUSSIAN_MAP,
  GEOMINK_PARSE_ERROR,
  GEOMINK_IO_ERROR,
  GEOMINK_PARAMS_REJECTED,
  GEOMINK_NON_TERMINATION,
  GEOMINK_INVALID_FACET_COUNT,
  GEOMINK_POINT_OUTSIDE,
  GEOMINK_DEGENERATE_INPUT,
  GEOMINK_INTERNAL,
  GEOMINK_NULL_ARGUMENT
} geomink_status;

typedef enum geomink_partition_mode { GEOMINK_FIRST = 0, GEOMINK_ALL = 1 } geomink_partition_mode;

GEOMINK_API const char* geomink_version(void);
GEOMINK_API const char* geomink_status_name(geomink_status s);
/* Message of the last failing call on this thread. */
GEOMINK_API const char* geomink_last_error(void);
GEOMINK_API void geomink_string_free(char* s);

/* Meshes. Readers validate convexity and report the offending line. */
GEOMINK_API geomink_status geomink_mesh_read(const char* path, geomink_mesh** out);
GEOMINK_API geomink_status geomink_mesh_parse(const char* text, geomink_mesh** out);
GEOMINK_API geomink_status geomink_mesh_write(const geomink_mesh* m, const char* path);
GEOMINK_API geomink_status geomink_mesh_format(const geomink_mesh* m, char** text);
GEOMINK_API geomink_status geomink_mesh_counts(const geomink_mesh* m, size_t* vertices, size_t* edges,
                                               size_t* facets);
GEOMINK_API void geomink_mesh_free(geomink_mesh* m);

/* Convex hull of a point list, one "x y z" per line. */
GEOMINK_API geomink_status geomink_hull_read(const char* path, geomink_mesh** out);
GEOMINK_API geomink_status geomink_hull_parse(const char* text, geomink_mesh** out);

/* Gaussian maps. */
GEOMINK_API geomink_status geomink_gmap_build(const geomink_mesh* m, geomink_gmap** out);
GEOMINK_API geomink_status geomink_gmap_reflect(const geomink_gmap* g, geomink_gmap** out);
GEOMINK_API geomink_status geomink_gmap_primal(const geomink_gmap* g, geomink_mesh** out);
GEOMINK_API geomink_status geomink_gmap_counts(const geomink_gmap* g, size_t* vertices, size_t* halfedges,
                                               size_t* faces);
/* JSON with arrangement and primal counts. */
GEOMINK_API geomink_status geomink_gmap_report(const geomink_gmap* g, char** json);
/* Text dump of the underlying arrangement. */
GEOMINK_API geomink_status geomink_gmap_dump(const geomink_gmap* g, char** text);
/* Support value max <d, v> and the vertex attaining it, both as text. */
GEOMINK_API geomink_status geomink_gmap_support(const geomink_gmap* g, const char* direction, char** value,
                                                char** vertex);
GEOMINK_API void geomink_gmap_free(geomink_gmap* g);

/* a + b. stats_json may be NULL. */
GEOMINK_API geomink_status geomink_minkowski(const geomink_gmap* a, const geomink_gmap* b, geomink_gmap** out,
                                             char** stats_json);

/* P placed at u against Q placed at w. */
GEOMINK_API geomink_status geomink_collide(const geomink_gmap* p, const geomink_gmap* q, const char* u,
                                           const char* w, char** report_json);

/* Extremal sums. One count yields the witness polytope itself; two or more
 * yield their sum. With verify set, the sum is also rebuilt as a hull of
 * pairwise vertex sums and compared. *passed is 1 when the bound is attained
 * (and the cross-check agrees). mesh and passed may be NULL. */
GEOMINK_API geomink_status geomink_maxgen(const int* facets, size_t count, int verify, geomink_mesh** mesh,
                                          char** report_json, int* passed);

/* Assemblies. threads < 0 reads GEOMINK_THREADS. */
GEOMINK_API geomink_status geomink_assembly_read(const char* path, geomink_assembly** out);
GEOMINK_API geomink_status geomink_assembly_parse(const char* text, geomink_assembly** out);
GEOMINK_API geomink_status geomink_assembly_parts(const geomink_assembly* a, size_t* parts);
GEOMINK_API void geomink_assembly_free(geomink_assembly* a);
GEOMINK_API geomink_status geomink_partition(const geomink_assembly* a, geomink_partition_mode mode, int threads,
                                             char** report_json, int* interlocked);

#ifdef __cplusplus
}
#endif

#endif
