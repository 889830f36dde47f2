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

#include <gtest/gtest.h>

#include <json.hpp>
#include <string>

#include "geomink/geomink.h"

namespace {

using Json = nlohmann::json;

const char* kOctahedron =
    "EOFF\n6 8\n1 0 0\n-1 0 0\n0 1 0\n0 -1 0\n0 0 1\n0 0 -1\n"
    "3 0 2 4\n3 2 1 4\n3 1 3 4\n3 3 0 4\n3 2 0 5\n3 1 2 5\n3 3 1 5\n3 0 3 5\n";

const char* kCubePoints =
    "0 0 0\n1 0 0\n0 1 0\n1 1 0\n0 0 1\n1 0 1\n0 1 1\n1 1 1\n1/2 1/2 1/2\n";

Json take_json(char* s) {
  Json j = Json::parse(s);
  geomink_string_free(s);
  return j;
}

}  // namespace

TEST(CApi, OctahedronGaussianMap) {
  geomink_mesh* m = nullptr;
  ASSERT_EQ(geomink_mesh_parse(kOctahedron, &m), GEOMINK_OK);
  geomink_gmap* g = nullptr;
  ASSERT_EQ(geomink_gmap_build(m, &g), GEOMINK_OK);
  size_t v = 0, he = 0, f = 0;
  ASSERT_EQ(geomink_gmap_counts(g, &v, &he, &f), GEOMINK_OK);
  EXPECT_EQ(v, 10u);
  EXPECT_EQ(he, 28u);
  EXPECT_EQ(f, 6u);
  char* json = nullptr;
  ASSERT_EQ(geomink_gmap_report(g, &json), GEOMINK_OK);
  Json r = take_json(json);
  EXPECT_EQ(r["schema"], 1);
  EXPECT_EQ(r["primal"]["facets"], 8);
  char *value = nullptr, *vertex = nullptr;
  ASSERT_EQ(geomink_gmap_support(g, "1,1/2,0", &value, &vertex), GEOMINK_OK);
  EXPECT_STREQ(value, "1");
  EXPECT_STREQ(vertex, "1 0 0");
  geomink_string_free(value);
  geomink_string_free(vertex);
  geomink_gmap_free(g);
  geomink_mesh_free(m);
}

TEST(CApi, MinkowskiAndHull) {
  geomink_mesh *cube = nullptr, *octa = nullptr;
  ASSERT_EQ(geomink_hull_parse(kCubePoints, &cube), GEOMINK_OK);
  size_t v = 0, e = 0, f = 0;
  geomink_mesh_counts(cube, &v, &e, &f);
  EXPECT_EQ(v, 8u);
  EXPECT_EQ(f, 6u);
  ASSERT_EQ(geomink_mesh_parse(kOctahedron, &octa), GEOMINK_OK);
  geomink_gmap *a = nullptr, *b = nullptr, *s = nullptr;
  ASSERT_EQ(geomink_gmap_build(cube, &a), GEOMINK_OK);
  ASSERT_EQ(geomink_gmap_build(octa, &b), GEOMINK_OK);
  char* stats = nullptr;
  ASSERT_EQ(geomink_minkowski(a, b, &s, &stats), GEOMINK_OK);
  Json j = take_json(stats);
  // Cube plus octahedron: the cuboctahedral truncation with 6 + 8 + 12 facets.
  EXPECT_EQ(j["sum"]["facets"], 26);
  EXPECT_LE(j["sum"]["facets"].get<int>(), j["bound"].get<int>());
  geomink_mesh* primal = nullptr;
  ASSERT_EQ(geomink_gmap_primal(s, &primal), GEOMINK_OK);
  char* text = nullptr;
  ASSERT_EQ(geomink_mesh_format(primal, &text), GEOMINK_OK);
  geomink_mesh* again = nullptr;
  EXPECT_EQ(geomink_mesh_parse(text, &again), GEOMINK_OK);
  geomink_string_free(text);
  for (geomink_mesh* x : {cube, octa, primal, again}) geomink_mesh_free(x);
  for (geomink_gmap* x : {a, b, s}) geomink_gmap_free(x);
}

TEST(CApi, CollideGrazingCubes) {
  geomink_mesh* cube = nullptr;
  ASSERT_EQ(geomink_hull_parse(kCubePoints, &cube), GEOMINK_OK);
  geomink_gmap* g = nullptr;
  ASSERT_EQ(geomink_gmap_build(cube, &g), GEOMINK_OK);
  const std::pair<const char*, const char*> cases[] = {
      {"1,0,0", "on_boundary"}, {"1000001/1000000,0,0", "outside"}, {"999999/1000000,0,0", "inside"}};
  for (auto [w, want] : cases) {
    char* json = nullptr;
    ASSERT_EQ(geomink_collide(g, g, "0,0,0", w, &json), GEOMINK_OK);
    Json r = take_json(json);
    EXPECT_EQ(r["placement"], want) << w;
  }
  geomink_gmap_free(g);
  geomink_mesh_free(cube);
}

TEST(CApi, ErrorsCarryStatusAndMessage) {
  geomink_mesh* m = nullptr;
  EXPECT_EQ(geomink_mesh_parse(nullptr, &m), GEOMINK_NULL_ARGUMENT);
  EXPECT_EQ(geomink_mesh_parse("EOFF\n4 4\n3/0 0 0\n", &m), GEOMINK_PARSE_ERROR);
  EXPECT_NE(std::string(geomink_last_error()).find("line 3"), std::string::npos);
  EXPECT_STREQ(geomink_status_name(GEOMINK_PARSE_ERROR), "ParseError");
  EXPECT_EQ(geomink_mesh_read("/nonexistent/file.eoff", &m), GEOMINK_IO_ERROR);
  EXPECT_EQ(geomink_hull_parse("0 0 0\n1 0 0\n0 1 0\n", &m), GEOMINK_DEGENERATE_INPUT);
  EXPECT_EQ(m, nullptr);
  int bad[] = {3, 5};
  char* json = nullptr;
  EXPECT_EQ(geomink_maxgen(bad, 2, 1, nullptr, &json, nullptr), GEOMINK_INVALID_FACET_COUNT);
  EXPECT_EQ(json, nullptr);
}

TEST(CApi, MaxgenAndPartition) {
  int facets[] = {4, 4};
  char* json = nullptr;
  int passed = 0;
  geomink_mesh* sum = nullptr;
  ASSERT_EQ(geomink_maxgen(facets, 2, 1, &sum, &json, &passed), GEOMINK_OK);
  Json r = take_json(json);
  EXPECT_EQ(passed, 1);
  EXPECT_EQ(r["facetCount"], 18);
  EXPECT_EQ(r["bound"], 18);
  size_t f = 0;
  geomink_mesh_counts(sum, nullptr, nullptr, &f);
  EXPECT_EQ(f, 18u);
  geomink_mesh_free(sum);

  geomink_assembly* a = nullptr;
  ASSERT_EQ(geomink_assembly_read("data/split_star.asm", &a), GEOMINK_OK);
  size_t parts = 0;
  geomink_assembly_parts(a, &parts);
  EXPECT_EQ(parts, 6u);
  int interlocked = -1;
  ASSERT_EQ(geomink_partition(a, GEOMINK_FIRST, 1, &json, &interlocked), GEOMINK_OK);
  r = take_json(json);
  EXPECT_EQ(interlocked, 0);
  EXPECT_EQ(r["solutionCount"], 1);
  EXPECT_EQ(r["solutions"][0]["cell"], "vertex");
  EXPECT_EQ(r["solutions"][0]["moving"].size(), 3u);
  geomink_assembly_free(a);
}
