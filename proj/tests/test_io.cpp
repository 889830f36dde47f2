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

#include <cstdio>

#include "io.hpp"
#include "meshes.hpp"

using namespace geomink;
using namespace geomink::testing;

namespace {

ErrorCode code_of(const std::function<void()>& f, std::string* msg = nullptr) {
  try {
    f();
  } catch (const Error& e) {
    if (msg) *msg = e.what();
    return e.code();
  }
  return ErrorCode::kOk;
}

const char* kTetra =
    "EOFF\n"
    "# a tetrahedron with rational coordinates\n"
    "4 4\n"
    "0 0 0\n"
    "1/2 0 0\n"
    "0 1/3 0\n"
    "0 0 7/5\n"
    "3 0 2 1\n"
    "3 0 1 3\n"
    "3 1 2 3\n"
    "3 0 3 2\n";

}  // namespace

TEST(Io, MeshRoundTrip) {
  Mesh m = parse_mesh(kTetra);
  EXPECT_EQ(m.vertices[3], Vec3(0, 0, Rational(7) / 5));
  std::string canon = format_mesh(m);
  EXPECT_EQ(format_mesh(parse_mesh(canon)), canon);
  for (const Mesh& x : {icosahedron(), cube(-3, 5), octahedron()}) {
    std::string t = format_mesh(x);
    Mesh y = parse_mesh(t);
    EXPECT_EQ(y.vertices, x.vertices);
    EXPECT_EQ(y.facets, x.facets);
    EXPECT_EQ(format_mesh(y), t);
  }
}

TEST(Io, FileRoundTrip) {
  std::string path = ::testing::TempDir() + "/rt.eoff";
  write_mesh(icosahedron(), path);
  std::string a = read_file(path);
  write_mesh(read_mesh(path), path);
  EXPECT_EQ(read_file(path), a);
  std::remove(path.c_str());
  EXPECT_EQ(code_of([&] { read_mesh(path); }), ErrorCode::kIo);
}

TEST(Io, ParseErrorsNameTheLine) {
  std::string msg;
  std::string bad = kTetra;
  bad.replace(bad.find("1/2"), 3, "3/0");
  EXPECT_EQ(code_of([&] { parse_mesh(bad); }, &msg), ErrorCode::kParse);
  EXPECT_NE(msg.find("line 5"), std::string::npos) << msg;
  EXPECT_NE(msg.find("3/0"), std::string::npos) << msg;

  EXPECT_EQ(code_of([&] { parse_mesh("OFF\n4 4\n"); }, &msg), ErrorCode::kParse);
  EXPECT_NE(msg.find("line 1"), std::string::npos);
  EXPECT_EQ(code_of([&] { parse_mesh("EOFF\n4 4\n0 0 0\n"); }, &msg), ErrorCode::kParse);
  EXPECT_NE(msg.find("end of input"), std::string::npos);
  std::string range = kTetra;
  range.replace(range.find("3 1 2 3"), 7, "3 1 2 9");
  EXPECT_EQ(code_of([&] { parse_mesh(range); }, &msg), ErrorCode::kParse);
  EXPECT_NE(msg.find("line 10"), std::string::npos) << msg;
  EXPECT_EQ(code_of([&] { parse_mesh(std::string(kTetra) + "1 2 3\n"); }), ErrorCode::kParse);
}

TEST(Io, NonConvexMeshNamesFacet) {
  // Pull one cube corner inward so that three facets bend.
  Mesh c = cube(0, 2);
  std::string t = format_mesh(c);
  Mesh dented = c;
  for (auto& v : dented.vertices)
    if (v == V(2, 2, 2)) v = V(1, 1, 1);
  std::string msg;
  EXPECT_EQ(code_of([&] { parse_mesh(format_mesh(dented)); }, &msg), ErrorCode::kInvalidMesh);
  EXPECT_NE(msg.find("facet"), std::string::npos) << msg;
  EXPECT_NE(msg.find("(line "), std::string::npos) << msg;
  // Validation can be skipped for inspection tools.
  EXPECT_EQ(parse_mesh(format_mesh(dented), false).vertices.size(), 8u);
}

TEST(Io, AssemblyRoundTrip) {
  Assembly a;
  a.names = {"left", "right"};
  a.parts = {{cube(0, 1), translated(cube(0, 1), V(0, 0, 1))}, {translated(octahedron(), V(5, 0, 0))}};
  std::string t = format_assembly(a);
  Assembly b = parse_assembly(t);
  EXPECT_EQ(b.names, a.names);
  ASSERT_EQ(b.size(), 2);
  EXPECT_EQ(b.parts[0].size(), 2u);
  EXPECT_EQ(format_assembly(b), t);
  std::string msg;
  EXPECT_EQ(code_of([&] { parse_assembly("GEOMINK-ASM 1\n2\npart a 1\n" + format_mesh(cube(0, 1))); }, &msg),
            ErrorCode::kParse);
  EXPECT_NE(msg.find("part header"), std::string::npos) << msg;

  Assembly star = read_assembly("data/split_star.asm");
  EXPECT_EQ(star.size(), 6);
  for (const auto& p : star.parts) {
    ASSERT_EQ(p.size(), 3u);
    std::vector<size_t> nv;
    for (const Mesh& m : p) nv.push_back(m.vertices.size());
    std::sort(nv.begin(), nv.end());
    EXPECT_EQ(nv, (std::vector<size_t>{5, 5, 6}));
  }
}

TEST(Io, PointsAndVectors) {
  auto pts = parse_points("# corners\n0 0 0\n1,2,3\n-1/2 1/4 7\n");
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_EQ(pts[2], Vec3(Rational(-1) / 2, Rational(1) / 4, 7));
  EXPECT_EQ(parse_vec3("1, -2/3,0"), Vec3(1, Rational(-2) / 3, 0));
  EXPECT_EQ(code_of([] { parse_vec3("1,2"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_points("1 2\n"); }), ErrorCode::kParse);
}
