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

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "geomink/geomink.h"

namespace {

// Exit codes: 0 success, 2 invalid input or failed verification, 1 internal
// error, 64 bad usage.
constexpr int kInvalid = 2;
constexpr int kInternal = 1;
constexpr int kUsage = 64;

int report(geomink_status s) {
  if (s == GEOMINK_OK) return 0;
  std::cerr << "geomink: " << geomink_last_error() << "\n";
  return s == GEOMINK_INTERNAL || s == GEOMINK_NON_TERMINATION ? kInternal : kInvalid;
}

// Owns a string handed out by the library.
struct Text {
  char* p = nullptr;
  ~Text() { geomink_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct Mesh {
  geomink_mesh* p = nullptr;
  ~Mesh() { geomink_mesh_free(p); }
};

struct Map {
  geomink_gmap* p = nullptr;
  ~Map() { geomink_gmap_free(p); }
};

int load_map(const std::string& path, Map& out) {
  Mesh m;
  if (int rc = report(geomink_mesh_read(path.c_str(), &m.p))) return rc;
  return report(geomink_gmap_build(m.p, &out.p));
}

bool write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) std::cerr << "geomink: cannot write " << path << "\n";
  return static_cast<bool>(f);
}

int cmd_gmap(const std::string& in, bool counts, bool dump) {
  Map g;
  if (int rc = load_map(in, g)) return rc;
  if (counts || !dump) {
    Text j;
    if (int rc = report(geomink_gmap_report(g.p, &j.p))) return rc;
    std::cout << j.str();
  }
  if (dump) {
    Text d;
    if (int rc = report(geomink_gmap_dump(g.p, &d.p))) return rc;
    std::cout << d.str();
  }
  return 0;
}

int cmd_minkowski(const std::string& a, const std::string& b, const std::string& out, bool stats) {
  Map ga, gb, sum;
  if (int rc = load_map(a, ga)) return rc;
  if (int rc = load_map(b, gb)) return rc;
  Text j;
  if (int rc = report(geomink_minkowski(ga.p, gb.p, &sum.p, stats ? &j.p : nullptr))) return rc;
  if (!out.empty()) {
    Mesh m;
    if (int rc = report(geomink_gmap_primal(sum.p, &m.p))) return rc;
    if (int rc = report(geomink_mesh_write(m.p, out.c_str()))) return rc;
  }
  if (stats) std::cout << j.str();
  return 0;
}

int cmd_collide(const std::string& a, const std::string& b, const std::string& u, const std::string& w) {
  Map ga, gb;
  if (int rc = load_map(a, ga)) return rc;
  if (int rc = load_map(b, gb)) return rc;
  Text j;
  if (int rc = report(geomink_collide(ga.p, gb.p, u.c_str(), w.c_str(), &j.p))) return rc;
  std::cout << j.str();
  return 0;
}

int cmd_hull(const std::string& in, const std::string& out) {
  Mesh m;
  if (int rc = report(geomink_hull_read(in.c_str(), &m.p))) return rc;
  if (out.empty()) {
    Text t;
    if (int rc = report(geomink_mesh_format(m.p, &t.p))) return rc;
    std::cout << t.str();
    return 0;
  }
  return report(geomink_mesh_write(m.p, out.c_str()));
}

int cmd_maxgen(const std::vector<int>& facets, bool verify, const std::string& out) {
  Mesh m;
  Text j;
  int passed = 0;
  if (int rc = report(geomink_maxgen(facets.data(), facets.size(), verify, &m.p, &j.p, &passed))) return rc;
  std::cout << j.str();
  if (!out.empty())
    if (int rc = report(geomink_mesh_write(m.p, out.c_str()))) return rc;
  if (verify && !passed) {
    std::cerr << "geomink: bound not attained\n";
    return kInvalid;
  }
  return 0;
}

int cmd_partition(const std::string& scene, const std::string& mode, const std::string& out, int threads) {
  geomink_assembly* a = nullptr;
  if (int rc = report(geomink_assembly_read(scene.c_str(), &a))) return rc;
  Text j;
  int interlocked = 0;
  geomink_status s = geomink_partition(a, mode == "all" ? GEOMINK_ALL : GEOMINK_FIRST, threads, &j.p, &interlocked);
  geomink_assembly_free(a);
  if (int rc = report(s)) return rc;
  std::cout << j.str();
  if (!out.empty() && !write_text(out, j.str())) return kInternal;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Minkowski sums, collision queries and assembly partitioning"};
  app.require_subcommand(1);
  app.set_version_flag("--version", geomink_version());

  std::string in, in2, out, u, w, mode = "first";
  bool counts = false, dump = false, stats = false, verify = false;
  std::vector<int> facets;
  int threads = -1;

  auto* gmap = app.add_subcommand("gmap", "Gaussian map of a polytope");
  gmap->add_option("input", in, "EOFF mesh")->required();
  gmap->add_flag("--counts", counts, "Print arrangement and primal counts as JSON");
  gmap->add_flag("--dump", dump, "Print the arrangement");

  auto* mink = app.add_subcommand("minkowski", "Minkowski sum of two polytopes");
  mink->add_option("a", in, "First EOFF mesh")->required();
  mink->add_option("b", in2, "Second EOFF mesh")->required();
  mink->add_option("-o,--output", out, "Write the sum as EOFF");
  mink->add_flag("--stats", stats, "Print counts and crossings as JSON");

  auto* coll = app.add_subcommand("collide", "Contact test of two placed polytopes");
  coll->add_option("a", in, "Moving polytope, EOFF")->required();
  coll->add_option("b", in2, "Obstacle, EOFF")->required();
  coll->add_option("--u", u, "Translation of a, x,y,z")->required();
  coll->add_option("--w", w, "Translation of b, x,y,z")->required();

  auto* hull = app.add_subcommand("hull", "Convex hull of a point list");
  hull->add_option("input", in, "Points, one per line")->required();
  hull->add_option("-o,--output", out, "Write the hull as EOFF");

  auto* maxgen = app.add_subcommand("maxgen", "Polytopes whose sum has the maximal facet count");
  maxgen->add_option("--facets", facets, "Facet count of a summand; repeat per summand")->required();
  maxgen->add_flag("--verify", verify, "Cross-check against a hull of pairwise vertex sums");
  maxgen->add_option("-o,--output", out, "Write the sum (or the single witness) as EOFF");

  auto* part = app.add_subcommand("partition", "Partition an assembly with one translation");
  part->add_option("scene", in, "Assembly scene")->required();
  part->add_option("--mode", mode, "first or all")->check(CLI::IsMember({"first", "all"}));
  part->add_option("--report", out, "Also write the JSON report here");
  part->add_option("--threads", threads, "Worker threads; default reads GEOMINK_THREADS");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  if (*gmap) return cmd_gmap(in, counts, dump);
  if (*mink) return cmd_minkowski(in, in2, out, stats);
  if (*coll) return cmd_collide(in, in2, u, w);
  if (*hull) return cmd_hull(in, out);
  if (*maxgen) return cmd_maxgen(facets, verify, out);
  if (*part) return cmd_partition(in, mode, out, threads);
  return kUsage;
}
