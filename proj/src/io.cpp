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

#include "io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace geomink {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

class Lines {
 public:
  explicit Lines(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int n = 0;
    while (std::getline(in, raw)) {
      ++n;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      std::istringstream ls(raw);
      Line l{n, {}};
      for (std::string tok; ls >> tok;) l.tokens.push_back(tok);
      if (!l.tokens.empty()) lines_.push_back(std::move(l));
    }
    last_ = n;
  }
  bool done() const { return pos_ >= lines_.size(); }
  const Line& next(const char* what) {
    if (done()) fail(ErrorCode::kParse, "line " + std::to_string(last_) + ": unexpected end of input, expected " + what);
    return lines_[pos_++];
  }

 private:
  std::vector<Line> lines_;
  size_t pos_ = 0;
  int last_ = 0;
};

[[noreturn]] void parse_error(int line, const std::string& msg) {
  fail(ErrorCode::kParse, "line " + std::to_string(line) + ": " + msg);
}

long parse_count(const Line& l, const std::string& tok) {
  size_t used = 0;
  long v = -1;
  try {
    v = std::stol(tok, &used);
  } catch (...) {
    used = 0;
  }
  if (used != tok.size() || v < 0) parse_error(l.number, "expected a non-negative integer, got '" + tok + "'");
  return v;
}

Rational parse_coord(const Line& l, const std::string& tok) {
  Rational r;
  if (!try_parse_rational(tok, &r)) parse_error(l.number, "malformed rational '" + tok + "'");
  return r;
}

Mesh parse_mesh_block(Lines& in, bool validate) {
  const Line& head = in.next("EOFF header");
  if (head.tokens.size() != 1 || head.tokens[0] != "EOFF") parse_error(head.number, "expected EOFF header");
  const Line& counts = in.next("vertex and facet counts");
  if (counts.tokens.size() != 2) parse_error(counts.number, "expected 'V F'");
  long nv = parse_count(counts, counts.tokens[0]), nf = parse_count(counts, counts.tokens[1]);
  Mesh m;
  std::vector<int> facet_line;
  for (long i = 0; i < nv; ++i) {
    const Line& l = in.next("a vertex");
    if (l.tokens.size() != 3) parse_error(l.number, "expected three coordinates");
    m.vertices.push_back(Vec3(parse_coord(l, l.tokens[0]), parse_coord(l, l.tokens[1]), parse_coord(l, l.tokens[2])));
  }
  for (long f = 0; f < nf; ++f) {
    const Line& l = in.next("a facet");
    long k = parse_count(l, l.tokens[0]);
    if (static_cast<long>(l.tokens.size()) != k + 1) parse_error(l.number, "facet size does not match its index count");
    std::vector<int> c;
    for (long i = 1; i <= k; ++i) {
      long idx = parse_count(l, l.tokens[i]);
      if (idx >= nv) parse_error(l.number, "vertex index " + std::to_string(idx) + " out of range");
      c.push_back(static_cast<int>(idx));
    }
    m.facets.push_back(std::move(c));
    facet_line.push_back(l.number);
  }
  if (validate) {
    try {
      validate_mesh(m);
    } catch (const Error& e) {
      std::string why = e.what();
      const std::string prefix = std::string(error_name(e.code())) + ": ";
      if (why.rfind(prefix, 0) == 0) why.erase(0, prefix.size());
      std::smatch f;
      if (std::regex_search(why, f, std::regex("facet ([0-9]+)"))) {
        size_t k = std::stoul(f[1]);
        if (k < facet_line.size()) why += " (line " + std::to_string(facet_line[k]) + ")";
      }
      fail(ErrorCode::kInvalidMesh, "mesh starting at line " + std::to_string(head.number) + ": " + why);
    }
  }
  return m;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::kIo, "cannot write " + path);
  out << data;
  if (!out) fail(ErrorCode::kIo, "write failed for " + path);
}

Mesh parse_mesh(const std::string& text, bool validate) {
  Lines in(text);
  Mesh m = parse_mesh_block(in, validate);
  if (!in.done()) parse_error(in.next("").number, "trailing content after mesh");
  return m;
}

std::string format_mesh(const Mesh& m) {
  std::ostringstream out;
  out << "EOFF\n" << m.vertices.size() << ' ' << m.facets.size() << '\n';
  for (const auto& v : m.vertices) out << to_string(v.x) << ' ' << to_string(v.y) << ' ' << to_string(v.z) << '\n';
  for (const auto& f : m.facets) {
    out << f.size();
    for (int i : f) out << ' ' << i;
    out << '\n';
  }
  return out.str();
}

Mesh read_mesh(const std::string& path, bool validate) { return parse_mesh(read_file(path), validate); }
void write_mesh(const Mesh& m, const std::string& path) { write_file(path, format_mesh(m)); }

Assembly parse_assembly(const std::string& text) {
  Lines in(text);
  const Line& head = in.next("scene header");
  if (head.tokens.size() != 2 || head.tokens[0] != "GEOMINK-ASM" || head.tokens[1] != "1")
    parse_error(head.number, "expected 'GEOMINK-ASM 1'");
  const Line& count = in.next("part count");
  if (count.tokens.size() != 1) parse_error(count.number, "expected the part count");
  long n = parse_count(count, count.tokens[0]);
  Assembly a;
  for (long p = 0; p < n; ++p) {
    const Line& l = in.next("a part header");
    if (l.tokens.size() != 3 || l.tokens[0] != "part") parse_error(l.number, "expected 'part NAME K'");
    a.names.push_back(l.tokens[1]);
    long k = parse_count(l, l.tokens[2]);
    if (k < 1) parse_error(l.number, "a part needs at least one sub-part");
    a.parts.emplace_back();
    for (long s = 0; s < k; ++s) a.parts.back().push_back(parse_mesh_block(in, true));
  }
  if (!in.done()) parse_error(in.next("").number, "trailing content after scene");
  return a;
}

std::string format_assembly(const Assembly& a) {
  std::ostringstream out;
  out << "GEOMINK-ASM 1\n" << a.size() << '\n';
  for (int p = 0; p < a.size(); ++p) {
    std::string name = p < static_cast<int>(a.names.size()) ? a.names[p] : "P" + std::to_string(p);
    out << "part " << name << ' ' << a.parts[p].size() << '\n';
    for (const auto& m : a.parts[p]) out << format_mesh(m);
  }
  return out.str();
}

Assembly read_assembly(const std::string& path) { return parse_assembly(read_file(path)); }
void write_assembly(const Assembly& a, const std::string& path) { write_file(path, format_assembly(a)); }

std::vector<Vec3> parse_points(const std::string& text) {
  std::string t = text;
  for (char& c : t)
    if (c == ',') c = ' ';
  Lines in(t);
  std::vector<Vec3> pts;
  while (!in.done()) {
    const Line& l = in.next("a point");
    if (l.tokens.size() != 3) parse_error(l.number, "expected three coordinates");
    pts.push_back(Vec3(parse_coord(l, l.tokens[0]), parse_coord(l, l.tokens[1]), parse_coord(l, l.tokens[2])));
  }
  return pts;
}

std::vector<Vec3> read_points(const std::string& path) { return parse_points(read_file(path)); }

Vec3 parse_vec3(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3) fail(ErrorCode::kParse, "expected x,y,z but got '" + text + "'");
  Vec3 v;
  for (int i = 0; i < 3; ++i) v[i] = parse_rational(parts[i]);
  return v;
}

}  // namespace geomink
