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

#include <string>
#include <vector>

#include "assembly.hpp"

namespace geomink {

// EOFF: "EOFF", then "V F", V lines of three rationals, F lines of
// "k i_0 ... i_{k-1}". Blank lines and '#' comments are ignored.
Mesh parse_mesh(const std::string& text, bool validate = true);
std::string format_mesh(const Mesh& m);
Mesh read_mesh(const std::string& path, bool validate = true);
void write_mesh(const Mesh& m, const std::string& path);

// Scene: "GEOMINK-ASM 1", part count, then per part "part NAME K" followed
// by K inline EOFF blocks.
Assembly parse_assembly(const std::string& text);
std::string format_assembly(const Assembly& a);
Assembly read_assembly(const std::string& path);
void write_assembly(const Assembly& a, const std::string& path);

// One point per line, three rationals separated by blanks or commas.
std::vector<Vec3> parse_points(const std::string& text);
std::vector<Vec3> read_points(const std::string& path);
// "x,y,z"
Vec3 parse_vec3(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& data);

}  // namespace geomink
