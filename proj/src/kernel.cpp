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

#include "kernel.hpp"

#include <cmath>
#include <sstream>

namespace geomink {

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::kOk: return "Ok";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kPrecondition: return "PreconditionViolation";
    case ErrorCode::kDegenerateArc: return "DegenerateArc";
    case ErrorCode::kPointNotInterior: return "PointNotInterior";
    case ErrorCode::kNotMergeable: return "NotMergeable";
    case ErrorCode::kAnchorMismatch: return "AnchorMismatch";
    case ErrorCode::kInvalidArc: return "InvalidArc";
    case ErrorCode::kInvalidMesh: return "InvalidMesh";
    case ErrorCode::kInvalidGaussianMap: return "InvalidGaussianMap";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kParamsRejected: return "ParamsRejected";
    case ErrorCode::kNonTermination: return "NonTermination";
    case ErrorCode::kInvalidFacetCount: return "InvalidFacetCount";
    case ErrorCode::kPointOutside: return "PointOutside";
    case ErrorCode::kDegenerateInput: return "DegenerateInput";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(error_name(code)) + ": " + what);
}

const char* sign_name(Sign s) {
  switch (s) {
    case Sign::NEGATIVE: return "NEGATIVE";
    case Sign::ZERO: return "ZERO";
    case Sign::POSITIVE: return "POSITIVE";
  }
  return "?";
}

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
Vec3 operator*(const Rational& s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
Vec3 operator/(const Vec3& a, const Rational& s) { return {a.x / s, a.y / s, a.z / s}; }
Vec3& operator+=(Vec3& a, const Vec3& b) {
  a.x += b.x;
  a.y += b.y;
  a.z += b.z;
  return a;
}

Rational dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Rational norm2(const Vec3& a) { return dot(a, a); }

Rational det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

Sign dot_sign(const Vec3& u, const Vec3& v) { return sign_of(dot(u, v)); }

Sign side_of_origin_plane(const Vec3& normal, const Vec3& p) {
  if (normal.is_zero()) fail(ErrorCode::kZeroVector, "ZeroNormal in side_of_origin_plane");
  return dot_sign(normal, p);
}

Sign orient3d(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  return sign_of(det3(b - a, c - a, d - a));
}

bool parallel(const Vec3& a, const Vec3& b) { return cross(a, b).is_zero(); }

bool codirectional(const Vec3& a, const Vec3& b) {
  return !a.is_zero() && !b.is_zero() && parallel(a, b) && sgn(dot(a, b)) > 0;
}

bool lex_less(const Vec3& a, const Vec3& b) {
  int c = cmp(a.x, b.x);
  if (c != 0) return c < 0;
  c = cmp(a.y, b.y);
  if (c != 0) return c < 0;
  return cmp(a.z, b.z) < 0;
}

Vec3 primitive_direction(const Vec3& v) {
  if (v.is_zero()) fail(ErrorCode::kZeroVector, "primitive_direction of zero vector");
  Integer l = 1;
  for (int i = 0; i < 3; ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v[i].get_den_mpz_t());
  Integer c[3];
  Integer g = 0;
  for (int i = 0; i < 3; ++i) {
    c[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c[i].get_mpz_t());
  }
  return {Rational(c[0] / g), Rational(c[1] / g), Rational(c[2] / g)};
}

namespace {

int cross2(const Vec2& a, const Vec2& b) { return sgn(a.x * b.y - a.y * b.x); }

// 0: same ray as s; 1: strictly within (0, pi); 2: opposite ray; 3: within (pi, 2pi).
int angle_class(const Vec2& s, const Vec2& v) {
  int c = cross2(s, v);
  if (c > 0) return 1;
  if (c < 0) return 3;
  return sgn(s.x * v.x + s.y * v.y) > 0 ? 0 : 2;
}

}  // namespace

bool ccw_strictly_before(const Vec2& start, const Vec2& probe, const Vec2& target) {
  auto zero = [](const Vec2& v) { return sgn(v.x) == 0 && sgn(v.y) == 0; };
  if (zero(start) || zero(probe) || zero(target))
    fail(ErrorCode::kZeroVector, "ccw_strictly_before");
  int cp = angle_class(start, probe);
  int ct = angle_class(start, target);
  if (cp == 0) return false;
  if (ct == 0) return true;  // target sits a full turn away
  if (cp != ct) return cp < ct;
  if (cp == 2) return false;
  return cross2(probe, target) > 0;
}

bool try_parse_rational(std::string_view s, Rational* out) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) return false;
  auto valid_int = [](std::string_view t, bool allow_sign) {
    size_t i = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  size_t slash = s.find('/');
  std::string num(s.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : std::string(s.substr(slash + 1));
  if (!valid_int(num, true) || !valid_int(den, false)) return false;
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) return false;
  *out = Rational(n, d);
  out->canonicalize();
  return true;
}

Rational parse_rational(std::string_view s) {
  Rational r;
  if (!try_parse_rational(s, &r)) fail(ErrorCode::kParse, "bad rational '" + std::string(s) + "'");
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Vec3& v) {
  return to_string(v.x) + " " + to_string(v.y) + " " + to_string(v.z);
}

double to_double(const Rational& r) { return r.get_d(); }

std::array<double, 3> to_doubles(const Vec3& v) { return {v.x.get_d(), v.y.get_d(), v.z.get_d()}; }

Rational rational_approx(double value, long max_den) {
  if (!std::isfinite(value)) fail(ErrorCode::kPrecondition, "rational_approx of non-finite value");
  // Convergents of the continued fraction of `value`.
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double x = value;
  for (int it = 0; it < 64; ++it) {
    double a = std::floor(x);
    long ai = static_cast<long>(a);
    long q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    long p2 = ai * p1 + p0;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double frac = x - a;
    if (frac < 1e-15) break;
    x = 1.0 / frac;
  }
  if (q1 == 0) return Rational(static_cast<long>(std::floor(value)));
  Rational r(p1, q1);
  r.canonicalize();
  return r;
}

}  // namespace geomink
