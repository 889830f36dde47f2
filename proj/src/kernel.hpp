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

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace geomink {

// mpq_class canonicalizes after every operation, so equality is structural.
using Rational = mpq_class;
using Integer = mpz_class;

enum class ErrorCode {
  kOk = 0,
  kZeroVector,
  kPrecondition,
  kDegenerateArc,
  kPointNotInterior,
  kNotMergeable,
  kAnchorMismatch,
  kInvalidArc,
  kInvalidMesh,
  kInvalidGaussianMap,
  kParse,
  kIo,
  kParamsRejected,
  kNonTermination,
  kInvalidFacetCount,
  kPointOutside,
  kDegenerateInput,
  kInternal,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

enum class Sign : int { NEGATIVE = -1, ZERO = 0, POSITIVE = 1 };
inline constexpr Sign SMALLER = Sign::NEGATIVE;
inline constexpr Sign EQUAL = Sign::ZERO;
inline constexpr Sign LARGER = Sign::POSITIVE;

inline Sign to_sign(int s) {
  return s < 0 ? Sign::NEGATIVE : (s > 0 ? Sign::POSITIVE : Sign::ZERO);
}
inline Sign sign_of(const Rational& r) { return to_sign(sgn(r)); }
inline Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
inline Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}
const char* sign_name(Sign s);

struct Vec3 {
  Rational x, y, z;

  Vec3() : x(0), y(0), z(0) {}
  Vec3(Rational a, Rational b, Rational c)
      : x(std::move(a)), y(std::move(b)), z(std::move(c)) {}
  Vec3(long a, long b, long c) : x(a), y(b), z(c) {}
  Vec3(int a, int b, int c) : x(a), y(b), z(c) {}

  const Rational& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  Rational& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

  bool is_zero() const { return sgn(x) == 0 && sgn(y) == 0 && sgn(z) == 0; }
  bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }
  bool operator!=(const Vec3& o) const { return !(*this == o); }
};

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a);
Vec3 operator*(const Rational& s, const Vec3& a);
Vec3 operator/(const Vec3& a, const Rational& s);
Vec3& operator+=(Vec3& a, const Vec3& b);

Rational dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
Rational norm2(const Vec3& a);
Rational det3(const Vec3& a, const Vec3& b, const Vec3& c);

Sign dot_sign(const Vec3& u, const Vec3& v);
Sign side_of_origin_plane(const Vec3& normal, const Vec3& p);
// Sign of det(b - a, c - a, d - a).
Sign orient3d(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

bool parallel(const Vec3& a, const Vec3& b);
// Same ray from the origin (positive multiple).
bool codirectional(const Vec3& a, const Vec3& b);

// Total order on exact coordinates, used for deterministic containers.
bool lex_less(const Vec3& a, const Vec3& b);
struct Vec3Less {
  bool operator()(const Vec3& a, const Vec3& b) const { return lex_less(a, b); }
};

// Positive multiple of `v` with coprime integer coordinates.
Vec3 primitive_direction(const Vec3& v);

struct Vec2 {
  Rational x, y;
};
// CCW sweep from `start` reaches `probe` strictly before `target`.
bool ccw_strictly_before(const Vec2& start, const Vec2& probe, const Vec2& target);

Rational parse_rational(std::string_view s);
bool try_parse_rational(std::string_view s, Rational* out);
std::string to_string(const Rational& r);
std::string to_string(const Vec3& v);
double to_double(const Rational& r);
std::array<double, 3> to_doubles(const Vec3& v);

// Nearest rational with denominator at most max_den (continued fractions).
Rational rational_approx(double value, long max_den);

}  // namespace geomink
