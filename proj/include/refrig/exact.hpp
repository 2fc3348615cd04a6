#pragma once

// Exact integer/rational scalars and planar vectors.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace refrig {

using Integer = mpz_class;
using Rational = mpq_class;

struct Vec2 {
  Rational x;
  Rational y;

  Vec2() = default;
  Vec2(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {
    x.canonicalize();
    y.canonicalize();
  }
  Vec2(long x_, long y_) : x(x_), y(y_) {}

  bool is_zero() const { return sgn(x) == 0 && sgn(y) == 0; }

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
  friend Vec2 operator*(const Rational& s, const Vec2& a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
};

inline Rational dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

// Counter-clockwise quarter turn: (x, y) -> (-y, x).
inline Vec2 perp(const Vec2& a) { return {-a.y, a.x}; }

// Reflection through the y-axis.
inline Vec2 mirror(const Vec2& a) { return {-a.x, a.y}; }

inline bool parallel(const Vec2& a, const Vec2& b) { return sgn(cross(a, b)) == 0; }

// "p/q" with q >= 1, always printing the denominator.
std::string to_fraction_string(const Rational& r);

// Accepts "p/q", "p" and optional sign; throws std::invalid_argument.
Rational parse_rational(const std::string& text);

// Smallest positive integer multiple of `row` that is integral, divided by the gcd of its entries.
std::vector<Integer> primitive_integer_row(const std::vector<Rational>& row);

double to_double(const Rational& r);

}  // namespace refrig
