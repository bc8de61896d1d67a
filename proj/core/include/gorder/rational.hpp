#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace gorder {

// Arbitrary-precision rational. GMP keeps arithmetic results canonical
// (positive denominator, coprime); values built from raw integer pairs are
// canonicalized on entry in rational_from_parts / parse_rational.
using Rational = mpq_class;

Rational rational_from_parts(const mpz_class& num, const mpz_class& den);

// Accepts "42", "-7", "3/4", "-22/7". Canonical form on return.
Rational parse_rational(const std::string& text);

// Canonical form: plain integer when the denominator is 1, "p/q" otherwise.
std::string rational_to_string(const Rational& q);

struct Point {
  Rational x;
  Rational y;

  Point() = default;
  Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
  Point(long px, long py) : x(px), y(py) {}

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
};

std::string point_to_string(const Point& p);

// Two-valued orientation sign. Collinear triples are rejected before a Sign
// is ever produced, so there is no third value.
enum class Sign : int8_t { CW = -1, CCW = 1 };

inline Sign negate(Sign s) { return s == Sign::CCW ? Sign::CW : Sign::CCW; }
inline const char* to_string(Sign s) { return s == Sign::CCW ? "CCW" : "CW"; }

using PointList = std::vector<Point>;

}  // namespace gorder
