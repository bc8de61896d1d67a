#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gorder/rational.hpp"

namespace gorder {

// ---- vector helpers -------------------------------------------------------

inline Rational cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
inline Rational dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }
inline Point sub(const Point& a, const Point& b) { return Point(a.x - b.x, a.y - b.y); }
inline Point add(const Point& a, const Point& b) { return Point(a.x + b.x, a.y + b.y); }
inline Point scale(const Rational& s, const Point& a) { return Point(s * a.x, s * a.y); }
// 90-degree counterclockwise rotation.
inline Point perp(const Point& a) { return Point(-a.y, a.x); }
inline Rational squared_length(const Point& a) { return a.x * a.x + a.y * a.y; }
inline Rational squared_distance(const Point& a, const Point& b) { return squared_length(sub(a, b)); }

// Signed-area sign of the triangle pqr: +1 counterclockwise, -1 clockwise,
// 0 collinear. Exact.
int orientation(const Point& p, const Point& q, const Point& r);

// Two-valued orientation; throws CollinearInput when the determinant is zero.
Sign orient2d(const Point& p, const Point& q, const Point& r);

// True iff p lies on the closed segment [a, b].
bool point_on_segment(const Point& p, const Point& a, const Point& b);

// True iff p lies strictly inside the open segment (a, b).
bool point_in_open_segment(const Point& p, const Point& a, const Point& b);

// True iff the open segments (a1,a2) and (b1,b2) cross at a single point
// interior to both. Endpoint touches and collinear overlaps do not count.
bool segments_properly_intersect(const Point& a1, const Point& a2,
                                 const Point& b1, const Point& b2);

// True iff the closed segments share at least one point.
bool segments_intersect_closed(const Point& a1, const Point& a2,
                               const Point& b1, const Point& b2);

// Intersection point of the lines through (a1,a2) and (b1,b2).
// Empty when the lines are parallel.
std::optional<Point> line_intersection(const Point& a1, const Point& a2,
                                       const Point& b1, const Point& b2);

// ---- strong general position ----------------------------------------------

struct GeneralPositionViolation {
  enum class Kind { Collinear, ParallelPairs } kind;
  std::vector<int> indices;  // 3 indices for Collinear, 4 (i,j,k,l) for ParallelPairs
  std::string describe() const;
};

struct GeneralPositionReport {
  std::optional<GeneralPositionViolation> violation;
  bool ok() const { return !violation.has_value(); }
};

// Checks that no three points are collinear and that no two segments spanned
// by index-disjoint pairs are parallel. `mask`, when non-empty, restricts the
// check to the flagged indices. Throws DuplicatePoint on repeated inputs.
GeneralPositionReport validate_strong_general_position(
    const PointList& points, const std::vector<bool>& mask = {});

}  // namespace gorder
