#include "gorder/predicates.hpp"

#include <map>
#include <utility>

#include "gorder/errors.hpp"

namespace gorder {

int orientation(const Point& p, const Point& q, const Point& r) {
  const Rational det = cross(sub(q, p), sub(r, p));
  return sgn(det);
}

Sign orient2d(const Point& p, const Point& q, const Point& r) {
  const int s = orientation(p, q, r);
  if (s == 0) {
    throw collinear_input("orient2d on collinear points " + point_to_string(p) + ", " +
                          point_to_string(q) + ", " + point_to_string(r));
  }
  return s > 0 ? Sign::CCW : Sign::CW;
}

bool point_on_segment(const Point& p, const Point& a, const Point& b) {
  if (orientation(a, b, p) != 0) return false;
  const Point ab = sub(b, a);
  const Rational t = dot(sub(p, a), ab);
  return t >= 0 && t <= squared_length(ab);
}

bool point_in_open_segment(const Point& p, const Point& a, const Point& b) {
  if (orientation(a, b, p) != 0) return false;
  const Point ab = sub(b, a);
  const Rational t = dot(sub(p, a), ab);
  return t > 0 && t < squared_length(ab);
}

bool segments_properly_intersect(const Point& a1, const Point& a2,
                                 const Point& b1, const Point& b2) {
  const int o1 = orientation(a1, a2, b1);
  const int o2 = orientation(a1, a2, b2);
  const int o3 = orientation(b1, b2, a1);
  const int o4 = orientation(b1, b2, a2);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

bool segments_intersect_closed(const Point& a1, const Point& a2,
                               const Point& b1, const Point& b2) {
  if (segments_properly_intersect(a1, a2, b1, b2)) return true;
  return point_on_segment(b1, a1, a2) || point_on_segment(b2, a1, a2) ||
         point_on_segment(a1, b1, b2) || point_on_segment(a2, b1, b2);
}

std::optional<Point> line_intersection(const Point& a1, const Point& a2,
                                       const Point& b1, const Point& b2) {
  const Point da = sub(a2, a1);
  const Point db = sub(b2, b1);
  const Rational den = cross(da, db);
  if (den == 0) return std::nullopt;
  const Rational t = cross(sub(b1, a1), db) / den;
  return add(a1, scale(t, da));
}

std::string GeneralPositionViolation::describe() const {
  std::string s = kind == Kind::Collinear ? "collinear points {" : "parallel pairs {";
  for (size_t i = 0; i < indices.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(indices[i]);
  }
  s += "}";
  return s;
}

namespace {

// Canonical slope key of the segment (p, q): direction vector reduced and
// sign-normalized, so parallel segments collide in a map.
std::pair<mpz_class, mpz_class> slope_key(const Point& p, const Point& q) {
  if (q.x == p.x) return {mpz_class(1), mpz_class(0)};  // vertical: reserved key
  Rational d = (q.y - p.y) / (q.x - p.x);               // canonical by mpq
  return {d.get_num(), d.get_den()};
}

}  // namespace

GeneralPositionReport validate_strong_general_position(const PointList& points,
                                                       const std::vector<bool>& mask) {
  std::vector<int> idx;
  idx.reserve(points.size());
  for (size_t i = 0; i < points.size(); ++i) {
    if (mask.empty() || (i < mask.size() && mask[i])) idx.push_back(static_cast<int>(i));
  }

  for (size_t i = 0; i < idx.size(); ++i) {
    for (size_t j = i + 1; j < idx.size(); ++j) {
      if (points[idx[i]] == points[idx[j]]) {
        throw duplicate_point("points " + std::to_string(idx[i]) + " and " +
                              std::to_string(idx[j]) + " coincide");
      }
    }
  }

  for (size_t i = 0; i < idx.size(); ++i) {
    for (size_t j = i + 1; j < idx.size(); ++j) {
      for (size_t k = j + 1; k < idx.size(); ++k) {
        if (orientation(points[idx[i]], points[idx[j]], points[idx[k]]) == 0) {
          return {GeneralPositionViolation{GeneralPositionViolation::Kind::Collinear,
                                           {idx[i], idx[j], idx[k]}}};
        }
      }
    }
  }

  // Parallel check over all pairs of index-disjoint segments. Grouping by
  // canonical slope gives the same exhaustive answer as comparing every pair
  // of pairs directly; shared-index collisions are collinearities and were
  // ruled out above.
  std::map<std::pair<mpz_class, mpz_class>, std::vector<std::pair<int, int>>> by_slope;
  for (size_t i = 0; i < idx.size(); ++i) {
    for (size_t j = i + 1; j < idx.size(); ++j) {
      by_slope[slope_key(points[idx[i]], points[idx[j]])].push_back({idx[i], idx[j]});
    }
  }
  for (const auto& [key, pairs] : by_slope) {
    for (size_t a = 0; a < pairs.size(); ++a) {
      for (size_t b = a + 1; b < pairs.size(); ++b) {
        const auto& [i, j] = pairs[a];
        const auto& [k, l] = pairs[b];
        if (i != k && i != l && j != k && j != l) {
          return {GeneralPositionViolation{GeneralPositionViolation::Kind::ParallelPairs,
                                           {i, j, k, l}}};
        }
      }
    }
  }
  return {};
}

}  // namespace gorder
