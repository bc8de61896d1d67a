#include "gorder/polygon.hpp"

#include <algorithm>
#include <deque>
#include <list>

#include "gorder/errors.hpp"

namespace gorder {

Rational twice_signed_area(const PointList& cycle) {
  Rational acc = 0;
  const size_t n = cycle.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& p = cycle[i];
    const Point& q = cycle[(i + 1) % n];
    acc += p.x * q.y - q.x * p.y;
  }
  return acc;
}

std::string PolygonViolation::describe() const {
  std::string s;
  switch (kind) {
    case Kind::TooFewVertices: return "fewer than 3 vertices";
    case Kind::RepeatedVertex: s = "repeated vertex {"; break;
    case Kind::EdgeCross: s = "edges cross {"; break;
    case Kind::EdgeOverlap: s = "adjacent edges overlap {"; break;
    case Kind::Orientation: return "clockwise orientation (expected counterclockwise)";
  }
  for (size_t i = 0; i < indices.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(indices[i]);
  }
  return s + "}";
}

PolygonValidation validate_simple(SimplePolygon& poly, bool auto_reverse) {
  const int n = poly.size();
  if (n < 3) {
    throw too_few_vertices("polygon with " + std::to_string(n) + " vertices");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (poly.vertices[i] == poly.vertices[j]) {
        return {PolygonViolation{PolygonViolation::Kind::RepeatedVertex, {i, j}}};
      }
    }
  }
  // Adjacent edges may share only their common endpoint: a backtracking turn
  // (collinear with positive dot) folds one edge onto the other.
  for (int i = 0; i < n; ++i) {
    const Point& a = poly.vertex(i - 1);
    const Point& b = poly.vertex(i);
    const Point& c = poly.vertex(i + 1);
    if (orientation(a, b, c) == 0 && dot(sub(a, b), sub(c, b)) > 0) {
      return {PolygonViolation{PolygonViolation::Kind::EdgeOverlap,
                               {poly.index(i - 1), i, poly.index(i + 1)}}};
    }
  }
  // Non-adjacent edges must be disjoint.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_intersect_closed(poly.vertex(i), poly.vertex(i + 1),
                                    poly.vertex(j), poly.vertex(j + 1))) {
        return {PolygonViolation{PolygonViolation::Kind::EdgeCross, {i, j}}};
      }
    }
  }
  if (twice_signed_area(poly.vertices) < 0) {
    if (!auto_reverse) {
      return {PolygonViolation{PolygonViolation::Kind::Orientation, {}}};
    }
    std::reverse(poly.vertices.begin(), poly.vertices.end());
  }
  return {};
}

PolygonValidation validate_simple(const SimplePolygon& poly) {
  SimplePolygon copy = poly;
  return validate_simple(copy, false);
}

namespace {

// Crossing parity of a leftward horizontal ray from p, exact. Half-open edge
// rule: an edge contributes iff its endpoints straddle p.y with the lower
// endpoint included, which counts rays through vertices exactly once. The
// caller has already ruled out p lying on the chain.
bool crossing_parity_inside(const PointList& chain, const Point& p) {
  const size_t n = chain.size();
  bool inside = false;
  for (size_t i = 0; i < n; ++i) {
    const Point& a = chain[i];
    const Point& b = chain[(i + 1) % n];
    const bool a_below = a.y <= p.y;
    const bool b_below = b.y <= p.y;
    if (a_below == b_below) continue;
    // x coordinate of the edge at height p.y
    const Rational t = (p.y - a.y) / (b.y - a.y);
    const Rational x_int = a.x + t * (b.x - a.x);
    if (x_int < p.x) inside = !inside;
  }
  return inside;
}

}  // namespace

PointLocation contains_point(const SimplePolygon& poly, const Point& p) {
  const int n = poly.size();
  for (int i = 0; i < n; ++i) {
    if (poly.vertices[i] == p) return {PointLocation::Kind::Boundary, -1, i};
  }
  for (int i = 0; i < n; ++i) {
    if (point_in_open_segment(p, poly.vertex(i), poly.vertex(i + 1))) {
      return {PointLocation::Kind::Boundary, i, -1};
    }
  }
  return crossing_parity_inside(poly.vertices, p)
             ? PointLocation{PointLocation::Kind::Interior, -1, -1}
             : PointLocation{PointLocation::Kind::Exterior, -1, -1};
}

PointLocation locate_in_closed_chain(const PointList& chain, const Point& p) {
  const size_t n = chain.size();
  for (size_t i = 0; i < n; ++i) {
    if (chain[i] == p) return {PointLocation::Kind::Boundary, -1, static_cast<int>(i)};
    if (point_in_open_segment(p, chain[i], chain[(i + 1) % n])) {
      return {PointLocation::Kind::Boundary, static_cast<int>(i), -1};
    }
  }
  return crossing_parity_inside(chain, p)
             ? PointLocation{PointLocation::Kind::Interior, -1, -1}
             : PointLocation{PointLocation::Kind::Exterior, -1, -1};
}

namespace {

bool point_in_closed_triangle(const Point& p, const Point& a, const Point& b, const Point& c) {
  const int o1 = orientation(a, b, p);
  const int o2 = orientation(b, c, p);
  const int o3 = orientation(c, a, p);
  return o1 >= 0 && o2 >= 0 && o3 >= 0;
}

}  // namespace

Triangulation triangulate(const SimplePolygon& poly) {
  const int n = poly.size();
  Triangulation out;
  std::list<int> ring;
  for (int i = 0; i < n; ++i) ring.push_back(i);

  auto is_ear = [&](std::list<int>::iterator it) {
    auto prev = (it == ring.begin()) ? std::prev(ring.end()) : std::prev(it);
    auto next = std::next(it);
    if (next == ring.end()) next = ring.begin();
    const Point& a = poly.vertices[*prev];
    const Point& b = poly.vertices[*it];
    const Point& c = poly.vertices[*next];
    if (orientation(a, b, c) <= 0) return false;
    for (int other : ring) {
      if (other == *prev || other == *it || other == *next) continue;
      if (point_in_closed_triangle(poly.vertices[other], a, b, c)) return false;
    }
    return true;
  };

  while (ring.size() > 3) {
    // lowest-index valid ear
    std::list<int>::iterator ear = ring.end();
    for (auto it = ring.begin(); it != ring.end(); ++it) {
      if (is_ear(it)) {
        if (ear == ring.end() || *it < *ear) ear = it;
      }
    }
    if (ear == ring.end()) {
      throw internal_error("ear clipping found no ear; polygon not simple?");
    }
    auto prev = (ear == ring.begin()) ? std::prev(ring.end()) : std::prev(ear);
    auto next = std::next(ear);
    if (next == ring.end()) next = ring.begin();
    out.triangles.push_back({*prev, *ear, *next});
    ring.erase(ear);
  }
  auto it = ring.begin();
  const int a = *it++;
  const int b = *it++;
  const int c = *it;
  out.triangles.push_back({a, b, c});

  // dual adjacency: triangles sharing an (unordered) edge
  const int t = static_cast<int>(out.triangles.size());
  out.dual_adjacency.assign(t, {});
  auto shares_edge = [&](const Triangulation::Triangle& x, const Triangulation::Triangle& y) {
    int shared = 0;
    for (int u : {x.a, x.b, x.c}) {
      for (int v : {y.a, y.b, y.c}) {
        if (u == v) ++shared;
      }
    }
    return shared == 2;
  };
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      if (shares_edge(out.triangles[i], out.triangles[j])) {
        out.dual_adjacency[i].push_back(j);
        out.dual_adjacency[j].push_back(i);
      }
    }
  }
  return out;
}

std::vector<int> dual_path(const Triangulation& tri, int a, int b) {
  const int t = static_cast<int>(tri.triangles.size());
  if (a < 0 || a >= t || b < 0 || b >= t) {
    throw validation_error("triangle id out of range");
  }
  if (a == b) return {a};
  std::vector<int> parent(t, -1);
  std::deque<int> queue{a};
  parent[a] = a;
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    if (cur == b) break;
    for (int next : tri.dual_adjacency[cur]) {
      if (parent[next] == -1) {
        parent[next] = cur;
        queue.push_back(next);
      }
    }
  }
  if (parent[b] == -1) throw internal_error("dual graph disconnected");
  std::vector<int> path;
  for (int cur = b; cur != a; cur = parent[cur]) path.push_back(cur);
  path.push_back(a);
  std::reverse(path.begin(), path.end());
  return path;
}

bool is_reflex_vertex(const SimplePolygon& poly, int i) {
  return orientation(poly.vertex(i - 1), poly.vertex(i), poly.vertex(i + 1)) < 0;
}

bool is_convex_vertex(const SimplePolygon& poly, int i) {
  return orientation(poly.vertex(i - 1), poly.vertex(i), poly.vertex(i + 1)) > 0;
}

std::vector<int> reflex_vertices(const SimplePolygon& poly) {
  std::vector<int> out;
  for (int i = 0; i < poly.size(); ++i) {
    if (is_reflex_vertex(poly, i)) out.push_back(i);
  }
  return out;
}

std::vector<int> convex_vertices(const SimplePolygon& poly) {
  std::vector<int> out;
  for (int i = 0; i < poly.size(); ++i) {
    if (is_convex_vertex(poly, i)) out.push_back(i);
  }
  return out;
}

}  // namespace gorder
