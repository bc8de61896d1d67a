#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gorder/predicates.hpp"
#include "gorder/rational.hpp"

namespace gorder {

// Closed vertex cycle in counterclockwise order, no repeated vertex.
struct SimplePolygon {
  PointList vertices;

  int size() const { return static_cast<int>(vertices.size()); }
  const Point& vertex(int i) const { return vertices[index(i)]; }
  int index(int i) const {
    const int n = size();
    return ((i % n) + n) % n;
  }
};

// Twice the signed area of the cycle (positive for counterclockwise).
Rational twice_signed_area(const PointList& cycle);

struct PolygonViolation {
  enum class Kind { TooFewVertices, RepeatedVertex, EdgeCross, EdgeOverlap, Orientation } kind;
  std::vector<int> indices;
  std::string describe() const;
};

struct PolygonValidation {
  std::optional<PolygonViolation> violation;
  bool ok() const { return !violation.has_value(); }
};

// Checks the SimplePolygon invariants. With auto_reverse set, a clockwise
// cycle is reversed in place instead of reported as an orientation violation.
PolygonValidation validate_simple(SimplePolygon& poly, bool auto_reverse = false);
PolygonValidation validate_simple(const SimplePolygon& poly);

struct PointLocation {
  enum class Kind { Interior, Boundary, Exterior } kind;
  // For Boundary: the edge (vertex(i), vertex(i+1)) containing the point, or
  // the vertex id when the point is a polygon vertex.
  int edge = -1;
  int vertex = -1;

  bool interior() const { return kind == Kind::Interior; }
  bool boundary() const { return kind == Kind::Boundary; }
  bool exterior() const { return kind == Kind::Exterior; }
};

// Exact classification by ray crossing.
PointLocation contains_point(const SimplePolygon& poly, const Point& p);

// Location of p relative to a closed chain that may touch itself but not
// properly cross (weakly simple). Interior means odd crossing parity.
PointLocation locate_in_closed_chain(const PointList& chain, const Point& p);

struct Triangulation {
  struct Triangle {
    int a, b, c;  // vertex indices, counterclockwise
  };
  std::vector<Triangle> triangles;
  // For each triangle, ids of triangles sharing an edge (dual graph).
  std::vector<std::vector<int>> dual_adjacency;
};

// Ear clipping with exact predicates. Deterministic: at every step the valid
// ear with the lowest original vertex index is clipped.
Triangulation triangulate(const SimplePolygon& poly);

// The unique simple path between triangles a and b in the dual tree, inclusive.
std::vector<int> dual_path(const Triangulation& tri, int a, int b);

// Interior angle classification along the cycle.
bool is_reflex_vertex(const SimplePolygon& poly, int i);
bool is_convex_vertex(const SimplePolygon& poly, int i);
std::vector<int> reflex_vertices(const SimplePolygon& poly);
std::vector<int> convex_vertices(const SimplePolygon& poly);

}  // namespace gorder
