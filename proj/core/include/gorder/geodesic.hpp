#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gorder/ordertype.hpp"
#include "gorder/polygon.hpp"

namespace gorder {

// A simple polygon together with a finite point set strictly inside it; the
// sites and the polygon vertices are jointly in strong general position.
struct Scene {
  SimplePolygon polygon;
  PointList sites;
  Triangulation tri;  // built once at construction

  int site_count() const { return static_cast<int>(sites.size()); }
};

// Validates and assembles a Scene: simple counterclockwise polygon, every
// site strictly interior, strong general position over sites and vertices.
Scene make_scene(SimplePolygon polygon, PointList sites, bool auto_reverse = false);

// Shortest polygonal path between two points of the polygon, stored as its
// vertex sequence. Interior waypoints are reflex vertices of the polygon.
struct Geodesic {
  PointList waypoints;

  const Point& source() const { return waypoints.front(); }
  const Point& target() const { return waypoints.back(); }
  bool is_segment() const { return waypoints.size() <= 2; }
};

// Funnel over the triangulation sleeve; orientation predicates only, no
// distance is ever compared. Accepts any points of the closed polygon
// (sites, interior probes, or polygon vertices); throws PointOutsidePolygon.
Geodesic shortest_path(const Scene& scene, const Point& s, const Point& t);

// Independent oracle: visibility graph over {s, t} and the reflex vertices,
// Euclidean weights, single-source search. Distance sums are compared by
// interval arithmetic with escalating precision (128 up to 2048 bits);
// unresolved comparisons raise PrecisionExhausted.
Geodesic shortest_path_oracle(const Scene& scene, const Point& s, const Point& t);

// Geodesic triple orientation: the Euclidean orientation at the first
// divergence of the paths p->q and p->r. DegenerateDivergence when one path
// is a prefix of the other.
Sign geodesic_orient_points(const Scene& scene, const Point& p, const Point& q, const Point& r);

// Caches geodesics between site pairs within one evaluation context.
class GeodesicCache {
 public:
  explicit GeodesicCache(const Scene& scene) : scene_(scene) {}
  const Geodesic& between_sites(int i, int j);
  const Scene& scene() const { return scene_; }

 private:
  const Scene& scene_;
  std::map<std::pair<int, int>, Geodesic> memo_;
};

// Geodesic orientation of a site triple (0-based site indices).
Sign geodesic_orient(const Scene& scene, int p, int q, int r);
Sign geodesic_orient(GeodesicCache& cache, int p, int q, int r);

// Site indices on the geodesic hull boundary, in clockwise order starting at
// the extreme site of smallest index. With fewer than three sites the hull
// degenerates; all sites are returned and the result is flagged.
struct ExtremeSetResult {
  std::vector<int> indices;
  bool degenerate = false;
};
ExtremeSetResult extreme_set(const Scene& scene);

// Boundary of the geodesic hull: the closed (weakly simple) chain obtained by
// concatenating the geodesics between consecutive extreme sites.
struct HullBoundary {
  PointList chain;
  std::vector<int> extreme_sites;  // clockwise, matching extreme_set
};
HullBoundary hull_boundary(const Scene& scene);

// Geodesic order type: geodesic_orient over every ascending site triple.
// Chirotope indices are 1-based; site i maps to chirotope element i+1.
Chirotope geodesic_chirotope(const Scene& scene);

}  // namespace gorder
