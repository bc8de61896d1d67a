#include "gorder/geodesic.hpp"

#include <algorithm>

#include "gorder/errors.hpp"

namespace gorder {

Scene make_scene(SimplePolygon polygon, PointList sites, bool auto_reverse) {
  const auto pv = validate_simple(polygon, auto_reverse);
  if (!pv.ok()) {
    throw validation_error("polygon not simple: " + pv.violation->describe());
  }
  for (size_t i = 0; i < sites.size(); ++i) {
    if (!contains_point(polygon, sites[i]).interior()) {
      throw validation_error("site " + std::to_string(i) + " not interior");
    }
  }
  PointList all = sites;
  all.insert(all.end(), polygon.vertices.begin(), polygon.vertices.end());
  const auto gp = validate_strong_general_position(all);
  if (!gp.ok()) {
    throw validation_error("not in strong general position: " + gp.violation->describe());
  }
  Scene scene;
  scene.tri = triangulate(polygon);
  scene.polygon = std::move(polygon);
  scene.sites = std::move(sites);
  return scene;
}

namespace {

bool in_closed_triangle(const Point& p, const Point& a, const Point& b, const Point& c) {
  return orientation(a, b, p) >= 0 && orientation(b, c, p) >= 0 && orientation(c, a, p) >= 0;
}

int locate_triangle(const Scene& scene, const Point& p) {
  for (size_t i = 0; i < scene.tri.triangles.size(); ++i) {
    const auto& t = scene.tri.triangles[i];
    if (in_closed_triangle(p, scene.polygon.vertices[t.a], scene.polygon.vertices[t.b],
                           scene.polygon.vertices[t.c])) {
      return static_cast<int>(i);
    }
  }
  throw point_outside_polygon("point " + point_to_string(p) + " not in polygon");
}

struct Portal {
  Point left;
  Point right;
};

// Portal across the shared edge when leaving triangle `from` for its
// neighbor. If the shared pair appears as the directed edge (u -> v) in the
// counterclockwise triangle being exited, v is on the walker's left.
Portal portal_between(const Scene& scene, const Triangulation::Triangle& from,
                      const Triangulation::Triangle& to) {
  const int fv[3] = {from.a, from.b, from.c};
  const int tv[3] = {to.a, to.b, to.c};
  auto in_to = [&](int x) { return x == tv[0] || x == tv[1] || x == tv[2]; };
  for (int e = 0; e < 3; ++e) {
    const int u = fv[e];
    const int v = fv[(e + 1) % 3];
    if (in_to(u) && in_to(v)) {
      return {scene.polygon.vertices[v], scene.polygon.vertices[u]};
    }
  }
  throw internal_error("triangles share no edge");
}

// Drop interior waypoints the path passes through without turning.
void canonicalize(PointList& pts) {
  if (pts.size() < 3) return;
  PointList out;
  out.push_back(pts.front());
  for (size_t i = 1; i + 1 < pts.size(); ++i) {
    if (orientation(out.back(), pts[i], pts[i + 1]) != 0) {
      out.push_back(pts[i]);
    }
  }
  out.push_back(pts.back());
  pts = std::move(out);
}

}  // namespace

Geodesic shortest_path(const Scene& scene, const Point& s, const Point& t) {
  if (s == t) {
    // location check still applies
    locate_triangle(scene, s);
    return Geodesic{{s}};
  }
  const int ts = locate_triangle(scene, s);
  const int tt = locate_triangle(scene, t);
  const std::vector<int> sleeve = dual_path(scene.tri, ts, tt);

  std::vector<Portal> portals;
  portals.push_back({s, s});
  for (size_t i = 0; i + 1 < sleeve.size(); ++i) {
    portals.push_back(
        portal_between(scene, scene.tri.triangles[sleeve[i]], scene.tri.triangles[sleeve[i + 1]]));
  }
  portals.push_back({t, t});

  PointList path{s};
  Point apex = s, lb = s, rb = s;
  size_t apex_idx = 0, left_idx = 0, right_idx = 0;

  auto area = [](const Point& a, const Point& b, const Point& c) { return orientation(a, b, c); };

  for (size_t i = 1; i < portals.size(); ++i) {
    const Point& pl = portals[i].left;
    const Point& pr = portals[i].right;

    // right side: pr tightens the funnel when it is not to the right of rb
    if (area(apex, rb, pr) >= 0) {
      if (apex == rb || area(apex, lb, pr) < 0) {
        rb = pr;
        right_idx = i;
      } else {
        // right bound sweeps past the left bound: left bound becomes apex
        if (path.back() != lb) path.push_back(lb);
        apex = lb;
        apex_idx = left_idx;
        rb = apex;
        lb = apex;
        right_idx = apex_idx;
        left_idx = apex_idx;
        i = apex_idx;  // restart scan after the apex portal
        continue;
      }
    }
    // left side: pl tightens when it is not to the left of lb
    if (area(apex, lb, pl) <= 0) {
      if (apex == lb || area(apex, rb, pl) > 0) {
        lb = pl;
        left_idx = i;
      } else {
        if (path.back() != rb) path.push_back(rb);
        apex = rb;
        apex_idx = right_idx;
        rb = apex;
        lb = apex;
        right_idx = apex_idx;
        left_idx = apex_idx;
        i = apex_idx;
        continue;
      }
    }
  }
  if (path.back() != t) path.push_back(t);
  canonicalize(path);
  return Geodesic{std::move(path)};
}

namespace {

// First index at which the waypoint sequences differ.
size_t divergence_index(const PointList& v, const PointList& u) {
  const size_t m = std::min(v.size(), u.size());
  for (size_t i = 0; i < m; ++i) {
    if (v[i] != u[i]) return i;
  }
  return m;
}

Sign orient_at_divergence(const Geodesic& to_q, const Geodesic& to_r) {
  const PointList& v = to_q.waypoints;
  const PointList& u = to_r.waypoints;
  const size_t i = divergence_index(v, u);
  if (i == 0) throw internal_error("geodesics from a common point diverge at index 0");
  if (i >= v.size() || i >= u.size()) {
    throw degenerate_divergence(
        "one geodesic is a prefix of the other; strong general position violated");
  }
  return orient2d(v[i - 1], v[i], u[i]);
}

}  // namespace

Sign geodesic_orient_points(const Scene& scene, const Point& p, const Point& q, const Point& r) {
  if (p == q || p == r || q == r) {
    throw validation_error("geodesic orientation of non-distinct points");
  }
  const Geodesic to_q = shortest_path(scene, p, q);
  const Geodesic to_r = shortest_path(scene, p, r);
  return orient_at_divergence(to_q, to_r);
}

const Geodesic& GeodesicCache::between_sites(int i, int j) {
  if (i == j) throw validation_error("geodesic between a site and itself");
  // store one orientation, flip on demand
  const bool flip = i > j;
  const auto key = flip ? std::make_pair(j, i) : std::make_pair(i, j);
  auto it = memo_.find(key);
  if (it == memo_.end()) {
    Geodesic g = shortest_path(scene_, scene_.sites[key.first], scene_.sites[key.second]);
    it = memo_.emplace(key, std::move(g)).first;
  }
  if (!flip) return it->second;
  auto rev_key = std::make_pair(j, -1 - i);  // reversed copies live under a reserved key
  auto rit = memo_.find(rev_key);
  if (rit == memo_.end()) {
    Geodesic rev = it->second;
    std::reverse(rev.waypoints.begin(), rev.waypoints.end());
    rit = memo_.emplace(rev_key, std::move(rev)).first;
  }
  return rit->second;
}

Sign geodesic_orient(GeodesicCache& cache, int p, int q, int r) {
  const int n = cache.scene().site_count();
  if (p < 0 || q < 0 || r < 0 || p >= n || q >= n || r >= n || p == q || p == r || q == r) {
    throw validation_error("geodesic_orient needs three distinct site indices");
  }
  return orient_at_divergence(cache.between_sites(p, q), cache.between_sites(p, r));
}

Sign geodesic_orient(const Scene& scene, int p, int q, int r) {
  GeodesicCache cache(scene);
  return geodesic_orient(cache, p, q, r);
}

namespace {

// p is extreme iff some q has every other site to the left of the geodesic
// p -> q.
bool is_extreme_site(GeodesicCache& cache, int p) {
  const int n = cache.scene().site_count();
  for (int q = 0; q < n; ++q) {
    if (q == p) continue;
    bool all_ccw = true;
    for (int r = 0; r < n && all_ccw; ++r) {
      if (r == p || r == q) continue;
      if (geodesic_orient(cache, p, q, r) != Sign::CCW) all_ccw = false;
    }
    if (all_ccw) return true;
  }
  return false;
}

// unique successor of p on the counterclockwise hull walk
int hull_successor(GeodesicCache& cache, int p) {
  const int n = cache.scene().site_count();
  int found = -1;
  for (int q = 0; q < n; ++q) {
    if (q == p) continue;
    bool all_ccw = true;
    for (int r = 0; r < n && all_ccw; ++r) {
      if (r == p || r == q) continue;
      if (geodesic_orient(cache, p, q, r) != Sign::CCW) all_ccw = false;
    }
    if (all_ccw) {
      if (found != -1) throw internal_error("hull successor not unique");
      found = q;
    }
  }
  if (found == -1) throw internal_error("extreme site has no hull successor");
  return found;
}

}  // namespace

ExtremeSetResult extreme_set(const Scene& scene) {
  const int n = scene.site_count();
  if (n < 3) {
    ExtremeSetResult res;
    res.degenerate = true;
    for (int i = 0; i < n; ++i) res.indices.push_back(i);
    return res;
  }
  GeodesicCache cache(scene);

  int start = -1;
  for (int p = 0; p < n && start == -1; ++p) {
    if (is_extreme_site(cache, p)) start = p;
  }
  if (start == -1) throw internal_error("no extreme site found");

  // counterclockwise gift-wrapping walk
  std::vector<int> ccw{start};
  for (int cur = hull_successor(cache, start); cur != start; cur = hull_successor(cache, cur)) {
    ccw.push_back(cur);
    if (static_cast<int>(ccw.size()) > n) throw internal_error("hull walk does not close");
  }

  // cross-check against the definitional test
  std::vector<bool> on_walk(n, false);
  for (int i : ccw) on_walk[i] = true;
  for (int p = 0; p < n; ++p) {
    if (on_walk[p] != is_extreme_site(cache, p)) {
      throw internal_error("hull walk disagrees with extremeness test at site " +
                           std::to_string(p));
    }
  }

  // clockwise output, anchored at the smallest extreme index (= start)
  ExtremeSetResult res;
  res.indices.push_back(ccw[0]);
  for (size_t i = ccw.size(); i-- > 1;) res.indices.push_back(ccw[i]);
  return res;
}

HullBoundary hull_boundary(const Scene& scene) {
  const ExtremeSetResult ext = extreme_set(scene);
  if (ext.degenerate || ext.indices.size() < 3) {
    throw unsupported("hull boundary needs at least 3 extreme sites");
  }
  GeodesicCache cache(scene);
  HullBoundary hull;
  hull.extreme_sites = ext.indices;
  const size_t k = ext.indices.size();
  for (size_t i = 0; i < k; ++i) {
    const Geodesic& g = cache.between_sites(ext.indices[i], ext.indices[(i + 1) % k]);
    for (size_t w = 0; w + 1 < g.waypoints.size(); ++w) hull.chain.push_back(g.waypoints[w]);
  }
  // every non-extreme site lies strictly inside the chain
  std::vector<bool> extreme(scene.site_count(), false);
  for (int i : ext.indices) extreme[i] = true;
  for (int i = 0; i < scene.site_count(); ++i) {
    if (extreme[i]) continue;
    if (!locate_in_closed_chain(hull.chain, scene.sites[i]).interior()) {
      throw internal_error("non-extreme site " + std::to_string(i) + " not inside hull chain");
    }
  }
  return hull;
}

Chirotope geodesic_chirotope(const Scene& scene) {
  const int n = scene.site_count();
  if (n < 3) throw validation_error("chirotope needs at least 3 sites");
  GeodesicCache cache(scene);
  std::vector<Sign> signs;
  signs.reserve(n * (n - 1) * (n - 2) / 6);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) signs.push_back(geodesic_orient(cache, i, j, k));
  return Chirotope(n, std::move(signs));
}

}  // namespace gorder
