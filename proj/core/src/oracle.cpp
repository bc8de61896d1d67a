#include <mpfr.h>

#include <algorithm>
#include <vector>

#include "gorder/errors.hpp"
#include "gorder/geodesic.hpp"

namespace gorder {

namespace {

constexpr mpfr_prec_t kStartPrecision = 128;
constexpr mpfr_prec_t kMaxPrecision = 2048;

// Sum of square roots of the given rationals, rounded in the given direction.
void sqrt_sum(mpfr_t out, const std::vector<Rational>& values, mpfr_rnd_t rnd,
              mpfr_prec_t prec) {
  mpfr_set_prec(out, prec);
  mpfr_set_zero(out, 1);
  mpfr_t term;
  mpfr_init2(term, prec);
  for (const Rational& v : values) {
    mpfr_set_q(term, v.get_mpq_t(), rnd);
    mpfr_sqrt(term, term, rnd);
    mpfr_add(out, out, term, rnd);
  }
  mpfr_clear(term);
}

// Compares sum(sqrt(a)) with sum(sqrt(b)); the entries are squared lengths.
// Identical multisets are stripped first, so equality is decided exactly;
// remaining sums are separated by interval evaluation with doubling
// precision. -1, 0, +1 as usual; PrecisionExhausted at the cap.
int compare_sqrt_sums(std::vector<Rational> a, std::vector<Rational> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<Rational> ra, rb;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++i, ++j;
    } else if (a[i] < b[j]) {
      ra.push_back(a[i++]);
    } else {
      rb.push_back(b[j++]);
    }
  }
  for (; i < a.size(); ++i) ra.push_back(a[i]);
  for (; j < b.size(); ++j) rb.push_back(b[j]);

  if (ra.empty() && rb.empty()) return 0;
  if (ra.empty()) return -1;
  if (rb.empty()) return 1;

  mpfr_t a_lo, a_hi, b_lo, b_hi;
  mpfr_inits2(kStartPrecision, a_lo, a_hi, b_lo, b_hi, static_cast<mpfr_ptr>(nullptr));
  int result = 0;
  bool resolved = false;
  for (mpfr_prec_t prec = kStartPrecision; prec <= kMaxPrecision; prec *= 2) {
    sqrt_sum(a_lo, ra, MPFR_RNDD, prec);
    sqrt_sum(a_hi, ra, MPFR_RNDU, prec);
    sqrt_sum(b_lo, rb, MPFR_RNDD, prec);
    sqrt_sum(b_hi, rb, MPFR_RNDU, prec);
    if (mpfr_cmp(a_hi, b_lo) < 0) {
      result = -1;
      resolved = true;
      break;
    }
    if (mpfr_cmp(b_hi, a_lo) < 0) {
      result = 1;
      resolved = true;
      break;
    }
  }
  mpfr_clears(a_lo, a_hi, b_lo, b_hi, static_cast<mpfr_ptr>(nullptr));
  if (!resolved) {
    throw precision_exhausted("path length comparison unresolved at " +
                              std::to_string(kMaxPrecision) + " bits (near-tie input)");
  }
  return result;
}

// The open segment (a, b) stays within the closed polygon iff it crosses no
// edge properly, contains no vertex in its interior, and any interior sample
// is not exterior. With those crossings excluded the open segment lies in one
// closed region, so the midpoint decides.
bool segment_inside(const SimplePolygon& poly, const Point& a, const Point& b) {
  const int n = poly.size();
  for (int e = 0; e < n; ++e) {
    if (segments_properly_intersect(a, b, poly.vertex(e), poly.vertex(e + 1))) return false;
  }
  for (const Point& v : poly.vertices) {
    if (v != a && v != b && point_in_open_segment(v, a, b)) return false;
  }
  const Point mid(((a.x + b.x) / 2), ((a.y + b.y) / 2));
  return !contains_point(poly, mid).exterior();
}

}  // namespace

Geodesic shortest_path_oracle(const Scene& scene, const Point& s, const Point& t) {
  if (contains_point(scene.polygon, s).exterior()) {
    throw point_outside_polygon("source " + point_to_string(s) + " outside polygon");
  }
  if (contains_point(scene.polygon, t).exterior()) {
    throw point_outside_polygon("target " + point_to_string(t) + " outside polygon");
  }
  if (s == t) return Geodesic{{s}};

  PointList nodes{s, t};
  for (int i : reflex_vertices(scene.polygon)) nodes.push_back(scene.polygon.vertices[i]);
  const int m = static_cast<int>(nodes.size());

  std::vector<std::vector<bool>> visible(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (nodes[i] == nodes[j]) continue;  // s or t may coincide with a reflex vertex
      const bool vis = segment_inside(scene.polygon, nodes[i], nodes[j]);
      visible[i][j] = visible[j][i] = vis;
    }
  }

  // Dijkstra with lazy exact comparisons; distances are multisets of squared
  // edge lengths.
  using Length = std::vector<Rational>;
  std::vector<Length> dist(m);
  std::vector<bool> have_dist(m, false), done(m, false);
  std::vector<int> parent(m, -1);
  dist[0] = {};
  have_dist[0] = true;

  for (int round = 0; round < m; ++round) {
    int best = -1;
    for (int v = 0; v < m; ++v) {
      if (done[v] || !have_dist[v]) continue;
      if (best == -1 || compare_sqrt_sums(dist[v], dist[best]) < 0) best = v;
    }
    if (best == -1) break;
    done[best] = true;
    if (best == 1) break;
    for (int v = 0; v < m; ++v) {
      if (done[v] || !visible[best][v]) continue;
      Length candidate = dist[best];
      candidate.push_back(squared_distance(nodes[best], nodes[v]));
      if (!have_dist[v] || compare_sqrt_sums(candidate, dist[v]) < 0) {
        dist[v] = std::move(candidate);
        have_dist[v] = true;
        parent[v] = best;
      }
    }
  }
  if (!done[1]) {
    throw internal_error("oracle found no path; polygon interior should be connected");
  }

  PointList path;
  for (int cur = 1; cur != -1; cur = parent[cur]) path.push_back(nodes[cur]);
  std::reverse(path.begin(), path.end());

  // drop interior waypoints passed without a turn
  PointList out;
  out.push_back(path.front());
  for (size_t i = 1; i + 1 < path.size(); ++i) {
    if (orientation(out.back(), path[i], path[i + 1]) != 0) out.push_back(path[i]);
  }
  out.push_back(path.back());
  return Geodesic{std::move(out)};
}

}  // namespace gorder
