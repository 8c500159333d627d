#include "nonlinlab/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace nonlinlab {

double ConvexPolygon::area() const {
  if (degenerate()) return 0.0;
  double s = 0.0;
  const size_t n = vertices.size();
  for (size_t i = 0; i < n; ++i) {
    const Point2& a = vertices[i];
    const Point2& b = vertices[(i + 1) % n];
    s += cross(a, b);
  }
  return 0.5 * s;
}

double orient2d(Point2 a, Point2 b, Point2 c) {
  const double detleft = (a.x - c.x) * (b.y - c.y);
  const double detright = (a.y - c.y) * (b.x - c.x);
  const double det = detleft - detright;
  // Filter constant ~ 3.33e-16 covers the rounding of the two products
  // and the subtraction.
  const double bound = 3.3306690738754716e-16 * (std::abs(detleft) + std::abs(detright));
  if (std::abs(det) > bound) return det;
  const long double dl =
      (static_cast<long double>(a.x) - c.x) * (static_cast<long double>(b.y) - c.y) -
      (static_cast<long double>(a.y) - c.y) * (static_cast<long double>(b.x) - c.x);
  if (dl > 0.0L) return 1.0;
  if (dl < 0.0L) return -1.0;
  return 0.0;
}

ConvexPolygon convex_hull_2d(std::span<const Point2> points) {
  if (points.empty()) throw std::invalid_argument("convex_hull_2d: empty input");
  for (const Point2& p : points)
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw std::invalid_argument("convex_hull_2d: non-finite point");

  std::vector<Point2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }),
            pts.end());

  ConvexPolygon hull;
  const size_t n = pts.size();
  if (n == 1) {
    hull.vertices = {pts[0]};
    return hull;
  }

  // Andrew's monotone chain; strict turns drop collinear interior points.
  std::vector<Point2> chain(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {  // lower
    while (k >= 2 && orient2d(chain[k - 2], chain[k - 1], pts[i]) <= 0.0) --k;
    chain[k++] = pts[i];
  }
  for (size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper
    while (k >= t && orient2d(chain[k - 2], chain[k - 1], pts[i]) <= 0.0) --k;
    chain[k++] = pts[i];
  }
  chain.resize(k - 1);  // last point repeats the first

  if (chain.size() <= 2) {
    hull.vertices = {pts.front(), pts.back()};  // collinear input: extreme segment
  } else {
    hull.vertices = std::move(chain);
  }
  return hull;
}

namespace {

struct SegmentProjection {
  double distance;
  Point2 closest;
};

SegmentProjection project_to_segment(Point2 p, Point2 a, Point2 b) {
  const Point2 ab = b - a;
  const double len2 = dot(ab, ab);
  double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const Point2 q = a + t * ab;
  return {norm(p - q), q};
}

Point2 unit_or(Point2 v, Point2 fallback) {
  const double n = norm(v);
  if (n > 0.0) return {v.x / n, v.y / n};
  return fallback;
}

}  // namespace

HullDistance hull_distance(Point2 p, const ConvexPolygon& hull) {
  const auto& V = hull.vertices;
  if (V.empty()) throw std::invalid_argument("hull_distance: empty hull");

  if (V.size() == 1) {
    const double d = norm(p - V[0]);
    return {d, unit_or(p - V[0], {1.0, 0.0}), V[0]};
  }
  if (V.size() == 2) {
    const auto pr = project_to_segment(p, V[0], V[1]);
    Point2 w = unit_or(p - pr.closest, unit_or({-(V[1].y - V[0].y), V[1].x - V[0].x}, {1.0, 0.0}));
    return {pr.distance, w, pr.closest};
  }

  bool inside = true;
  for (size_t i = 0; i < V.size(); ++i) {
    if (orient2d(V[i], V[(i + 1) % V.size()], p) < 0.0) {
      inside = false;
      break;
    }
  }

  double best = std::numeric_limits<double>::infinity();
  Point2 closest{};
  size_t best_edge = 0;
  for (size_t i = 0; i < V.size(); ++i) {
    const auto pr = project_to_segment(p, V[i], V[(i + 1) % V.size()]);
    if (pr.distance < best) {
      best = pr.distance;
      closest = pr.closest;
      best_edge = i;
    }
  }

  if (!inside) {
    return {best, unit_or(p - closest, {1.0, 0.0}), closest};
  }
  // Inside or on the boundary: signed distance is -dist(p, boundary); the
  // witness is the outward normal of the nearest edge.
  const Point2 a = V[best_edge], b = V[(best_edge + 1) % V.size()];
  const Point2 outward = unit_or({b.y - a.y, -(b.x - a.x)}, {1.0, 0.0});
  return {-best, outward, closest};
}

}  // namespace nonlinlab
