#ifndef NONLINLAB_HULL_HPP
#define NONLINLAB_HULL_HPP

#include <span>
#include <vector>

#include "nonlinlab/point2.hpp"

namespace nonlinlab {

/// Planar convex polygon: counter-clockwise vertices with strictly convex
/// turns. Hulls of collinear inputs degenerate to a segment (2 vertices)
/// or a single point; those are first-class values here.
struct ConvexPolygon {
  std::vector<Point2> vertices;

  bool degenerate() const { return vertices.size() < 3; }
  double area() const;  // shoelace; 0 for degenerate hulls
};

/// Sign of the turn a->b->c: > 0 left, < 0 right, 0 collinear.
/// Error-bounded double evaluation with a long-double fallback near zero.
double orient2d(Point2 a, Point2 b, Point2 c);

/// Monotone-chain hull. Output vertices are a subset of the inputs.
ConvexPolygon convex_hull_2d(std::span<const Point2> points);

struct HullDistance {
  double distance = 0.0;  // <= 0 inside/on, > 0 outside
  Point2 witness{1.0, 0.0};  // unit separating direction when outside
  Point2 closest{0.0, 0.0};  // nearest boundary point
};

/// Signed distance from p to the hull with a separating witness: when
/// distance > 0 the unit vector w satisfies dot(w,p) - max_y dot(w,y) equal
/// to the distance.
HullDistance hull_distance(Point2 p, const ConvexPolygon& hull);

}  // namespace nonlinlab

#endif
