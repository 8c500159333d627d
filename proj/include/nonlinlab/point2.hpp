#ifndef NONLINLAB_POINT2_HPP
#define NONLINLAB_POINT2_HPP

#include <cmath>

namespace nonlinlab {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double c, Point2 p) { return {c * p.x, c * p.y}; }
  friend double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
  friend double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
  friend double norm(Point2 p) { return std::hypot(p.x, p.y); }
};

}  // namespace nonlinlab

#endif
