#include "nonlinlab/hull_property.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace nonlinlab {

HullReport check_hull_property(std::span<const TaggedPoint2> interior_images,
                               std::span<const Point2> boundary_images, double tol) {
  if (boundary_images.empty())
    throw std::invalid_argument("check_hull_property: boundary sample set is empty");
  if (tol < 0.0) throw std::invalid_argument("check_hull_property: tolerance must be >= 0");

  const ConvexPolygon hull = convex_hull_2d(boundary_images);
  HullReport report;
  report.tolerance = tol;
  report.interior_count = static_cast<int>(interior_images.size());
  report.boundary_count = static_cast<int>(boundary_images.size());

  for (const TaggedPoint2& s : interior_images) {
    const HullDistance hd = hull_distance(s.image, hull);
    report.max_violation = std::max(report.max_violation, hd.distance);
    if (hd.distance > tol) report.violations.push_back({s, hd.distance, hd.witness});
  }
  report.max_violation = std::max(report.max_violation, 0.0);
  report.satisfied = report.max_violation <= tol;

  std::sort(report.violations.begin(), report.violations.end(),
            [](const HullViolation& a, const HullViolation& b) {
              if (a.distance != b.distance) return a.distance > b.distance;
              return a.sample.index < b.sample.index;
            });
  return report;
}

double quasiconvex_sup_check(std::span<const Point2> interior_images,
                             std::span<const Point2> boundary_images, int family_size,
                             std::uint64_t seed) {
  if (family_size < 1) throw std::invalid_argument("quasiconvex_sup_check: family_size >= 1");
  if (interior_images.empty() || boundary_images.empty()) return 0.0;

  auto sup_linear = [](std::span<const Point2> pts, Point2 dir) {
    double s = -std::numeric_limits<double>::infinity();
    for (const Point2& p : pts) s = std::max(s, dot(dir, p));
    return s;
  };

  double worst = 0.0;
  const int fan = ((family_size + 3) / 4) * 4;
  for (int k = 0; k < fan; ++k) {
    const double ang = 2.0 * std::numbers::pi * k / fan;
    const Point2 dir{std::cos(ang), std::sin(ang)};
    worst = std::max(worst, sup_linear(interior_images, dir) - sup_linear(boundary_images, dir));
  }

  // Maxima of random linear pairs exercise genuinely quasi-convex members.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int k = 0; k < family_size; ++k) {
    const double a1 = angle(rng), a2 = angle(rng);
    const Point2 d1{std::cos(a1), std::sin(a1)}, d2{std::cos(a2), std::sin(a2)};
    auto sup_pairmax = [&](std::span<const Point2> pts) {
      double s = -std::numeric_limits<double>::infinity();
      for (const Point2& p : pts) s = std::max(s, std::max(dot(d1, p), dot(d2, p)));
      return s;
    };
    worst = std::max(worst, sup_pairmax(interior_images) - sup_pairmax(boundary_images));
  }
  return worst;
}

std::vector<SupportedPoint> support_probe(std::span<const TaggedPoint2> images, double tol) {
  if (images.size() < 3) throw std::invalid_argument("support_probe: need at least 3 points");

  std::vector<Point2> cloud;
  cloud.reserve(images.size());
  for (const auto& s : images) cloud.push_back(s.image);
  const ConvexPolygon hull = convex_hull_2d(cloud);

  if (tol < 0.0) {
    double diam = 0.0;
    for (const Point2& v : hull.vertices)
      for (const Point2& w : hull.vertices) diam = std::max(diam, norm(v - w));
    tol = 1e-9 * (1.0 + diam);
  }

  auto verified = [&](Point2 y0, Point2 dir) {
    double worst = 0.0;
    for (const Point2& y : cloud) worst = std::min(worst, dot(dir, y - y0));
    return worst >= -tol;  // dir attains its minimum over the cloud at y0
  };

  std::vector<SupportedPoint> out;
  for (const auto& s : images) {
    const HullDistance hd = hull_distance(s.image, hull);
    if (std::abs(hd.distance) > tol) continue;  // strictly interior

    // Candidate functionals: inward normal of the nearest edge, then the
    // direction toward the cloud centroid as a fallback for vertices.
    std::vector<Point2> candidates;
    candidates.push_back({-hd.witness.x, -hd.witness.y});
    if (hull.vertices.size() >= 3) {
      const auto& V = hull.vertices;
      for (size_t i = 0; i < V.size(); ++i) {
        if (norm(V[i] - s.image) <= tol) {
          // vertex: bisector of the two adjacent inward normals
          const Point2 prev = V[(i + V.size() - 1) % V.size()];
          const Point2 next = V[(i + 1) % V.size()];
          auto inward = [](Point2 a, Point2 b) -> Point2 {
            const Point2 n{-(b.y - a.y), b.x - a.x};
            const double l = norm(n);
            return l > 0 ? Point2{n.x / l, n.y / l} : Point2{1.0, 0.0};
          };
          const Point2 n1 = inward(prev, V[i]);
          const Point2 n2 = inward(V[i], next);
          const Point2 bis = n1 + n2;
          if (norm(bis) > 0) candidates.push_back({bis.x / norm(bis), bis.y / norm(bis)});
          break;
        }
      }
    }
    for (const Point2& dir : candidates) {
      if (verified(s.image, dir)) {
        out.push_back({s, dir});
        break;
      }
    }
  }
  return out;
}

}  // namespace nonlinlab
