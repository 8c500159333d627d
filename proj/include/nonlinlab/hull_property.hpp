#ifndef NONLINLAB_HULL_PROPERTY_HPP
#define NONLINLAB_HULL_PROPERTY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nonlinlab/hull.hpp"
#include "nonlinlab/point2.hpp"

namespace nonlinlab {

/// Image point with a caller-supplied domain label (for example the
/// parameter value or node index it came from).
struct TaggedPoint2 {
  Point2 image;
  double tag = 0.0;
  int index = 0;
};

struct HullViolation {
  TaggedPoint2 sample;
  double distance = 0.0;
  Point2 witness{1.0, 0.0};
};

/// Discrete surrogate of the hull containment check: interior and boundary
/// are finite caller-labeled samples, so the verdict certifies the sampled
/// sets at the stated tolerance only.
struct HullReport {
  bool satisfied = true;
  double max_violation = 0.0;  // >= 0; clamped at 0 when everything is inside
  double tolerance = 0.0;
  std::vector<HullViolation> violations;  // sorted by decreasing distance
  int interior_count = 0;
  int boundary_count = 0;
};

HullReport check_hull_property(std::span<const TaggedPoint2> interior_images,
                               std::span<const Point2> boundary_images, double tol);

/// Worst positive gap sup_A(psi) - sup_B(psi) over a deterministic family
/// of quasi-convex test functions: linear functionals on a uniform angle
/// fan (fan size rounded up to a multiple of 4 so the axis directions are
/// hit exactly) plus seeded maxima of random linear pairs. Returns 0 when
/// no member has a positive gap.
double quasiconvex_sup_check(std::span<const Point2> interior_images,
                             std::span<const Point2> boundary_images, int family_size,
                             std::uint64_t seed = 0x5eed);

struct SupportedPoint {
  TaggedPoint2 sample;
  Point2 direction{1.0, 0.0};  // unit functional minimized at the sample
};

/// Image points lying on the hull of the whole cloud, each with a verified
/// supporting direction. tol < 0 selects 1e-9 * (1 + cloud diameter).
std::vector<SupportedPoint> support_probe(std::span<const TaggedPoint2> images, double tol = -1.0);

}  // namespace nonlinlab

#endif
