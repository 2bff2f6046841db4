#pragma once

#include <span>
#include <vector>

#include "tvb/hyperplane.hpp"
#include "tvb/rational.hpp"

namespace tvb {

// Nearest points of two convex hulls, with convex coefficients over the
// full vertex lists (zero outside the minimizing face).  dist_sq == 0 means
// the hulls meet and x == y is a common point.
struct NearestPair {
  Rational dist_sq;
  Vec x, y;
  std::vector<Rational> coeffs_x, coeffs_y;
};

// Exact squared distance from p to conv(vertices), by quadratic
// minimization over every face (vertex subsets).
Rational dist_sq_point_hull(std::span<const Rational> p, std::span<const Vec> vertices);

NearestPair nearest_pair_hulls(std::span<const Vec> v1, std::span<const Vec> v2);
Rational dist_sq_hull_hull(std::span<const Vec> v1, std::span<const Vec> v2);

// 0 when the hull touches or crosses h, otherwise the minimum over vertices
// of squared signed distance.
Rational dist_sq_hull_hyperplane(std::span<const Vec> vertices, const Hyperplane& h);

}  // namespace tvb
