#pragma once

#include <span>
#include <vector>

#include "tvb/distance.hpp"
#include "tvb/hyperplane.hpp"

namespace tvb {

// Strict separator between two hulls.  hull1_side is the sign of
// <normal, v> - offset on every vertex of hull 1; hull 2 carries the
// opposite sign.  margin_sq is the squared minimum distance from either
// hull to the separator.
struct SeparationCertificate {
  Hyperplane separator;
  Rational margin_sq;
  int hull1_side = 0;
};

// A common point written as a convex combination of each hull's vertices.
struct IntersectionWitness {
  Vec point;
  std::vector<Rational> coeffs1, coeffs2;
};

struct HullsResult {
  bool intersect = false;
  IntersectionWitness witness;        // set when intersect
  SeparationCertificate certificate;  // set when disjoint
  Rational pair_dist_sq;              // squared hull-to-hull distance (0 when intersect)
};

// Exact decision: do conv(v1) and conv(v2) share a point?  Touching counts
// as intersecting.  Decided by rational linear feasibility of the
// convex-combination system; the disjoint branch derives the certificate
// from the exact nearest pair, whose bisector maximizes the margin.
HullsResult hulls_intersect(std::span<const Vec> v1, std::span<const Vec> v2);

struct CommonPointResult {
  bool feasible = false;
  Vec point;
  std::vector<std::vector<Rational>> coefficients;  // per hull, over its vertices
};

// One point contained in every hull simultaneously, if it exists.
CommonPointResult common_point(const std::vector<std::vector<Vec>>& hulls);

bool certificate_valid(const SeparationCertificate& c, std::span<const Vec> v1,
                       std::span<const Vec> v2);
bool witness_valid(const IntersectionWitness& w, std::span<const Vec> v1,
                   std::span<const Vec> v2);

}  // namespace tvb
