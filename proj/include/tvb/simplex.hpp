#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "tvb/hyperplane.hpp"

namespace tvb {

struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Vertex list of the simplex spanned by d+1 hyperplanes.  When all of them
// pass through one point the list collapses to that single point and
// degenerate is set.  Vertices are pairwise distinct.
struct Simplex {
  std::vector<Vec> vertices;
  bool degenerate = false;
};

// Intersects every d-subset of the d+1 input hyperplanes.  Vertex i comes
// from omitting hyperplane i; exact duplicates are then merged keeping the
// first occurrence.  A singular d-subset raises ConstructionError naming
// the subset (cannot happen for colorful tuples in weak general position).
Simplex induced_simplex(std::span<const Hyperplane> tuple);

// First two coordinates of every vertex, duplicates merged.  The result is
// flagged degenerate when fewer than 3 distinct vertices survive.
Simplex project_e1e2(const Simplex& s);

}  // namespace tvb
