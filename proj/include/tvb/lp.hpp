#pragma once

#include <vector>

#include "tvb/rational.hpp"

namespace tvb {

struct FeasibilityResult {
  bool feasible = false;
  Vec x;  // a basic feasible solution when feasible
};

// Exact phase-1 simplex for {x >= 0 : rows . x = rhs}.  Bland's rule on
// both pivot choices, so the run is finite and deterministic.
FeasibilityResult solve_equality_feasibility(const std::vector<Vec>& rows, const Vec& rhs);

}  // namespace tvb
