#pragma once

#include <cstdint>

#include "tvb/hyperplane.hpp"

namespace tvb {

// Tilt coefficient for the mixed-normal classes of the d >= 3 family.  The
// refutation argument needs 8 (d-2)^2 eps^2 < 1, the squared rational form
// of eps < 1 / (2 sqrt(2) (d-2)).
struct EpsilonChoice {
  Rational value;

  static bool bound_holds(std::size_t d, const Rational& eps);
  // Throws InputError when the bound fails or eps <= 0.
  static EpsilonChoice checked(std::size_t d, Rational eps);
  // 1 / (4 (d-2)), comfortably below the bound for every d >= 3.
  static EpsilonChoice default_for(std::size_t d);
};

// d=2, classes red/green/blue:
//   X1 = {x=1 (r-1 times), x=-1}
//   X2 = {y=-1 (r-1 times), y=1}
//   X3 = {x+y=0 (r-1 times), x-y=0}
ColoredArrangement planar_counterexample(std::size_t r);

// d >= 3: X_i = {x_i=1 (r-1 times), x_i=-1} for i=1..d, and X_{d+1} holds
// r-1 copies of x_1+x_2+eps(x_3+...+x_d)=0 plus one copy with -x_2.
ColoredArrangement highdim_counterexample(std::size_t d, std::size_t r,
                                          const EpsilonChoice& eps);
ColoredArrangement highdim_counterexample(std::size_t d, std::size_t r);

// Distinct random integer hyperplanes, rejection-sampled until the union
// passes general_position (hence weak general position).  Deterministic in
// the seed.
ColoredArrangement random_arrangement(std::size_t d, std::size_t r, std::uint64_t seed);

// Random points with small integer coordinates, pairwise distinct.
std::vector<Vec> random_points(std::size_t d, std::size_t count, std::uint64_t seed);

}  // namespace tvb
