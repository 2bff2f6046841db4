#pragma once

#include <cstdint>
#include <stdexcept>

#include "tvb/verify.hpp"

namespace tvb {

struct PerturbBudgetExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// delta_sq is the squared perturbation margin of the input: the smallest
// hull-to-separator squared distance over all certified partition types.
// Any vertex motion strictly below it keeps every certificate valid.
struct PerturbationReport {
  ColoredArrangement perturbed;
  Rational delta_sq;
  Rational max_vertex_move_sq;
  unsigned attempts = 0;            // magnitudes tried, including the one that worked
  unsigned magnitude_exponent = 0;  // successful tilt scale is 1/2^exponent
  RefutationReport verification;    // full re-run on the perturbed arrangement
};

// Tilts every normal coordinate and offset by seeded random rationals of
// geometrically shrinking magnitude until the union is in general
// position, every cross-class vertex moved strictly less than delta, and a
// full re-verification still refutes every partition type.  Throws
// PerturbBudgetExhausted after `budget` magnitudes, InputError when the
// input itself is not refuted.
PerturbationReport perturb_to_general_position(const ColoredArrangement& arr,
                                               std::uint64_t seed, unsigned budget = 32);

}  // namespace tvb
