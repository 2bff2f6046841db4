#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tvb/rational.hpp"

namespace tvb {

// Affine hyperplane {x : <normal, x> = offset}.
struct Hyperplane {
  Vec normal;
  Rational offset;

  bool operator==(const Hyperplane&) const = default;

  std::size_t dimension() const { return normal.size(); }

  // <normal, p> - offset.
  Rational evaluate(std::span<const Rational> p) const;
  bool contains(std::span<const Rational> p) const { return evaluate(p).is_zero(); }
};

// Integer-primitive representation of the locus of a hyperplane:
// (a_1, ..., a_d, -c) scaled to coprime integers with the first nonzero
// entry positive.  Two hyperplanes have equal keys iff they describe the
// same point set (h and -h collapse to one key).
std::vector<mpz_class> canonical_key(const Hyperplane& h);

bool same_locus(const Hyperplane& a, const Hyperplane& b);

// d+1 classes of r hyperplanes each in R^d.
struct ColoredArrangement {
  std::size_t dimension = 0;
  std::size_t parts = 0;                             // r
  std::vector<std::vector<Hyperplane>> classes;      // size d+1, each size r
  std::vector<std::string> labels;                   // optional, size d+1 or empty

  std::size_t class_count() const { return classes.size(); }

  // Throws InputError unless: dimension >= 2, parts >= 2, exactly
  // dimension+1 classes of exactly `parts` hyperplanes, every normal of
  // length `dimension` and nonzero, labels empty or one per class.
  void validate() const;

  // All hyperplanes in class-major order: class 0 first, then class 1, ...
  std::vector<Hyperplane> union_hyperplanes() const;
};

}  // namespace tvb
