#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tvb/hyperplane.hpp"
#include "tvb/rational.hpp"

namespace tvb {

// Exact solve of the square system A x = b.  Returns std::nullopt when A is
// singular (no unique solution).  Fraction-free elimination on
// denominator-cleared rows keeps intermediate growth polynomial.
std::optional<Vec> solve_rational_system(const std::vector<Vec>& a, const Vec& b);

// Unique common point of exactly d hyperplanes in R^d, if it exists.
// Throws InputError when the count or dimensions are inconsistent.
std::optional<Vec> solve_linear(std::span<const Hyperplane> planes);

std::size_t rank(const std::vector<Vec>& rows);
bool rows_independent(const std::vector<Vec>& rows);

}  // namespace tvb
