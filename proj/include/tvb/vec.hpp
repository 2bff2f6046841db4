#pragma once

#include <span>
#include <string>

#include "tvb/rational.hpp"

namespace tvb {

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Vec add(std::span<const Rational> a, std::span<const Rational> b);
Vec sub(std::span<const Rational> a, std::span<const Rational> b);
Vec scaled(std::span<const Rational> a, const Rational& s);
Rational norm_sq(std::span<const Rational> a);

// "(1, -1/2)", for error messages and logs only.
std::string vec_str(std::span<const Rational> a);

}  // namespace tvb
