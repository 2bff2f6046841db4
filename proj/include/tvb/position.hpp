#pragma once

#include <span>

#include "tvb/hyperplane.hpp"

namespace tvb {

// Every d hyperplanes chosen from pairwise distinct classes have linearly
// independent normals, so every cross-class d-fold intersection is a point.
bool weak_general_position(const ColoredArrangement& arr);

// Every d of the hyperplanes have independent normals and no point lies on
// d+1 of them.  Implies weak general position when applied to the union of
// a colored arrangement.
bool general_position(std::span<const Hyperplane> planes, std::size_t dimension);
bool general_position(const ColoredArrangement& arr);

}  // namespace tvb
