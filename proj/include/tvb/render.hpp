#pragma once

#include <string>

#include "tvb/hyperplane.hpp"

namespace tvb {

struct RenderWindow {
  Rational xmin = Rational(-3);
  Rational xmax = Rational(3);
  Rational ymin = Rational(-3);
  Rational ymax = Rational(3);
};

// Draws a planar arrangement: class 0 red, class 1 green, class 2 blue,
// lines clipped exactly to the window, coincident lines drawn once with a
// multiplicity annotation.  Coordinates are emitted at a fixed 9 decimal
// digits (the only lossy step), so equal inputs give equal bytes.
// Throws InputError for dimension != 2 or an empty window.
std::string render_svg(const ColoredArrangement& arr, const RenderWindow& window = {});

}  // namespace tvb
