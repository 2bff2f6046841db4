#include "tvb/constructions.hpp"

#include <random>
#include <set>
#include <string>

#include "tvb/position.hpp"

namespace tvb {

bool EpsilonChoice::bound_holds(std::size_t d, const Rational& eps) {
  if (d < 3) return false;
  Rational k(static_cast<long>(8 * (d - 2) * (d - 2)));
  return k * eps.squared() < Rational(1);
}

EpsilonChoice EpsilonChoice::checked(std::size_t d, Rational eps) {
  if (eps.sign() <= 0) throw InputError("epsilon must be positive");
  if (!bound_holds(d, eps))
    throw InputError("epsilon " + eps.str() + " violates 8(d-2)^2 eps^2 < 1 for d = " +
                     std::to_string(d));
  return EpsilonChoice{std::move(eps)};
}

EpsilonChoice EpsilonChoice::default_for(std::size_t d) {
  if (d < 3) throw InputError("epsilon choice needs d >= 3");
  return checked(d, Rational(1, static_cast<int>(4 * (d - 2))));
}

ColoredArrangement planar_counterexample(std::size_t r) {
  if (r < 2) throw InputError("planar construction needs r >= 2");
  ColoredArrangement arr;
  arr.dimension = 2;
  arr.parts = r;
  arr.labels = {"red", "green", "blue"};
  arr.classes.resize(3);

  const Hyperplane x_pos{{Rational(1), Rational(0)}, Rational(1)};
  const Hyperplane x_neg{{Rational(1), Rational(0)}, Rational(-1)};
  const Hyperplane y_neg{{Rational(0), Rational(1)}, Rational(-1)};
  const Hyperplane y_pos{{Rational(0), Rational(1)}, Rational(1)};
  const Hyperplane diag_sum{{Rational(1), Rational(1)}, Rational(0)};
  const Hyperplane diag_diff{{Rational(1), Rational(-1)}, Rational(0)};

  // Majority copies first.  The green majority must sit at y = +1: with it
  // at y = -1 the partition {x=1, y=-1, x=y}, {x=1, y=1, x=-y},
  // {x=-1, y=-1, x=-y} has pairwise-intersecting triangles for r >= 3,
  // while every disjointness case below hinges on the leftover vertices
  // after choosing (-1,-1) or (-1,1) being forced to (1,1).
  for (std::size_t i = 0; i + 1 < r; ++i) {
    arr.classes[0].push_back(x_pos);
    arr.classes[1].push_back(y_pos);
    arr.classes[2].push_back(diag_sum);
  }
  arr.classes[0].push_back(x_neg);
  arr.classes[1].push_back(y_neg);
  arr.classes[2].push_back(diag_diff);
  return arr;
}

ColoredArrangement highdim_counterexample(std::size_t d, std::size_t r,
                                          const EpsilonChoice& eps) {
  if (d < 3) throw InputError("high-dimensional construction needs d >= 3");
  if (r < 2) throw InputError("high-dimensional construction needs r >= 2");
  if (!EpsilonChoice::bound_holds(d, eps.value))
    throw InputError("epsilon " + eps.value.str() + " violates the bound for d = " +
                     std::to_string(d));

  ColoredArrangement arr;
  arr.dimension = d;
  arr.parts = r;
  arr.classes.resize(d + 1);

  for (std::size_t i = 0; i < d; ++i) {
    Vec normal(d, Rational(0));
    normal[i] = Rational(1);
    for (std::size_t k = 0; k + 1 < r; ++k)
      arr.classes[i].push_back({normal, Rational(1)});
    arr.classes[i].push_back({normal, Rational(-1)});
  }

  Vec mixed_sum(d, eps.value);
  mixed_sum[0] = Rational(1);
  mixed_sum[1] = Rational(1);
  Vec mixed_diff = mixed_sum;
  mixed_diff[1] = Rational(-1);
  for (std::size_t k = 0; k + 1 < r; ++k)
    arr.classes[d].push_back({mixed_sum, Rational(0)});
  arr.classes[d].push_back({mixed_diff, Rational(0)});
  return arr;
}

ColoredArrangement highdim_counterexample(std::size_t d, std::size_t r) {
  return highdim_counterexample(d, r, EpsilonChoice::default_for(d));
}

namespace {

// Uniform-ish integer in [-9, 9] from raw engine output; avoids
// distribution classes whose streams differ across standard libraries.
long small_int(std::mt19937_64& g) { return static_cast<long>(g() % 19) - 9; }

Hyperplane random_hyperplane(std::size_t d, std::mt19937_64& g) {
  while (true) {
    Vec normal(d);
    bool nonzero = false;
    for (auto& a : normal) {
      a = Rational(small_int(g));
      if (!a.is_zero()) nonzero = true;
    }
    if (!nonzero) continue;
    return {std::move(normal), Rational(small_int(g))};
  }
}

}  // namespace

ColoredArrangement random_arrangement(std::size_t d, std::size_t r, std::uint64_t seed) {
  if (d < 2 || r < 2) throw InputError("random arrangement needs d >= 2 and r >= 2");
  std::mt19937_64 g(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    ColoredArrangement arr;
    arr.dimension = d;
    arr.parts = r;
    arr.classes.assign(d + 1, {});
    std::set<std::vector<mpz_class>> seen;
    bool distinct = true;
    for (std::size_t c = 0; c < d + 1 && distinct; ++c) {
      for (std::size_t i = 0; i < r; ++i) {
        Hyperplane h = random_hyperplane(d, g);
        if (!seen.insert(canonical_key(h)).second) {
          distinct = false;
          break;
        }
        arr.classes[c].push_back(std::move(h));
      }
    }
    if (!distinct) continue;
    if (general_position(arr)) return arr;
  }
  throw InputError("could not sample a general-position arrangement for this seed");
}

std::vector<Vec> random_points(std::size_t d, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 g(seed);
  std::vector<Vec> pts;
  std::set<std::vector<std::string>> seen;
  while (pts.size() < count) {
    Vec p(d);
    for (auto& x : p) x = Rational(small_int(g));
    std::vector<std::string> key;
    key.reserve(d);
    for (const auto& x : p) key.push_back(x.str());
    if (seen.insert(std::move(key)).second) pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace tvb
