#include <doctest.h>

#include <set>

#include "tvb/constructions.hpp"
#include "tvb/position.hpp"

using tvb::EpsilonChoice;
using tvb::Hyperplane;
using tvb::Rational;

TEST_CASE("planar family layout") {
  auto arr = tvb::planar_counterexample(3);
  arr.validate();
  CHECK(arr.dimension == 2);
  CHECK(arr.parts == 3);
  CHECK(arr.labels == std::vector<std::string>{"red", "green", "blue"});
  REQUIRE(arr.classes.size() == 3);
  for (const auto& cls : arr.classes) CHECK(cls.size() == 3);

  const Hyperplane x_pos{{Rational(1), Rational(0)}, Rational(1)};
  const Hyperplane x_neg{{Rational(1), Rational(0)}, Rational(-1)};
  const Hyperplane y_pos{{Rational(0), Rational(1)}, Rational(1)};
  const Hyperplane y_neg{{Rational(0), Rational(1)}, Rational(-1)};
  const Hyperplane diag_sum{{Rational(1), Rational(1)}, Rational(0)};
  const Hyperplane diag_diff{{Rational(1), Rational(-1)}, Rational(0)};
  CHECK(arr.classes[0] == std::vector<Hyperplane>{x_pos, x_pos, x_neg});
  CHECK(arr.classes[1] == std::vector<Hyperplane>{y_pos, y_pos, y_neg});
  CHECK(arr.classes[2] == std::vector<Hyperplane>{diag_sum, diag_sum, diag_diff});

  CHECK(tvb::weak_general_position(arr));
  CHECK_THROWS_AS(tvb::planar_counterexample(1), tvb::InputError);
}

TEST_CASE("high-dimensional family layout") {
  auto arr = tvb::highdim_counterexample(3, 2);
  arr.validate();
  CHECK(arr.dimension == 3);
  CHECK(arr.parts == 2);
  REQUIRE(arr.classes.size() == 4);
  // Majority of class i sits at x_i = 1, the stray copy at x_i = -1.
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = 0; k < 2; ++k) {
      const auto& h = arr.classes[i][k];
      for (std::size_t c = 0; c < 3; ++c)
        CHECK(h.normal[c] == (c == i ? Rational(1) : Rational(0)));
      CHECK(h.offset == (k + 1 < 2 ? Rational(1) : Rational(-1)));
    }
  }
  // Mixed class: x1 + x2 + eps*x3 = 0 (majority), x1 - x2 + eps*x3 = 0 (stray).
  Rational eps = EpsilonChoice::default_for(3).value;
  CHECK(eps == Rational(1, 4));
  CHECK(arr.classes[3][0].normal == tvb::Vec{Rational(1), Rational(1), eps});
  CHECK(arr.classes[3][1].normal == tvb::Vec{Rational(1), Rational(-1), eps});
  CHECK(arr.classes[3][0].offset == Rational(0));
  CHECK(arr.classes[3][1].offset == Rational(0));

  CHECK(tvb::weak_general_position(arr));
  CHECK_THROWS_AS(tvb::highdim_counterexample(2, 2), tvb::InputError);
}

TEST_CASE("epsilon bound is the squared form of 1/(2*sqrt(2)*(d-2))") {
  // d=3: threshold is 1/(2*sqrt(2)) ~ 0.35355; 5/14 ~ 0.35714 crosses it.
  CHECK(EpsilonChoice::bound_holds(3, Rational(1, 4)));
  CHECK(EpsilonChoice::bound_holds(3, Rational(5, 15)));
  CHECK_FALSE(EpsilonChoice::bound_holds(3, Rational(5, 14)));
  CHECK_FALSE(EpsilonChoice::bound_holds(3, Rational(1, 2)));
  // d=4: threshold is 1/(4*sqrt(2)) ~ 0.17678.
  CHECK(EpsilonChoice::bound_holds(4, Rational(1, 8)));
  CHECK_FALSE(EpsilonChoice::bound_holds(4, Rational(18, 100)));

  CHECK_THROWS_AS(EpsilonChoice::checked(3, Rational(5, 14)), tvb::InputError);
  CHECK_THROWS_AS(EpsilonChoice::checked(3, Rational(0)), tvb::InputError);
  CHECK_THROWS_AS(EpsilonChoice::checked(3, Rational(-1, 4)), tvb::InputError);
  CHECK(EpsilonChoice::checked(3, Rational(1, 3)).value == Rational(1, 3));

  for (std::size_t d = 3; d <= 10; ++d) {
    auto def = EpsilonChoice::default_for(d);
    CHECK(def.value == Rational(1, 4 * (static_cast<int>(d) - 2)));
    CHECK(EpsilonChoice::bound_holds(d, def.value));
  }
}

TEST_CASE("random arrangements are seeded, distinct, and in general position") {
  auto a = tvb::random_arrangement(2, 2, 7);
  auto b = tvb::random_arrangement(2, 2, 7);
  auto c = tvb::random_arrangement(2, 2, 8);
  CHECK(a.classes == b.classes);
  CHECK(a.classes != c.classes);
  a.validate();
  CHECK(a.classes.size() == 3);
  CHECK(tvb::general_position(a));
  CHECK(tvb::weak_general_position(a));

  std::set<std::vector<mpz_class>> keys;
  for (const auto& cls : a.classes)
    for (const auto& h : cls) keys.insert(tvb::canonical_key(h));
  CHECK(keys.size() == 6);

  auto hd = tvb::random_arrangement(3, 2, 3);
  hd.validate();
  CHECK(tvb::general_position(hd));
}

TEST_CASE("random points are seeded and pairwise distinct") {
  auto p = tvb::random_points(2, 7, 42);
  auto q = tvb::random_points(2, 7, 42);
  CHECK(p == q);
  CHECK(p.size() == 7);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) CHECK(p[i] != p[j]);
}
