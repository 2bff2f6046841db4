#include <doctest.h>

#include <random>

#include "tvb/rational.hpp"
#include "tvb/vec.hpp"

using tvb::Rational;

TEST_CASE("parse and str round-trip") {
  for (const char* s : {"0", "1", "-1", "7", "-7", "3/4", "-3/4", "22/7", "123456789012345678901/2"}) {
    auto r = Rational::parse(s);
    REQUIRE(r.has_value());
    CHECK(r->str() == s);
  }
}

TEST_CASE("parse normalizes to lowest terms") {
  CHECK(Rational::parse("2/4")->str() == "1/2");
  CHECK(Rational::parse("-6/4")->str() == "-3/2");
  CHECK(Rational::parse("0/5")->str() == "0");
  CHECK(Rational::parse("4/2")->str() == "2");
}

TEST_CASE("parse rejects malformed input") {
  for (const char* s : {"", "a", "1.5", "3/0", "1/-2", "1/", "/2", "1/2/3", "2 ", " 2", "0x10"}) {
    CHECK_FALSE(Rational::parse(s).has_value());
  }
}

TEST_CASE("constructor normalizes sign and gcd") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-1, -2) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(3, 4).den() > 0);
  CHECK(Rational(3, -4).den() > 0);
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("ordering and predicates") {
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK(Rational(-1) < Rational(0));
  CHECK(Rational(1, 3).sign() == 1);
  CHECK(Rational(-1, 3).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(0).is_zero());
  CHECK(Rational(-3, 7).abs() == Rational(3, 7));
  CHECK(Rational(-3, 7).squared() == Rational(9, 49));
}

namespace {

Rational random_rational(std::mt19937_64& g) {
  int num = static_cast<int>(g() % 2001) - 1000;
  int den = 1 + static_cast<int>(g() % 999);
  return Rational(num, den);
}

}  // namespace

TEST_CASE("field identities on random rationals") {
  std::mt19937_64 g(1234);
  for (int i = 0; i < 1000; ++i) {
    Rational a = random_rational(g);
    Rational b = random_rational(g);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
  }
}

TEST_CASE("vector dot, norm and size checks") {
  tvb::Vec a = {Rational(1), Rational(2)};
  tvb::Vec b = {Rational(3), Rational(-1, 2)};
  CHECK(tvb::dot(a, b) == Rational(2));
  CHECK(tvb::norm_sq(b) == Rational(37, 4));
  CHECK(tvb::sub(a, b) == tvb::Vec{Rational(-2), Rational(5, 2)});
  CHECK(tvb::add(a, b) == tvb::Vec{Rational(4), Rational(3, 2)});
  CHECK(tvb::scaled(a, Rational(1, 2)) == tvb::Vec{Rational(1, 2), Rational(1)});
  tvb::Vec c = {Rational(1)};
  CHECK_THROWS_AS(tvb::dot(a, c), tvb::InputError);
}
