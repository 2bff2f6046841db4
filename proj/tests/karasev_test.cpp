#include <doctest.h>

#include "tvb/constructions.hpp"
#include "tvb/distance.hpp"
#include "tvb/karasev.hpp"
#include "tvb/simplex.hpp"
#include "tvb/vec.hpp"

using tvb::Rational;
using tvb::Vec;

namespace {

Vec pt(int x, int y) { return {Rational(x), Rational(y)}; }

void check_monochromatic_witness(const std::vector<tvb::Hyperplane>& hs, std::size_t r,
                                 const tvb::MonochromaticWitness& w, bool expect_coeffs) {
  REQUIRE(w.found);
  REQUIRE(w.blocks.size() == r);
  const std::size_t d = hs.front().dimension();
  std::vector<bool> used(hs.size(), false);
  for (const auto& block : w.blocks) {
    REQUIRE(block.size() == d + 1);
    for (auto i : block) {
      CHECK_FALSE(used[i]);
      used[i] = true;
    }
  }
  if (!expect_coeffs) return;
  REQUIRE(w.point.size() == d);
  REQUIRE(w.coefficients.size() == r);
  for (std::size_t b = 0; b < r; ++b) {
    std::vector<tvb::Hyperplane> tuple;
    for (auto i : w.blocks[b]) tuple.push_back(hs[i]);
    auto simplex = tvb::induced_simplex(tuple);
    CHECK(tvb::dist_sq_point_hull(w.point, simplex.vertices) == Rational(0));
    Rational sum(0);
    Vec recon(d, Rational(0));
    REQUIRE(w.coefficients[b].size() == simplex.vertices.size());
    for (std::size_t v = 0; v < simplex.vertices.size(); ++v) {
      CHECK_FALSE(w.coefficients[b][v] < Rational(0));
      sum = sum + w.coefficients[b][v];
      recon = tvb::add(recon, tvb::scaled(simplex.vertices[v], w.coefficients[b][v]));
    }
    CHECK(sum == Rational(1));
    CHECK(recon == w.point);
  }
}

}  // namespace

TEST_CASE("prime power classifier") {
  for (std::size_t n : {2, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27, 32}) CHECK(tvb::is_prime_power(n));
  for (std::size_t n : {0, 1, 6, 10, 12, 15, 36}) CHECK_FALSE(tvb::is_prime_power(n));
}

TEST_CASE("orthogonal projections onto hyperplanes") {
  std::vector<tvb::Hyperplane> hs = {{{Rational(1), Rational(0)}, Rational(0)},
                                     {{Rational(0), Rational(1)}, Rational(0)},
                                     {{Rational(1), Rational(1)}, Rational(1)}};
  Vec p = pt(1, 1);
  auto cloud = tvb::karasev_projection(p, hs);
  REQUIRE(cloud.size() == 4);  // one projection per hyperplane, then p itself
  CHECK(cloud[0] == pt(0, 1));
  CHECK(cloud[1] == pt(1, 0));
  CHECK(cloud[2] == Vec{Rational(1, 2), Rational(1, 2)});
  CHECK(cloud[3] == p);
  for (std::size_t i = 0; i < hs.size(); ++i) CHECK(hs[i].contains(cloud[i]));
}

TEST_CASE("Radon-style partition of four points") {
  std::vector<Vec> pts = {pt(0, 0), pt(2, 0), pt(1, 2), pt(1, 1)};
  auto res = tvb::tverberg_bruteforce(pts, 2);
  REQUIRE(res.found);
  CHECK(res.parts == std::vector<std::vector<std::size_t>>{{0, 1, 2}, {3}});
  CHECK(res.point == pt(1, 1));
}

TEST_CASE("three affinely independent points admit no Radon partition") {
  std::vector<Vec> pts = {pt(0, 0), pt(1, 0), pt(0, 1)};
  auto res = tvb::tverberg_bruteforce(pts, 2);
  CHECK_FALSE(res.found);
  CHECK(res.partitions_tried == 3);  // S(3,2)
}

TEST_CASE("seven planar points always split three ways") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto pts = tvb::random_points(2, 7, seed);
    auto res = tvb::tverberg_bruteforce(pts, 3);
    REQUIRE(res.found);
    std::vector<std::vector<Vec>> hulls;
    for (const auto& part : res.parts) {
      std::vector<Vec> hull;
      for (auto i : part) hull.push_back(pts[i]);
      hulls.push_back(hull);
    }
    for (const auto& hull : hulls)
      CHECK(tvb::dist_sq_point_hull(res.point, hull) == Rational(0));
  }
}

TEST_CASE("singleton-constrained search pins the common point") {
  // Singleton (1,1) inside two triangles built from the remaining points.
  std::vector<Vec> pts = {pt(0, 0), pt(2, 0), pt(1, 2),   // triangle around (1,1)
                          pt(1, 0), pt(0, 2), pt(2, 2),   // second triangle around (1,1)
                          pt(1, 1)};
  auto res = tvb::tverberg_bruteforce_singleton(pts, 3, 6, 3);
  REQUIRE(res.found);
  CHECK(res.point == pt(1, 1));
  CHECK(res.parts.front() == std::vector<std::size_t>{6});
  CHECK(res.parts.size() == 3);

  // Size bookkeeping must rule out impossible shapes without searching.
  auto bad = tvb::tverberg_bruteforce_singleton(pts, 3, 6, 2);
  CHECK_FALSE(bad.found);
  CHECK(bad.partitions_tried == 0);
}

TEST_CASE("exhaustive monochromatic verification on random lines") {
  auto arr = tvb::random_arrangement(2, 2, 7);
  auto hs = arr.union_hyperplanes();
  auto w = tvb::verify_monochromatic(hs, 2);
  check_monochromatic_witness(hs, 2, w, true);
  CHECK(w.partitions_tried >= 1);
  CHECK(w.partitions_tried <= 10);  // partitions of 6 into two blocks of 3
}

TEST_CASE("monochromatic preconditions") {
  auto arr = tvb::random_arrangement(2, 2, 7);
  auto hs = arr.union_hyperplanes();
  hs.pop_back();
  CHECK_THROWS_AS(tvb::verify_monochromatic(hs, 2), tvb::InputError);

  auto bad = tvb::planar_counterexample(2).union_hyperplanes();  // repeated lines
  CHECK_THROWS_AS(tvb::verify_monochromatic(bad, 2), tvb::InputError);
}

TEST_CASE("pairwise mode is implied by the common-point mode") {
  auto arr = tvb::random_arrangement(2, 3, 4);
  auto hs = arr.union_hyperplanes();
  auto full = tvb::verify_monochromatic(hs, 3);
  auto pw = tvb::verify_monochromatic_pairwise(hs, 3);
  check_monochromatic_witness(hs, 3, full, true);
  check_monochromatic_witness(hs, 3, pw, false);
  CHECK(pw.coefficients.empty());
}

TEST_CASE("heuristic search agrees with the exhaustive oracle") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto arr = tvb::random_arrangement(2, 2, seed);
    auto hs = arr.union_hyperplanes();
    auto heur = tvb::karasev_heuristic_search(hs, 2);
    check_monochromatic_witness(hs, 2, heur, true);
    CHECK(tvb::verify_monochromatic(hs, 2).found);
  }
}

TEST_CASE("empty candidate sampling finds nothing") {
  auto arr = tvb::random_arrangement(2, 2, 7);
  auto hs = arr.union_hyperplanes();
  tvb::HeuristicOptions opt;
  opt.use_vertices = false;
  opt.use_centroids = false;
  opt.grid_n = 0;
  auto w = tvb::karasev_heuristic_search(hs, 2, opt);
  CHECK_FALSE(w.found);

  // A known-good point handed in as an extra candidate is accepted.
  auto exhaustive = tvb::verify_monochromatic(hs, 2);
  REQUIRE(exhaustive.found);
  opt.extra_candidates = {exhaustive.point};
  auto seeded = tvb::karasev_heuristic_search(hs, 2, opt);
  check_monochromatic_witness(hs, 2, seeded, true);
}
