#include <doctest.h>

#include <cstdlib>

#include "tvb/io.hpp"
#include "tvb/perturb.hpp"
#include "tvb/position.hpp"
#include "tvb/verify.hpp"

using tvb::Rational;
using tvb::Vec;
using tvb::Verdict;

namespace {

tvb::Hyperplane line(int a, int b, int c) {
  return tvb::Hyperplane{{Rational(a), Rational(b)}, Rational(c)};
}

// Replays one outcome's certificate against freshly built simplices.
void check_outcome_replay(const tvb::ColoredArrangement& arr, const tvb::PartitionOutcome& o) {
  auto simplices = tvb::partition_simplices(arr, o.partition);
  REQUIRE(o.disjoint_found);
  const auto& v1 = simplices[o.pair_j].vertices;
  const auto& v2 = simplices[o.pair_jp].vertices;
  CHECK(tvb::certificate_valid(o.certificate, v1, v2));
  CHECK(tvb::dist_sq_hull_hull(v1, v2) == o.pair_dist_sq);
  CHECK_FALSE(tvb::hulls_intersect(v1, v2).intersect);
}

}  // namespace

TEST_CASE("planar r=2 refutation with replayable certificates") {
  auto arr = tvb::planar_counterexample(2);
  auto rep = tvb::verify_colorful_refutation(arr);
  CHECK(rep.verdict == Verdict::Refuted);
  CHECK(rep.type_class_count == 4);
  CHECK(rep.raw_count == 4);
  REQUIRE(rep.partitions.size() == 4);
  for (const auto& o : rep.partitions) {
    check_outcome_replay(arr, o);
    CHECK(o.pair_dist_sq == Rational(2));
    CHECK(o.certificate.margin_sq == Rational(1, 2));
  }
  CHECK(rep.min_pair_dist_sq == Rational(2));
  CHECK(rep.min_margin_sq == Rational(1, 2));
}

TEST_CASE("planar r=3 refutation, quotient and multiplicities") {
  auto arr = tvb::planar_counterexample(3);
  auto rep = tvb::verify_colorful_refutation(arr);
  CHECK(rep.verdict == Verdict::Refuted);
  CHECK(rep.type_class_count == 5);
  CHECK(rep.raw_count == 36);
  std::uint64_t total = 0;
  for (const auto& o : rep.partitions) {
    check_outcome_replay(arr, o);
    CHECK_FALSE(o.pair_dist_sq < Rational(1, 2));
    total += o.multiplicity;
  }
  CHECK(total == 36);
  CHECK(rep.min_pair_dist_sq == Rational(2));
}

TEST_CASE("raw mode agrees with the quotient verdict") {
  auto arr = tvb::planar_counterexample(3);
  auto raw = tvb::verify_colorful_refutation(arr, false);
  CHECK(raw.verdict == Verdict::Refuted);
  CHECK(raw.type_class_count == 36);
  CHECK(raw.partitions.size() == 36);
}

TEST_CASE("concurrent pencil is not refuted and carries witnesses") {
  // Six lines through the origin: every induced simplex is the origin, so
  // every pair of parts meets and the very first type already fails.
  tvb::ColoredArrangement arr;
  arr.dimension = 2;
  arr.parts = 2;
  arr.classes = {{line(1, 0, 0), line(1, 1, 0)},
                 {line(0, 1, 0), line(1, -1, 0)},
                 {line(1, 2, 0), line(2, 1, 0)}};
  REQUIRE(tvb::weak_general_position(arr));
  auto rep = tvb::verify_colorful_refutation(arr);
  CHECK(rep.verdict == Verdict::NotRefuted);
  REQUIRE(rep.partitions.size() == 1);  // early exit at the failing type
  const auto& o = rep.partitions.front();
  CHECK_FALSE(o.disjoint_found);
  REQUIRE(o.intersections.size() == 1);  // r=2 has a single pair
  CHECK(o.intersections[0].witness.point == Vec{Rational(0), Rational(0)});
  auto simplices = tvb::partition_simplices(arr, o.partition);
  CHECK(tvb::witness_valid(o.intersections[0].witness, simplices[0].vertices,
                           simplices[1].vertices));
}

TEST_CASE("weak general position is a hard precondition") {
  tvb::ColoredArrangement arr;
  arr.dimension = 2;
  arr.parts = 2;
  arr.classes = {{line(1, 0, 1), line(1, 1, 0)},
                 {line(1, 0, 2), line(0, 1, 0)},
                 {line(1, -1, 0), line(1, 2, 0)}};
  CHECK_THROWS_AS(tvb::verify_colorful_refutation(arr), tvb::InputError);
}

TEST_CASE("parallel run is byte-identical to sequential") {
  auto arr = tvb::planar_counterexample(4);
  auto seq = tvb::verify_colorful_refutation(arr, true, 1);
  auto par = tvb::verify_colorful_refutation(arr, true, 4);
  CHECK(tvb::refutation_report_to_json(seq, arr, true) ==
        tvb::refutation_report_to_json(par, arr, true));

  // Same check on a failing instance, where truncation must also agree.
  tvb::ColoredArrangement pencil;
  pencil.dimension = 2;
  pencil.parts = 2;
  pencil.classes = {{line(1, 0, 0), line(1, 1, 0)},
                    {line(0, 1, 0), line(1, -1, 0)},
                    {line(1, 2, 0), line(2, 1, 0)}};
  auto s2 = tvb::verify_colorful_refutation(pencil, true, 1);
  auto p2 = tvb::verify_colorful_refutation(pencil, true, 3);
  CHECK(tvb::refutation_report_to_json(s2, pencil, true) ==
        tvb::refutation_report_to_json(p2, pencil, true));
}

TEST_CASE("thread count env variable is honored") {
  auto arr = tvb::planar_counterexample(3);
  auto base = tvb::verify_colorful_refutation(arr);
  setenv("TVERBERG_THREADS", "4", 1);
  auto threaded = tvb::verify_colorful_refutation(arr);
  unsetenv("TVERBERG_THREADS");
  CHECK(tvb::refutation_report_to_json(base, arr, true) ==
        tvb::refutation_report_to_json(threaded, arr, true));
}

TEST_CASE("high-dimensional instances are refuted") {
  auto a = tvb::highdim_counterexample(3, 2);
  CHECK(tvb::verify_colorful_refutation(a).verdict == Verdict::Refuted);
  auto b = tvb::highdim_counterexample(3, 3);
  CHECK(tvb::verify_colorful_refutation(b).verdict == Verdict::Refuted);
}

TEST_CASE("projection deviation reaches exactly eps*(d-2)") {
  for (std::size_t d : {3, 4, 5, 6}) {
    auto eps = tvb::EpsilonChoice::default_for(d);
    Rational bound = eps.value * Rational(static_cast<int>(d) - 2);
    Rational dev = tvb::max_projection_deviation(d, eps);
    CHECK(dev == bound);  // attained, which is why the bound is non-strict
    CHECK(tvb::projection_deviation_within_bound(d, eps));
  }
}

TEST_CASE("duplicating a hyperplane per class preserves refutation") {
  // planar(r) -> planar(r+1) adds one more copy of each majority line; the
  // verdict must stay refuted and existing types stay certified.
  for (std::size_t r = 2; r <= 4; ++r) {
    auto small = tvb::verify_colorful_refutation(tvb::planar_counterexample(r));
    auto big = tvb::verify_colorful_refutation(tvb::planar_counterexample(r + 1));
    CHECK(small.verdict == Verdict::Refuted);
    CHECK(big.verdict == Verdict::Refuted);
  }
}

TEST_CASE("perturbation yields general position and keeps the refutation") {
  auto arr = tvb::planar_counterexample(2);
  auto rep = tvb::perturb_to_general_position(arr, 123);
  CHECK(rep.delta_sq == Rational(1, 2));
  CHECK(tvb::general_position(rep.perturbed));
  CHECK(rep.verification.verdict == Verdict::Refuted);
  CHECK(rep.max_vertex_move_sq < rep.delta_sq);
  CHECK(rep.attempts >= 1);

  auto again = tvb::perturb_to_general_position(arr, 123);
  CHECK(again.perturbed.classes == rep.perturbed.classes);

  auto other_seed = tvb::perturb_to_general_position(arr, 124);
  CHECK(other_seed.perturbed.classes != rep.perturbed.classes);
}

TEST_CASE("perturbation refuses inputs that are not refuted") {
  tvb::ColoredArrangement pencil;
  pencil.dimension = 2;
  pencil.parts = 2;
  pencil.classes = {{line(1, 0, 0), line(1, 1, 0)},
                    {line(0, 1, 0), line(1, -1, 0)},
                    {line(1, 2, 0), line(2, 1, 0)}};
  CHECK_THROWS_AS(tvb::perturb_to_general_position(pencil, 1), tvb::InputError);
}
