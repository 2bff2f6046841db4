#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tvb/hyperplane.hpp"
#include "tvb/rational.hpp"

namespace tvb {

// A split of r(d+1) hyperplanes into r blocks of d+1 whose induced
// simplices share the recorded point.  coefficients[b] are convex weights
// over block b's simplex vertices reproducing the point exactly.
struct MonochromaticWitness {
  bool found = false;
  std::vector<std::vector<std::size_t>> blocks;
  Vec point;
  std::vector<std::vector<Rational>> coefficients;
  std::uint64_t partitions_tried = 0;
};

// Exhaustive search over block partitions, first witness wins.  Requires
// general position and exactly r(d+1) hyperplanes.  An empty result on
// prime-power r would contradict the splitting theorem; treat it as a bug.
MonochromaticWitness verify_monochromatic(std::span<const Hyperplane> hs, std::size_t r);

// Relaxed reading: every pair of block simplices meets, but no common
// point is required.  No coefficients are produced.
MonochromaticWitness verify_monochromatic_pairwise(std::span<const Hyperplane> hs,
                                                   std::size_t r);

bool is_prime_power(std::size_t n);

// Orthogonal projections of p onto each hyperplane, then p itself.
std::vector<Vec> karasev_projection(std::span<const Rational> p,
                                    std::span<const Hyperplane> hs);

struct TverbergResult {
  bool found = false;
  std::vector<std::vector<std::size_t>> parts;
  Vec point;
  std::uint64_t partitions_tried = 0;
};

// First partition of the points into r nonempty parts whose hulls share a
// point, in restricted-growth-string order.
TverbergResult tverberg_bruteforce(std::span<const Vec> points, std::size_t r);

// Constrained variant: part 0 is exactly {points[singleton]}, every other
// part has exactly block_size points.  The common point is then forced to
// be the singleton itself.
TverbergResult tverberg_bruteforce_singleton(std::span<const Vec> points, std::size_t r,
                                             std::size_t singleton, std::size_t block_size);

struct HeuristicOptions {
  bool use_vertices = true;
  bool use_centroids = true;
  std::size_t grid_n = 6;  // grid_n+1 samples per axis over [grid_min, grid_max]; 0 disables
  Rational grid_min = Rational(-3);
  Rational grid_max = Rational(3);
  std::vector<Vec> extra_candidates;
};

// Karasev's depth-point idea run as a search: candidate points are the
// arrangement vertices, centroids of vertex triples, a rational grid, and
// any extras; each candidate is projected onto all hyperplanes and a
// constrained Tverberg partition with singleton {p} is sought, then the
// induced hyperplane partition is validated exactly.
MonochromaticWitness karasev_heuristic_search(std::span<const Hyperplane> hs, std::size_t r,
                                              const HeuristicOptions& opt = {});

}  // namespace tvb
