#pragma once

#include <cstdint>
#include <vector>

#include "tvb/constructions.hpp"
#include "tvb/enumerate.hpp"
#include "tvb/separation.hpp"
#include "tvb/simplex.hpp"

namespace tvb {

struct PairWitness {
  std::size_t j = 0, jp = 0;
  IntersectionWitness witness;
};

// Outcome for one partition type: either the first disjoint pair (in
// lexicographic pair order) with its certificate, or intersection
// witnesses for every pair.
struct PartitionOutcome {
  ColorfulPartition partition;
  std::uint64_t multiplicity = 0;
  bool disjoint_found = false;
  std::size_t pair_j = 0, pair_jp = 0;
  SeparationCertificate certificate;
  Rational pair_dist_sq;
  std::vector<PairWitness> intersections;
};

enum class Verdict { Refuted, NotRefuted };

struct RefutationReport {
  Verdict verdict = Verdict::NotRefuted;
  std::vector<PartitionOutcome> partitions;
  std::uint64_t type_class_count = 0;
  std::uint64_t raw_count = 0;
  Rational min_margin_sq;     // over certified partitions
  Rational min_pair_dist_sq;  // over certified partitions
};

std::vector<Hyperplane> tuple_hyperplanes(const ColoredArrangement& arr,
                                          const ColorfulTuple& t);
std::vector<Simplex> partition_simplices(const ColoredArrangement& arr,
                                         const ColorfulPartition& p);

// Checks that every colorful partition type contains two disjoint induced
// simplices.  On failure the report stops at the first type where all
// pairs intersect, mirroring a sequential early-exit run even when checks
// ran in parallel.  threads == 0 reads TVERBERG_THREADS (default 1).
RefutationReport verify_colorful_refutation(const ColoredArrangement& arr,
                                            bool up_to_symmetry = true,
                                            unsigned threads = 0);

// Largest max-norm gap, over all sign patterns and all vertices, between a
// projected vertex of the d >= 3 family and the matching vertex of the
// planar model; never exceeds eps*(d-2).
Rational max_projection_deviation(std::size_t d, const EpsilonChoice& eps);
bool projection_deviation_within_bound(std::size_t d, const EpsilonChoice& eps);

}  // namespace tvb
