#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tvb/hyperplane.hpp"

namespace tvb {

// One hyperplane per class: picks[c] indexes into class c.
struct ColorfulTuple {
  std::vector<std::size_t> picks;
  bool operator==(const ColorfulTuple&) const = default;
};

// r colorful tuples whose picks, per class, form a permutation of
// {0,...,r-1}.  Parts are kept sorted by their class-0 pick, which labels
// each unlabeled partition uniquely.
struct ColorfulPartition {
  std::vector<ColorfulTuple> parts;
  bool operator==(const ColorfulPartition&) const = default;
};

struct PartitionTypeClass {
  ColorfulPartition representative;
  std::uint64_t multiplicity = 0;
};

// All colorful partitions of the arrangement, parts unlabeled.  Raw count
// is (r!)^d.  With up_to_symmetry, partitions that differ only by swapping
// identical hyperplanes (same locus, exact) within a class are merged into
// one type class carrying the multiplicity; order is first encounter.
std::vector<PartitionTypeClass> enumerate_colorful(const ColoredArrangement& arr,
                                                   bool up_to_symmetry);

std::uint64_t raw_colorful_count(std::size_t r, std::size_t d);

// Unordered partitions of {0..n-1} into blocks of exactly block_size, one
// call per partition, in lexicographic leader order.  fn returning false
// stops the stream; the return value says whether the stream was exhausted.
bool for_each_block_partition(
    std::size_t n, std::size_t block_size,
    const std::function<bool(const std::vector<std::vector<std::size_t>>&)>& fn);

// Unordered partitions of {0..n-1} into exactly r nonempty parts
// (restricted growth strings).  Same streaming contract.
bool for_each_set_partition(
    std::size_t n, std::size_t r,
    const std::function<bool(const std::vector<std::vector<std::size_t>>&)>& fn);

}  // namespace tvb
