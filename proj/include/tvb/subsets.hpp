#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace tvb {

// Advance idx to the next k-subset of {0..n-1} in lexicographic order.
// Returns false when idx was the last subset.
inline bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
  if (i == 0) return false;
  ++idx[i - 1];
  for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

inline std::vector<std::size_t> first_subset(std::size_t k) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return idx;
}

// fn gets each k-subset; returning false stops the walk.  Result is true
// iff fn never returned false.
template <typename Fn>
bool for_all_subsets(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return true;
  auto idx = first_subset(k);
  do {
    if (!fn(std::as_const(idx))) return false;
  } while (next_subset(idx, n));
  return true;
}

}  // namespace tvb
