#include "tvb/enumerate.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "tvb/subsets.hpp"

namespace tvb {

namespace {

ColorfulPartition partition_from_odometer(
    std::size_t r, std::size_t nc, const std::vector<std::vector<std::size_t>>& perm) {
  ColorfulPartition p;
  p.parts.resize(r);
  for (std::size_t j = 0; j < r; ++j) {
    auto& picks = p.parts[j].picks;
    picks.resize(nc);
    picks[0] = j;
    for (std::size_t c = 1; c < nc; ++c) picks[c] = perm[c - 1][j];
  }
  return p;
}

}  // namespace

std::vector<PartitionTypeClass> enumerate_colorful(const ColoredArrangement& arr,
                                                   bool up_to_symmetry) {
  arr.validate();
  const std::size_t r = arr.parts;
  const std::size_t nc = arr.class_count();

  std::vector<std::vector<std::size_t>> perm(nc - 1);
  for (auto& p : perm) {
    p.resize(r);
    std::iota(p.begin(), p.end(), std::size_t{0});
  }

  std::vector<PartitionTypeClass> out;

  // Interned canonical hyperplane keys: symmetry treats equal loci as
  // interchangeable within a class.
  std::vector<std::vector<int>> ids(nc);
  if (up_to_symmetry) {
    std::map<std::vector<mpz_class>, int> intern;
    for (std::size_t c = 0; c < nc; ++c) {
      ids[c].resize(r);
      for (std::size_t i = 0; i < r; ++i) {
        auto key = canonical_key(arr.classes[c][i]);
        auto it = intern.emplace(std::move(key), static_cast<int>(intern.size())).first;
        ids[c][i] = it->second;
      }
    }
  }

  std::map<std::vector<int>, std::size_t> groups;
  std::vector<int> flat(r * nc), sorted_flat(r * nc);
  std::vector<std::size_t> order(r);

  while (true) {
    if (!up_to_symmetry) {
      out.push_back({partition_from_odometer(r, nc, perm), 1});
    } else {
      for (std::size_t j = 0; j < r; ++j) {
        flat[j * nc] = ids[0][j];
        for (std::size_t c = 1; c < nc; ++c) flat[j * nc + c] = ids[c][perm[c - 1][j]];
      }
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(
            flat.begin() + a * nc, flat.begin() + (a + 1) * nc,
            flat.begin() + b * nc, flat.begin() + (b + 1) * nc);
      });
      for (std::size_t a = 0; a < r; ++a)
        std::copy(flat.begin() + order[a] * nc, flat.begin() + (order[a] + 1) * nc,
                  sorted_flat.begin() + a * nc);

      auto it = groups.find(sorted_flat);
      if (it == groups.end()) {
        groups.emplace(sorted_flat, out.size());
        out.push_back({partition_from_odometer(r, nc, perm), 1});
      } else {
        ++out[it->second].multiplicity;
      }
    }

    std::size_t level = perm.size();
    while (level > 0) {
      if (std::next_permutation(perm[level - 1].begin(), perm[level - 1].end())) break;
      --level;
    }
    if (level == 0) break;
  }
  return out;
}

std::uint64_t raw_colorful_count(std::size_t r, std::size_t d) {
  std::uint64_t fact = 1;
  for (std::size_t i = 2; i <= r; ++i) fact *= i;
  std::uint64_t total = 1;
  for (std::size_t c = 0; c < d; ++c) {
    if (total > std::numeric_limits<std::uint64_t>::max() / fact)
      throw InputError("raw partition count does not fit in 64 bits");
    total *= fact;
  }
  return total;
}

bool for_each_block_partition(
    std::size_t n, std::size_t block_size,
    const std::function<bool(const std::vector<std::vector<std::size_t>>&)>& fn) {
  if (block_size == 0 || n % block_size != 0)
    throw InputError("item count " + std::to_string(n) + " is not a multiple of block size " +
                     std::to_string(block_size));
  std::vector<bool> used(n, false);
  std::vector<std::vector<std::size_t>> blocks;
  bool stopped = false;

  std::function<void()> rec = [&]() {
    std::size_t lead = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!used[i]) {
        lead = i;
        break;
      }
    }
    if (lead == n) {
      if (!fn(blocks)) stopped = true;
      return;
    }
    std::vector<std::size_t> avail;
    for (std::size_t i = lead + 1; i < n; ++i)
      if (!used[i]) avail.push_back(i);

    auto idx = first_subset(block_size - 1);
    do {
      std::vector<std::size_t> block{lead};
      for (auto a : idx) block.push_back(avail[a]);
      used[lead] = true;
      for (auto a : idx) used[avail[a]] = true;
      blocks.push_back(std::move(block));
      rec();
      blocks.pop_back();
      used[lead] = false;
      for (auto a : idx) used[avail[a]] = false;
      if (stopped) return;
    } while (next_subset(idx, avail.size()));
  };

  rec();
  return !stopped;
}

bool for_each_set_partition(
    std::size_t n, std::size_t r,
    const std::function<bool(const std::vector<std::vector<std::size_t>>&)>& fn) {
  if (r == 0 || r > n) return true;
  std::vector<std::size_t> assign(n, 0);
  bool stopped = false;

  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
    if (i == n) {
      if (used != r) return;
      std::vector<std::vector<std::size_t>> parts(r);
      for (std::size_t j = 0; j < n; ++j) parts[assign[j]].push_back(j);
      if (!fn(parts)) stopped = true;
      return;
    }
    if (used + (n - i) < r) return;
    const std::size_t top = std::min(used, r - 1);
    for (std::size_t v = 0; v <= top && !stopped; ++v) {
      assign[i] = v;
      rec(i + 1, std::max(used, v + 1));
    }
  };

  rec(0, 0);
  return !stopped;
}

}  // namespace tvb
