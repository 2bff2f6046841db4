#include "tvb/position.hpp"

#include <algorithm>

#include "tvb/linalg.hpp"
#include "tvb/subsets.hpp"

namespace tvb {

bool weak_general_position(const ColoredArrangement& arr) {
  arr.validate();
  const std::size_t d = arr.dimension;
  for (std::size_t omit = 0; omit < arr.class_count(); ++omit) {
    std::vector<std::size_t> cls;
    for (std::size_t c = 0; c < arr.class_count(); ++c)
      if (c != omit) cls.push_back(c);
    std::vector<std::size_t> pick(d, 0);
    while (true) {
      std::vector<Vec> normals(d);
      for (std::size_t i = 0; i < d; ++i) normals[i] = arr.classes[cls[i]][pick[i]].normal;
      if (!rows_independent(normals)) return false;
      std::size_t i = d;
      while (i > 0 && pick[i - 1] + 1 == arr.parts) pick[--i] = 0;
      if (i == 0) break;
      ++pick[i - 1];
    }
  }
  return true;
}

bool general_position(std::span<const Hyperplane> planes, std::size_t dimension) {
  for (const auto& h : planes)
    if (h.dimension() != dimension) throw InputError("hyperplane dimension mismatch");
  const std::size_t n = planes.size();
  const std::size_t k = std::min(n, dimension);

  bool independent = for_all_subsets(n, k, [&](const std::vector<std::size_t>& idx) {
    std::vector<Vec> normals;
    normals.reserve(k);
    for (auto i : idx) normals.push_back(planes[i].normal);
    return rows_independent(normals);
  });
  if (!independent) return false;

  if (n < dimension + 1) return true;
  return for_all_subsets(n, dimension + 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<Hyperplane> sub(idx.size() - 1);
    for (std::size_t i = 0; i + 1 < idx.size(); ++i) sub[i] = planes[idx[i]];
    auto p = solve_linear(sub);
    return !planes[idx.back()].contains(*p);
  });
}

bool general_position(const ColoredArrangement& arr) {
  arr.validate();
  auto all = arr.union_hyperplanes();
  return general_position(all, arr.dimension);
}

}  // namespace tvb
