#include "tvb/simplex.hpp"

#include <algorithm>
#include <string>

#include "tvb/linalg.hpp"

namespace tvb {

namespace {
void append_if_new(std::vector<Vec>& vertices, Vec v) {
  for (const auto& u : vertices)
    if (u == v) return;
  vertices.push_back(std::move(v));
}
}  // namespace

Simplex induced_simplex(std::span<const Hyperplane> tuple) {
  if (tuple.empty()) throw InputError("empty hyperplane tuple");
  const std::size_t d = tuple[0].dimension();
  if (tuple.size() != d + 1)
    throw InputError("need d+1 hyperplanes, got " + std::to_string(tuple.size()) +
                     " in dimension " + std::to_string(d));
  for (const auto& h : tuple)
    if (h.dimension() != d) throw InputError("mixed hyperplane dimensions in tuple");

  Simplex s;
  for (std::size_t omit = 0; omit <= d; ++omit) {
    std::vector<Hyperplane> sub;
    sub.reserve(d);
    for (std::size_t i = 0; i <= d; ++i)
      if (i != omit) sub.push_back(tuple[i]);
    auto v = solve_linear(sub);
    if (!v) {
      std::string members;
      for (std::size_t i = 0; i <= d; ++i) {
        if (i == omit) continue;
        if (!members.empty()) members += ",";
        members += std::to_string(i);
      }
      throw ConstructionError("hyperplane subset {" + members + "} is singular");
    }
    append_if_new(s.vertices, std::move(*v));
  }
  s.degenerate = s.vertices.size() < d + 1;
  return s;
}

Simplex project_e1e2(const Simplex& s) {
  Simplex out;
  for (const auto& v : s.vertices) {
    if (v.size() < 2) throw InputError("projection needs ambient dimension >= 2");
    append_if_new(out.vertices, Vec{v[0], v[1]});
  }
  out.degenerate = out.vertices.size() < 3;
  return out;
}

}  // namespace tvb
