#include "tvb/karasev.hpp"

#include <string>

#include "tvb/distance.hpp"
#include "tvb/enumerate.hpp"
#include "tvb/linalg.hpp"
#include "tvb/lp.hpp"
#include "tvb/position.hpp"
#include "tvb/separation.hpp"
#include "tvb/simplex.hpp"
#include "tvb/subsets.hpp"
#include "tvb/vec.hpp"

namespace tvb {

namespace {

std::size_t checked_dimension(std::span<const Hyperplane> hs, std::size_t r) {
  if (hs.empty()) throw InputError("no hyperplanes");
  const std::size_t d = hs[0].dimension();
  if (r == 0) throw InputError("need r >= 1");
  if (hs.size() != r * (d + 1))
    throw InputError("expected r(d+1) = " + std::to_string(r * (d + 1)) +
                     " hyperplanes, got " + std::to_string(hs.size()));
  if (!general_position(hs, d)) throw InputError("hyperplanes are not in general position");
  return d;
}

std::vector<Simplex> block_simplices(std::span<const Hyperplane> hs,
                                     const std::vector<std::vector<std::size_t>>& blocks) {
  std::vector<Simplex> out;
  out.reserve(blocks.size());
  for (const auto& b : blocks) {
    std::vector<Hyperplane> tuple;
    tuple.reserve(b.size());
    for (auto i : b) tuple.push_back(hs[i]);
    out.push_back(induced_simplex(tuple));
  }
  return out;
}

// Convex weights over the vertices reproducing p (p must lie in the hull).
std::vector<Rational> membership_coefficients(const Vec& p, const std::vector<Vec>& vertices) {
  const std::size_t d = p.size();
  std::vector<Vec> rows(d + 1, Vec(vertices.size()));
  Vec rhs(d + 1);
  for (std::size_t i = 0; i < vertices.size(); ++i) rows[0][i] = Rational(1);
  rhs[0] = Rational(1);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < vertices.size(); ++i) rows[1 + j][i] = vertices[i][j];
    rhs[1 + j] = p[j];
  }
  auto lp = solve_equality_feasibility(rows, rhs);
  if (!lp.feasible) throw std::logic_error("membership coefficients requested for outside point");
  return lp.x;
}

}  // namespace

MonochromaticWitness verify_monochromatic(std::span<const Hyperplane> hs, std::size_t r) {
  const std::size_t d = checked_dimension(hs, r);

  MonochromaticWitness w;
  for_each_block_partition(hs.size(), d + 1, [&](const std::vector<std::vector<std::size_t>>& blocks) {
    ++w.partitions_tried;
    auto simplices = block_simplices(hs, blocks);
    std::vector<std::vector<Vec>> hulls;
    hulls.reserve(simplices.size());
    for (auto& s : simplices) hulls.push_back(s.vertices);
    auto cp = common_point(hulls);
    if (!cp.feasible) return true;
    w.found = true;
    w.blocks = blocks;
    w.point = cp.point;
    w.coefficients = cp.coefficients;
    return false;
  });
  return w;
}

MonochromaticWitness verify_monochromatic_pairwise(std::span<const Hyperplane> hs,
                                                   std::size_t r) {
  const std::size_t d = checked_dimension(hs, r);

  MonochromaticWitness w;
  for_each_block_partition(hs.size(), d + 1, [&](const std::vector<std::vector<std::size_t>>& blocks) {
    ++w.partitions_tried;
    auto simplices = block_simplices(hs, blocks);
    for (std::size_t j = 0; j < simplices.size(); ++j)
      for (std::size_t jp = j + 1; jp < simplices.size(); ++jp)
        if (!hulls_intersect(simplices[j].vertices, simplices[jp].vertices).intersect)
          return true;
    w.found = true;
    w.blocks = blocks;
    return false;
  });
  return w;
}

bool is_prime_power(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    return n == 1;
  }
  return true;  // prime
}

std::vector<Vec> karasev_projection(std::span<const Rational> p,
                                    std::span<const Hyperplane> hs) {
  std::vector<Vec> out;
  out.reserve(hs.size() + 1);
  for (const auto& h : hs) {
    if (h.dimension() != p.size()) throw InputError("hyperplane dimension mismatch");
    Rational nn = norm_sq(h.normal);
    if (nn.is_zero()) throw InputError("zero normal");
    Rational t = h.evaluate(p) / nn;
    Vec q(p.begin(), p.end());
    for (std::size_t j = 0; j < q.size(); ++j) q[j] -= t * h.normal[j];
    out.push_back(std::move(q));
  }
  out.emplace_back(p.begin(), p.end());
  return out;
}

TverbergResult tverberg_bruteforce(std::span<const Vec> points, std::size_t r) {
  TverbergResult res;
  if (points.size() < r) return res;

  for_each_set_partition(points.size(), r, [&](const std::vector<std::vector<std::size_t>>& parts) {
    ++res.partitions_tried;
    std::vector<std::vector<Vec>> hulls(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (auto idx : parts[i]) hulls[i].push_back(points[idx]);
    auto cp = common_point(hulls);
    if (!cp.feasible) return true;
    res.found = true;
    res.parts = parts;
    res.point = cp.point;
    return false;
  });
  return res;
}

TverbergResult tverberg_bruteforce_singleton(std::span<const Vec> points, std::size_t r,
                                             std::size_t singleton, std::size_t block_size) {
  if (singleton >= points.size()) throw InputError("singleton index out of range");
  if (r < 1) throw InputError("need r >= 1");
  TverbergResult res;
  if (points.size() - 1 != (r - 1) * block_size) return res;

  std::vector<std::size_t> rest;
  rest.reserve(points.size() - 1);
  for (std::size_t i = 0; i < points.size(); ++i)
    if (i != singleton) rest.push_back(i);

  const Vec& p = points[singleton];
  for_each_block_partition(rest.size(), block_size,
                           [&](const std::vector<std::vector<std::size_t>>& blocks) {
    ++res.partitions_tried;
    for (const auto& b : blocks) {
      std::vector<Vec> hull;
      hull.reserve(b.size());
      for (auto i : b) hull.push_back(points[rest[i]]);
      if (!dist_sq_point_hull(p, hull).is_zero()) return true;
    }
    res.found = true;
    res.parts.clear();
    res.parts.push_back({singleton});
    for (const auto& b : blocks) {
      std::vector<std::size_t> part;
      part.reserve(b.size());
      for (auto i : b) part.push_back(rest[i]);
      res.parts.push_back(std::move(part));
    }
    res.point = p;
    return false;
  });
  return res;
}

MonochromaticWitness karasev_heuristic_search(std::span<const Hyperplane> hs, std::size_t r,
                                              const HeuristicOptions& opt) {
  const std::size_t d = checked_dimension(hs, r);
  const std::size_t n = hs.size();

  std::vector<Vec> candidates;

  if (opt.use_vertices || opt.use_centroids) {
    // Arrangement vertices: every d-subset meets in one point under
    // general position.
    std::vector<Vec> vertices;
    for_all_subsets(n, d, [&](const std::vector<std::size_t>& idx) {
      std::vector<Hyperplane> sub;
      sub.reserve(d);
      for (auto i : idx) sub.push_back(hs[i]);
      auto v = solve_linear(sub);
      if (v) vertices.push_back(std::move(*v));
      return true;
    });
    if (opt.use_vertices) candidates = vertices;
    if (opt.use_centroids) {
      for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
          for (std::size_t c = b + 1; c < vertices.size(); ++c) {
            Vec centroid(d);
            for (std::size_t j = 0; j < d; ++j)
              centroid[j] = (vertices[a][j] + vertices[b][j] + vertices[c][j]) / Rational(3);
            candidates.push_back(std::move(centroid));
          }
    }
  }

  if (opt.grid_n > 0) {
    if (!(opt.grid_min < opt.grid_max)) throw InputError("empty grid window");
    Rational step = (opt.grid_max - opt.grid_min) / Rational(static_cast<long>(opt.grid_n));
    std::vector<std::size_t> ticks(d, 0);
    while (true) {
      Vec q(d);
      for (std::size_t j = 0; j < d; ++j)
        q[j] = opt.grid_min + step * Rational(static_cast<long>(ticks[j]));
      candidates.push_back(std::move(q));
      std::size_t j = d;
      while (j > 0 && ticks[j - 1] == opt.grid_n) ticks[--j] = 0;
      if (j == 0) break;
      ++ticks[j - 1];
    }
  }
  for (const auto& q : opt.extra_candidates) candidates.push_back(q);

  MonochromaticWitness w;
  for (const auto& p : candidates) {
    if (p.size() != d) throw InputError("candidate point dimension mismatch");
    auto cloud = karasev_projection(p, hs);
    // cloud[i] is the projection onto hs[i] for i < n and cloud[n] = p, so
    // a block partition of {0..n-1} names hyperplanes and projections at
    // once.  Streaming all partitions lets a candidate recover when its
    // first point-level split fails the hyperplane-level validation.
    for_each_block_partition(n, d + 1, [&](const std::vector<std::vector<std::size_t>>& blocks) {
      for (const auto& b : blocks) {
        std::vector<Vec> hull;
        hull.reserve(b.size());
        for (auto i : b) hull.push_back(cloud[i]);
        if (!dist_sq_point_hull(p, hull).is_zero()) return true;
      }
      auto simplices = block_simplices(hs, blocks);
      for (const auto& s : simplices)
        if (!dist_sq_point_hull(p, s.vertices).is_zero()) return true;

      w.found = true;
      w.blocks = blocks;
      w.point = p;
      for (const auto& s : simplices)
        w.coefficients.push_back(membership_coefficients(p, s.vertices));
      return false;
    });
    if (w.found) return w;
  }
  return w;
}

}  // namespace tvb
