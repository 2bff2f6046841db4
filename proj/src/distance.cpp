#include "tvb/distance.hpp"

#include <optional>

#include "tvb/linalg.hpp"
#include "tvb/vec.hpp"

namespace tvb {

namespace {

std::vector<std::size_t> mask_indices(unsigned mask) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) idx.push_back(i);
  return idx;
}

// Edge vectors v_i - v_0 over the subset.
std::vector<Vec> edges(std::span<const Vec> pts, const std::vector<std::size_t>& idx) {
  std::vector<Vec> e;
  e.reserve(idx.size() - 1);
  for (std::size_t i = 1; i < idx.size(); ++i) e.push_back(sub(pts[idx[i]], pts[idx[0]]));
  return e;
}

// Barycentric coefficients (1 - sum t, t...) if all nonnegative.
std::optional<std::vector<Rational>> convex_coeffs(const Vec& t) {
  std::vector<Rational> lambda;
  lambda.reserve(t.size() + 1);
  Rational sum;
  for (const auto& x : t) sum += x;
  Rational head = Rational(1) - sum;
  if (head.sign() < 0) return std::nullopt;
  lambda.push_back(head);
  for (const auto& x : t) {
    if (x.sign() < 0) return std::nullopt;
    lambda.push_back(x);
  }
  return lambda;
}

void check_common_dimension(std::span<const Vec> pts, std::size_t d) {
  if (pts.size() > 20) throw InputError("hull too large for exact face enumeration");
  for (const auto& v : pts)
    if (v.size() != d) throw InputError("mixed point dimensions");
}

}  // namespace

Rational dist_sq_point_hull(std::span<const Rational> p, std::span<const Vec> vertices) {
  if (vertices.empty()) throw InputError("empty vertex set");
  const std::size_t d = p.size();
  check_common_dimension(vertices, d);

  std::optional<Rational> best;
  const unsigned full = (1u << vertices.size()) - 1u;
  for (unsigned mask = 1; mask <= full; ++mask) {
    auto idx = mask_indices(mask);
    const Vec& v0 = vertices[idx[0]];
    Vec x;
    if (idx.size() == 1) {
      x = v0;
    } else {
      auto e = edges(vertices, idx);
      const std::size_t m = e.size();
      Vec c = sub(p, v0);
      std::vector<Vec> gram(m, Vec(m));
      Vec rhs(m);
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) gram[a][b] = dot(e[a], e[b]);
        rhs[a] = dot(e[a], c);
      }
      auto t = solve_rational_system(gram, rhs);
      if (!t) continue;
      if (!convex_coeffs(*t)) continue;
      x = v0;
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t j = 0; j < d; ++j) x[j] += (*t)[a] * e[a][j];
    }
    Rational cand = norm_sq(sub(p, x));
    if (!best || cand < *best) best = cand;
  }
  return *best;
}

NearestPair nearest_pair_hulls(std::span<const Vec> v1, std::span<const Vec> v2) {
  if (v1.empty() || v2.empty()) throw InputError("empty vertex set");
  const std::size_t d = v1[0].size();
  check_common_dimension(v1, d);
  check_common_dimension(v2, d);

  std::optional<NearestPair> best;
  const unsigned full1 = (1u << v1.size()) - 1u;
  const unsigned full2 = (1u << v2.size()) - 1u;
  for (unsigned m1 = 1; m1 <= full1; ++m1) {
    auto s = mask_indices(m1);
    auto e = edges(v1, s);
    for (unsigned m2 = 1; m2 <= full2; ++m2) {
      auto t = mask_indices(m2);
      auto f = edges(v2, t);

      // Columns of G: edges of hull 1, then negated edges of hull 2, so
      // x - y = c + G z with c the base-point difference.
      std::vector<Vec> g;
      g.reserve(e.size() + f.size());
      for (const auto& col : e) g.push_back(col);
      for (const auto& col : f) g.push_back(scaled(col, Rational(-1)));
      Vec c = sub(v1[s[0]], v2[t[0]]);

      Vec zt, zs;
      if (!g.empty()) {
        const std::size_t m = g.size();
        std::vector<Vec> gram(m, Vec(m));
        Vec rhs(m);
        for (std::size_t a = 0; a < m; ++a) {
          for (std::size_t b = 0; b < m; ++b) gram[a][b] = dot(g[a], g[b]);
          rhs[a] = -dot(g[a], c);
        }
        auto z = solve_rational_system(gram, rhs);
        if (!z) continue;
        zt.assign(z->begin(), z->begin() + e.size());
        zs.assign(z->begin() + e.size(), z->end());
      }
      auto lam = convex_coeffs(zt);
      if (!lam) continue;
      auto mu = convex_coeffs(zs);
      if (!mu) continue;

      Vec x = v1[s[0]], y = v2[t[0]];
      for (std::size_t a = 0; a < e.size(); ++a)
        for (std::size_t j = 0; j < d; ++j) x[j] += zt[a] * e[a][j];
      for (std::size_t a = 0; a < f.size(); ++a)
        for (std::size_t j = 0; j < d; ++j) y[j] += zs[a] * f[a][j];
      Rational cand = norm_sq(sub(x, y));
      if (best && !(cand < best->dist_sq)) continue;

      NearestPair np;
      np.dist_sq = cand;
      np.x = std::move(x);
      np.y = std::move(y);
      np.coeffs_x.assign(v1.size(), Rational(0));
      np.coeffs_y.assign(v2.size(), Rational(0));
      for (std::size_t a = 0; a < s.size(); ++a) np.coeffs_x[s[a]] = (*lam)[a];
      for (std::size_t a = 0; a < t.size(); ++a) np.coeffs_y[t[a]] = (*mu)[a];
      best = std::move(np);
    }
  }
  return *best;
}

Rational dist_sq_hull_hull(std::span<const Vec> v1, std::span<const Vec> v2) {
  return nearest_pair_hulls(v1, v2).dist_sq;
}

Rational dist_sq_hull_hyperplane(std::span<const Vec> vertices, const Hyperplane& h) {
  if (vertices.empty()) throw InputError("empty vertex set");
  Rational nn = norm_sq(h.normal);
  if (nn.is_zero()) throw InputError("zero normal");

  bool pos = false, neg = false;
  std::optional<Rational> min_sq;
  for (const auto& v : vertices) {
    Rational s = h.evaluate(v);
    if (s.is_zero()) return Rational(0);
    (s.sign() > 0 ? pos : neg) = true;
    if (pos && neg) return Rational(0);
    Rational s2 = s.squared();
    if (!min_sq || s2 < *min_sq) min_sq = s2;
  }
  return *min_sq / nn;
}

}  // namespace tvb
