#include "tvb/separation.hpp"

#include <stdexcept>

#include "tvb/lp.hpp"
#include "tvb/vec.hpp"

namespace tvb {

namespace {

void check_hull(std::span<const Vec> v, std::size_t d) {
  if (v.empty()) throw InputError("empty vertex set");
  for (const auto& p : v)
    if (p.size() != d) throw InputError("mixed point dimensions");
}

Vec combine(std::span<const Vec> verts, std::span<const Rational> lambda) {
  Vec p(verts[0].size());
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) p[j] += lambda[i] * verts[i][j];
  return p;
}

SeparationCertificate certificate_from_nearest_pair(const NearestPair& np) {
  // Perpendicular bisector of the nearest pair.  Both hulls sit at squared
  // distance dist_sq/4 from it, the best any separator can do.
  Vec w = sub(np.y, np.x);
  Rational offset = (dot(w, np.x) + dot(w, np.y)) / Rational(2);

  Rational scale;
  for (const auto& c : w) {
    Rational a = c.abs();
    if (scale < a) scale = a;
  }
  for (auto& c : w) c = c / scale;
  offset = offset / scale;

  SeparationCertificate cert;
  cert.separator = Hyperplane{std::move(w), std::move(offset)};
  cert.margin_sq = np.dist_sq / Rational(4);
  cert.hull1_side = -1;
  return cert;
}

}  // namespace

HullsResult hulls_intersect(std::span<const Vec> v1, std::span<const Vec> v2) {
  const std::size_t d = v1.empty() ? 0 : v1[0].size();
  check_hull(v1, d);
  check_hull(v2, d);

  // Variables: convex coefficients over v1 then v2.  Rows: both sums equal
  // one, and the combinations agree in every coordinate.
  const std::size_t n1 = v1.size(), n2 = v2.size();
  std::vector<Vec> rows(2 + d, Vec(n1 + n2));
  Vec rhs(2 + d);
  for (std::size_t i = 0; i < n1; ++i) rows[0][i] = Rational(1);
  for (std::size_t i = 0; i < n2; ++i) rows[1][n1 + i] = Rational(1);
  rhs[0] = Rational(1);
  rhs[1] = Rational(1);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < n1; ++i) rows[2 + j][i] = v1[i][j];
    for (std::size_t i = 0; i < n2; ++i) rows[2 + j][n1 + i] = -v2[i][j];
  }

  HullsResult res;
  auto lp = solve_equality_feasibility(rows, rhs);
  if (lp.feasible) {
    res.intersect = true;
    res.witness.coeffs1.assign(lp.x.begin(), lp.x.begin() + n1);
    res.witness.coeffs2.assign(lp.x.begin() + n1, lp.x.end());
    res.witness.point = combine(v1, res.witness.coeffs1);
    res.pair_dist_sq = Rational(0);
    return res;
  }

  auto np = nearest_pair_hulls(v1, v2);
  if (np.dist_sq.is_zero())
    throw std::logic_error("feasibility and nearest-pair engines disagree");
  res.intersect = false;
  res.pair_dist_sq = np.dist_sq;
  res.certificate = certificate_from_nearest_pair(np);
  return res;
}

CommonPointResult common_point(const std::vector<std::vector<Vec>>& hulls) {
  if (hulls.empty()) throw InputError("no hulls");
  const std::size_t d = hulls[0].empty() ? 0 : hulls[0][0].size();
  std::size_t total = 0;
  for (const auto& h : hulls) {
    check_hull(h, d);
    total += h.size();
  }

  const std::size_t k = hulls.size();
  std::vector<Vec> rows(k + d * (k - 1), Vec(total));
  Vec rhs(rows.size());

  std::vector<std::size_t> base(k);
  for (std::size_t h = 1; h < k; ++h) base[h] = base[h - 1] + hulls[h - 1].size();
  for (std::size_t h = 0; h < k; ++h) {
    for (std::size_t i = 0; i < hulls[h].size(); ++i) rows[h][base[h] + i] = Rational(1);
    rhs[h] = Rational(1);
  }
  // Combination over hull 0 minus combination over hull h vanishes.
  for (std::size_t h = 1; h < k; ++h) {
    for (std::size_t j = 0; j < d; ++j) {
      auto& row = rows[k + (h - 1) * d + j];
      for (std::size_t i = 0; i < hulls[0].size(); ++i) row[base[0] + i] = hulls[0][i][j];
      for (std::size_t i = 0; i < hulls[h].size(); ++i) row[base[h] + i] = -hulls[h][i][j];
    }
  }

  CommonPointResult res;
  auto lp = solve_equality_feasibility(rows, rhs);
  if (!lp.feasible) return res;
  res.feasible = true;
  res.coefficients.resize(k);
  for (std::size_t h = 0; h < k; ++h)
    res.coefficients[h].assign(lp.x.begin() + base[h], lp.x.begin() + base[h] + hulls[h].size());
  res.point = combine(hulls[0], res.coefficients[0]);
  return res;
}

bool certificate_valid(const SeparationCertificate& c, std::span<const Vec> v1,
                       std::span<const Vec> v2) {
  if (c.hull1_side != 1 && c.hull1_side != -1) return false;
  if (c.margin_sq.sign() <= 0) return false;
  for (const auto& v : v1)
    if (c.separator.evaluate(v).sign() != c.hull1_side) return false;
  for (const auto& v : v2)
    if (c.separator.evaluate(v).sign() != -c.hull1_side) return false;
  Rational d1 = dist_sq_hull_hyperplane(v1, c.separator);
  Rational d2 = dist_sq_hull_hyperplane(v2, c.separator);
  return (d1 < d2 ? d1 : d2) == c.margin_sq;
}

bool witness_valid(const IntersectionWitness& w, std::span<const Vec> v1,
                   std::span<const Vec> v2) {
  if (w.coeffs1.size() != v1.size() || w.coeffs2.size() != v2.size()) return false;
  Rational s1, s2;
  for (const auto& l : w.coeffs1) {
    if (l.sign() < 0) return false;
    s1 += l;
  }
  for (const auto& l : w.coeffs2) {
    if (l.sign() < 0) return false;
    s2 += l;
  }
  if (s1 != Rational(1) || s2 != Rational(1)) return false;
  return combine(v1, w.coeffs1) == w.point && combine(v2, w.coeffs2) == w.point;
}

}  // namespace tvb
