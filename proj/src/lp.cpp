#include "tvb/lp.hpp"

#include <stdexcept>

namespace tvb {

FeasibilityResult solve_equality_feasibility(const std::vector<Vec>& rows, const Vec& rhs) {
  const std::size_t m = rows.size();
  if (rhs.size() != m) throw InputError("rhs size does not match row count");
  const std::size_t n = m ? rows[0].size() : 0;
  for (const auto& r : rows)
    if (r.size() != n) throw InputError("ragged constraint matrix");

  // Tableau: n original columns, m artificial columns, rhs column.  Row m
  // is the phase-1 cost row (reduced costs; last cell = -objective).
  const std::size_t cols = n + m + 1;
  std::vector<Vec> t(m + 1, Vec(cols));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = rhs[i].sign() < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? -rows[i][j] : rows[i][j];
    t[i][n + i] = Rational(1);
    t[i][cols - 1] = flip ? -rhs[i] : rhs[i];
    basis[i] = n + i;
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rational s;
    for (std::size_t i = 0; i < m; ++i) s += t[i][j];
    t[m][j] = -s;
  }
  {
    Rational s;
    for (std::size_t i = 0; i < m; ++i) s += t[i][cols - 1];
    t[m][cols - 1] = -s;
  }

  while (true) {
    std::size_t enter = cols - 1;
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      if (t[m][j].sign() < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols - 1) break;

    std::size_t leave = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter].sign() <= 0) continue;
      if (leave == m) {
        leave = i;
        continue;
      }
      Rational cur = t[i][cols - 1] / t[i][enter];
      Rational old = t[leave][cols - 1] / t[leave][enter];
      if (cur < old || (cur == old && basis[i] < basis[leave])) leave = i;
    }
    if (leave == m) throw std::logic_error("phase-1 simplex reported unbounded objective");

    Rational piv = t[leave][enter];
    for (std::size_t j = 0; j < cols; ++j) t[leave][j] = t[leave][j] / piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || t[i][enter].is_zero()) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  FeasibilityResult res;
  Rational objective = -t[m][cols - 1];
  res.feasible = objective.is_zero();
  if (res.feasible) {
    res.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] < n) res.x[basis[i]] = t[i][cols - 1];
  }
  return res;
}

}  // namespace tvb
