#include "tvb/linalg.hpp"

#include <string>

namespace tvb {

namespace {

// Multiply each row by the lcm of its denominators.  Row scaling never
// changes solvability or rank, and for augmented rows it scales both sides.
std::vector<std::vector<mpz_class>> clear_denominators(const std::vector<Vec>& rows) {
  std::vector<std::vector<mpz_class>> out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    mpz_class lcm_den = 1;
    for (const auto& x : rows[i])
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.den().get_mpz_t());
    out[i].resize(rows[i].size());
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      out[i][j] = rows[i][j].num() * (lcm_den / rows[i][j].den());
  }
  return out;
}

// Fraction-free (Bareiss) forward elimination with row pivoting, skipping
// rank-deficient columns.  Returns the pivot columns; m is left upper
// trapezoidal on those columns.  Sylvester's identity makes every division
// exact.
std::vector<std::size_t> bareiss(std::vector<std::vector<mpz_class>>& m,
                                 std::size_t cols_to_eliminate) {
  std::vector<std::size_t> pivot_cols;
  const std::size_t nrows = m.size();
  if (nrows == 0) return pivot_cols;
  const std::size_t ncols = m[0].size();
  mpz_class prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_to_eliminate && row < nrows; ++col) {
    std::size_t p = row;
    while (p < nrows && m[p][col] == 0) ++p;
    if (p == nrows) continue;
    if (p != row) std::swap(m[p], m[row]);
    for (std::size_t i = row + 1; i < nrows; ++i) {
      for (std::size_t j = col + 1; j < ncols; ++j) {
        mpz_class t = m[row][col] * m[i][j] - m[i][col] * m[row][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
      m[i][col] = 0;
    }
    prev = m[row][col];
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

}  // namespace

std::optional<Vec> solve_rational_system(const std::vector<Vec>& a, const Vec& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw InputError("rhs size does not match row count");
  std::vector<Vec> aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw InputError("matrix must be square");
    aug[i] = a[i];
    aug[i].push_back(b[i]);
  }
  auto m = clear_denominators(aug);
  auto pivots = bareiss(m, n);
  if (pivots.size() != n) return std::nullopt;

  Vec x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational acc{Rational(m[ii][n])};
    for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(m[ii][j]) * x[j];
    x[ii] = acc / Rational(m[ii][ii]);
  }
  return x;
}

std::optional<Vec> solve_linear(std::span<const Hyperplane> planes) {
  if (planes.empty()) throw InputError("no hyperplanes to intersect");
  const std::size_t d = planes[0].dimension();
  if (planes.size() != d)
    throw InputError("need exactly " + std::to_string(d) + " hyperplanes in R^" +
                     std::to_string(d) + ", got " + std::to_string(planes.size()));
  std::vector<Vec> a(d);
  Vec b(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (planes[i].dimension() != d) throw InputError("mixed hyperplane dimensions");
    a[i] = planes[i].normal;
    b[i] = planes[i].offset;
  }
  return solve_rational_system(a, b);
}

std::size_t rank(const std::vector<Vec>& rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != ncols) throw InputError("ragged matrix");
  auto m = clear_denominators(rows);
  return bareiss(m, ncols).size();
}

bool rows_independent(const std::vector<Vec>& rows) {
  return rank(rows) == rows.size();
}

}  // namespace tvb
