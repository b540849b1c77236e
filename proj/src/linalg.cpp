#include "straightedge/linalg.hpp"

#include <stdexcept>

namespace straightedge {

namespace {

using IntegerMatrix = std::vector<std::vector<Integer>>;

// Clears denominators row by row; returns the product of the row scale factors.
Integer to_integer_rows(const RationalMatrix& m, IntegerMatrix& out) {
  Integer scale = 1;
  out.assign(m.size(), {});
  for (std::size_t i = 0; i < m.size(); ++i) {
    Integer l = 1;
    for (const auto& v : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    out[i].reserve(m[i].size());
    for (const auto& v : m[i]) out[i].push_back(v.get_num() * (l / v.get_den()));
    scale *= l;
  }
  return scale;
}

// In-place fraction-free row echelon form. Returns pivot columns; *sign tracks row swaps.
std::vector<std::size_t> bareiss_echelon(IntegerMatrix& a, int* sign) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      if (sign) *sign = -*sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Rational determinant(const RationalMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return 1;
  IntegerMatrix a;
  Integer scale = to_integer_rows(m, a);
  int sign = 1;
  auto pivots = bareiss_echelon(a, &sign);
  if (pivots.size() < n) return 0;
  Rational d(a[n - 1][n - 1] * sign, scale);
  d.canonicalize();
  return d;
}

RationalVector primitive(const RationalVector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  Integer g = 0;
  std::vector<Integer> n;
  n.reserve(v.size());
  for (const auto& x : v) {
    n.push_back(x.get_num() * (l / x.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.back().get_mpz_t());
  }
  if (g == 0) return v;
  for (const auto& x : n)
    if (x != 0) {
      if (x < 0) g = -g;
      break;
    }
  RationalVector out;
  out.reserve(v.size());
  for (const auto& x : n) out.emplace_back(Integer(x / g));
  return out;
}

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
  if (m.empty()) return {};
  const std::size_t cols = m[0].size();
  IntegerMatrix a;
  to_integer_rows(m, a);
  auto pivots = bareiss_echelon(a, nullptr);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector x(cols, Rational(0));
    x[f] = 1;
    for (std::size_t k = pivots.size(); k-- > 0;) {
      std::size_t c = pivots[k];
      Rational s = 0;
      for (std::size_t j = c + 1; j < cols; ++j)
        if (!is_zero(x[j])) s += Rational(a[k][j]) * x[j];
      x[c] = -s / Rational(a[k][c]);
    }
    basis.push_back(primitive(x));
  }
  return basis;
}

}  // namespace straightedge
