#include "inflect/linalg.hpp"

#include <stdexcept>

namespace inflect {

SparsePoly det_polymatrix(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    for (const auto& e : row) {
      if (e.vars() != m[0][0].vars()) throw VariableError("matrix entries use different variables");
    }
  }
  const auto& vars = m[0][0].vars();

  // Clear denominators row by row so elimination runs over Z[vars].
  PolyMatrix a = m;
  Rational scale(1);
  for (auto& row : a) {
    Integer l(1);
    for (const auto& e : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), denominator_lcm(e).get_mpz_t());
    for (auto& e : row) e *= Rational(l);
    scale /= l;
  }

  SparsePoly prev = SparsePoly::constant(vars, Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return SparsePoly(vars);
      std::swap(a[k], a[r]);
      scale = -scale;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = divide_exact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      }
      a[i][k] = SparsePoly(vars);
    }
    prev = a[k][k];
  }
  return a[n - 1][n - 1] * scale;
}

SparsePoly resultant(const SparsePoly& a, const SparsePoly& b, std::string_view var) {
  if (a.vars() != b.vars()) throw VariableError("resultant: variable tuple mismatch");
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("resultant of two zero polynomials");
  const std::vector<SparsePoly> ca = coefficients_in(a, var);
  const std::vector<SparsePoly> cb = coefficients_in(b, var);
  const auto& rest = ca[0].vars();
  if (a.is_zero() || b.is_zero()) return SparsePoly(rest);
  const std::size_t da = ca.size() - 1;
  const std::size_t db = cb.size() - 1;
  if (da == 0) return pow(ca[0], static_cast<unsigned>(db));
  if (db == 0) return pow(cb[0], static_cast<unsigned>(da));

  const std::size_t n = da + db;
  PolyMatrix s(n, std::vector<SparsePoly>(n, SparsePoly(rest)));
  for (std::size_t r = 0; r < db; ++r) {
    for (std::size_t i = 0; i <= da; ++i) s[r][r + i] = ca[da - i];
  }
  for (std::size_t r = 0; r < da; ++r) {
    for (std::size_t i = 0; i <= db; ++i) s[db + r][r + i] = cb[db - i];
  }
  return det_polymatrix(s);
}

}  // namespace inflect
