#include "refrig/linalg.hpp"

#include <stdexcept>

namespace refrig {

std::vector<Rational> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

Matrix Matrix::without_row(std::size_t r) const {
  Matrix out(rows_ - 1, cols_);
  for (std::size_t i = 0, k = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (std::size_t c = 0; c < cols_; ++c) out(k, c) = (*this)(i, c);
    ++k;
  }
  return out;
}

Echelon fraction_free_reduce(const Matrix& m) {
  Echelon e;
  e.cols = m.cols();
  auto& a = e.rows;
  a.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(primitive_integer_row(m.row(r)));

  Integer prev = 1;
  Integer t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const Integer piv = a[r][c];
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r) continue;
      const Integer f = a[i][c];
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j == c) continue;
        t = piv * a[i][j] - f * a[r][j];
        if (!mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()))
          throw std::logic_error("fraction-free elimination: inexact division");
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = piv;
    e.pivot_columns.push_back(c);
    ++r;
  }
  e.pivot_value = prev;
  return e;
}

std::size_t rank(const Matrix& m) { return fraction_free_reduce(m).pivot_columns.size(); }

std::vector<std::vector<Integer>> nullspace(const Matrix& m) {
  const Echelon e = fraction_free_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;

  std::vector<std::vector<Integer>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Integer> x(m.cols(), 0);
    x[f] = e.pivot_value;
    for (std::size_t k = 0; k < e.pivot_columns.size(); ++k) x[e.pivot_columns[k]] = -e.rows[k][f];
    Integer g = 0;
    for (const auto& v : x) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (sgn(x[f]) < 0) g = -g;
    for (auto& v : x) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    basis.push_back(std::move(x));
  }
  return basis;
}

Rational apply_row(const Matrix& m, std::size_t r, const std::vector<Rational>& x) {
  Rational s = 0;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (sgn(m(r, c)) != 0) s += m(r, c) * x[c];
  return s;
}

}  // namespace refrig
