#pragma once

// Exact dense linear algebra over Q via fraction-free (Bareiss) Gauss-Jordan
// elimination on integer-scaled rows.

#include "refrig/exact.hpp"

#include <cstddef>
#include <vector>

namespace refrig {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> row(std::size_t r) const;
  Matrix without_row(std::size_t r) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Result of fraction-free Gauss-Jordan on a row-scaled integer copy of the input.
// Every pivot entry equals `pivot_value`; entries of pivot columns are zero off the pivot.
struct Echelon {
  std::vector<std::vector<Integer>> rows;  // first `pivot_columns.size()` rows are the pivot rows
  std::vector<std::size_t> pivot_columns;
  Integer pivot_value = 1;
  std::size_t cols = 0;
};

Echelon fraction_free_reduce(const Matrix& m);

std::size_t rank(const Matrix& m);

// Integer basis of {x : m x = 0}, one vector per free column, each primitive
// (gcd 1) with a positive entry at its free column.
std::vector<std::vector<Integer>> nullspace(const Matrix& m);

Rational apply_row(const Matrix& m, std::size_t r, const std::vector<Rational>& x);

}  // namespace refrig
