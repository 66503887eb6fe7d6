#pragma once

#include <cstddef>
#include <vector>

#include "tcplan/algebra/graded_algebra.hpp"

namespace tcplan::algebra {

// Dense row-major rational matrix.
struct RationalMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> data;

  RationalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  Rational& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m);

std::size_t rank(RationalMatrix m);

// Basis of {x : Mx = 0}, one vector per free column (that entry set to 1).
std::vector<std::vector<Rational>> nullspace(RationalMatrix m);

}  // namespace tcplan::algebra
