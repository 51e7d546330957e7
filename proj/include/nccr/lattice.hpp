#pragma once

#include <vector>

#include "nccr/rational.hpp"

namespace nccr {

// Dense exact-rational matrix, row major.
struct QMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;

  QMatrix() = default;
  QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Rational(0)) {}
  Rational& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Rational& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

int qmatrix_rank(QMatrix m);

// One solution of m x = b, or empty if inconsistent.
bool qmatrix_solve(QMatrix m, std::vector<Rational> b, std::vector<Rational>& x);

// Basis of the rational null space.
std::vector<std::vector<Rational>> qmatrix_nullspace(QMatrix m);

// Basis of the integer kernel lattice {v : M v = 0} of an integer matrix,
// via column reduction of the stacked [M; I] matrix.
std::vector<std::vector<long>> integer_kernel_basis(const std::vector<std::vector<long>>& m);

}  // namespace nccr
