#include "nccr/lattice.hpp"

#include <algorithm>

namespace nccr {

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<int> echelon(QMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int p = -1;
    for (int r = row; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(p, c), m.at(row, c));
    Rational inv = Rational(1) / m.at(row, col);
    for (int c = col; c < m.cols; ++c) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      Rational f = m.at(r, col);
      for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int qmatrix_rank(QMatrix m) { return static_cast<int>(echelon(m).size()); }

bool qmatrix_solve(QMatrix m, std::vector<Rational> b, std::vector<Rational>& x) {
  QMatrix aug(m.rows, m.cols + 1);
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols) = b[r];
  }
  std::vector<int> pivots = echelon(aug);
  for (int p : pivots)
    if (p == m.cols) return false;  // pivot in the augmented column
  x.assign(m.cols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(static_cast<int>(i), m.cols);
  return true;
}

std::vector<std::vector<Rational>> qmatrix_nullspace(QMatrix m) {
  const int n = m.cols;
  std::vector<int> pivots = echelon(m);
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(n, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -m.at(static_cast<int>(i), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<long>> integer_kernel_basis(const std::vector<std::vector<long>>& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  // Stack [M; I] and clear the M part column by column with unimodular
  // column operations; columns whose M part vanishes carry a kernel basis.
  std::vector<std::vector<BigInt>> w(rows + cols, std::vector<BigInt>(cols, BigInt(0)));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) w[r][c] = m[r][c];
  for (int c = 0; c < cols; ++c) w[rows + c][c] = 1;

  int lead = 0;
  for (int r = 0; r < rows && lead < cols; ++r) {
    // Euclidean reduction across columns lead..cols-1 on row r.
    for (;;) {
      int nz = -1;
      for (int c = lead; c < cols; ++c)
        if (w[r][c] != 0 && (nz < 0 || abs(w[r][c]) < abs(w[r][nz]))) nz = c;
      if (nz < 0) break;
      if (nz != lead)
        for (int rr = 0; rr < rows + cols; ++rr) std::swap(w[rr][nz], w[rr][lead]);
      bool done = true;
      for (int c = lead + 1; c < cols; ++c) {
        if (w[r][c] == 0) continue;
        BigInt q = w[r][c] / w[r][lead];
        // Round toward zero is fine; repeat until all are multiples.
        for (int rr = 0; rr < rows + cols; ++rr) w[rr][c] -= q * w[rr][lead];
        if (w[r][c] != 0) done = false;
      }
      if (done) {
        ++lead;
        break;
      }
    }
  }

  std::vector<std::vector<long>> basis;
  for (int c = 0; c < cols; ++c) {
    bool zero = true;
    for (int r = 0; r < rows; ++r)
      if (w[r][c] != 0) {
        zero = false;
        break;
      }
    if (!zero) continue;
    std::vector<long> v(cols);
    bool fits = true;
    for (int k = 0; k < cols; ++k) {
      if (!w[rows + k][c].fits_slong_p()) fits = false;
      v[k] = w[rows + k][c].get_si();
    }
    if (fits) basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace nccr
