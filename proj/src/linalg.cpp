#include "ssnm/linalg.hpp"

#include <stdexcept>

namespace ssnm {

namespace {

// Reduces M to row echelon form in place; returns the pivot column per pivot row.
std::vector<int> echelon(FracMatrix& M, int ncols) {
  std::vector<int> pivots;
  int row = 0;
  const int rows = static_cast<int>(M.rows());
  for (int col = 0; col < ncols && row < rows; ++col) {
    int p = -1;
    for (int r = row; r < rows; ++r) {
      if (!M(r, col).is_zero()) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    if (p != row) M.row(p).swap(M.row(row));
    const FracExpr inv = FracExpr(1) / M(row, col);
    for (int c = col; c < M.cols(); ++c) M(row, c) = M(row, c) * inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || M(r, col).is_zero()) continue;
      const FracExpr f = M(r, col);
      for (int c = col; c < M.cols(); ++c)
        if (!M(row, c).is_zero()) M(r, c) = M(r, c) - f * M(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int frac_rank(FracMatrix A) {
  return static_cast<int>(echelon(A, static_cast<int>(A.cols())).size());
}

SolveResult frac_solve(const FracMatrix& A, const FracVector& b) {
  if (A.rows() != b.rows()) throw std::invalid_argument("frac_solve: shape mismatch");
  const int n = static_cast<int>(A.cols());
  FracMatrix M(A.rows(), n + 1);
  M.leftCols(n) = A;
  M.col(n) = b;
  std::vector<int> pivots = echelon(M, n);

  SolveResult res;
  res.rank = static_cast<int>(pivots.size());
  res.consistent = true;
  for (int r = res.rank; r < M.rows(); ++r) {
    if (!M(r, n).is_zero()) {
      res.consistent = false;
      break;
    }
  }
  res.x = FracVector(n);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int i = 0; i < res.rank; ++i) {
    is_pivot[static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] = true;
    res.x(pivots[static_cast<std::size_t>(i)]) = M(i, n);
  }
  for (int c = 0; c < n; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) res.free_columns.push_back(c);
  return res;
}

}  // namespace ssnm
