#pragma once

#include <vector>

#include <Eigen/Core>

#include "ssnm/frac.hpp"

namespace Eigen {

// Exact field scalar: storage and block operations only, no pivot-by-magnitude
// decompositions (those need an ordering).
template <>
struct NumTraits<ssnm::FracExpr> : GenericNumTraits<ssnm::FracExpr> {
  using Real = ssnm::FracExpr;
  using NonInteger = ssnm::FracExpr;
  using Literal = ssnm::FracExpr;
  using Nested = ssnm::FracExpr;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 128
  };
};

}  // namespace Eigen

namespace ssnm {

using FracMatrix = Eigen::Matrix<FracExpr, Eigen::Dynamic, Eigen::Dynamic>;
using FracVector = Eigen::Matrix<FracExpr, Eigen::Dynamic, 1>;

// Gaussian elimination with exact zero pivoting (first nonzero entry).
int frac_rank(FracMatrix A);

struct SolveResult {
  bool consistent = false;
  int rank = 0;
  FracVector x;                 // particular solution; free variables set to 0
  std::vector<int> free_columns;
};

SolveResult frac_solve(const FracMatrix& A, const FracVector& b);

}  // namespace ssnm
