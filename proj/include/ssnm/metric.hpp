#pragma once

#include <stdexcept>
#include <vector>

#include "ssnm/frac.hpp"
#include "ssnm/tensor.hpp"

namespace ssnm {

class DegenerateMetric : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Diagonal metric whose entries depend on x3 only.
struct MetricData {
  std::vector<Expr> diagonal;
  std::vector<FracExpr> inverse_diagonal;

  int dim() const { return static_cast<int>(diagonal.size()); }
};

// Throws DegenerateMetric on a zero entry or n < 3.
MetricData make_metric(std::vector<Expr> diagonal);

std::vector<FracExpr> metric_inverse(const MetricData& m);

// g^{ii} as ring elements. The curvature pipeline works in the Expr ring, so
// every diagonal entry must be a unit c*e^{kx3}; throws DegenerateMetric otherwise.
std::vector<Expr> ring_inverse(const MetricData& m);

Tensor metric_tensor(const MetricData& m);

// endo(u1,u2,y)^h = g^{hh} E_{u1 u2 y h}, i.e. E(U1,U2,U3,U4) = g(E(U1,U2)U3, U4).
// Stored with h first: endo(h, u1, u2, y).
template <typename Scalar>
BasicTensor<Scalar> raise_first(const BasicTensor<Scalar>& t04, const std::vector<Scalar>& ginv) {
  require_covariant(t04, 4, "raise_first");
  const int n = t04.dim();
  BasicTensor<Scalar> out(n, 1, 3);
  for (int h = 0; h < n; ++h)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          const Scalar& e = t04(i, j, k, h);
          if (!is_zero(e)) out(h, i, j, k) = ginv[static_cast<std::size_t>(h)] * e;
        }
  return out;
}

template <typename Scalar>
BasicTensor<Scalar> lower_first(const BasicTensor<Scalar>& t13, const std::vector<Scalar>& g) {
  if (t13.contravariant() != 1 || t13.covariant() != 3)
    throw ShapeError("lower_first: expected a (1,3) tensor");
  const int n = t13.dim();
  BasicTensor<Scalar> out(n, 0, 4);
  for (int h = 0; h < n; ++h)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          const Scalar& e = t13(h, i, j, k);
          if (!is_zero(e)) out(i, j, k, h) = g[static_cast<std::size_t>(h)] * e;
        }
  return out;
}

// Ric_{kj} = sum_a endo(a,k,j)^a. Not symmetrized.
template <typename Scalar>
BasicTensor<Scalar> trace_ricci_from_endo(const BasicTensor<Scalar>& endo) {
  if (endo.contravariant() != 1 || endo.covariant() != 3)
    throw ShapeError("trace_ricci_from_endo: expected a (1,3) tensor");
  const int n = endo.dim();
  BasicTensor<Scalar> ric(n, 0, 2);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      Scalar s(0);
      for (int a = 0; a < n; ++a) s += endo(a, a, k, j);
      ric(k, j) = s;
    }
  return ric;
}

}  // namespace ssnm
