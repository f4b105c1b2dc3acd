#pragma once

#include <vector>

#include "ssnm/metric.hpp"
#include "ssnm/tensor.hpp"

namespace ssnm {

// (A^E)(y1,y2,u1,u2) = A(y1,u2)E(y2,u1) - A(y1,u1)E(y2,u2)
//                    + A(y2,u1)E(y1,u2) - A(y2,u2)E(y1,u1)
template <typename Scalar>
BasicTensor<Scalar> kulkarni(const BasicTensor<Scalar>& A, const BasicTensor<Scalar>& E) {
  require_covariant(A, 2, "kulkarni");
  require_covariant(E, 2, "kulkarni");
  if (A.dim() != E.dim()) throw ShapeError("kulkarni: dimension mismatch");
  const int n = A.dim();
  BasicTensor<Scalar> out(n, 0, 4);
  for (int y1 = 0; y1 < n; ++y1)
    for (int y2 = 0; y2 < n; ++y2)
      for (int u1 = 0; u1 < n; ++u1)
        for (int u2 = 0; u2 < n; ++u2)
          out(y1, y2, u1, u2) = A(y1, u2) * E(y2, u1) - A(y1, u1) * E(y2, u2) +
                                A(y2, u1) * E(y1, u2) - A(y2, u2) * E(y1, u1);
  return out;
}

namespace detail {

// Apply a derivation to F: out(y.., u1, u2) = sum_m sum_h act(u1,u2,y_m,h) F(.. h at m ..),
// where act(u1,u2,y,h) is supplied as a (1,3)-shaped table indexed (h,u1,u2,y).
template <typename Scalar>
BasicTensor<Scalar> derive(const BasicTensor<Scalar>& act, const BasicTensor<Scalar>& F) {
  const int n = F.dim();
  const int k = F.rank();
  BasicTensor<Scalar> out(n, 0, k + 2);
  std::vector<int> idx(static_cast<std::size_t>(k + 2));
  std::vector<int> fidx(static_cast<std::size_t>(k));
  for (std::size_t f = 0; f < out.size(); ++f) {
    idx = out.unflat(f);
    const int u1 = idx[static_cast<std::size_t>(k)];
    const int u2 = idx[static_cast<std::size_t>(k + 1)];
    Scalar s(0);
    for (int m = 0; m < k; ++m) {
      const int ym = idx[static_cast<std::size_t>(m)];
      for (int h = 0; h < n; ++h) {
        const Scalar& a = act(h, u1, u2, ym);
        if (is_zero(a)) continue;
        for (int t = 0; t < k; ++t) fidx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t)];
        fidx[static_cast<std::size_t>(m)] = h;
        const Scalar& fv = F.get(fidx);
        if (is_zero(fv)) continue;
        s += a * fv;
      }
    }
    out[f] = s;
  }
  return out;
}

}  // namespace detail

// (E.F)(y1..yk,u1,u2) = -sum_m F(y1,..,E(u1,u2)y_m,..,yk), k in {2,4}.
template <typename Scalar>
BasicTensor<Scalar> dot(const BasicTensor<Scalar>& E4, const BasicTensor<Scalar>& F,
                        const std::vector<Scalar>& ginv) {
  require_covariant(E4, 4, "dot");
  if (F.contravariant() != 0 || (F.rank() != 2 && F.rank() != 4))
    throw ShapeError("dot: F must be a (0,2) or (0,4) tensor");
  BasicTensor<Scalar> endo = raise_first(E4, ginv);
  return tensor_neg(detail::derive(endo, F));
}

// Q(Z,F)(y1..yk,u1,u2) = sum_m [Z(u1,y_m) F(..u2 at m..) - Z(u2,y_m) F(..u1 at m..)].
// Z need not be symmetric.
template <typename Scalar>
BasicTensor<Scalar> tachibana(const BasicTensor<Scalar>& Z, const BasicTensor<Scalar>& F) {
  require_covariant(Z, 2, "tachibana");
  if (F.contravariant() != 0 || (F.rank() != 2 && F.rank() != 4))
    throw ShapeError("tachibana: F must be a (0,2) or (0,4) tensor");
  const int n = F.dim();
  // (U1 ^_Z U2) y = Z(u1,y) u2 - Z(u2,y) u1, as a table indexed (h,u1,u2,y)
  BasicTensor<Scalar> act(n, 1, 3);
  for (int u1 = 0; u1 < n; ++u1)
    for (int u2 = 0; u2 < n; ++u2)
      for (int y = 0; y < n; ++y) {
        act(u2, u1, u2, y) += Z(u1, y);
        act(u1, u1, u2, y) -= Z(u2, y);
      }
  return detail::derive(act, F);
}

}  // namespace ssnm
