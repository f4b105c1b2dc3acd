#include "ssnm/curvature.hpp"

#include <stdexcept>

#include "ssnm/products.hpp"

namespace ssnm {

namespace {

// Fields depend on the last coordinate only.
Expr partial(const Expr& e, int coord, int n) {
  return coord == n - 1 ? differentiate(e) : Expr();
}

std::size_t u(int i) { return static_cast<std::size_t>(i); }

}  // namespace

ConnectionCoeffs levi_civita(const MetricData& m) {
  const int n = m.dim();
  const auto ginv = ring_inverse(m);
  std::vector<Expr> dg;
  for (const auto& d : m.diagonal) dg.push_back(differentiate(d));
  auto dmetric = [&](int k, int a, int b) -> Expr {
    if (a != b || k != n - 1) return Expr();
    return dg[u(a)];
  };
  ConnectionCoeffs c{Tensor(n, 1, 2)};
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Expr s = dmetric(i, a, j) + dmetric(j, a, i) - dmetric(a, i, j);
        if (!s.is_zero()) c.gamma(a, i, j) = (ginv[u(a)] * s).scaled(Rational(1, 2));
      }
  return c;
}

ConnectionCoeffs ssnm_connection(const MetricData& m, const std::vector<Expr>& P) {
  const int n = m.dim();
  if (static_cast<int>(P.size()) != n)
    throw std::invalid_argument("P has " + std::to_string(P.size()) + " components, expected " +
                                std::to_string(n));
  ConnectionCoeffs c = levi_civita(m);
  for (int j = 0; j < n; ++j) {
    Expr omega = m.diagonal[u(j)] * P[u(j)];
    if (omega.is_zero()) continue;
    for (int a = 0; a < n; ++a) c.gamma(a, a, j) += omega;
  }
  return c;
}

Tensor riemann04(const ConnectionCoeffs& c, const MetricData& m) {
  const int n = m.dim();
  if (c.dim() != n) throw ShapeError("riemann04: dimension mismatch");
  Tensor R(n, 0, 4);
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Expr s = partial(c(h, k, j), i, n) - partial(c(h, k, i), j, n);
          for (int b = 0; b < n; ++b) {
            s += c(b, k, j) * c(h, b, i);
            s -= c(b, k, i) * c(h, b, j);
          }
          if (!s.is_zero()) R(h, k, i, j) = m.diagonal[u(h)] * s;
        }
  return R;
}

std::pair<Tensor, Expr> ricci_and_scalar(const Tensor& R, const MetricData& m) {
  const auto ginv = ring_inverse(m);
  Tensor ric = trace_ricci_from_endo(raise_first(R, ginv));
  Expr kappa;
  for (int k = 0; k < m.dim(); ++k) kappa += ginv[u(k)] * ric(k, k);
  return {std::move(ric), std::move(kappa)};
}

DerivedCurvatures derived_curvatures(const Tensor& R, const Tensor& Ric, const Expr& kappa,
                                     const MetricData& m) {
  const int n = m.dim();
  if (n < 3) throw ShapeError("derived curvatures need n >= 3");
  Tensor g = metric_tensor(m);
  Tensor gRic = kulkarni(g, Ric);
  Tensor gg = kulkarni(g, g);
  const Rational inv_n2(1, n - 2);

  DerivedCurvatures d;
  // K = R - (g^Ric)/(n-2)
  d.K = tensor_sub(R, tensor_scale(gRic, Expr(inv_n2)));
  // C = K + κ/(2(n-1)(n-2)) g^g
  d.C = tensor_add(d.K, tensor_scale(gg, kappa.scaled(Rational(1, 2 * (n - 1) * (n - 2)))));
  // W = R - κ/(2n(n-1)) g^g
  d.W = tensor_sub(R, tensor_scale(gg, kappa.scaled(Rational(1, 2 * n * (n - 1)))));
  // P_{hkij} = R_{hkij} - (g_hj Ric_ki - g_kj Ric_hi)/(n-1)
  d.P = R;
  const Rational inv_n1(1, n - 1);
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Expr corr = g(h, j) * Ric(k, i) - g(k, j) * Ric(h, i);
          if (!corr.is_zero()) d.P(h, k, i, j) -= corr.scaled(inv_n1);
        }
  return d;
}

Tensor covariant_derivative(const ConnectionCoeffs& c, const Tensor& t) {
  if (t.contravariant() != 0) throw ShapeError("covariant_derivative: contravariant input");
  const int n = t.dim();
  const int q = t.rank();
  Tensor out(n, 0, q + 1);
  std::vector<int> sub(u(q));
  for (std::size_t f = 0; f < out.size(); ++f) {
    std::vector<int> idx = out.unflat(f);
    const int l = idx[0];
    std::copy(idx.begin() + 1, idx.end(), sub.begin());
    Expr s = partial(t.get(sub), l, n);
    for (int mpos = 0; mpos < q; ++mpos) {
      const int im = sub[u(mpos)];
      std::vector<int> moved = sub;
      for (int b = 0; b < n; ++b) {
        const Expr& gam = c(b, l, im);
        if (gam.is_zero()) continue;
        moved[u(mpos)] = b;
        const Expr& tv = t.get(moved);
        if (!tv.is_zero()) s -= gam * tv;
      }
    }
    out[f] = std::move(s);
  }
  return out;
}

std::vector<std::pair<std::string, const Tensor*>> CurvatureSet::fours() const {
  return {{"R", &R}, {"C", &C}, {"K", &K}, {"W", &W}, {"P", &P}};
}

const Tensor& CurvatureSet::four(const std::string& name) const {
  for (const auto& [n, t] : fours())
    if (n == name) return *t;
  throw std::out_of_range("unknown curvature tensor " + name);
}

const Tensor& CurvatureSet::derivative(const std::string& name) const {
  if (name == "R") return dR;
  if (name == "C") return dC;
  if (name == "K") return dK;
  if (name == "W") return dW;
  if (name == "P") return dP;
  if (name == "Ric") return dRic;
  throw std::out_of_range("unknown derivative " + name);
}

CurvatureSet compute_curvatures(const MetricData& m, const ConnectionCoeffs& c) {
  CurvatureSet s;
  s.connection = c;
  s.g = metric_tensor(m);
  s.R = riemann04(c, m);
  std::tie(s.Ric, s.kappa) = ricci_and_scalar(s.R, m);
  DerivedCurvatures d = derived_curvatures(s.R, s.Ric, s.kappa, m);
  s.C = std::move(d.C);
  s.K = std::move(d.K);
  s.W = std::move(d.W);
  s.P = std::move(d.P);
  s.dR = covariant_derivative(c, s.R);
  s.dC = covariant_derivative(c, s.C);
  s.dK = covariant_derivative(c, s.K);
  s.dW = covariant_derivative(c, s.W);
  s.dP = covariant_derivative(c, s.P);
  s.dRic = covariant_derivative(c, s.Ric);
  return s;
}

}  // namespace ssnm
