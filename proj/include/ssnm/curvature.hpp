#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ssnm/metric.hpp"
#include "ssnm/tensor.hpp"

namespace ssnm {

// gamma(a, i, j) = Γ^a_{ij}, with ∇_{∂i} ∂j = Γ^a_{ij} ∂a.
struct ConnectionCoeffs {
  Tensor gamma;

  int dim() const { return gamma.dim(); }
  const Expr& operator()(int a, int i, int j) const { return gamma(a, i, j); }
};

ConnectionCoeffs levi_civita(const MetricData& m);
// Γ̂^a_{ij} = Γ^a_{ij} + δ^a_i ω_j, ω_j = g_jj P^j.
ConnectionCoeffs ssnm_connection(const MetricData& m, const std::vector<Expr>& P);

// R_{hkij} = g_hh (∂i Γ^h_{kj} - ∂j Γ^h_{ki} + Γ^b_{kj} Γ^h_{bi} - Γ^b_{ki} Γ^h_{bj})
Tensor riemann04(const ConnectionCoeffs& c, const MetricData& m);
std::pair<Tensor, Expr> ricci_and_scalar(const Tensor& R, const MetricData& m);

struct DerivedCurvatures {
  Tensor C, K, W, P;
};
DerivedCurvatures derived_curvatures(const Tensor& R, const Tensor& Ric, const Expr& kappa,
                                     const MetricData& m);

// (∇T)_{l;i1..iq} = ∂l T - sum_m Γ^b_{l i_m} T(..b..); derivative index first.
Tensor covariant_derivative(const ConnectionCoeffs& c, const Tensor& t);

struct CurvatureSet {
  ConnectionCoeffs connection;
  Tensor g;
  Tensor R, C, K, W, P;
  Tensor Ric;
  Expr kappa;
  Tensor dR, dC, dK, dW, dP, dRic;

  // Fixed order R, C, K, W, P.
  std::vector<std::pair<std::string, const Tensor*>> fours() const;
  const Tensor& four(const std::string& name) const;
  const Tensor& derivative(const std::string& name) const;
};

CurvatureSet compute_curvatures(const MetricData& m, const ConnectionCoeffs& c);

}  // namespace ssnm
