#include "ssnm/metric.hpp"

#include <string>

namespace ssnm {

MetricData make_metric(std::vector<Expr> diagonal) {
  if (diagonal.size() < 3) throw DegenerateMetric("metric dimension must be at least 3");
  if (diagonal.size() > 9) throw DegenerateMetric("metric dimension must be at most 9");
  MetricData m;
  for (std::size_t i = 0; i < diagonal.size(); ++i) {
    if (diagonal[i].is_zero())
      throw DegenerateMetric("non-invertible metric: g" + std::to_string(i + 1) +
                             std::to_string(i + 1) + " = 0");
    m.inverse_diagonal.emplace_back(Expr(1), diagonal[i]);
  }
  m.diagonal = std::move(diagonal);
  return m;
}

std::vector<FracExpr> metric_inverse(const MetricData& m) {
  std::vector<FracExpr> out;
  for (const auto& d : m.diagonal) {
    if (d.is_zero()) throw DegenerateMetric("non-invertible metric");
    out.emplace_back(Expr(1), d);
  }
  return out;
}

std::vector<Expr> ring_inverse(const MetricData& m) {
  std::vector<Expr> out;
  for (std::size_t i = 0; i < m.diagonal.size(); ++i) {
    auto inv = unit_inverse(m.diagonal[i]);
    if (!inv)
      throw DegenerateMetric("metric entry g" + std::to_string(i + 1) + std::to_string(i + 1) +
                             " = " + m.diagonal[i].str() +
                             " is not of the form c*exp(k*x3); unsupported");
    out.push_back(*inv);
  }
  return out;
}

Tensor metric_tensor(const MetricData& m) {
  const int n = m.dim();
  Tensor g(n, 0, 2);
  for (int i = 0; i < n; ++i) g(i, i) = m.diagonal[static_cast<std::size_t>(i)];
  return g;
}

std::string index_label(std::span<const int> idx) {
  std::string s;
  for (int i : idx) s += static_cast<char>('1' + i);
  return s;
}

std::vector<int> parse_index_label(const std::string& label, int dim) {
  std::vector<int> idx;
  for (char c : label) {
    int v = c - '1';
    if (v < 0 || v >= dim) throw std::out_of_range("bad index label '" + label + "'");
    idx.push_back(v);
  }
  return idx;
}

}  // namespace ssnm
