#pragma once

#include <map>
#include <string>
#include <vector>

#include "ssnm/expr.hpp"

namespace ssnm {

struct Pipeline;

// p(t) = sum c_k t^k
struct PolyFunction {
  std::vector<double> coeffs;
  double derivative(double t, int order) const;
};

FuncTable function_table(const std::map<std::string, PolyFunction>& funcs, double x3,
                         int max_order);

struct NumericSummary {
  int samples = 0;
  unsigned long long seed = 0;
  int points_tested = 0;
  long components_compared = 0;
  double max_relative_error = 0.0;
  std::string worst_component;
  double worst_x3 = 0.0;
  double tolerance = 1e-5;
  bool passed = false;
};

// Deterministic sample points in [-1, 1] (splitmix64; no library distribution).
std::vector<double> sample_points(int samples, unsigned long long seed);

// Compares every symbolic tensor, evaluated at the sample points, with a numeric
// pipeline that differentiates the metric and P by central finite differences.
NumericSummary numeric_crosscheck(const Pipeline& p, int samples, unsigned long long seed);

}  // namespace ssnm
