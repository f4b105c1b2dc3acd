#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ssnm/expr.hpp"
#include "ssnm/parse.hpp"
#include "ssnm/tensor.hpp"

namespace testing_support {

inline const ssnm::SymbolSet& ab() {
  static const ssnm::SymbolSet s{"a", "b"};
  return s;
}

inline ssnm::Expr E(const std::string& text) { return ssnm::parse_expr(text, ab()); }

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  int pick(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  double unit() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
};

// Small random Expr: up to `terms` terms, weights in [-w, w], atoms from a, b
// with orders up to 2.
inline ssnm::Expr random_expr(Rng& r, int terms = 3, int w = 3) {
  ssnm::Expr e;
  const int n = r.pick(0, terms);
  for (int i = 0; i < n; ++i) {
    ssnm::Expr t = ssnm::Expr::term(ssnm::Rational(r.pick(-5, 5), r.pick(1, 3)), r.pick(-w, w), {});
    const int atoms = r.pick(0, 2);
    for (int k = 0; k < atoms; ++k)
      t = t * ssnm::Expr::atom(r.pick(0, 1) ? "a" : "b", r.pick(0, 2));
    e += t;
  }
  return e;
}

inline ssnm::Tensor random_tensor(Rng& r, int dim, int rank, int density = 3) {
  ssnm::Tensor t(dim, 0, rank);
  for (std::size_t f = 0; f < t.size(); ++f)
    if (r.pick(0, density) == 0) t[f] = random_expr(r, 2, 2);
  return t;
}

// Values for a(t) = 1 + t^2 and b(t) = t^3 - t and their derivatives.
inline ssnm::FuncTable poly_table(double t) {
  ssnm::FuncTable f;
  f[{"a", 0}] = 1 + t * t;
  f[{"a", 1}] = 2 * t;
  f[{"a", 2}] = 2;
  f[{"a", 3}] = 0;
  f[{"b", 0}] = t * t * t - t;
  f[{"b", 1}] = 3 * t * t - 1;
  f[{"b", 2}] = 6 * t;
  f[{"b", 3}] = 6;
  f[{"b", 4}] = 0;
  return f;
}

}  // namespace testing_support

#include <map>
#include <utility>

#include "ssnm/metric.hpp"
#include "ssnm/report.hpp"

namespace testing_support {

inline ssnm::MetricData sol3(int eps) {
  return ssnm::make_metric({E("exp(2*x3)"), E("exp(-2*x3)"), ssnm::Expr(eps)});
}

// Pipelines are pure; cache them across test cases.
inline const ssnm::Pipeline& preset(const std::string& name, int eps) {
  static std::map<std::pair<std::string, int>, ssnm::Pipeline> cache;
  auto key = std::make_pair(name, eps);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, ssnm::compute(ssnm::preset_config(name, eps))).first;
  return it->second;
}

inline const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> v{"sol3-a", "sol3-b", "sol3-lc"};
  return v;
}

}  // namespace testing_support
