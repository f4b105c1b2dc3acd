#include "ssnm/numeric.hpp"

#include <cmath>
#include <functional>

#include "ssnm/products.hpp"
#include "ssnm/report.hpp"

namespace ssnm {

double PolyFunction::derivative(double t, int order) const {
  // d^order/dt^order of sum c_k t^k
  double s = 0.0;
  for (std::size_t k = static_cast<std::size_t>(order); k < coeffs.size(); ++k) {
    double falling = 1.0;
    for (int j = 0; j < order; ++j) falling *= static_cast<double>(k - static_cast<std::size_t>(j));
    s += coeffs[k] * falling * std::pow(t, static_cast<double>(k) - order);
  }
  return s;
}

FuncTable function_table(const std::map<std::string, PolyFunction>& funcs, double x3,
                         int max_order) {
  FuncTable t;
  for (const auto& [name, f] : funcs)
    for (int o = 0; o <= max_order; ++o) t[FuncAtom{name, o}] = f.derivative(x3, o);
  return t;
}

std::vector<double> sample_points(int samples, unsigned long long seed) {
  std::vector<double> xs;
  unsigned long long state = seed;
  for (int i = 0; i < samples; ++i) {
    state += 0x9e3779b97f4a7c15ULL;
    unsigned long long z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    double unit = static_cast<double>(z >> 11) * 0x1.0p-53;
    xs.push_back(-1.0 + 2.0 * unit);
  }
  return xs;
}

namespace {

constexpr double kH = 1e-4;        // Christoffels and curvature
constexpr double kOuterH = 1e-2;   // ∂ of curvature tensors (5-point stencil)
constexpr int kMaxOrder = 8;

std::size_t u(int i) { return static_cast<std::size_t>(i); }

struct NumericModel {
  const Pipeline& p;
  std::map<std::string, PolyFunction> funcs;
  int n;

  std::vector<double> metric(double x) const {
    FuncTable t = function_table(funcs, x, kMaxOrder);
    std::vector<double> g;
    for (const auto& e : p.problem.metric.diagonal) g.push_back(evaluate(e, x, t));
    return g;
  }

  std::vector<double> field(double x) const {
    FuncTable t = function_table(funcs, x, kMaxOrder);
    std::vector<double> v;
    for (const auto& e : p.problem.P) v.push_back(evaluate(e, x, t));
    return v;
  }

  // Γ̂^a_{ij} from g and a central difference of g.
  NumTensor gamma(double x) const {
    const auto g = metric(x);
    const auto gp = metric(x + kH);
    const auto gm = metric(x - kH);
    const auto P = field(x);
    NumTensor G(n, 1, 2);
    const int last = n - 1;
    for (int a = 0; a < n; ++a) {
      const double dga = (gp[u(a)] - gm[u(a)]) / (2 * kH);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          double s = 0.0;
          if (i == last && j == a) s += dga;
          if (j == last && i == a) s += dga;
          if (a == last && i == j) s -= (gp[u(i)] - gm[u(i)]) / (2 * kH);
          G(a, i, j) = 0.5 * s / g[u(a)];
        }
    }
    for (int a = 0; a < n; ++a)
      for (int j = 0; j < n; ++j) G(a, a, j) += g[u(j)] * P[u(j)];
    return G;
  }

  struct Curv {
    std::vector<double> g, ginv;
    NumTensor G, R, Ric, C, K, W, P;
    double kappa = 0.0;
  };

  Curv curvature(double x) const {
    Curv c;
    c.g = metric(x);
    for (double v : c.g) c.ginv.push_back(1.0 / v);
    c.G = gamma(x);
    const NumTensor Gp = gamma(x + kH);
    const NumTensor Gm = gamma(x - kH);
    auto dG = [&](int a, int i, int j, int dir) {
      if (dir != n - 1) return 0.0;
      return (Gp(a, i, j) - Gm(a, i, j)) / (2 * kH);
    };
    c.R = NumTensor(n, 0, 4);
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            double s = dG(h, k, j, i) - dG(h, k, i, j);
            for (int b = 0; b < n; ++b) s += c.G(b, k, j) * c.G(h, b, i) - c.G(b, k, i) * c.G(h, b, j);
            c.R(h, k, i, j) = c.g[u(h)] * s;
          }
    c.Ric = NumTensor(n, 0, 2);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int a = 0; a < n; ++a) s += c.ginv[u(a)] * c.R(a, k, j, a);
        c.Ric(k, j) = s;
      }
    for (int k = 0; k < n; ++k) c.kappa += c.ginv[u(k)] * c.Ric(k, k);

    NumTensor gt(n, 0, 2);
    for (int i = 0; i < n; ++i) gt(i, i) = c.g[u(i)];
    const NumTensor gRic = kulkarni(gt, c.Ric);
    const NumTensor gg = kulkarni(gt, gt);
    const double nd = n;
    c.K = c.R;
    c.C = c.R;
    c.W = c.R;
    c.P = c.R;
    for (std::size_t f = 0; f < c.R.size(); ++f) {
      c.K[f] -= gRic[f] / (nd - 2);
      c.C[f] = c.K[f] + c.kappa / (2 * (nd - 1) * (nd - 2)) * gg[f];
      c.W[f] -= c.kappa / (2 * nd * (nd - 1)) * gg[f];
    }
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            c.P(h, k, i, j) -= (gt(h, j) * c.Ric(k, i) - gt(k, j) * c.Ric(h, i)) / (nd - 1);
    return c;
  }

  // ∇T at x with ∂T from a five-point stencil of the numeric tensor.
  NumTensor nabla(double x, const NumTensor& G,
                  const std::function<NumTensor(const Curv&)>& pick) const {
    const NumTensor t0 = pick(curvature(x));
    const NumTensor t1 = pick(curvature(x + kOuterH));
    const NumTensor t2 = pick(curvature(x + 2 * kOuterH));
    const NumTensor m1 = pick(curvature(x - kOuterH));
    const NumTensor m2 = pick(curvature(x - 2 * kOuterH));
    const int q = t0.rank();
    NumTensor out(n, 0, q + 1);
    for (std::size_t f = 0; f < out.size(); ++f) {
      std::vector<int> idx = out.unflat(f);
      const int l = idx[0];
      std::vector<int> sub(idx.begin() + 1, idx.end());
      const std::size_t sf = t0.flat(sub);
      double s = 0.0;
      if (l == n - 1) s = (-t2[sf] + 8 * t1[sf] - 8 * m1[sf] + m2[sf]) / (12 * kOuterH);
      for (int m = 0; m < q; ++m) {
        std::vector<int> moved = sub;
        for (int b = 0; b < n; ++b) {
          moved[u(m)] = b;
          s -= G(b, l, sub[u(m)]) * t0.get(moved);
        }
      }
      out[f] = s;
    }
    return out;
  }
};

}  // namespace

NumericSummary numeric_crosscheck(const Pipeline& p, int samples, unsigned long long seed) {
  NumericModel model{p, {}, p.problem.metric.dim()};
  for (const auto& [name, c] : p.config.test_functions) model.funcs[name] = PolyFunction{c};
  for (const auto& s : p.problem.symbols)
    if (!model.funcs.contains(s)) throw ConfigError("no numeric test function for '" + s + "'");

  NumericSummary sum;
  sum.samples = samples;
  sum.seed = seed;
  auto compare = [&](const std::string& name, const Tensor& sym, const NumTensor& num, double x,
                     const FuncTable& table) {
    for (std::size_t f = 0; f < sym.size(); ++f) {
      const double s = evaluate(sym[f], x, table);
      const double err = std::abs(s - num[f]) / std::max(1.0, std::abs(s));
      ++sum.components_compared;
      if (err > sum.max_relative_error || sum.worst_component.empty()) {
        sum.max_relative_error = err;
        sum.worst_component = name + " " + index_label(sym.unflat(f));
        sum.worst_x3 = x;
      }
    }
  };

  const auto& cs = p.curvatures;
  for (double x : sample_points(samples, seed)) {
    const FuncTable table = function_table(model.funcs, x, kMaxOrder);
    const auto c = model.curvature(x);
    compare("Gamma", cs.connection.gamma, c.G, x, table);
    compare("R", cs.R, c.R, x, table);
    compare("Ric", cs.Ric, c.Ric, x, table);
    {
      const double s = evaluate(cs.kappa, x, table);
      const double err = std::abs(s - c.kappa) / std::max(1.0, std::abs(s));
      ++sum.components_compared;
      if (err > sum.max_relative_error) {
        sum.max_relative_error = err;
        sum.worst_component = "kappa";
        sum.worst_x3 = x;
      }
    }
    compare("C", cs.C, c.C, x, table);
    compare("K", cs.K, c.K, x, table);
    compare("W", cs.W, c.W, x, table);
    compare("P", cs.P, c.P, x, table);
    compare("dR", cs.dR, model.nabla(x, c.G, [](const auto& k) { return k.R; }), x, table);
    compare("dC", cs.dC, model.nabla(x, c.G, [](const auto& k) { return k.C; }), x, table);
    compare("dK", cs.dK, model.nabla(x, c.G, [](const auto& k) { return k.K; }), x, table);
    compare("dW", cs.dW, model.nabla(x, c.G, [](const auto& k) { return k.W; }), x, table);
    compare("dP", cs.dP, model.nabla(x, c.G, [](const auto& k) { return k.P; }), x, table);
    compare("dRic", cs.dRic, model.nabla(x, c.G, [](const auto& k) { return k.Ric; }), x, table);

    const std::vector<std::pair<std::string, const NumTensor*>> fours = {
        {"R", &c.R}, {"C", &c.C}, {"K", &c.K}, {"W", &c.W}, {"P", &c.P}};
    NumTensor gt(model.n, 0, 2);
    for (int i = 0; i < model.n; ++i) gt(i, i) = c.g[u(i)];
    for (const auto& [en, E] : fours)
      for (const auto& [fn, F] : fours) {
        const std::string key = en + "." + fn;
        compare(key, p.products.dots.at(key), dot(*E, *F, c.ginv), x, table);
      }
    for (const auto& [fn, F] : fours) {
      compare("Q(g," + fn + ")", p.products.tachibanas.at("Q(g," + fn + ")"), tachibana(gt, *F), x,
              table);
      compare("Q(Ric," + fn + ")", p.products.tachibanas.at("Q(Ric," + fn + ")"),
              tachibana(c.Ric, *F), x, table);
    }
    ++sum.points_tested;
  }
  sum.passed = sum.max_relative_error <= sum.tolerance;
  return sum;
}

}  // namespace ssnm
