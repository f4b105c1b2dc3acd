#include "ssnm/classifier.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <set>

#include "ssnm/products.hpp"

namespace ssnm {

namespace {

std::size_t u(int i) { return static_cast<std::size_t>(i); }

const std::array<const char*, 5> kNames = {"R", "C", "K", "W", "P"};

}  // namespace

const char* kind_name(ProportionalityResult::Kind k) {
  switch (k) {
    case ProportionalityResult::Kind::zero:
      return "zero";
    case ProportionalityResult::Kind::proportional:
      return "proportional";
    case ProportionalityResult::Kind::independent:
      return "independent";
  }
  return "independent";
}

ProportionalityResult detect_relation(const Tensor& EdotF, const Tensor& QZF) {
  if (!EdotF.same_shape(QZF)) throw ShapeError("detect_relation: valence mismatch");
  ProportionalityResult r;
  if (EdotF.is_zero()) {
    r.kind = ProportionalityResult::Kind::zero;
    r.coefficient = FracExpr(0);
    r.is_constant = true;
    return r;
  }
  std::size_t ref = QZF.size();
  for (std::size_t f = 0; f < QZF.size(); ++f) {
    if (!QZF[f].is_zero()) {
      ref = f;
      break;
    }
  }
  r.kind = ProportionalityResult::Kind::independent;
  if (ref == QZF.size()) return r;
  const Expr& q_ref = QZF[ref];
  const Expr& e_ref = EdotF[ref];
  for (std::size_t f = 0; f < QZF.size(); ++f) {
    if (EdotF[f] * q_ref != e_ref * QZF[f]) return r;
  }
  r.kind = ProportionalityResult::Kind::proportional;
  r.coefficient = FracExpr(e_ref, q_ref);
  if (auto c = r.coefficient.constant_value()) {
    r.is_constant = true;
    r.coefficient = FracExpr(*c);
  }
  return r;
}

ProductSet compute_products(const CurvatureSet& cs, const MetricData& m) {
  const auto ginv = ring_inverse(m);
  ProductSet ps;
  for (const auto& [en, E] : cs.fours())
    for (const auto& [fn, F] : cs.fours()) ps.dots.emplace(en + "." + fn, dot(*E, *F, ginv));
  for (const auto& [fn, F] : cs.fours()) {
    ps.tachibanas.emplace("Q(g," + fn + ")", tachibana(cs.g, *F));
    ps.tachibanas.emplace("Q(Ric," + fn + ")", tachibana(cs.Ric, *F));
  }
  return ps;
}

std::vector<RelationEntry> classify_all_pairs(const ProductSet& products) {
  std::vector<RelationEntry> out;
  for (const char* e : kNames)
    for (const char* f : kNames)
      for (const char* z : {"g", "Ric"}) {
        const Tensor& ef = products.dots.at(std::string(e) + "." + f);
        const Tensor& q = products.tachibanas.at("Q(" + std::string(z) + "," + f + ")");
        out.push_back({e, f, z, detect_relation(ef, q)});
      }
  return out;
}

std::vector<std::vector<std::vector<FracExpr>>> ricci_powers(const Tensor& Ric,
                                                            const MetricData& m, int up_to) {
  const int n = m.dim();
  const auto ginv = metric_inverse(m);
  using Mat = std::vector<std::vector<FracExpr>>;
  std::vector<Mat> powers;
  Mat g(u(n), std::vector<FracExpr>(u(n)));
  for (int i = 0; i < n; ++i) g[u(i)][u(i)] = FracExpr(m.diagonal[u(i)]);
  powers.push_back(g);
  for (int k = 1; k <= up_to; ++k) {
    const Mat& prev = powers.back();
    Mat next(u(n), std::vector<FracExpr>(u(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        FracExpr s;
        for (int a = 0; a < n; ++a) {
          if (prev[u(i)][u(a)].is_zero() || Ric(a, j).is_zero()) continue;
          s += prev[u(i)][u(a)] * ginv[u(a)] * FracExpr(Ric(a, j));
        }
        next[u(i)][u(j)] = s;
      }
    powers.push_back(std::move(next));
  }
  return powers;
}

EinsteinLevelReport einstein_level(const Tensor& Ric, const MetricData& m) {
  const int n = m.dim();
  const auto powers = ricci_powers(Ric, m, 4);
  EinsteinLevelReport rep;
  const int first_label[] = {0, 0, 1, 3, 6};
  bool prev_inconsistent = false;
  for (int level = 1; level <= 4; ++level) {
    FracMatrix A(n * n, level);
    FracVector b(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const int row = i * n + j;
        b(row) = -powers[u(level)][u(i)][u(j)];
        for (int c = 1; c <= level; ++c) A(row, c - 1) = powers[u(level - c)][u(i)][u(j)];
      }
    SolveResult s = frac_solve(A, b);
    if (s.consistent) {
      rep.level = level;
      rep.lower_level_inconsistent = level == 1 || prev_inconsistent;
      for (int c = 0; c < level; ++c) {
        rep.coefficients.push_back(s.x(c));
        rep.labels.push_back("lambda" + std::to_string(first_label[level] + c));
      }
      return rep;
    }
    prev_inconsistent = true;
  }
  return rep;
}

namespace {

// Dense polynomial over Q, coefficients from degree 0 upwards.
using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

RatPoly poly_mod(RatPoly a, const RatPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RatPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Rational poly_eval(const RatPoly& p, const Rational& t) {
  Rational s(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) s = s * t + *it;
  return s;
}

std::vector<long> divisors(long v) {
  std::vector<long> out;
  if (v < 0) v = -v;
  for (long d = 1; d <= 1000000 && d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      if (d != v / d) out.push_back(v / d);
    }
  }
  return out;
}

// Rational roots via the rational root theorem (coefficients must fit in long).
std::vector<Rational> rational_roots(RatPoly p) {
  trim(p);
  std::set<Rational> roots;
  while (p.size() > 1 && p.front().is_zero()) {
    roots.insert(Rational(0));
    p.erase(p.begin());
  }
  if (p.size() <= 1) return {roots.begin(), roots.end()};
  mpz_class lcm = 1;
  for (const auto& c : p) lcm = ::lcm(lcm, c.raw().get_den());
  std::vector<mpz_class> ints;
  for (const auto& c : p) ints.push_back(mpz_class(c.raw() * lcm));
  if (!ints.front().fits_slong_p() || !ints.back().fits_slong_p())
    return {roots.begin(), roots.end()};
  for (long pn : divisors(ints.front().get_si()))
    for (long qd : divisors(ints.back().get_si()))
      for (long sgn : {1L, -1L}) {
        Rational cand(sgn * pn, qd);
        if (poly_eval(p, cand).is_zero()) roots.insert(cand);
      }
  return {roots.begin(), roots.end()};
}

}  // namespace

QuasiEinsteinReport quasi_einstein(const Tensor& Ric, const MetricData& m,
                                   const std::vector<Rational>& extra_alphas) {
  const int n = m.dim();
  QuasiEinsteinReport rep;
  EinsteinLevelReport lvl = einstein_level(Ric, m);

  std::set<Rational> alphas{Rational(0)};
  std::set<Rational> eigen;
  if (lvl.level) {
    // minimal polynomial t^l + c1 t^{l-1} + ... + cl with FracExpr coefficients;
    // clear denominators and require a common rational root of every term slice.
    const int l = *lvl.level;
    std::vector<FracExpr> coeffs{FracExpr(1)};
    for (const auto& c : lvl.coefficients) coeffs.push_back(c);
    // nums_i = c_i * prod of all denominators, computed without division.
    std::vector<Expr> nums;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      Expr e = coeffs[i].num();
      for (std::size_t j = 0; j < coeffs.size(); ++j)
        if (j != i) e = e * coeffs[j].den();
      nums.push_back(std::move(e));
    }
    std::set<TermKey> keys;
    for (const auto& e : nums)
      for (const auto& [k, c] : e.terms()) keys.insert(k);
    RatPoly g;
    bool first = true;
    for (const auto& key : keys) {
      RatPoly p(u(l + 1), Rational(0));
      for (int i = 0; i <= l; ++i) {
        auto it = nums[u(i)].terms().find(key);
        if (it != nums[u(i)].terms().end()) p[u(l - i)] = it->second;
      }
      g = first ? p : poly_gcd(g, p);
      first = false;
    }
    for (const auto& r : rational_roots(g)) {
      eigen.insert(r);
      alphas.insert(r);
    }
    // Divide out the constant roots (with multiplicity) to expose the rest.
    std::vector<FracExpr> rest = coeffs;  // highest degree first
    for (const auto& r : eigen) {
      for (;;) {
        FracExpr acc;
        std::vector<FracExpr> q;
        for (const auto& c : rest) {
          acc = acc * FracExpr(r) + c;
          q.push_back(acc);
        }
        if (!q.back().is_zero() || rest.size() <= 1) break;
        q.pop_back();
        rest = q;
      }
    }
    if (rest.size() > 1) {
      std::string s;
      const int deg = static_cast<int>(rest.size()) - 1;
      for (int i = 0; i <= deg; ++i) {
        if (rest[u(i)].is_zero()) continue;
        const int power = deg - i;
        const FracExpr& c = rest[u(i)];
        std::string cs = c.str();
        bool negative = false;
        const bool simple = c.den().is_constant() && c.num().is_single_term();
        if (simple && cs.front() == '-') {
          negative = true;
          cs.erase(0, 1);
        } else if (!simple) {
          cs = "(" + cs + ")";
        }
        std::string var = power == 0 ? "" : power == 1 ? "t" : "t^" + std::to_string(power);
        std::string piece = var.empty() ? cs : cs == "1" ? var : cs + "*" + var;
        if (s.empty())
          s = negative ? "-" + piece : piece;
        else
          s += (negative ? " - " : " + ") + piece;
      }
      rep.nonconstant_roots.push_back(s);
    }
  }
  for (const auto& a : extra_alphas) alphas.insert(a);

  rep.minimal_rank = std::numeric_limits<int>::max();
  for (const auto& a : alphas) {
    FracMatrix M(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Expr e = Ric(i, j);
        if (i == j) e -= m.diagonal[u(i)].scaled(a);
        M(i, j) = FracExpr(e);
      }
    QuasiEinsteinCandidate c{a, frac_rank(M), eigen.contains(a)};
    if (c.rank < rep.minimal_rank) {
      rep.minimal_rank = c.rank;
      rep.minimal_alpha = a;
    }
    rep.candidates.push_back(c);
  }

  // Ricci simple: Ric = α η⊗η.
  FracMatrix M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M(i, j) = FracExpr(Ric(i, j));
  if (frac_rank(M) == 1) {
    for (int p = 0; p < n; ++p) {
      if (Ric(p, p).is_zero()) continue;
      std::vector<FracExpr> eta;
      for (int j = 0; j < n; ++j) eta.push_back(FracExpr(Ric(p, j), Ric(p, p)));
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
          ok = FracExpr(Ric(i, j)) == FracExpr(Ric(p, p)) * eta[u(i)] * eta[u(j)];
      if (ok) {
        rep.ricci_simple = true;
        rep.simple_alpha = FracExpr(Ric(p, p));
        rep.eta = eta;
      }
      break;
    }
  }
  return rep;
}

namespace {

// Columns are the flattened basis tensors; residual verified exactly.
bool fit(const Tensor& target, const std::vector<Tensor>& basis, std::vector<FracExpr>& coeffs,
         bool& residual_zero) {
  const int rows = static_cast<int>(target.size());
  const int cols = static_cast<int>(basis.size());
  FracMatrix A(rows, cols);
  FracVector b(rows);
  for (int r = 0; r < rows; ++r) {
    b(r) = FracExpr(target[u(r)]);
    for (int c = 0; c < cols; ++c) A(r, c) = FracExpr(basis[u(c)][u(r)]);
  }
  SolveResult s = frac_solve(A, b);
  if (!s.consistent) return false;
  coeffs.clear();
  for (int c = 0; c < cols; ++c) coeffs.push_back(s.x(c));
  residual_zero = true;
  for (int r = 0; r < rows && residual_zero; ++r) {
    FracExpr acc = -b(r);
    for (int c = 0; c < cols; ++c)
      if (!A(r, c).is_zero()) acc += coeffs[u(c)] * A(r, c);
    residual_zero = acc.is_zero();
  }
  return residual_zero;
}

}  // namespace

RoterReport roter_decomposition(const Tensor& R, const Tensor& g, const Tensor& Ric,
                                const Tensor& Ric2) {
  RoterReport rep;
  const Tensor rr = kulkarni(Ric, Ric);
  const Tensor gr = kulkarni(g, Ric);
  const Tensor gg = kulkarni(g, g);
  bool residual = false;
  if (fit(R, {rr, gr, gg}, rep.reduced_mu, residual)) {
    rep.reduced = true;
    rep.generalized = true;
    rep.residual_zero = residual;
    rep.mu = {FracExpr(0), FracExpr(0), FracExpr(0), rep.reduced_mu[0], rep.reduced_mu[1],
              rep.reduced_mu[2]};
    return rep;
  }
  rep.reduced_mu.clear();
  const std::vector<Tensor> basis = {kulkarni(Ric2, Ric2), kulkarni(Ric, Ric2),
                                     kulkarni(g, Ric2),    rr,
                                     gr,                   gg};
  if (fit(R, basis, rep.mu, residual)) {
    rep.generalized = true;
    rep.residual_zero = residual;
  } else {
    rep.mu.clear();
  }
  return rep;
}

RicciDerivativeFlags codazzi_and_cyclic(const Tensor& dRic) {
  require_covariant(dRic, 3, "codazzi_and_cyclic");
  const int n = dRic.dim();
  RicciDerivativeFlags f{true, true};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (dRic(a, b, c) != dRic(b, a, c)) f.codazzi = false;
        if (!(dRic(a, b, c) + dRic(b, c, a) + dRic(c, a, b)).is_zero()) f.cyclic_parallel = false;
      }
  return f;
}

bool compatibility(const Tensor& T, const Tensor& Z, const MetricData& m) {
  require_covariant(T, 4, "compatibility");
  require_covariant(Z, 2, "compatibility");
  const int n = m.dim();
  const auto ginv = metric_inverse(m);
  // zend(c, y) = g^{cc} Z(y, c)
  std::vector<std::vector<FracExpr>> zend(u(n), std::vector<FracExpr>(u(n)));
  for (int c = 0; c < n; ++c)
    for (int y = 0; y < n; ++y) zend[u(c)][u(y)] = ginv[u(c)] * FracExpr(Z(y, c));
  auto term = [&](int y1, int uu, int y2, int y3) {
    FracExpr s;
    for (int c = 0; c < n; ++c)
      if (!zend[u(c)][u(y1)].is_zero() && !T(c, uu, y2, y3).is_zero())
        s += zend[u(c)][u(y1)] * FracExpr(T(c, uu, y2, y3));
    return s;
  };
  for (int uu = 0; uu < n; ++uu)
    for (int y1 = 0; y1 < n; ++y1)
      for (int y2 = 0; y2 < n; ++y2)
        for (int y3 = 0; y3 < n; ++y3) {
          FracExpr s = term(y1, uu, y2, y3) + term(y2, uu, y3, y1) + term(y3, uu, y1, y2);
          if (!s.is_zero()) return false;
        }
  return true;
}

RecurrenceEntry recurrent_2forms(const Tensor& E, const Tensor& dE) {
  require_covariant(E, 4, "recurrent_2forms");
  require_covariant(dE, 5, "recurrent_2forms");
  const int n = E.dim();
  RecurrenceEntry rep;
  const int rows = n * n * n * n * n;
  FracMatrix A(rows, n);
  FracVector b(rows);
  int row = 0;
  for (int y1 = 0; y1 < n; ++y1)
    for (int y2 = 0; y2 < n; ++y2)
      for (int y3 = 0; y3 < n; ++y3)
        for (int uu = 0; uu < n; ++uu)
          for (int y = 0; y < n; ++y, ++row) {
            const std::array<std::array<int, 3>, 3> cyc = {
                {{y1, y2, y3}, {y2, y3, y1}, {y3, y1, y2}}};
            Expr rhs;
            std::vector<Expr> coeff(u(n));
            for (const auto& c : cyc) {
              rhs += dE(c[0], c[1], c[2], uu, y);
              coeff[u(c[0])] += E(c[1], c[2], uu, y);
            }
            b(row) = FracExpr(rhs);
            for (int k = 0; k < n; ++k) A(row, k) = FracExpr(coeff[u(k)]);
          }
  rep.trivial = E.is_zero();
  SolveResult s = frac_solve(A, b);
  if (!s.consistent) return rep;
  rep.recurrent = true;
  for (int k = 0; k < n; ++k) rep.sigma.push_back(s.x(k));
  // Full re-verification of every equation.
  rep.verified = true;
  for (int r = 0; r < rows && rep.verified; ++r) {
    FracExpr acc = -b(r);
    for (int k = 0; k < n; ++k)
      if (!A(r, k).is_zero()) acc += rep.sigma[u(k)] * A(r, k);
    rep.verified = acc.is_zero();
  }
  rep.recurrent = rep.verified;
  return rep;
}

ClassificationReport classify(const CurvatureSet& cs, const ProductSet& products,
                              const MetricData& m, const std::vector<Rational>& extra_alphas) {
  ClassificationReport rep;
  rep.relations = classify_all_pairs(products);
  rep.einstein = einstein_level(cs.Ric, m);
  rep.quasi = quasi_einstein(cs.Ric, m, extra_alphas);
  const auto powers = ricci_powers(cs.Ric, m, 2);
  Tensor ric2(m.dim(), 0, 2);
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) {
      auto e = powers[2][u(i)][u(j)].as_expr();
      if (!e) throw DegenerateMetric("Ric^2 is not a ring element");
      ric2(i, j) = *e;
    }
  rep.roter = roter_decomposition(cs.R, cs.g, cs.Ric, ric2);
  rep.ricci_flags = codazzi_and_cyclic(cs.dRic);
  for (const auto& [name, T] : cs.fours()) {
    rep.compatibility[name] = compatibility(*T, cs.Ric, m);
    rep.recurrence[name] = recurrent_2forms(*T, cs.derivative(name));
  }
  return rep;
}

}  // namespace ssnm
