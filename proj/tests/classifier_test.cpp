#include <Eigen/SVD>

#include "doctest.h"
#include "ssnm/classifier.hpp"
#include "ssnm/linalg.hpp"
#include "ssnm/products.hpp"
#include "test_support.hpp"

using namespace ssnm;
using testing_support::E;
using testing_support::Rng;

namespace {

FracMatrix diag3(long a, long b, long c) {
  FracMatrix m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = FracExpr(0);
  m(0, 0) = FracExpr(a);
  m(1, 1) = FracExpr(b);
  m(2, 2) = FracExpr(c);
  return m;
}

const RelationEntry* relation(const ClassificationReport& r, const std::string& e,
                              const std::string& f, const std::string& z) {
  for (const auto& x : r.relations)
    if (x.E == e && x.F == f && x.Z == z) return &x;
  return nullptr;
}

}  // namespace

TEST_CASE("frac_rank examples") {
  CHECK(frac_rank(diag3(0, 0, 2)) == 1);
  CHECK(frac_rank(diag3(1, 1, 1)) == 3);
  CHECK(frac_rank(diag3(0, 0, 0)) == 0);
  for (int eps : {1, -1}) {
    const auto& p = testing_support::preset("sol3-a", eps);
    FracMatrix m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        m(i, j) = FracExpr(p.curvatures.Ric(i, j) - p.curvatures.g(i, j).scaled(2));
    CHECK(frac_rank(m) == (eps > 0 ? 2 : 3));
  }
}

TEST_CASE("frac_solve reports consistency and free columns") {
  FracMatrix A(2, 3);
  A << FracExpr(1), FracExpr(E("a")), FracExpr(0), FracExpr(2), FracExpr(E("2*a")), FracExpr(0);
  FracVector b(2);
  b << FracExpr(E("b")), FracExpr(E("2*b"));
  auto s = frac_solve(A, b);
  CHECK(s.consistent);
  CHECK(s.rank == 1);
  CHECK(s.free_columns == std::vector<int>{1, 2});
  CHECK(s.x(0) == FracExpr(E("b")));
  b(1) = FracExpr(E("b + 1"));
  CHECK_FALSE(frac_solve(A, b).consistent);
}

TEST_CASE("frac_rank agrees with numeric rank on random matrices") {
  Rng r(123);
  for (int trial = 0; trial < 50; ++trial) {
    const int rows = r.pick(2, 4), cols = r.pick(2, 4), inner = r.pick(1, 4);
    // product of random factors so that rank deficiency actually occurs
    std::vector<std::vector<Expr>> L(rows, std::vector<Expr>(inner)), Rm(inner, std::vector<Expr>(cols));
    for (auto& row : L)
      for (auto& e : row) e = testing_support::random_expr(r, 2, 2);
    for (auto& row : Rm)
      for (auto& e : row) e = r.pick(0, 2) ? testing_support::random_expr(r, 1, 2) : Expr();
    FracMatrix M(rows, cols);
    Eigen::MatrixXd N(rows, cols);
    const double t = 0.3 + 0.4 * r.unit();
    auto f = testing_support::poly_table(t);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        Expr s;
        for (int k = 0; k < inner; ++k) s += L[i][k] * Rm[k][j];
        M(i, j) = FracExpr(s);
        N(i, j) = evaluate(s, t, f);
      }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(N);
    const auto& sv = svd.singularValues();
    int numeric = 0;
    for (int i = 0; i < sv.size(); ++i) numeric += sv(i) > 1e-8 * std::max(1.0, sv(0));
    CAPTURE(trial);
    CHECK(frac_rank(M) == numeric);
  }
}

TEST_CASE("detect_relation examples") {
  for (int eps : {1, -1}) {
    const auto& pr = testing_support::preset("sol3-a", eps).products;
    auto kr = detect_relation(pr.dots.at("K.R"), pr.tachibanas.at("Q(Ric,R)"));
    CHECK(kr.kind == ProportionalityResult::Kind::proportional);
    CHECK(kr.coefficient == FracExpr(-1));
    CHECK(kr.is_constant);
    auto wr = detect_relation(pr.dots.at("W.R"), pr.tachibanas.at("Q(Ric,R)"));
    CHECK(wr.kind == ProportionalityResult::Kind::proportional);
    CHECK(wr.coefficient == FracExpr(Rational(2, 3)));
    CHECK(detect_relation(Tensor(3, 0, 6), pr.tachibanas.at("Q(g,R)")).kind ==
          ProportionalityResult::Kind::zero);
    CHECK(detect_relation(pr.dots.at("R.R"), Tensor(3, 0, 6)).kind ==
          ProportionalityResult::Kind::independent);
  }
}

TEST_CASE("detect_relation is scale consistent") {
  Rng r(55);
  for (int i = 0; i < 20; ++i) {
    Tensor T = testing_support::random_tensor(r, 3, 4, 2);
    if (T.is_zero()) T(0, 1, 0, 1) = Expr(1);
    Rational c(r.pick(1, 9) * (r.pick(0, 1) ? 1 : -1), r.pick(1, 7));
    auto res = detect_relation(tensor_scale(T, Expr(c)), T);
    CHECK(res.kind == ProportionalityResult::Kind::proportional);
    CHECK(res.coefficient == FracExpr(c));
    // a function multiple is still proportional, just not constant
    auto g = detect_relation(tensor_scale(T, E("exp(2*x3)*a")), T);
    CHECK(g.kind == ProportionalityResult::Kind::proportional);
    CHECK_FALSE(g.is_constant);
  }
}

TEST_CASE("relation table for case a carries the epsilon signs") {
  for (int eps : {1, -1}) {
    const auto& rep = testing_support::preset("sol3-a", eps).classification;
    CHECK(rep.relations.size() == 50);
    auto pr = relation(rep, "P", "R", "g");
    REQUIRE(pr);
    CHECK(pr->result.coefficient == FracExpr(Rational(eps, 2)));
    CHECK(relation(rep, "C", "R", "g")->result.kind == ProportionalityResult::Kind::zero);
  }
  const auto& b = testing_support::preset("sol3-b", 1).classification;
  REQUIRE(relation(b, "R", "K", "g"));
}

TEST_CASE("einstein level examples") {
  for (int eps : {1, -1}) {
    const auto& a = testing_support::preset("sol3-a", eps);
    auto lv = einstein_level(a.curvatures.Ric, a.problem.metric);
    REQUIRE(lv.level);
    CHECK(*lv.level == 2);
    CHECK(lv.coefficients == std::vector<FracExpr>{FracExpr(-2 * eps), FracExpr(0)});
    CHECK(lv.labels == std::vector<std::string>{"lambda1", "lambda2"});
    CHECK(lv.lower_level_inconsistent);
    const auto& b = testing_support::preset("sol3-b", eps);
    auto lb = einstein_level(b.curvatures.Ric, b.problem.metric);
    REQUIRE(lb.level);
    CHECK(*lb.level == 3);
    CHECK(lb.coefficients[0] == FracExpr(-2 * eps));
  }
  auto m = testing_support::sol3(1);
  auto toy = einstein_level(metric_tensor(m), m);
  REQUIRE(toy.level);
  CHECK(*toy.level == 1);
  CHECK(toy.coefficients == std::vector<FracExpr>{FracExpr(-1)});
}

TEST_CASE("ricci powers follow the mixed product") {
  const auto& a = testing_support::preset("sol3-a", 1);
  auto pw = ricci_powers(a.curvatures.Ric, a.problem.metric, 3);
  REQUIRE(pw.size() == 4);
  CHECK(pw[0][0][0] == FracExpr(E("exp(2*x3)")));
  CHECK(pw[1][2][2] == FracExpr(2));
  CHECK(pw[2][2][2] == FracExpr(4));
  CHECK(pw[3][2][2] == FracExpr(8));
}

TEST_CASE("quasi-einstein examples") {
  for (int eps : {1, -1}) {
    const auto& a = testing_support::preset("sol3-a", eps);
    auto q = quasi_einstein(a.curvatures.Ric, a.problem.metric, {Rational(2)});
    CHECK(q.ricci_simple);
    CHECK(q.simple_alpha == FracExpr(2));
    CHECK(q.eta == std::vector<FracExpr>{FracExpr(0), FracExpr(0), FracExpr(1)});
    bool seen = false;
    for (const auto& c : q.candidates)
      if (c.alpha == Rational(2)) {
        seen = true;
        CHECK(c.rank == (eps > 0 ? 2 : 3));
      }
    CHECK(seen);
    CHECK(q.minimal_rank == 1);
  }
  auto m = testing_support::sol3(1);
  auto z = quasi_einstein(Tensor(3, 0, 2), m);
  CHECK(z.minimal_rank == 0);
  CHECK(z.minimal_alpha == Rational(0));
}

TEST_CASE("roter decomposition examples") {
  for (int eps : {1, -1}) {
    const auto& rep = testing_support::preset("sol3-a", eps).classification.roter;
    CHECK(rep.reduced);
    CHECK(rep.residual_zero);
    CHECK(rep.reduced_mu == std::vector<FracExpr>{FracExpr(0), FracExpr(1), FracExpr(Rational(-eps, 2))});
  }
  auto m = testing_support::sol3(1);
  Tensor g = metric_tensor(m);
  Tensor ric = testing_support::preset("sol3-a", 1).curvatures.Ric;
  Tensor ric2 = ric;
  auto r = roter_decomposition(kulkarni(g, g), g, ric, ric2);
  CHECK(r.reduced);
  CHECK(r.reduced_mu == std::vector<FracExpr>{FracExpr(0), FracExpr(0), FracExpr(1)});
  CHECK_FALSE(testing_support::preset("sol3-b", 1).classification.roter.reduced);
  CHECK_FALSE(testing_support::preset("sol3-b", 1).classification.roter.generalized);
}

TEST_CASE("codazzi and cyclic examples") {
  for (const char* name : {"sol3-a", "sol3-b"})
    for (int eps : {1, -1}) {
      auto f = codazzi_and_cyclic(testing_support::preset(name, eps).curvatures.dRic);
      CHECK_FALSE(f.codazzi);
      CHECK_FALSE(f.cyclic_parallel);
    }
  auto z = codazzi_and_cyclic(Tensor(3, 0, 3));
  CHECK(z.codazzi);
  CHECK(z.cyclic_parallel);
}

TEST_CASE("compatibility examples") {
  for (int eps : {1, -1}) {
    const auto& a = testing_support::preset("sol3-a", eps);
    const auto& c = a.classification.compatibility;
    CHECK(c.at("R"));
    CHECK(c.at("C"));
    CHECK(c.at("K"));
    CHECK(c.at("W"));
    CHECK_FALSE(c.at("P"));
    const auto& lc = testing_support::preset("sol3-lc", eps);
    CHECK(compatibility(lc.curvatures.R, lc.curvatures.g, lc.problem.metric));
  }
}

TEST_CASE("recurrence examples") {
  for (int eps : {1, -1}) {
    const auto& rec = testing_support::preset("sol3-a", eps).classification.recurrence;
    for (const char* t : {"R", "K", "W"}) {
      CAPTURE(t);
      CHECK(rec.at(t).recurrent);
      CHECK(rec.at(t).verified);
      CHECK(rec.at(t).sigma ==
            std::vector<FracExpr>{FracExpr(0), FracExpr(0), FracExpr(E("2*a").scaled(eps))});
    }
    CHECK_FALSE(rec.at("P").recurrent);
    for (const auto& [t, e] : testing_support::preset("sol3-b", eps).classification.recurrence) {
      CAPTURE(t);
      CHECK_FALSE(e.recurrent);
    }
  }
  // toy: dE = sigma (x) E by construction
  const auto& a = testing_support::preset("sol3-lc", 1).curvatures;
  Tensor dE(3, 0, 5);
  for (std::size_t f = 0; f < a.R.size(); ++f) {
    auto idx = a.R.unflat(f);
    dE(2, idx[0], idx[1], idx[2], idx[3]) = a.R[f] * E("b");
  }
  auto e = recurrent_2forms(a.R, dE);
  CHECK(e.recurrent);
  CHECK(e.verified);
  CHECK(e.sigma[2] == FracExpr(E("b")));
}
