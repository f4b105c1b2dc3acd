#include "ssnm/frac.hpp"

#include <stdexcept>

namespace ssnm {

FracExpr::FracExpr(Expr num, Expr den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("FracExpr with zero denominator");
  tidy();
}

void FracExpr::tidy() {
  if (num_.is_zero()) {
    den_ = Expr(1);
    return;
  }
  if (den_.is_single_term()) {
    if (auto q = divide_by_term(num_, den_)) {
      num_ = std::move(*q);
      den_ = Expr(1);
      return;
    }
    // Move the unit part c*e^{kx3} of the denominator into the numerator.
    const auto& [key, c] = *den_.terms().begin();
    Expr unit = Expr::term(c, key.exp_weight, {});
    Expr inv = *unit_inverse(unit);
    num_ = num_ * inv;
    den_ = Expr::term(Rational(1), 0, key.monomial);
    return;
  }
  if (auto q = exact_divide(num_, den_)) {
    num_ = std::move(*q);
    den_ = Expr(1);
    return;
  }
  // Scale so the denominator's last term has coefficient 1.
  const Rational lead = den_.terms().rbegin()->second;
  if (!lead.is_one()) {
    num_ = num_.scaled(lead.inverse());
    den_ = den_.scaled(lead.inverse());
  }
}

std::optional<Rational> FracExpr::constant_value() const {
  if (num_.is_zero()) return Rational(0);
  const auto& [nk, nc] = *num_.terms().begin();
  const auto& [dk, dc] = *den_.terms().begin();
  if (num_.size() != den_.size()) return std::nullopt;
  Rational ratio = nc / dc;
  if (num_ == den_.scaled(ratio)) return ratio;
  return std::nullopt;
}

std::optional<Expr> FracExpr::as_expr() const {
  if (den_ == Expr(1)) return num_;
  if (auto c = constant_value()) return Expr(*c);
  return std::nullopt;
}

FracExpr operator+(const FracExpr& a, const FracExpr& b) {
  if (a.den_ == b.den_) return FracExpr(a.num_ + b.num_, a.den_);
  return FracExpr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

FracExpr operator-(const FracExpr& a, const FracExpr& b) {
  if (a.den_ == b.den_) return FracExpr(a.num_ - b.num_, a.den_);
  return FracExpr(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

FracExpr operator*(const FracExpr& a, const FracExpr& b) {
  if (a.is_zero() || b.is_zero()) return FracExpr();
  return FracExpr(a.num_ * b.num_, a.den_ * b.den_);
}

FracExpr operator/(const FracExpr& a, const FracExpr& b) {
  if (b.is_zero()) throw std::domain_error("division by zero FracExpr");
  if (a.is_zero()) return FracExpr();
  return FracExpr(a.num_ * b.den_, a.den_ * b.num_);
}

std::string FracExpr::str() const {
  if (auto e = as_expr()) return e->str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

double FracExpr::evaluate(double x3, const FuncTable& funcs) const {
  return ssnm::evaluate(num_, x3, funcs) / ssnm::evaluate(den_, x3, funcs);
}

}  // namespace ssnm
