#pragma once

#include <optional>
#include <string>

#include "ssnm/expr.hpp"

namespace ssnm {

// Element of the fraction field of the Expr ring. No gcd reduction; only cheap
// cancellations (units, single-term denominators) are applied.
class FracExpr {
 public:
  FracExpr() : den_(1) {}
  FracExpr(long c) : num_(c), den_(1) {}             // NOLINT(google-explicit-constructor)
  FracExpr(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  FracExpr(Expr num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
  FracExpr(Expr num, Expr den);

  const Expr& num() const { return num_; }
  const Expr& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  std::optional<Rational> constant_value() const;
  bool is_constant() const { return constant_value().has_value(); }
  // The value as a ring element, if the denominator divides out.
  std::optional<Expr> as_expr() const;

  FracExpr& operator+=(const FracExpr& o) { return *this = *this + o; }
  FracExpr& operator-=(const FracExpr& o) { return *this = *this - o; }
  FracExpr& operator*=(const FracExpr& o) { return *this = *this * o; }
  FracExpr& operator/=(const FracExpr& o) { return *this = *this / o; }

  friend FracExpr operator+(const FracExpr& a, const FracExpr& b);
  friend FracExpr operator-(const FracExpr& a, const FracExpr& b);
  friend FracExpr operator*(const FracExpr& a, const FracExpr& b);
  friend FracExpr operator/(const FracExpr& a, const FracExpr& b);
  friend FracExpr operator-(const FracExpr& a) { return FracExpr(-a.num_, a.den_); }

  friend bool operator==(const FracExpr& a, const FracExpr& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  std::string str() const;
  double evaluate(double x3, const FuncTable& funcs) const;

 private:
  void tidy();
  Expr num_;
  Expr den_;
};

inline bool is_zero(const FracExpr& f) { return f.is_zero(); }

}  // namespace ssnm
