#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ssnm/rational.hpp"

namespace ssnm {

// f^(order)(x3) for an abstract function symbol f.
struct FuncAtom {
  std::string base;
  int order = 0;

  friend bool operator==(const FuncAtom&, const FuncAtom&) = default;
  friend auto operator<=>(const FuncAtom&, const FuncAtom&) = default;
};

// Sorted by atom, powers strictly positive.
using Monomial = std::vector<std::pair<FuncAtom, int>>;

struct TermKey {
  int exp_weight = 0;  // e^{k x3}
  Monomial monomial;

  friend bool operator==(const TermKey&, const TermKey&) = default;
  friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

Monomial monomial_mul(const Monomial& a, const Monomial& b);

// Canonical sum of c * e^{k x3} * monomial. No zero coefficients are stored,
// so structural equality of the term maps is mathematical equality.
class Expr {
 public:
  using TermMap = std::map<TermKey, Rational>;

  Expr() = default;
  Expr(long c) : Expr(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Expr(const Rational& c);             // NOLINT(google-explicit-constructor)

  static Expr exp_term(int k);
  static Expr atom(const FuncAtom& f);
  static Expr atom(const std::string& base, int order = 0) { return atom(FuncAtom{base, order}); }
  static Expr term(const Rational& c, int k, Monomial m);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_single_term() const { return terms_.size() == 1; }
  // Rational constant (no exponential, no atoms), including zero.
  std::optional<Rational> constant_value() const;
  bool is_constant() const { return constant_value().has_value(); }
  // c * e^{kx3}: invertible in the ring.
  bool is_unit() const;

  Expr& operator+=(const Expr& o);
  Expr& operator-=(const Expr& o);
  Expr& operator*=(const Expr& o) { return *this = *this * o; }

  friend Expr operator+(Expr a, const Expr& b) { return a += b; }
  friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);

  Expr scaled(const Rational& c) const;
  Expr shifted(int k) const;  // multiply by e^{k x3}

  friend bool operator==(const Expr& a, const Expr& b) { return a.terms_ == b.terms_; }

  // Canonical DSL text: terms in (expWeight, monomial) order.
  std::string str() const;

 private:
  void add_term(const TermKey& key, const Rational& c);
  TermMap terms_;
};

inline bool is_zero(const Expr& e) { return e.is_zero(); }
inline bool is_zero(double v) { return v == 0.0; }

Expr neg(const Expr& x);
Expr pow(const Expr& x, int n);
Expr differentiate(const Expr& x);

// Inverse of a unit c*e^{kx3}; nullopt otherwise.
std::optional<Expr> unit_inverse(const Expr& x);
// Exact quotient x / t for a single-term t, when every term of x is divisible.
std::optional<Expr> divide_by_term(const Expr& x, const Expr& t);

// Exact quotient x / d by leading-term division, when it terminates with a zero
// remainder within a bounded number of steps. A result is always exact.
std::optional<Expr> exact_divide(const Expr& x, const Expr& d);

std::string atom_str(const FuncAtom& f);

class MissingValue : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using FuncTable = std::map<FuncAtom, double>;
double evaluate(const Expr& x, double x3, const FuncTable& funcs);

}  // namespace ssnm
