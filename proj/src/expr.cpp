#include "ssnm/expr.hpp"

#include <cmath>

namespace ssnm {

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first < j->first) {
      out.push_back(*i++);
    } else if (j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, a.end());
  out.insert(out.end(), j, b.end());
  return out;
}

Expr::Expr(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(TermKey{}, c);
}

Expr Expr::exp_term(int k) { return term(Rational(1), k, {}); }

Expr Expr::atom(const FuncAtom& f) {
  if (f.order < 0) throw std::invalid_argument("negative derivative order");
  return term(Rational(1), 0, {{f, 1}});
}

Expr Expr::term(const Rational& c, int k, Monomial m) {
  Expr e;
  if (!c.is_zero()) e.terms_.emplace(TermKey{k, std::move(m)}, c);
  return e;
}

std::optional<Rational> Expr::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() != 1) return std::nullopt;
  const auto& [key, c] = *terms_.begin();
  if (key.exp_weight != 0 || !key.monomial.empty()) return std::nullopt;
  return c;
}

bool Expr::is_unit() const {
  return terms_.size() == 1 && terms_.begin()->first.monomial.empty();
}

void Expr::add_term(const TermKey& key, const Rational& c) {
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Expr& Expr::operator+=(const Expr& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Expr& Expr::operator-=(const Expr& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

Expr operator*(const Expr& a, const Expr& b) {
  Expr out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      TermKey key{ka.exp_weight + kb.exp_weight, monomial_mul(ka.monomial, kb.monomial)};
      out.add_term(key, ca * cb);
    }
  }
  return out;
}

Expr operator-(const Expr& a) { return a.scaled(Rational(-1)); }

Expr Expr::scaled(const Rational& c) const {
  Expr out;
  if (c.is_zero()) return out;
  for (const auto& [k, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), k, v * c);
  return out;
}

Expr Expr::shifted(int k) const {
  Expr out;
  for (const auto& [key, v] : terms_)
    out.terms_.emplace(TermKey{key.exp_weight + k, key.monomial}, v);
  return out;
}

Expr neg(const Expr& x) { return -x; }

Expr pow(const Expr& x, int n) {
  if (n < 0) throw std::invalid_argument("negative power");
  Expr result(1);
  Expr base = x;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Expr differentiate(const Expr& x) {
  Expr out;
  for (const auto& [key, c] : x.terms()) {
    if (key.exp_weight != 0)
      out += Expr::term(c * Rational(key.exp_weight), key.exp_weight, key.monomial);
    // Leibniz over the monomial: d(f^p) = p f^(p-1) f'
    for (std::size_t i = 0; i < key.monomial.size(); ++i) {
      const auto& [atom, p] = key.monomial[i];
      Monomial rest;
      for (std::size_t j = 0; j < key.monomial.size(); ++j) {
        if (j != i) {
          rest.push_back(key.monomial[j]);
        } else if (p > 1) {
          rest.emplace_back(atom, p - 1);
        }
      }
      Monomial next{{FuncAtom{atom.base, atom.order + 1}, 1}};
      out += Expr::term(c * Rational(p), key.exp_weight, monomial_mul(rest, next));
    }
  }
  return out;
}

std::optional<Expr> unit_inverse(const Expr& x) {
  if (!x.is_unit()) return std::nullopt;
  const auto& [key, c] = *x.terms().begin();
  return Expr::term(c.inverse(), -key.exp_weight, {});
}

std::optional<Expr> divide_by_term(const Expr& x, const Expr& t) {
  if (!t.is_single_term()) return std::nullopt;
  const auto& [tk, tc] = *t.terms().begin();
  Expr out;
  for (const auto& [key, c] : x.terms()) {
    Monomial rest;
    auto i = key.monomial.begin();
    for (const auto& [atom, p] : tk.monomial) {
      while (i != key.monomial.end() && i->first < atom) rest.push_back(*i++);
      if (i == key.monomial.end() || !(i->first == atom) || i->second < p) return std::nullopt;
      if (i->second > p) rest.emplace_back(atom, i->second - p);
      ++i;
    }
    rest.insert(rest.end(), i, key.monomial.end());
    out += Expr::term(c / tc, key.exp_weight - tk.exp_weight, std::move(rest));
  }
  return out;
}

namespace {

// Graded lex on atom exponents, then the exponential weight: compatible with
// multiplication, which leading-term division needs.
bool division_less(const TermKey& x, const TermKey& y) {
  auto degree = [](const Monomial& m) {
    int d = 0;
    for (const auto& [a, p] : m) d += p;
    return d;
  };
  const int dx = degree(x.monomial);
  const int dy = degree(y.monomial);
  if (dx != dy) return dx < dy;
  auto i = x.monomial.begin();
  auto j = y.monomial.begin();
  while (i != x.monomial.end() || j != y.monomial.end()) {
    if (j == y.monomial.end() || (i != x.monomial.end() && i->first < j->first)) return false;
    if (i == x.monomial.end() || j->first < i->first) return true;
    if (i->second != j->second) return i->second < j->second;
    ++i;
    ++j;
  }
  return x.exp_weight < y.exp_weight;
}

const std::pair<const TermKey, Rational>& leading(const Expr& e) {
  auto best = e.terms().begin();
  for (auto it = e.terms().begin(); it != e.terms().end(); ++it)
    if (division_less(best->first, it->first)) best = it;
  return *best;
}

}  // namespace

std::optional<Expr> exact_divide(const Expr& x, const Expr& d) {
  if (d.is_zero()) return std::nullopt;
  if (d.is_single_term()) return divide_by_term(x, d);
  const auto& [dk, dc] = leading(d);
  const Expr lead_d = Expr::term(dc, dk.exp_weight, dk.monomial);
  Expr q;
  Expr r = x;
  const std::size_t cap = 8 * (x.size() + d.size()) + 16;
  for (std::size_t step = 0; step < cap && !r.is_zero(); ++step) {
    const auto& [rk, rc] = leading(r);
    auto t = divide_by_term(Expr::term(rc, rk.exp_weight, rk.monomial), lead_d);
    if (!t) return std::nullopt;
    q += *t;
    r -= *t * d;
  }
  if (!r.is_zero()) return std::nullopt;
  return q;
}

std::string atom_str(const FuncAtom& f) {
  return f.base + std::string(static_cast<std::size_t>(f.order), '\'');
}

namespace {

std::string factors_str(const TermKey& key) {
  std::string s;
  auto append = [&s](const std::string& f) {
    if (!s.empty()) s += '*';
    s += f;
  };
  if (key.exp_weight != 0) append("exp(" + std::to_string(key.exp_weight) + "*x3)");
  for (const auto& [atom, p] : key.monomial) {
    std::string f = atom_str(atom);
    if (p > 1) f += "^" + std::to_string(p);
    append(f);
  }
  return s;
}

}  // namespace

std::string Expr::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Rational mag = c.abs();
    std::string f = factors_str(key);
    if (f.empty()) {
      out += mag.str();
    } else if (mag.is_one()) {
      out += f;
    } else {
      out += mag.str() + "*" + f;
    }
  }
  return out;
}

double evaluate(const Expr& x, double x3, const FuncTable& funcs) {
  double total = 0.0;
  for (const auto& [key, c] : x.terms()) {
    double v = c.to_double();
    if (key.exp_weight != 0) v *= std::exp(key.exp_weight * x3);
    for (const auto& [atom, p] : key.monomial) {
      auto it = funcs.find(atom);
      if (it == funcs.end()) throw MissingValue("no value for " + atom_str(atom));
      v *= std::pow(it->second, p);
    }
    total += v;
  }
  return total;
}

}  // namespace ssnm
