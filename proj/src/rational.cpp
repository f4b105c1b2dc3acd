#include "ssnm/rational.hpp"

#include <stdexcept>

namespace ssnm {

Rational::Rational(long n, long d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  auto digits_ok = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view num = text.substr(0, slash);
  if (!digits_ok(num, true)) throw std::invalid_argument("bad rational: " + std::string(text));
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  mpz_class z(n, 10);
  if (slash == std::string_view::npos) return Rational(mpq_class(z));
  std::string_view den = text.substr(slash + 1);
  if (!digits_ok(den, false)) throw std::invalid_argument("bad rational: " + std::string(text));
  mpz_class dz{std::string(den), 10};
  if (dz == 0) throw std::domain_error("rational with zero denominator");
  return Rational(mpq_class(z, dz));
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  q_ /= o.q_;
  return *this;
}

}  // namespace ssnm
