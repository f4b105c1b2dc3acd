#include "ssnm/parse.hpp"

#include <cctype>

namespace ssnm {

namespace {

class Parser {
 public:
  Parser(std::string_view s, const SymbolSet& symbols) : s_(s), symbols_(symbols) {}

  Expr parse() {
    Expr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::string(s_.substr(start, pos_ - start));
  }

  Expr signed_term() {
    bool negative = false;
    while (accept('-')) negative = !negative;
    Expr t = term();
    return negative ? -t : t;
  }

  Expr expr() {
    Expr e = signed_term();
    for (;;) {
      if (accept('+')) {
        e += signed_term();
      } else if (accept('-')) {
        e -= signed_term();
      } else {
        return e;
      }
    }
  }

  Expr term() {
    Expr t = factor();
    while (accept('*')) t = t * factor();
    return t;
  }

  Expr factor() {
    Expr f = primary();
    while (accept('^')) {
      std::size_t at = pos_;
      std::string d = digits();
      if (d.size() > 4) throw ParseError("exponent too large", at);
      int n = std::stoi(d);
      if (n <= 0) throw ParseError("exponent must be positive", at);
      f = pow(f, n);
    }
    return f;
  }

  Expr primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string n = digits();
      if (accept('/')) {
        std::size_t at = pos_;
        std::string d = digits();
        if (d.find_first_not_of('0') == std::string::npos) throw ParseError("zero denominator", at);
        return Expr(Rational::parse(n + "/" + d));
      }
      return Expr(Rational::parse(n));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      skip_ws();
      if (name == "exp" && pos_ < s_.size() && s_[pos_] == '(') return exponential();
      if (!symbols_.contains(name)) throw ParseError("unknown function symbol '" + name + "'", start);
      int order = 0;
      while (pos_ < s_.size() && s_[pos_] == '\'') {
        ++order;
        ++pos_;
      }
      return Expr::atom(name, order);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  // after "exp": ( signed_integer * x3 )
  Expr exponential() {
    expect('(');
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    std::size_t at = pos_;
    std::string d = digits();
    if (d.size() > 6) throw ParseError("exponential weight too large", at);
    int k = std::stoi(d);
    expect('*');
    skip_ws();
    if (s_.substr(pos_, 2) != "x3") fail("expected 'x3'");
    pos_ += 2;
    expect(')');
    return Expr::exp_term(negative ? -k : k);
  }

  std::string_view s_;
  const SymbolSet& symbols_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text, const SymbolSet& symbols) {
  return Parser(text, symbols).parse();
}

}  // namespace ssnm
