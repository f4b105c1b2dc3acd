#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ssnm/expr.hpp"

namespace ssnm {

using SymbolSet = std::set<std::string, std::less<>>;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// expr   := ['-'] term (('+'|'-') ['-'] term)*
// term   := factor ('*' factor)*
// factor := primary ('^' posint)*
// primary:= rational | exp(INT*x3) | symbol '''* | '(' expr ')'
Expr parse_expr(std::string_view text, const SymbolSet& symbols);

}  // namespace ssnm
