#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lfpwhile/ast.hpp"

namespace lfpwhile {

// Positioned syntax error (1-based line and column) with the tokens that
// would have been accepted.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string found,
             std::vector<std::string> expected);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& found() const { return found_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string found_;
  std::vector<std::string> expected_;
};

// Grammar (UTF-8, case-sensitive, '#' comments to end of line):
//   stmt  := "skip" | assign | "incr" "reg2" | while | stmt ";" stmt
//   while := "while" cond "{" stmt "}"
//   assign:= ("reg1" | "reg2" | "mem" "[" expr "]") ":=" expr
//   cond  := expr "!=" "0" | expr "==" expr
//   expr  := nat | "reg1" | "reg2" | "mem" "[" expr "]" | expr "+" expr
// "+" is left-associative, "mem[...]" binds tightest, ";" chains to the
// right.
StmtPtr parse(std::string_view text);

// Canonical text form; parse(pretty_print(s)) == s for statements whose "+"
// chains are left-nested and ";" chains right-nested, which is everything the
// grammar can express.
std::string pretty_print(const StmtPtr& stmt);
std::string pretty_print(const Cond& cond);
std::string pretty_print(const ExprPtr& expr);

}  // namespace lfpwhile
