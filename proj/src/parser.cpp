#include "lfpwhile/parser.hpp"

#include <cctype>
#include <charconv>
#include <utility>

namespace lfpwhile {

namespace {

std::string render(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) out += expected.size() == 2 ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::string found,
                       std::vector<std::string> expected)
    : std::runtime_error("syntax error at line " + std::to_string(line) +
                         ", column " + std::to_string(column) + ": expected " +
                         render(expected) + ", found " + found),
      line_(line),
      column_(column),
      found_(std::move(found)),
      expected_(std::move(expected)) {}

namespace {

enum class Tok {
  kSkip,
  kIncr,
  kWhile,
  kReg1,
  kReg2,
  kMem,
  kNumber,
  kAssign,     // :=
  kNeq,        // !=
  kEqEq,       // ==
  kPlus,
  kSemicolon,
  kLBrace,
  kRBrace,
  kLBracket,
  kRBracket,
  kEnd,
};

struct Token {
  Tok kind;
  std::uint64_t number = 0;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    skip_blank();
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= text_.size()) {
      current_.kind = Tok::kEnd;
      current_.text = "end of input";
      return;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        bump();
      std::string_view digits = text_.substr(start, pos_ - start);
      std::uint64_t value = 0;
      auto [ptr, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (ec != std::errc{})
        throw ParseError(current_.line, current_.column,
                         "number '" + std::string(digits) + "'",
                         {"a number below 2^64"});
      current_.kind = Tok::kNumber;
      current_.number = value;
      current_.text = std::string(digits);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        bump();
      std::string word(text_.substr(start, pos_ - start));
      current_.text = "'" + word + "'";
      if (word == "skip") current_.kind = Tok::kSkip;
      else if (word == "incr") current_.kind = Tok::kIncr;
      else if (word == "while") current_.kind = Tok::kWhile;
      else if (word == "reg1") current_.kind = Tok::kReg1;
      else if (word == "reg2") current_.kind = Tok::kReg2;
      else if (word == "mem") current_.kind = Tok::kMem;
      else
        throw ParseError(current_.line, current_.column, current_.text,
                         {"a keyword"});
      return;
    }
    auto symbol = [&](Tok kind, std::string_view text) {
      current_.kind = kind;
      current_.text = "'" + std::string(text) + "'";
      for (std::size_t i = 0; i < text.size(); ++i) bump();
    };
    switch (c) {
      case ':':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '=')
          return symbol(Tok::kAssign, ":=");
        break;
      case '!':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '=')
          return symbol(Tok::kNeq, "!=");
        break;
      case '=':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '=')
          return symbol(Tok::kEqEq, "==");
        break;
      case '+':
        return symbol(Tok::kPlus, "+");
      case ';':
        return symbol(Tok::kSemicolon, ";");
      case '{':
        return symbol(Tok::kLBrace, "{");
      case '}':
        return symbol(Tok::kRBrace, "}");
      case '[':
        return symbol(Tok::kLBracket, "[");
      case ']':
        return symbol(Tok::kRBracket, "]");
      default:
        break;
    }
    throw ParseError(line_, column_, "'" + std::string(1, c) + "'",
                     {"a token"});
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  Token current_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  StmtPtr parse_program() {
    StmtPtr stmt = parse_stmt();
    expect(Tok::kEnd, {"';'", "end of input"});
    return stmt;
  }

 private:
  [[noreturn]] void unexpected(std::vector<std::string> expected) {
    const Token& t = lex_.peek();
    throw ParseError(t.line, t.column, t.text, std::move(expected));
  }

  Token expect(Tok kind, std::vector<std::string> expected) {
    if (lex_.peek().kind != kind) unexpected(std::move(expected));
    return lex_.take();
  }

  StmtPtr parse_stmt() {
    StmtPtr first = parse_simple_stmt();
    if (lex_.peek().kind != Tok::kSemicolon) return first;
    lex_.take();
    return ast::seq(std::move(first), parse_stmt());
  }

  StmtPtr parse_simple_stmt() {
    switch (lex_.peek().kind) {
      case Tok::kSkip:
        lex_.take();
        return ast::skip();
      case Tok::kIncr:
        lex_.take();
        expect(Tok::kReg2, {"'reg2'"});
        return ast::incr_reg2_stmt();
      case Tok::kWhile: {
        lex_.take();
        Cond cond = parse_cond();
        expect(Tok::kLBrace, {"'{'"});
        StmtPtr body = parse_stmt();
        expect(Tok::kRBrace, {"';'", "'}'"});
        return ast::while_loop(std::move(cond), std::move(body));
      }
      case Tok::kReg1: {
        lex_.take();
        expect(Tok::kAssign, {"':='"});
        return ast::set_reg1(parse_expr());
      }
      case Tok::kReg2: {
        lex_.take();
        expect(Tok::kAssign, {"':='"});
        return ast::set_reg2(parse_expr());
      }
      case Tok::kMem: {
        lex_.take();
        expect(Tok::kLBracket, {"'['"});
        ExprPtr addr = parse_expr();
        expect(Tok::kRBracket, {"']'"});
        expect(Tok::kAssign, {"':='"});
        return ast::set_mem(std::move(addr), parse_expr());
      }
      default:
        unexpected({"a statement"});
    }
  }

  Cond parse_cond() {
    ExprPtr lhs = parse_expr();
    if (lex_.peek().kind == Tok::kNeq) {
      lex_.take();
      Token zero = expect(Tok::kNumber, {"'0'"});
      if (zero.number != 0)
        throw ParseError(zero.line, zero.column, zero.text, {"'0'"});
      return ast::neq0(std::move(lhs));
    }
    if (lex_.peek().kind == Tok::kEqEq) {
      lex_.take();
      return ast::eq(std::move(lhs), parse_expr());
    }
    unexpected({"'!='", "'=='"});
  }

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_primary();
    while (lex_.peek().kind == Tok::kPlus) {
      lex_.take();
      lhs = ast::add(std::move(lhs), parse_primary());
    }
    return lhs;
  }

  ExprPtr parse_primary() {
    switch (lex_.peek().kind) {
      case Tok::kNumber:
        return ast::lit(lex_.take().number);
      case Tok::kReg1:
        lex_.take();
        return ast::reg1();
      case Tok::kReg2:
        lex_.take();
        return ast::reg2();
      case Tok::kMem: {
        lex_.take();
        expect(Tok::kLBracket, {"'['"});
        ExprPtr addr = parse_expr();
        expect(Tok::kRBracket, {"']'"});
        return ast::mem(std::move(addr));
      }
      default:
        unexpected({"an expression"});
    }
  }

  Lexer lex_;
};

}  // namespace

StmtPtr parse(std::string_view text) { return Parser(text).parse_program(); }

std::string pretty_print(const ExprPtr& expr) {
  struct Visitor {
    std::string operator()(const LitExpr& e) const {
      return std::to_string(e.value);
    }
    std::string operator()(const Reg1Expr&) const { return "reg1"; }
    std::string operator()(const Reg2Expr&) const { return "reg2"; }
    std::string operator()(const MemExpr& e) const {
      return "mem[" + pretty_print(e.addr) + "]";
    }
    std::string operator()(const AddExpr& e) const {
      return pretty_print(e.lhs) + " + " + pretty_print(e.rhs);
    }
  };
  return std::visit(Visitor{}, expr->node);
}

std::string pretty_print(const Cond& cond) {
  struct Visitor {
    std::string operator()(const Neq0Cond& c) const {
      return pretty_print(c.expr) + " != 0";
    }
    std::string operator()(const EqCond& c) const {
      return pretty_print(c.lhs) + " == " + pretty_print(c.rhs);
    }
  };
  return std::visit(Visitor{}, cond.node);
}

std::string pretty_print(const StmtPtr& stmt) {
  struct Visitor {
    std::string operator()(const SkipStmt&) const { return "skip"; }
    std::string operator()(const SeqStmt& s) const {
      return pretty_print(s.first) + "; " + pretty_print(s.second);
    }
    std::string operator()(const SetReg1Stmt& s) const {
      return "reg1 := " + pretty_print(s.value);
    }
    std::string operator()(const SetReg2Stmt& s) const {
      return "reg2 := " + pretty_print(s.value);
    }
    std::string operator()(const IncrReg2Stmt&) const { return "incr reg2"; }
    std::string operator()(const SetMemStmt& s) const {
      return "mem[" + pretty_print(s.addr) + "] := " + pretty_print(s.value);
    }
    std::string operator()(const WhileStmt& s) const {
      return "while " + pretty_print(s.cond) + " { " + pretty_print(s.body) +
             " }";
    }
  };
  return std::visit(Visitor{}, stmt->node);
}

}  // namespace lfpwhile
