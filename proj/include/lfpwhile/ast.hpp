#pragma once

#include <cstdint>
#include <memory>
#include <variant>

#include "lfpwhile/machine_state.hpp"

namespace lfpwhile {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;
struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;

bool expr_eq(const ExprPtr& a, const ExprPtr& b);
bool stmt_eq(const StmtPtr& a, const StmtPtr& b);

struct LitExpr {
  std::uint64_t value;
  friend bool operator==(const LitExpr&, const LitExpr&) = default;
};
struct Reg1Expr {
  friend bool operator==(const Reg1Expr&, const Reg1Expr&) { return true; }
};
struct Reg2Expr {
  friend bool operator==(const Reg2Expr&, const Reg2Expr&) { return true; }
};
struct MemExpr {
  ExprPtr addr;
  friend bool operator==(const MemExpr& a, const MemExpr& b) {
    return expr_eq(a.addr, b.addr);
  }
};
struct AddExpr {
  ExprPtr lhs;
  ExprPtr rhs;
  friend bool operator==(const AddExpr& a, const AddExpr& b) {
    return expr_eq(a.lhs, b.lhs) && expr_eq(a.rhs, b.rhs);
  }
};

struct Expr {
  std::variant<LitExpr, Reg1Expr, Reg2Expr, MemExpr, AddExpr> node;
  friend bool operator==(const Expr& a, const Expr& b) {
    return a.node == b.node;
  }
};

inline bool expr_eq(const ExprPtr& a, const ExprPtr& b) {
  return a == b || (a && b && *a == *b);
}

struct Neq0Cond {
  ExprPtr expr;
  friend bool operator==(const Neq0Cond& a, const Neq0Cond& b) {
    return expr_eq(a.expr, b.expr);
  }
};
struct EqCond {
  ExprPtr lhs;
  ExprPtr rhs;
  friend bool operator==(const EqCond& a, const EqCond& b) {
    return expr_eq(a.lhs, b.lhs) && expr_eq(a.rhs, b.rhs);
  }
};

struct Cond {
  std::variant<Neq0Cond, EqCond> node;
  friend bool operator==(const Cond& a, const Cond& b) {
    return a.node == b.node;
  }
};

struct SkipStmt {
  friend bool operator==(const SkipStmt&, const SkipStmt&) { return true; }
};
struct SeqStmt {
  StmtPtr first;
  StmtPtr second;
  friend bool operator==(const SeqStmt& a, const SeqStmt& b) {
    return stmt_eq(a.first, b.first) && stmt_eq(a.second, b.second);
  }
};
struct SetReg1Stmt {
  ExprPtr value;
  friend bool operator==(const SetReg1Stmt& a, const SetReg1Stmt& b) {
    return expr_eq(a.value, b.value);
  }
};
struct SetReg2Stmt {
  ExprPtr value;
  friend bool operator==(const SetReg2Stmt& a, const SetReg2Stmt& b) {
    return expr_eq(a.value, b.value);
  }
};
struct IncrReg2Stmt {
  friend bool operator==(const IncrReg2Stmt&, const IncrReg2Stmt&) {
    return true;
  }
};
struct SetMemStmt {
  ExprPtr addr;
  ExprPtr value;
  friend bool operator==(const SetMemStmt& a, const SetMemStmt& b) {
    return expr_eq(a.addr, b.addr) && expr_eq(a.value, b.value);
  }
};
struct WhileStmt {
  Cond cond;
  StmtPtr body;
  friend bool operator==(const WhileStmt& a, const WhileStmt& b) {
    return a.cond == b.cond && stmt_eq(a.body, b.body);
  }
};

struct Stmt {
  std::variant<SkipStmt, SeqStmt, SetReg1Stmt, SetReg2Stmt, IncrReg2Stmt,
               SetMemStmt, WhileStmt>
      node;
  friend bool operator==(const Stmt& a, const Stmt& b) {
    return a.node == b.node;
  }
};

inline bool stmt_eq(const StmtPtr& a, const StmtPtr& b) {
  return a == b || (a && b && *a == *b);
}

namespace ast {

inline ExprPtr lit(std::uint64_t n) {
  return std::make_shared<const Expr>(Expr{LitExpr{n}});
}
inline ExprPtr reg1() { return std::make_shared<const Expr>(Expr{Reg1Expr{}}); }
inline ExprPtr reg2() { return std::make_shared<const Expr>(Expr{Reg2Expr{}}); }
inline ExprPtr mem(ExprPtr addr) {
  return std::make_shared<const Expr>(Expr{MemExpr{std::move(addr)}});
}
inline ExprPtr add(ExprPtr lhs, ExprPtr rhs) {
  return std::make_shared<const Expr>(
      Expr{AddExpr{std::move(lhs), std::move(rhs)}});
}

inline Cond neq0(ExprPtr e) { return Cond{Neq0Cond{std::move(e)}}; }
inline Cond eq(ExprPtr lhs, ExprPtr rhs) {
  return Cond{EqCond{std::move(lhs), std::move(rhs)}};
}

inline StmtPtr skip() { return std::make_shared<const Stmt>(Stmt{SkipStmt{}}); }
inline StmtPtr seq(StmtPtr first, StmtPtr second) {
  return std::make_shared<const Stmt>(
      Stmt{SeqStmt{std::move(first), std::move(second)}});
}
inline StmtPtr set_reg1(ExprPtr value) {
  return std::make_shared<const Stmt>(Stmt{SetReg1Stmt{std::move(value)}});
}
inline StmtPtr set_reg2(ExprPtr value) {
  return std::make_shared<const Stmt>(Stmt{SetReg2Stmt{std::move(value)}});
}
inline StmtPtr incr_reg2_stmt() {
  return std::make_shared<const Stmt>(Stmt{IncrReg2Stmt{}});
}
inline StmtPtr set_mem(ExprPtr addr, ExprPtr value) {
  return std::make_shared<const Stmt>(
      Stmt{SetMemStmt{std::move(addr), std::move(value)}});
}
inline StmtPtr while_loop(Cond cond, StmtPtr body) {
  return std::make_shared<const Stmt>(
      Stmt{WhileStmt{std::move(cond), std::move(body)}});
}

}  // namespace ast

// Total over 64-bit naturals; addition past the representable range raises
// std::overflow_error.
std::uint64_t eval_expr(const Expr& e, const MachineState& s);
bool eval_cond(const Cond& c, const MachineState& s);

}  // namespace lfpwhile
