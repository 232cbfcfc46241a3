#include "lfpwhile/ast.hpp"

#include <limits>
#include <stdexcept>

namespace lfpwhile {

std::uint64_t eval_expr(const Expr& e, const MachineState& s) {
  struct Visitor {
    const MachineState& s;
    std::uint64_t operator()(const LitExpr& e) const { return e.value; }
    std::uint64_t operator()(const Reg1Expr&) const { return s.reg1(); }
    std::uint64_t operator()(const Reg2Expr&) const { return s.reg2(); }
    std::uint64_t operator()(const MemExpr& e) const {
      return s.load(eval_expr(*e.addr, s));
    }
    std::uint64_t operator()(const AddExpr& e) const {
      std::uint64_t lhs = eval_expr(*e.lhs, s);
      std::uint64_t rhs = eval_expr(*e.rhs, s);
      if (lhs > std::numeric_limits<std::uint64_t>::max() - rhs)
        throw std::overflow_error("eval_expr: addition overflows");
      return lhs + rhs;
    }
  };
  return std::visit(Visitor{s}, e.node);
}

bool eval_cond(const Cond& c, const MachineState& s) {
  struct Visitor {
    const MachineState& s;
    bool operator()(const Neq0Cond& c) const { return eval_expr(*c.expr, s) != 0; }
    bool operator()(const EqCond& c) const {
      return eval_expr(*c.lhs, s) == eval_expr(*c.rhs, s);
    }
  };
  return std::visit(Visitor{s}, c.node);
}

}  // namespace lfpwhile
