#include "lfpwhile/semantics.hpp"

#include <stdexcept>
#include <string>

namespace lfpwhile {

namespace {

// Memo entries are cheap but unbounded across runs; drop the cache once it
// grows past this.
constexpr std::size_t kMemoCap = std::size_t{1} << 20;

Prog<MachineState, Unit> modify(
    std::function<MachineState(MachineState)> update) {
  return bind(reader_to_program(get<MachineState>()),
              [update = std::move(update)](MachineState s) {
                return put(update(std::move(s)));
              });
}

}  // namespace

Reader<MachineState, std::uint64_t> read_reg1() {
  return rbind(get<MachineState>(), [](const MachineState& s) {
    return ret<MachineState>(s.reg1());
  });
}

Reader<MachineState, std::uint64_t> read_reg2() {
  return rbind(get<MachineState>(), [](const MachineState& s) {
    return ret<MachineState>(s.reg2());
  });
}

Reader<MachineState, std::uint64_t> read_addr(std::uint64_t addr) {
  return rbind(get<MachineState>(), [addr](const MachineState& s) {
    return ret<MachineState>(s.load(addr));
  });
}

Prog<MachineState, Unit> write_reg1(std::uint64_t value) {
  return modify([value](MachineState s) { return std::move(s.set_reg1(value)); });
}

Prog<MachineState, Unit> write_reg2(std::uint64_t value) {
  return modify([value](MachineState s) { return std::move(s.set_reg2(value)); });
}

Prog<MachineState, Unit> incr_reg2() {
  return modify(
      [](MachineState s) { return std::move(s.set_reg2(s.reg2() + 1)); });
}

Prog<MachineState, Unit> write_mem(std::uint64_t addr, std::uint64_t value) {
  return modify(
      [addr, value](MachineState s) { return std::move(s.store(addr, value)); });
}

Reader<MachineState, std::uint64_t> expr_reader(ExprPtr e) {
  return [e = std::move(e)](const MachineState& s) { return eval_expr(*e, s); };
}

Reader<MachineState, bool> cond_reader(const Cond& c) {
  return [c](const MachineState& s) { return eval_cond(c, s); };
}

WhileFunctional while_functional(StateReader cond, StateProg body) {
  // The step program is assembled from the combinators once; only the
  // approximant it recurses into changes between engine calls. Each
  // while_functional() value must therefore feed exactly one evaluator.
  struct Shared {
    const Approximant<MachineState, WhileResult>* self = nullptr;
    StateProg step;
  };
  auto shared = std::make_shared<Shared>();
  Shared* raw = shared.get();
  StateProg recurse = [raw](const MachineState& s) -> Partial<WhileResult> {
    return (*raw->self)(s);
  };
  StateProg on_true =
      bind(std::move(body), [recurse = std::move(recurse)](
                                Unit) -> const StateProg& { return recurse; });
  StateProg on_false = reader_to_program(ret<MachineState>(unit));
  shared->step =
      bind(reader_to_program(std::move(cond)),
           [on_true = std::move(on_true), on_false = std::move(on_false)](
               bool c) -> const StateProg& { return c ? on_true : on_false; });
  return [shared](const Approximant<MachineState, WhileResult>& self,
                  const MachineState& s) -> Partial<WhileResult> {
    shared->self = &self;
    return shared->step(s);
  };
}

Partial<WhileResult> while_fuel(std::uint64_t fuel, const StateReader& cond,
                                const StateProg& body, const MachineState& s) {
  return eval_fuel(while_functional(cond, body), fuel, s);
}

namespace {

StateProg denote_loop(const WhileStmt& loop, std::uint64_t budget,
                      const std::shared_ptr<FuelTally>& tally) {
  auto functional =
      while_functional(cond_reader(loop.cond), denote(loop.body, budget, tally));
  auto evaluator =
      std::make_shared<FuelEvaluator<MachineState, WhileResult>>(
          std::move(functional));
  return [evaluator, budget, tally](const MachineState& s) -> Partial<WhileResult> {
    if (evaluator->memo_size() > kMemoCap) evaluator->clear();
    auto outcome = evaluator->eval_lfp(budget, s);
    if (!outcome.is_converged()) {
      if (tally) tally->exhausted = true;
      return std::nullopt;
    }
    if (tally) tally->unfoldings += outcome.fuel_used();
    return outcome.value();
  };
}

}  // namespace

StateProg denote(const StmtPtr& stmt, std::uint64_t budget,
                 std::shared_ptr<FuelTally> tally) {
  struct Visitor {
    std::uint64_t budget;
    const std::shared_ptr<FuelTally>& tally;

    StateProg operator()(const SkipStmt&) const {
      return reader_to_program(ret<MachineState>(unit));
    }
    StateProg operator()(const SeqStmt& s) const {
      auto second = denote(s.second, budget, tally);
      return bind(denote(s.first, budget, tally),
                  [second = std::move(second)](Unit) { return second; });
    }
    StateProg operator()(const SetReg1Stmt& s) const {
      return bind(reader_to_program(expr_reader(s.value)),
                  [](std::uint64_t v) { return write_reg1(v); });
    }
    StateProg operator()(const SetReg2Stmt& s) const {
      return bind(reader_to_program(expr_reader(s.value)),
                  [](std::uint64_t v) { return write_reg2(v); });
    }
    StateProg operator()(const IncrReg2Stmt&) const { return incr_reg2(); }
    StateProg operator()(const SetMemStmt& s) const {
      return bind(reader_to_program(expr_reader(s.addr)),
                  [value = s.value](std::uint64_t a) {
                    return bind(reader_to_program(expr_reader(value)),
                                [a](std::uint64_t v) { return write_mem(a, v); });
                  });
    }
    StateProg operator()(const WhileStmt& s) const {
      return denote_loop(s, budget, tally);
    }
  };
  return std::visit(Visitor{budget, tally}, stmt->node);
}

PreparedProgram::PreparedProgram(StmtPtr stmt, std::uint64_t budget)
    : stmt_(std::move(stmt)), budget_(budget) {
  if (budget_ < 1)
    throw std::invalid_argument("PreparedProgram: budget must be >= 1");
  if (const auto* loop = std::get_if<WhileStmt>(&stmt_->node)) {
    top_loop_ = std::make_shared<FuelEvaluator<MachineState, WhileResult>>(
        while_functional(cond_reader(loop->cond),
                         denote(loop->body, budget_, nullptr)));
  } else {
    tally_ = std::make_shared<FuelTally>();
    prog_ = denote(stmt_, budget_, tally_);
  }
}

EvalOutcome<WhileResult> PreparedProgram::run(const MachineState& s) const {
  if (top_loop_) {
    if (top_loop_->memo_size() > kMemoCap) top_loop_->clear();
    return top_loop_->eval_lfp(budget_, s);
  }
  tally_->unfoldings = 0;
  tally_->exhausted = false;
  auto result = prog_(s);
  if (!result || tally_->exhausted)
    return EvalOutcome<WhileResult>::exhausted(budget_);
  std::uint64_t total = 1 + tally_->unfoldings;
  if (total > budget_) return EvalOutcome<WhileResult>::exhausted(budget_);
  return EvalOutcome<WhileResult>::converged(*result, total);
}

EvalOutcome<WhileResult> exec(const StmtPtr& stmt, std::uint64_t budget,
                              const MachineState& s) {
  return PreparedProgram(stmt, budget).run(s);
}

CheckReport check_while_unfold(const Cond& cond, const StmtPtr& body,
                               const std::vector<MachineState>& states,
                               std::uint64_t budget) {
  CheckReport report;
  PreparedProgram loop(ast::while_loop(cond, body), budget);

  auto tally = std::make_shared<FuelTally>();
  StateProg loop_prog = denote(ast::while_loop(cond, body), budget, tally);
  StateProg on_true =
      bind(denote(body, budget, tally),
           [loop_prog = std::move(loop_prog)](Unit) -> const StateProg& {
             return loop_prog;
           });
  StateProg on_false = reader_to_program(ret<MachineState>(unit));
  StateProg unfolded =
      bind(reader_to_program(cond_reader(cond)),
           [on_true = std::move(on_true), on_false = std::move(on_false)](
               bool c) -> const StateProg& { return c ? on_true : on_false; });

  for (std::size_t i = 0; i < states.size(); ++i) {
    const MachineState& s = states[i];
    auto left = loop.run(s);
    tally->unfoldings = 0;
    tally->exhausted = false;
    auto right = unfolded(s);
    ++report.cases;
    auto fail = [&](const std::string& why) {
      report.passed = false;
      report.witness = "state " + s.to_string() + ": " + why;
    };
    if (left.is_converged() != right.has_value()) {
      fail(left.is_converged() ? "loop converged, unfolding did not"
                               : "unfolding converged, loop did not");
      return report;
    }
    if (!left.is_converged()) continue;
    if (!(left.value() == *right)) {
      fail("results differ: " + left.value().second.to_string() + " vs " +
           right->second.to_string());
      return report;
    }
    std::uint64_t lk = left.fuel_used();
    std::uint64_t rk = tally->unfoldings;
    std::uint64_t diff = lk > rk ? lk - rk : rk - lk;
    if (diff > 1) {
      fail("fuel counts differ by " + std::to_string(diff) + " (" +
           std::to_string(lk) + " vs " + std::to_string(rk) + ")");
      return report;
    }
  }
  return report;
}

CheckReport check_while_iff_fuel(const Cond& cond, const StmtPtr& body,
                                 const std::vector<MachineState>& states,
                                 std::uint64_t budget) {
  CheckReport report;
  StateReader cond_r = cond_reader(cond);
  StateProg body_prog = denote(body, budget, nullptr);
  FuelEvaluator<MachineState, WhileResult> approximants(
      while_functional(cond_r, body_prog));
  PreparedProgram loop(ast::while_loop(cond, body), budget);

  for (std::size_t i = 0; i < states.size(); ++i) {
    const MachineState& s = states[i];
    auto outcome = loop.run(s);
    auto fail = [&](const std::string& why) {
      report.passed = false;
      report.witness = "state " + s.to_string() + ": " + why;
    };
    if (outcome.is_converged()) {
      std::uint64_t k = outcome.fuel_used();
      ++report.cases;
      auto at_k = approximants.eval_fuel(k, s);
      if (!at_k || !(*at_k == outcome.value())) {
        fail("approximant at fuel " + std::to_string(k) +
             " does not match the converged result");
        return report;
      }
      if (approximants.eval_fuel(k - 1, s).has_value()) {
        fail("approximant already defined at fuel " + std::to_string(k - 1));
        return report;
      }
    } else {
      ++report.cases;
      for (std::uint64_t n = 0; n <= budget; ++n) {
        if (approximants.eval_fuel(n, s).has_value()) {
          fail("exhausted, but the approximant is defined at fuel " +
               std::to_string(n));
          return report;
        }
      }
    }
    if (approximants.memo_size() > kMemoCap) approximants.clear();
  }
  return report;
}

}  // namespace lfpwhile
