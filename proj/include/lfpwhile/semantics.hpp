#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "lfpwhile/ast.hpp"
#include "lfpwhile/fixpoint_engine.hpp"
#include "lfpwhile/machine_state.hpp"
#include "lfpwhile/monads.hpp"

namespace lfpwhile {

inline constexpr std::uint64_t kDefaultBudget = 10000;

using StateReader = Reader<MachineState, bool>;
using StateProg = Prog<MachineState, Unit>;
using WhileResult = std::pair<Unit, MachineState>;
using WhileFunctional = Functional<MachineState, WhileResult>;

// Register and memory primitives over MachineState.
Reader<MachineState, std::uint64_t> read_reg1();
Reader<MachineState, std::uint64_t> read_reg2();
Reader<MachineState, std::uint64_t> read_addr(std::uint64_t addr);
Prog<MachineState, Unit> write_reg1(std::uint64_t value);
Prog<MachineState, Unit> write_reg2(std::uint64_t value);
Prog<MachineState, Unit> incr_reg2();
Prog<MachineState, Unit> write_mem(std::uint64_t addr, std::uint64_t value);

Reader<MachineState, std::uint64_t> expr_reader(ExprPtr e);
Reader<MachineState, bool> cond_reader(const Cond& c);

// The loop's abstract body: check the condition, run the body and defer to
// the approximant on true, finish quietly on false.
WhileFunctional while_functional(StateReader cond, StateProg body);

// Fuel-indexed loop approximant; fuel 0 is bottom and each unfolding costs
// one unit. Body divergence propagates as bottom.
Partial<WhileResult> while_fuel(std::uint64_t fuel, const StateReader& cond,
                                const StateProg& body, const MachineState& s);

// Tracks loop unfoldings while a denoted statement runs.
struct FuelTally {
  std::uint64_t unfoldings = 0;
  bool exhausted = false;
};

// Denotation of a statement. Every while node is run through the engine's
// budgeted least-fixpoint search with the given budget; the optional tally
// collects the minimal fuel of each loop execution.
StateProg denote(const StmtPtr& stmt, std::uint64_t budget,
                 std::shared_ptr<FuelTally> tally = nullptr);

// A statement denoted once and runnable against many states. A single
// instance is not safe for concurrent calls; the approximant memo and the
// tally are shared across runs.
class PreparedProgram {
 public:
  PreparedProgram(StmtPtr stmt, std::uint64_t budget);

  EvalOutcome<WhileResult> run(const MachineState& s) const;
  std::uint64_t budget() const { return budget_; }

 private:
  StmtPtr stmt_;
  std::uint64_t budget_;
  std::shared_ptr<FuelTally> tally_;
  StateProg prog_;
  // Set when the statement itself is a loop: the outcome then reports that
  // loop's own minimal fuel.
  std::shared_ptr<FuelEvaluator<MachineState, WhileResult>> top_loop_;
};

// Big-step execution. Fuel accounting: a statement that is itself a while
// loop reports the loop's minimal fuel; any other statement reports one unit
// for the top-level application plus every loop unfolding it performed, and
// exceeding the budget on that total is exhaustion.
EvalOutcome<WhileResult> exec(const StmtPtr& stmt, std::uint64_t budget,
                              const MachineState& s);

// One-step unfolding law: running While(c,b) and running "if c then b; While(c,b)
// else done" (assembled from the combinators) agree on every sampled state —
// exact values and states, fuel apart by at most one unfolding.
CheckReport check_while_unfold(const Cond& cond, const StmtPtr& body,
                               const std::vector<MachineState>& states,
                               std::uint64_t budget);

// exec converges with fuel k exactly when the k-fuel approximant is defined
// and the (k-1)-fuel one is not; exhaustion means no fuel within the budget
// defines a value.
CheckReport check_while_iff_fuel(const Cond& cond, const StmtPtr& body,
                                 const std::vector<MachineState>& states,
                                 std::uint64_t budget);

}  // namespace lfpwhile
