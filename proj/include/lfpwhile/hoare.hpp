#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lfpwhile/ast.hpp"
#include "lfpwhile/machine_state.hpp"
#include "lfpwhile/partial.hpp"
#include "lfpwhile/semantics.hpp"

namespace lfpwhile {

using StatePredicate = std::function<bool(const MachineState&)>;

template <typename A>
using PostPredicate = std::function<bool(const A&, const MachineState&)>;

// A budgeted program: bottom means it did not converge within the budget.
template <typename A>
using BudgetedProg =
    std::function<Partial<std::pair<A, MachineState>>(const MachineState&,
                                                      std::uint64_t)>;

// Partial-correctness triple: whenever the program converges from a state
// satisfying `pre`, the value/state pair satisfies `post`.
template <typename A>
struct HoareTriple {
  StatePredicate pre;
  BudgetedProg<A> prog;
  PostPredicate<A> post;
};

template <typename A>
struct Counterexample {
  MachineState state;
  A value;
  MachineState post_state;
};

template <typename A>
struct Verdict {
  std::uint64_t states_checked = 0;  // states satisfying the precondition
  std::uint64_t converged = 0;
  std::uint64_t exhausted_budget = 0;  // vacuous passes, reported for coverage
  std::optional<Counterexample<A>> counterexample;

  bool passed() const { return !counterexample.has_value(); }
};

// Deterministic state supplies. Exhaustive mode enumerates reg1, reg2 in
// [0, reg_bound] crossed with every memory supported on at most `max_support`
// addresses from [1, addr_bound] holding values in [1, val_bound] (a zero
// value is the same state as an absent entry). Enumeration order: memory by
// support size, then support, then values; registers innermost.
class StateSampler {
 public:
  struct Exhaustive {
    std::uint32_t reg_bound = 8;
    std::uint32_t addr_bound = 12;
    std::uint32_t val_bound = 12;
    std::uint32_t max_support = 2;
  };
  struct Random {
    std::uint64_t count = 1000;
    std::uint64_t seed = 0;
    std::uint32_t reg_bound = 8;
    std::uint32_t addr_bound = 12;
    std::uint32_t val_bound = 12;
    std::uint32_t max_support = 2;
  };

  static StateSampler exhaustive(Exhaustive bounds);
  static StateSampler random(Random bounds);
  static StateSampler of_states(std::vector<MachineState> states);

  // Visits states in canonical order until the callback returns false.
  void for_each(const std::function<bool(const MachineState&)>& visit) const;

  std::vector<MachineState> to_states() const;
  std::uint64_t count() const;

 private:
  StateSampler() : mode_(std::in_place_type<std::vector<MachineState>>) {}
  std::variant<Exhaustive, Random, std::vector<MachineState>> mode_;
};

// Runs the triple over every sampled state satisfying the precondition.
// States that exhaust the budget pass vacuously but are counted; the first
// converged state violating the postcondition (in sampler order) is the
// counterexample.
template <typename A>
Verdict<A> check_triple(const HoareTriple<A>& triple,
                        const StateSampler& sampler, std::uint64_t budget) {
  Verdict<A> verdict;
  sampler.for_each([&](const MachineState& s) {
    if (!triple.pre(s)) return true;
    ++verdict.states_checked;
    auto result = triple.prog(s, budget);
    if (!result) {
      ++verdict.exhausted_budget;
      return true;
    }
    ++verdict.converged;
    if (!triple.post(result->first, result->second)) {
      verdict.counterexample =
          Counterexample<A>{s, result->first, result->second};
      return false;
    }
    return true;
  });
  return verdict;
}

// Wraps a statement as a budgeted Unit program.
BudgetedProg<Unit> budgeted_stmt(StmtPtr stmt);

struct WhileRuleReport {
  Verdict<Unit> premise;                 // {I and cond} body {I}
  std::optional<Verdict<Unit>> conclusion;  // {I} while cond body {not cond and I}
  bool passed = false;
  std::string failed_phase;
};

// The while rule as an executable check: verify the premise triple over the
// sampler, and only if it holds verify the conclusion triple.
WhileRuleReport check_while_rule(const Cond& cond, const StmtPtr& body,
                                 const StatePredicate& invariant,
                                 const StateSampler& sampler,
                                 std::uint64_t budget);

// The fuel-indexed form of the conclusion: {I} while_fuel(fuel) {not cond and
// I}. Fuel 0 passes vacuously since the approximant is bottom everywhere.
Verdict<Unit> check_fuel_triple(std::uint64_t fuel, const Cond& cond,
                                const StmtPtr& body,
                                const StatePredicate& invariant,
                                const StateSampler& sampler,
                                std::uint64_t body_budget = kDefaultBudget);

}  // namespace lfpwhile
