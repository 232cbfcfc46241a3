#include "lfpwhile/hoare.hpp"

#include <random>

namespace lfpwhile {

namespace {

// Supports of the given size over [1, addr_bound], lexicographic, with every
// value assignment from [1, val_bound].
bool visit_memories(std::uint32_t addr_bound, std::uint32_t val_bound,
                    std::uint32_t max_support,
                    const std::function<bool(const MachineState::Memory&)>& visit) {
  MachineState::Memory memory;
  if (!visit(memory)) return false;
  for (std::uint32_t size = 1; size <= max_support; ++size) {
    if (size > addr_bound) break;
    std::vector<std::uint32_t> support(size);
    for (std::uint32_t i = 0; i < size; ++i) support[i] = i + 1;
    while (true) {
      std::vector<std::uint32_t> values(size, 1);
      while (true) {
        memory.clear();
        for (std::uint32_t i = 0; i < size; ++i)
          memory.emplace_back(support[i], values[i]);
        if (!visit(memory)) return false;
        std::uint32_t i = 0;
        for (; i < size; ++i) {
          if (values[i] < val_bound) {
            ++values[i];
            break;
          }
          values[i] = 1;
        }
        if (i == size) break;
      }
      std::int64_t pos = size - 1;
      while (pos >= 0 &&
             support[pos] == addr_bound - (size - 1 - static_cast<std::uint32_t>(pos)))
        --pos;
      if (pos < 0) break;
      ++support[pos];
      for (std::uint32_t i = static_cast<std::uint32_t>(pos) + 1; i < size; ++i)
        support[i] = support[i - 1] + 1;
    }
  }
  return true;
}

}  // namespace

StateSampler StateSampler::exhaustive(Exhaustive bounds) {
  StateSampler s;
  s.mode_ = bounds;
  return s;
}

StateSampler StateSampler::random(Random bounds) {
  StateSampler s;
  s.mode_ = bounds;
  return s;
}

StateSampler StateSampler::of_states(std::vector<MachineState> states) {
  StateSampler s;
  s.mode_ = std::move(states);
  return s;
}

void StateSampler::for_each(
    const std::function<bool(const MachineState&)>& visit) const {
  if (const auto* states = std::get_if<std::vector<MachineState>>(&mode_)) {
    for (const auto& s : *states) {
      if (!visit(s)) return;
    }
    return;
  }
  if (const auto* ex = std::get_if<Exhaustive>(&mode_)) {
    visit_memories(ex->addr_bound, ex->val_bound, ex->max_support,
                   [&](const MachineState::Memory& memory) {
                     for (std::uint32_t r1 = 0; r1 <= ex->reg_bound; ++r1) {
                       for (std::uint32_t r2 = 0; r2 <= ex->reg_bound; ++r2) {
                         if (!visit(MachineState(r1, r2, memory))) return false;
                       }
                     }
                     return true;
                   });
    return;
  }
  const auto& rnd = std::get<Random>(mode_);
  std::mt19937_64 rng(rnd.seed);
  auto below = [&rng](std::uint64_t n) { return rng() % n; };
  for (std::uint64_t i = 0; i < rnd.count; ++i) {
    MachineState::Memory memory;
    std::uint64_t support = below(rnd.max_support + 1);
    for (std::uint64_t j = 0; j < support; ++j) {
      memory.emplace_back(1 + below(rnd.addr_bound), 1 + below(rnd.val_bound));
    }
    MachineState s(below(rnd.reg_bound + 1), below(rnd.reg_bound + 1),
                   std::move(memory));
    if (!visit(s)) return;
  }
}

std::vector<MachineState> StateSampler::to_states() const {
  std::vector<MachineState> out;
  for_each([&](const MachineState& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::uint64_t StateSampler::count() const {
  std::uint64_t n = 0;
  for_each([&](const MachineState&) {
    ++n;
    return true;
  });
  return n;
}

BudgetedProg<Unit> budgeted_stmt(StmtPtr stmt) {
  // One denotation per budget, shared across states, so approximant memos
  // survive the sweep.
  auto cache =
      std::make_shared<std::optional<std::pair<std::uint64_t, PreparedProgram>>>();
  return [stmt = std::move(stmt), cache](const MachineState& s,
                                         std::uint64_t budget)
             -> Partial<std::pair<Unit, MachineState>> {
    if (!*cache || (*cache)->first != budget)
      cache->emplace(budget, PreparedProgram(stmt, budget));
    auto outcome = (*cache)->second.run(s);
    if (!outcome.is_converged()) return std::nullopt;
    return outcome.value();
  };
}

WhileRuleReport check_while_rule(const Cond& cond, const StmtPtr& body,
                                 const StatePredicate& invariant,
                                 const StateSampler& sampler,
                                 std::uint64_t budget) {
  WhileRuleReport report;
  HoareTriple<Unit> premise{
      [&](const MachineState& s) { return invariant(s) && eval_cond(cond, s); },
      budgeted_stmt(body),
      [&](Unit, const MachineState& s) { return invariant(s); }};
  report.premise = check_triple(premise, sampler, budget);
  if (!report.premise.passed()) {
    report.failed_phase = "premise";
    return report;
  }
  HoareTriple<Unit> conclusion{
      invariant, budgeted_stmt(ast::while_loop(cond, body)),
      [&](Unit, const MachineState& s) {
        return !eval_cond(cond, s) && invariant(s);
      }};
  report.conclusion = check_triple(conclusion, sampler, budget);
  if (!report.conclusion->passed()) {
    report.failed_phase = "conclusion";
    return report;
  }
  report.passed = true;
  return report;
}

Verdict<Unit> check_fuel_triple(std::uint64_t fuel, const Cond& cond,
                                const StmtPtr& body,
                                const StatePredicate& invariant,
                                const StateSampler& sampler,
                                std::uint64_t body_budget) {
  Verdict<Unit> verdict;
  StateReader cond_r = cond_reader(cond);
  StateProg body_prog = denote(body, body_budget, nullptr);
  FuelEvaluator<MachineState, WhileResult> approximants(
      while_functional(cond_r, body_prog));
  sampler.for_each([&](const MachineState& s) {
    if (!invariant(s)) return true;
    ++verdict.states_checked;
    auto result = approximants.eval_fuel(fuel, s);
    if (!result) {
      ++verdict.exhausted_budget;
      return true;
    }
    ++verdict.converged;
    const MachineState& after = result->second;
    if (eval_cond(cond, after) || !invariant(after)) {
      verdict.counterexample = Counterexample<Unit>{s, unit, after};
      return false;
    }
    return true;
  });
  return verdict;
}

}  // namespace lfpwhile
