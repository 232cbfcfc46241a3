#include <doctest.h>

#include "lfpwhile/hoare.hpp"
#include "lfpwhile/length_example.hpp"

using namespace lfpwhile;

namespace {

StatePredicate always() {
  return [](const MachineState&) { return true; };
}

}  // namespace

TEST_CASE("state sampler") {
  SUBCASE("exhaustive enumeration is the documented product") {
    StateSampler::Exhaustive bounds{1, 2, 2, 1};
    auto sampler = StateSampler::exhaustive(bounds);
    // memories: empty + 2 addresses x 2 values; registers: 2 x 2.
    CHECK(sampler.count() == 4 * (1 + 4));
    auto states = sampler.to_states();
    CHECK(states.front() == MachineState());
    for (const auto& s : states) {
      CHECK(s.reg1() <= 1);
      CHECK(s.memory().size() <= 1);
    }
    // Deterministic order.
    CHECK(states == sampler.to_states());
  }
  SUBCASE("random sampling is seed-deterministic") {
    StateSampler::Random bounds;
    bounds.count = 50;
    bounds.seed = 3;
    auto a = StateSampler::random(bounds).to_states();
    auto b = StateSampler::random(bounds).to_states();
    CHECK(a == b);
    bounds.seed = 4;
    CHECK(a != StateSampler::random(bounds).to_states());
  }
  SUBCASE("explicit state lists pass through") {
    std::vector<MachineState> states{MachineState(1, 1), MachineState(2, 2)};
    CHECK(StateSampler::of_states(states).to_states() == states);
  }
}

TEST_CASE("check_triple") {
  StateSampler::Exhaustive small{2, 2, 2, 1};
  auto sampler = StateSampler::exhaustive(small);

  SUBCASE("a vacuous precondition passes with zero relevant states") {
    HoareTriple<Unit> t{[](const MachineState&) { return false; },
                        budgeted_stmt(ast::skip()),
                        [](Unit, const MachineState&) { return false; }};
    auto verdict = check_triple(t, sampler, 16);
    CHECK(verdict.passed());
    CHECK(verdict.states_checked == 0);
  }

  SUBCASE("skip keeps every state, so equality posts pass") {
    HoareTriple<Unit> t{always(), budgeted_stmt(ast::skip()),
                        [](Unit, const MachineState& s) {
                          return s.reg1() <= 2 && s.reg2() <= 2;
                        }};
    auto verdict = check_triple(t, sampler, 16);
    CHECK(verdict.passed());
    CHECK(verdict.converged == verdict.states_checked);
    CHECK(verdict.exhausted_budget == 0);
  }

  SUBCASE("the first counterexample in sampler order is reported") {
    HoareTriple<Unit> t{always(), budgeted_stmt(ast::incr_reg2_stmt()),
                        [](Unit, const MachineState& s) {
                          return s.reg2() != 1;
                        }};
    auto verdict = check_triple(t, sampler, 16);
    REQUIRE_FALSE(verdict.passed());
    // Canonical order starts at the empty memory, reg1=0, reg2=0.
    CHECK(verdict.counterexample->state == MachineState(0, 0));
    CHECK(verdict.counterexample->post_state == MachineState(0, 1));
  }

  SUBCASE("exhausted states pass vacuously and are counted") {
    StmtPtr spin = ast::while_loop(ast::neq0(ast::reg1()), ast::skip());
    HoareTriple<Unit> t{always(), budgeted_stmt(spin),
                        [](Unit, const MachineState& s) {
                          return s.reg1() == 0;
                        }};
    auto verdict = check_triple(t, sampler, 8);
    CHECK(verdict.passed());
    CHECK(verdict.exhausted_budget > 0);
    CHECK(verdict.converged + verdict.exhausted_budget ==
          verdict.states_checked);
  }
}

TEST_CASE("check_while_rule") {
  std::vector<MachineState> universe;
  for (const ChainSpec& spec :
       {ChainSpec(), ChainSpec({5}), ChainSpec({5, 7}), ChainSpec({2, 4, 6})})
    for (std::uint64_t reg2 : {0, 1, 2, 3})
      universe.push_back(build_list_state(spec, spec.head(), reg2));
  universe.push_back(MachineState(4, 0, {{4, 4}}));
  auto sampler = StateSampler::of_states(universe);

  auto invariant_total = [](std::uint64_t len0) {
    return StatePredicate([len0](const MachineState& s) {
      LengthResult len = length_oracle(s, s.reg1());
      return !len.is_defined() || len.length() + s.reg2() == len0;
    });
  };

  SUBCASE("the walk preserves the length-plus-count invariant") {
    for (std::uint64_t len0 = 0; len0 <= 4; ++len0) {
      auto report = check_while_rule(length_loop_cond(), length_loop_body(),
                                     invariant_total(len0), sampler, 32);
      CHECK(report.passed);
      REQUIRE(report.conclusion.has_value());
    }
  }

  SUBCASE("a broken invariant fails in the premise phase") {
    auto report = check_while_rule(
        length_loop_cond(), length_loop_body(),
        [](const MachineState& s) { return s.reg2() == 0; }, sampler, 32);
    CHECK_FALSE(report.passed);
    CHECK(report.failed_phase == "premise");
    CHECK_FALSE(report.conclusion.has_value());
  }

  SUBCASE("trivially false conditions satisfy the rule") {
    auto report = check_while_rule(ast::eq(ast::lit(0), ast::lit(1)),
                                   ast::skip(), always(), sampler, 8);
    CHECK(report.passed);
    CHECK(report.premise.states_checked == 0);
  }

  SUBCASE("rule coherence: the fuel triples hold at every fuel") {
    for (std::uint64_t fuel = 0; fuel <= 12; ++fuel) {
      auto verdict = check_fuel_triple(fuel, length_loop_cond(),
                                       length_loop_body(), invariant_total(3),
                                       sampler);
      CHECK(verdict.passed());
      if (fuel == 0) CHECK(verdict.converged == 0);
    }
  }
}

TEST_CASE("fuel triples demonstrate partial correctness under starvation") {
  MachineState chain3 = build_list_state(ChainSpec({2, 4, 6}), 2, 0);
  auto sampler = StateSampler::of_states({chain3});
  auto invariant = StatePredicate([](const MachineState& s) {
    LengthResult len = length_oracle(s, s.reg1());
    return !len.is_defined() || len.length() + s.reg2() == 3;
  });

  auto starved = check_fuel_triple(3, length_loop_cond(), length_loop_body(),
                                   invariant, sampler);
  CHECK(starved.passed());
  CHECK(starved.converged == 0);
  CHECK(starved.exhausted_budget == 1);

  auto fed = check_fuel_triple(4, length_loop_cond(), length_loop_body(),
                               invariant, sampler);
  CHECK(fed.passed());
  CHECK(fed.converged == 1);
}

TEST_CASE("monotone weakening: strengthening the precondition keeps verdicts") {
  StateSampler::Exhaustive small{2, 3, 3, 1};
  auto sampler = StateSampler::exhaustive(small);
  HoareTriple<Unit> t{always(), budgeted_stmt(length_loop()),
                      [](Unit, const MachineState& s) {
                        return s.reg1() == 0;
                      }};
  REQUIRE(check_triple(t, sampler, 48).passed());

  std::vector<StatePredicate> stronger{
      [](const MachineState& s) { return s.reg2() == 0; },
      [](const MachineState& s) { return s.reg1() % 2 == 0; },
      [](const MachineState& s) { return s.memory().empty(); }};
  for (const auto& pre : stronger) {
    HoareTriple<Unit> narrowed{pre, t.prog, t.post};
    CHECK(check_triple(narrowed, sampler, 48).passed());
  }
}
