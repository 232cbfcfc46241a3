#include <doctest.h>

#include "lfpwhile/length_example.hpp"

#include "../support/oracles.hpp"

using namespace lfpwhile;
using lfpwhile::testing::derive_length_ref;

TEST_CASE("chain specs") {
  CHECK(build_list_state(ChainSpec({5, 7}), 5, 0) ==
        MachineState(5, 0, {{5, 7}}));
  CHECK(build_list_state(ChainSpec({5, 7, 9}), 5, 0) ==
        MachineState(5, 0, {{5, 7}, {7, 9}}));
  CHECK(build_list_state(ChainSpec(), 0, 0) == MachineState(0, 0));
  CHECK_THROWS_AS(ChainSpec({4, 4}), std::invalid_argument);
  CHECK_THROWS_AS(ChainSpec({0}), std::invalid_argument);

  SUBCASE("text form") {
    CHECK(ChainSpec::parse("5,7,9").addresses() ==
          std::vector<std::uint64_t>{5, 7, 9});
    CHECK(ChainSpec::parse("").addresses().empty());
    CHECK(ChainSpec::parse("5,7,9").to_string() == "5,7,9");
    CHECK_THROWS_AS(ChainSpec::parse("5,,7"), std::invalid_argument);
    CHECK_THROWS_AS(ChainSpec::parse("5,x"), std::invalid_argument);
  }
}

TEST_CASE("length oracle") {
  CHECK(length_oracle(MachineState(0, 0, {{4, 4}}), 0) ==
        LengthResult::defined(0));
  CHECK(length_oracle(MachineState(0, 0, {{5, 7}}), 5) ==
        LengthResult::defined(2));
  CHECK(length_oracle(MachineState(0, 0, {{4, 6}, {6, 4}}), 4) ==
        LengthResult::cyclic(4));
  CHECK(length_oracle(MachineState(0, 0, {{4, 4}}), 4) ==
        LengthResult::cyclic(4));
  // A dangling address is a one-element list: its link reads as zero.
  CHECK(length_oracle(MachineState(), 9) == LengthResult::defined(1));

  SUBCASE("agrees with the inductive rules evaluated directly") {
    std::vector<MachineState> states{
        MachineState(),
        build_list_state(ChainSpec({5}), 0, 0),
        build_list_state(ChainSpec({5, 7, 9}), 0, 0),
        MachineState(0, 0, {{1, 2}, {2, 3}, {3, 1}}),
        MachineState(0, 0, {{8, 8}}),
    };
    for (const auto& s : states) {
      for (std::uint64_t addr = 0; addr <= 10; ++addr) {
        auto derived = derive_length_ref(s, addr, 13);
        auto oracle = length_oracle(s, addr);
        if (oracle.is_defined()) {
          REQUIRE(derived.has_value());
          CHECK(*derived == oracle.length());
        } else {
          CHECK_FALSE(derived.has_value());
        }
      }
    }
  }
}

TEST_CASE("length program") {
  SUBCASE("empty list: address zero returns zero") {
    MachineState start = build_list_state(ChainSpec(), 9, 9);
    auto result = length_computation(0, 10)(start);
    REQUIRE(result.has_value());
    CHECK(result->first == 0);
    CHECK(result->second == MachineState(0, 0));
  }
  SUBCASE("three links") {
    MachineState start = build_list_state(ChainSpec({5, 7, 9}), 5, 0);
    auto result = length_computation(5, 100)(start);
    REQUIRE(result.has_value());
    CHECK(result->first == 3);
    MachineState expected = start;
    expected.set_reg1(0).set_reg2(3);
    CHECK(result->second == expected);
  }
  SUBCASE("self-link never terminates") {
    MachineState start(4, 0, {{4, 4}});
    CHECK(length_computation(4, 1000)(start) ==
          Partial<std::pair<std::uint64_t, MachineState>>{});
    CHECK(exec(length_program(4), 1000, start) ==
          EvalOutcome<WhileResult>::exhausted(1000));
  }
}

TEST_CASE("oracle and semantics agree on a bounded universe") {
  std::vector<MachineState> universe;
  for (const ChainSpec& spec :
       generate_chain_family({6, 4, 200, 1}))
    universe.push_back(build_list_state(spec, spec.head(), 2));
  for (MachineState& s : generate_cyclic_states({6, 4, 60, 1}))
    universe.push_back(std::move(s));
  universe.push_back(MachineState(3, 1, {{1, 2}, {2, 1}}));

  const std::uint64_t addr_bound = 6;
  for (const MachineState& s : universe) {
    for (std::uint64_t addr = 0; addr <= addr_bound; ++addr) {
      LengthResult len = length_oracle(s, addr);
      if (len.is_defined()) {
        auto outcome = exec(length_program(addr), len.length() + 2, s);
        REQUIRE(outcome.is_converged());
        MachineState expected = s;
        expected.set_reg1(0).set_reg2(len.length());
        CHECK(outcome.value().second == expected);
        CHECK(outcome.value().second.memory() == s.memory());
        CHECK(outcome.fuel_used() == len.length() + 2);
      } else {
        // Every fuel up to the tested bound leaves the loop undefined.
        MachineState entered = s;
        entered.set_reg1(addr).set_reg2(0);
        FuelEvaluator<MachineState, WhileResult> approximants(
            while_functional(cond_reader(length_loop_cond()),
                             denote(length_loop_body(), 16)));
        bool all_bottom = true;
        for (std::uint64_t fuel = 0; fuel <= 10 * (addr_bound + 1); ++fuel)
          all_bottom =
              all_bottom && !approximants.eval_fuel(fuel, entered).has_value();
        CHECK(all_bottom);
      }
    }
  }
}

TEST_CASE("minimal convergence budget is the length plus two") {
  for (const ChainSpec& spec :
       {ChainSpec(), ChainSpec({3}), ChainSpec({5, 7}), ChainSpec({5, 7, 9})}) {
    MachineState start = build_list_state(spec, 1, 1);
    StmtPtr program = length_program(spec.head());
    // Brute-force scan for the first budget that converges.
    std::uint64_t first = 0;
    for (std::uint64_t budget = 1; budget <= 16; ++budget) {
      if (exec(program, budget, start).is_converged()) {
        first = budget;
        break;
      }
    }
    CHECK(first == spec.length() + 2);
  }
}

TEST_CASE("family sweeps") {
  ChainFamily family{8, 5, 300, 0};
  CHECK(check_length_terminates(family, 64).passed);
  CHECK(check_while_terminates(family, {0, 1, 5}, 64).passed);

  SUBCASE("family generation is deterministic and within spec") {
    auto a = generate_chain_family(family);
    auto b = generate_chain_family(family);
    REQUIRE(a.size() == b.size());
    CHECK(a.size() <= family.cap);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].addresses() == b[i].addresses());
      CHECK(a[i].length() <= family.max_len);
      for (std::uint64_t addr : a[i].addresses()) {
        CHECK(addr >= 1);
        CHECK(addr <= family.addr_bound);
      }
    }
  }
}

TEST_CASE("length correctness triples over a mixed universe") {
  std::vector<MachineState> universe;
  for (const ChainSpec& spec : generate_chain_family({8, 4, 120, 0}))
    universe.push_back(build_list_state(spec, spec.head(), 0));
  for (MachineState& s : generate_cyclic_states({8, 4, 40, 0}))
    universe.push_back(std::move(s));

  auto report = check_length_correct(StateSampler::of_states(universe), 32,
                                     {0, 1, 5, 8});
  CHECK(report.passed);
  CHECK(report.correct1.exhausted_budget > 0);
  CHECK(report.correct2.converged > 0);
}
