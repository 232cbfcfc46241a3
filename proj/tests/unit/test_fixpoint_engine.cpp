#include <doctest.h>

#include "lfpwhile/fixpoint_engine.hpp"

#include "../support/oracles.hpp"

using namespace lfpwhile;
using lfpwhile::testing::eval_fuel_ref;

namespace {

using U64Fn = Functional<std::uint64_t, std::uint64_t>;

U64Fn countdown() {
  return [](const Approximant<std::uint64_t, std::uint64_t>& f,
            const std::uint64_t& n) -> Partial<std::uint64_t> {
    if (n == 0) return std::uint64_t{0};
    return f(n - 1);
  };
}

U64Fn looping() {
  return [](const Approximant<std::uint64_t, std::uint64_t>& f,
            const std::uint64_t& a) -> Partial<std::uint64_t> { return f(a); };
}

U64Fn constant() {
  return [](const Approximant<std::uint64_t, std::uint64_t>&,
            const std::uint64_t& a) -> Partial<std::uint64_t> { return a; };
}

U64Fn inverting() {
  return [](const Approximant<std::uint64_t, std::uint64_t>& f,
            const std::uint64_t& a) -> Partial<std::uint64_t> {
    if (f(a).has_value()) return std::nullopt;
    return a;
  };
}

}  // namespace

TEST_CASE("eval_fuel basics") {
  auto fn = countdown();
  CHECK(eval_fuel(fn, 0, std::uint64_t{7}) == Partial<std::uint64_t>{});
  CHECK(eval_fuel(fn, 3, std::uint64_t{2}) == Partial<std::uint64_t>{0});
  CHECK(eval_fuel(fn, 2, std::uint64_t{2}) == Partial<std::uint64_t>{});

  SUBCASE("agrees with the recursive reference") {
    for (std::uint64_t fuel = 0; fuel <= 8; ++fuel)
      for (std::uint64_t a = 0; a <= 6; ++a)
        CHECK(eval_fuel(fn, fuel, a) == eval_fuel_ref(fn, fuel, a));
  }
}

TEST_CASE("eval_fuel does not recurse on the host stack") {
  FuelEvaluator<std::uint64_t, std::uint64_t> evaluator(countdown());
  const std::uint64_t deep = 200000;
  CHECK(evaluator.eval_fuel(deep + 1, deep) == Partial<std::uint64_t>{0});
}

TEST_CASE("eval_fuel supports non-tail and multi-query functionals") {
  U64Fn sum = [](const Approximant<std::uint64_t, std::uint64_t>& f,
                 const std::uint64_t& n) -> Partial<std::uint64_t> {
    if (n == 0) return std::uint64_t{0};
    auto rest = f(n - 1);
    if (!rest) return std::nullopt;
    return *rest + n;
  };
  CHECK(eval_fuel(sum, 7, std::uint64_t{6}) == Partial<std::uint64_t>{21});
  for (std::uint64_t fuel = 0; fuel <= 8; ++fuel)
    CHECK(eval_fuel(sum, fuel, std::uint64_t{5}) ==
          eval_fuel_ref(sum, fuel, std::uint64_t{5}));

  U64Fn fib = [](const Approximant<std::uint64_t, std::uint64_t>& f,
                 const std::uint64_t& n) -> Partial<std::uint64_t> {
    if (n < 2) return n;
    auto a = f(n - 1);
    auto b = f(n - 2);
    if (!a || !b) return std::nullopt;
    return *a + *b;
  };
  CHECK(eval_fuel(fib, 9, std::uint64_t{8}) == Partial<std::uint64_t>{21});
  for (std::uint64_t fuel = 0; fuel <= 10; ++fuel)
    for (std::uint64_t a = 0; a <= 8; ++a)
      CHECK(eval_fuel(fib, fuel, a) == eval_fuel_ref(fib, fuel, a));
}

TEST_CASE("eval_lfp reports the minimal defining fuel") {
  auto fn = countdown();
  // Oracle: scan fuels upward with the reference evaluator.
  std::uint64_t expected_k = 0;
  for (std::uint64_t k = 1; k <= 10; ++k) {
    if (eval_fuel_ref(fn, k, std::uint64_t{2}).has_value()) {
      expected_k = k;
      break;
    }
  }
  CHECK(expected_k == 3);
  auto outcome = eval_lfp(fn, 10, std::uint64_t{2});
  REQUIRE(outcome.is_converged());
  CHECK(outcome.value() == 0);
  CHECK(outcome.fuel_used() == expected_k);

  CHECK(eval_lfp(looping(), 25, std::uint64_t{4}) ==
        EvalOutcome<std::uint64_t>::exhausted(25));
  auto direct = eval_lfp(constant(), 1, std::uint64_t{9});
  REQUIRE(direct.is_converged());
  CHECK(direct.value() == 9);
  CHECK(direct.fuel_used() == 1);

  CHECK_THROWS_AS(eval_lfp(fn, 0, std::uint64_t{1}), std::invalid_argument);
}

TEST_CASE("exhausted outcomes imply bottom at every smaller fuel") {
  FuelEvaluator<std::uint64_t, std::uint64_t> evaluator(looping());
  auto outcome = evaluator.eval_lfp(16, std::uint64_t{3});
  REQUIRE_FALSE(outcome.is_converged());
  CHECK(outcome.budget() == 16);
  for (std::uint64_t n = 0; n <= 16; ++n)
    CHECK(evaluator.eval_fuel(n, std::uint64_t{3}) == Partial<std::uint64_t>{});
}

TEST_CASE("converged values are stable at larger fuels") {
  FuelEvaluator<std::uint64_t, std::uint64_t> evaluator(countdown());
  auto outcome = evaluator.eval_lfp(64, std::uint64_t{5});
  REQUIRE(outcome.is_converged());
  for (std::uint64_t m = outcome.fuel_used(); m <= outcome.fuel_used() + 16; ++m)
    CHECK(evaluator.eval_fuel(m, std::uint64_t{5}) ==
          Partial<std::uint64_t>{outcome.value()});
}

TEST_CASE("iterate_bottom") {
  std::vector<std::uint64_t> sample{0, 1, 2};
  SUBCASE("zero iterations is constant bottom") {
    for (const auto& [a, value] : iterate_bottom(countdown(), 0, sample)) {
      (void)a;
      CHECK(value == Partial<std::uint64_t>{});
    }
  }
  SUBCASE("three iterations of the countdown define the sample") {
    for (const auto& [a, value] : iterate_bottom(countdown(), 3, sample)) {
      (void)a;
      CHECK(value == Partial<std::uint64_t>{0});
    }
  }
  SUBCASE("the looping functional stays bottom") {
    for (std::uint64_t n = 0; n <= 6; ++n)
      for (const auto& [a, value] : iterate_bottom(looping(), n, sample)) {
        (void)a;
        CHECK(value == Partial<std::uint64_t>{});
      }
  }
  SUBCASE("iterates equal fuel-indexed approximants") {
    auto fn = countdown();
    FuelEvaluator<std::uint64_t, std::uint64_t> evaluator(fn);
    for (std::uint64_t n = 0; n <= 8; ++n)
      for (const auto& [a, value] : iterate_bottom(fn, n, sample))
        CHECK(value == evaluator.eval_fuel(n, a));
  }
}

TEST_CASE("check_fuel_monotone") {
  std::vector<std::uint64_t> sample{0, 1, 2, 3, 4, 5};
  CHECK(check_fuel_monotone(countdown(), 8, sample).passed);
  CHECK(check_fuel_monotone(looping(), 8, sample).passed);

  auto report = check_fuel_monotone(inverting(), 8, sample);
  CHECK_FALSE(report.passed);
  CHECK_FALSE(report.witness.empty());
}

TEST_CASE("check_functional_monotone") {
  std::vector<std::uint64_t> tiny{0, 1, 2};
  CHECK(check_functional_monotone(countdown(), tiny, tiny).passed);
  CHECK(check_functional_monotone(constant(), tiny, tiny).passed);

  auto report = check_functional_monotone(inverting(), tiny, tiny);
  CHECK_FALSE(report.passed);
  CHECK_FALSE(report.witness.empty());

  SUBCASE("exhaustive mode refuses oversized function spaces") {
    std::vector<std::uint64_t> wide{0, 1, 2, 3, 4, 5, 6, 7};
    CHECK_THROWS_AS(check_functional_monotone(countdown(), wide, wide),
                    std::invalid_argument);
    CHECK(check_functional_monotone(countdown(), wide, wide,
                                    SampleMode{128, 7})
              .passed);
  }
}

TEST_CASE("check_continuity_preservation") {
  std::vector<std::uint64_t> pair{0, 1};
  CHECK(check_continuity_preservation(countdown(), pair, pair, 2).passed);
  CHECK(check_continuity_preservation(constant(), pair, pair, 2).passed);

  auto report = check_continuity_preservation(inverting(), pair, pair, 2);
  CHECK_FALSE(report.passed);
  CHECK_FALSE(report.witness.empty());
}
