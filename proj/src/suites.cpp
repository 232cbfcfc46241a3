#include "lfpwhile/suites.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lfpwhile/length_example.hpp"
#include "lfpwhile/order_core.hpp"
#include "lfpwhile/parser.hpp"

namespace lfpwhile {

namespace {

// Loop-law sweeps cap the execution budget: exhaustion within a smaller
// budget still satisfies (and exercises) the laws, and no loop in the sweep
// universe needs more fuel than this to converge.
constexpr std::uint64_t kSweepBudget = 48;
constexpr std::uint64_t kHoareBudget = 64;

std::uint64_t sweep_budget(const RunConfig& config) {
  return std::min(config.budget, kSweepBudget);
}

template <typename A>
std::string verdict_witness(const Verdict<A>& v) {
  if (!v.counterexample) return "";
  return "state " + v.counterexample->state.to_string() + " -> " +
         v.counterexample->post_state.to_string();
}

void push(SuiteResult& suite, std::string property, bool passed,
          std::uint64_t states_checked, std::string witness = "") {
  suite.properties.push_back(PropertyResult{
      std::move(property), passed, states_checked,
      passed ? std::string() : std::move(witness)});
}

void push_report(SuiteResult& suite, std::string property,
                 const CheckReport& report) {
  push(suite, std::move(property), report.passed, report.cases, report.witness);
}

// Control checks assert that a checker rejects a planted defect.
void push_control(SuiteResult& suite, std::string property,
                  const CheckReport& report) {
  push(suite, std::move(property), !report.passed && !report.witness.empty(),
       report.cases, "planted defect was not detected");
}

ChainFamily sweep_family(const RunConfig& config, std::uint64_t cap) {
  ChainFamily family;
  family.addr_bound = config.addr_bound;
  family.max_len = 8;
  family.cap = cap;
  family.seed = config.seed;
  return family;
}

using IntFunctional = Functional<std::uint64_t, std::uint64_t>;

IntFunctional countdown_functional() {
  return [](const Approximant<std::uint64_t, std::uint64_t>& f,
            const std::uint64_t& n) -> Partial<std::uint64_t> {
    if (n == 0) return std::uint64_t{0};
    return f(n - 1);
  };
}

IntFunctional constant_functional() {
  return [](const Approximant<std::uint64_t, std::uint64_t>&,
            const std::uint64_t& a) -> Partial<std::uint64_t> { return a; };
}

IntFunctional looping_functional() {
  return [](const Approximant<std::uint64_t, std::uint64_t>& f,
            const std::uint64_t& a) -> Partial<std::uint64_t> { return f(a); };
}

// Defined exactly where its approximant is bottom: neither monotone nor
// continuity-preserving.
IntFunctional inverting_functional() {
  return [](const Approximant<std::uint64_t, std::uint64_t>& f,
            const std::uint64_t& a) -> Partial<std::uint64_t> {
    if (f(a).has_value()) return std::nullopt;
    return a;
  };
}

// The list-walking loop as a functional over a closed three-state sample.
struct WhileFixture {
  WhileFunctional functional;
  std::vector<MachineState> states;
  std::vector<WhileResult> results;
};

WhileFixture while_fixture() {
  WhileFixture fx;
  MachineState s0 = build_list_state(ChainSpec({5, 7}), 5, 0);
  MachineState s1 = MachineState(s0).set_reg1(7).set_reg2(1);
  MachineState s2 = MachineState(s0).set_reg1(0).set_reg2(2);
  fx.states = {s0, s1, s2};
  for (const auto& s : fx.states) fx.results.push_back({unit, s});
  fx.functional = while_functional(cond_reader(length_loop_cond()),
                                   denote(length_loop_body(), 16));
  return fx;
}

}  // namespace

std::vector<MachineState> sweep_states(const RunConfig& config) {
  StateSampler::Exhaustive bounds;
  bounds.reg_bound = config.reg_bound;
  bounds.addr_bound = config.addr_bound;
  bounds.val_bound = config.val_bound;
  bounds.max_support = std::min<std::uint32_t>(config.max_support, 1);
  std::vector<MachineState> states =
      StateSampler::exhaustive(bounds).to_states();

  for (const ChainSpec& spec : generate_chain_family(sweep_family(config, 400))) {
    for (std::uint64_t reg2 : {0, 1, 5})
      states.push_back(build_list_state(spec, spec.head(), reg2));
  }
  for (MachineState& s : generate_cyclic_states(sweep_family(config, 200)))
    states.push_back(std::move(s));
  return states;
}

std::vector<NamedLoop> sweep_loops() {
  std::vector<NamedLoop> loops;
  loops.push_back({"list-walk", length_loop_cond(), length_loop_body()});
  loops.push_back({"spin", ast::neq0(ast::reg1()), ast::skip()});
  loops.push_back({"reg2-walk", ast::neq0(ast::reg2()),
                   ast::set_reg2(ast::mem(ast::reg2()))});
  loops.push_back({"race", ast::eq(ast::reg1(), ast::reg2()),
                   ast::incr_reg2_stmt()});
  return loops;
}

SuiteResult run_order_lab() {
  SuiteResult suite{"order-lab", {}};

  {
    // Directed subsets of a flat domain: singletons and bottom-element pairs,
    // nothing else.
    bool ok = true;
    std::string witness;
    std::uint64_t cases = 0;
    std::vector<std::string> names{"a", "b", "c", "d"};
    for (std::size_t size = 0; size <= 4 && ok; ++size) {
      std::vector<std::string> carrier(names.begin(), names.begin() + size);
      auto ppo = FinitePpo::flat(carrier);
      std::set<std::vector<std::string>> expected;
      expected.insert({"bot"});
      for (const auto& a : carrier) {
        expected.insert({a});
        expected.insert({"bot", a});
      }
      auto actual_list = enumerate_directed(ppo);
      std::set<std::vector<std::string>> actual;
      for (auto& subset : actual_list) {
        std::sort(subset.begin(), subset.end());
        actual.insert(subset);
      }
      std::set<std::vector<std::string>> expected_sorted;
      for (auto subset : expected) {
        std::sort(subset.begin(), subset.end());
        expected_sorted.insert(subset);
      }
      ++cases;
      if (actual != expected_sorted) {
        ok = false;
        witness = "carrier size " + std::to_string(size);
      }
    }
    push(suite, "flat-directed-sets-exact", ok, cases, witness);
  }

  {
    bool ok = !is_compact(Conat::infinity());
    for (std::uint64_t n = 0; n <= 16; ++n) ok = ok && is_compact(Conat::finite(n));
    push(suite, "conat-compacts-are-finites", ok, 18, "compactness mismatch");
  }

  {
    auto flat = check_algebraic(FinitePpo::flat({"a", "b"}));
    push(suite, "flat-algebraic", flat.algebraic, flat.elements_checked,
         flat.witness);
    auto conat = check_algebraic_conat(16);
    push(suite, "conat-algebraic", conat.algebraic, conat.elements_checked,
         conat.witness);
  }

  {
    // Negative control: a diamond whose top is declared non-compact; the
    // remaining compacts below the top have no upper bound among themselves.
    auto diamond = FinitePpo::from_covers(
        {"bot", "a", "b", "top"},
        {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}}, "bot");
    std::vector<bool> doctored{true, true, true, false};
    auto genuine = check_algebraic(diamond);
    auto control = check_algebraic(diamond, doctored);
    push(suite, "diamond-genuinely-algebraic", genuine.algebraic,
         genuine.elements_checked, genuine.witness);
    push(suite, "doctored-control-not-algebraic", !control.algebraic,
         control.elements_checked, "doctored table passed the check");
  }

  {
    // Every continuous extension agreeing with a monotone sequence on the
    // naturals equals its lift; checked over all candidate infinity values.
    bool ok = true;
    std::string witness;
    std::uint64_t cases = 0;
    std::vector<int> values{10, 20, 30};
    for (std::size_t bsize = 1; bsize <= 3 && ok; ++bsize) {
      std::vector<MonotoneSeq<int>> seqs{MonotoneSeq<int>::never_defined()};
      for (std::uint64_t k = 0; k <= 6; ++k)
        for (std::size_t j = 0; j < bsize; ++j)
          seqs.push_back(MonotoneSeq<int>::threshold(k, values[j]));
      for (const auto& seq : seqs) {
        auto lifted = lift_monotone(seq);
        std::vector<Partial<int>> candidates{std::nullopt};
        for (std::size_t j = 0; j < bsize; ++j) candidates.push_back(values[j]);
        for (const auto& cand : candidates) {
          ContinuousExt<int> ext{seq, cand};
          ++cases;
          if (check_continuous(ext, 8) != (ext == lifted)) {
            ok = false;
            witness = "threshold " +
                      (seq.is_never_defined()
                           ? std::string("never")
                           : std::to_string(seq.threshold_index()));
            break;
          }
        }
        if (!ok) break;
      }
    }
    push(suite, "lift-monotone-uniqueness", ok, cases, witness);
  }

  {
    bool ok = true;
    for (std::uint64_t probe = 1; probe <= 16; ++probe)
      ok = ok && check_continuous(
                     [](Conat x) { return succ_conat(x); }, probe);
    push(suite, "succ-conat-continuous", ok, 16, "continuity probe failed");
  }

  {
    // Canonical embeddings: a flat domain into itself, and a finite prefix of
    // the naturals into its extension by a top declared non-compact.
    auto flat = FinitePpo::flat({"a", "b"});
    Embedding identity{flat, flat, {0, 1, 2}};
    auto id_report = check_embedding(identity);
    push(suite, "embedding-flat-identity", id_report.valid, 1,
         id_report.witness);

    auto nats = FinitePpo::chain({"0", "1", "2", "3"});
    auto conats = FinitePpo::chain({"0", "1", "2", "3", "inf"});
    Embedding inclusion{nats, conats, {0, 1, 2, 3}};
    auto inc_report =
        check_embedding(inclusion, std::vector<bool>{true, true, true, true, false});
    push(suite, "embedding-nat-prefix-inclusion", inc_report.valid, 1,
         inc_report.witness);

    Embedding broken{nats, conats, {1, 0, 2, 3}};
    auto broken_report =
        check_embedding(broken, std::vector<bool>{true, true, true, true, false});
    push(suite, "embedding-control-rejected", !broken_report.valid, 1,
         "broken embedding accepted");
  }

  return suite;
}

SuiteResult run_fixpoint_laws() {
  SuiteResult suite{"fixpoint-laws", {}};
  std::vector<std::uint64_t> small_sample{0, 1, 2, 3, 4, 5};
  std::vector<std::uint64_t> tiny{0, 1, 2};
  auto fx = while_fixture();

  push_report(suite, "fuel-monotone-countdown",
              check_fuel_monotone(countdown_functional(), 8, small_sample));
  push_report(suite, "fuel-monotone-constant",
              check_fuel_monotone(constant_functional(), 8, small_sample));
  push_report(suite, "fuel-monotone-looping",
              check_fuel_monotone(looping_functional(), 8, small_sample));
  push_report(suite, "fuel-monotone-while",
              check_fuel_monotone(fx.functional, 8, fx.states));
  push_control(suite, "control-fuel-monotone-rejects-inverting",
               check_fuel_monotone(inverting_functional(), 8, small_sample));

  push_report(suite, "functional-monotone-countdown",
              check_functional_monotone(countdown_functional(), tiny, tiny));
  push_report(suite, "functional-monotone-constant",
              check_functional_monotone(constant_functional(), tiny, tiny));
  push_report(suite, "functional-monotone-while",
              check_functional_monotone(fx.functional, fx.states, fx.results));
  push_control(
      suite, "control-functional-monotone-rejects-inverting",
      check_functional_monotone(inverting_functional(), tiny, tiny));

  push_report(
      suite, "continuity-preservation-countdown",
      check_continuity_preservation(countdown_functional(), tiny, tiny, 3));
  push_report(
      suite, "continuity-preservation-constant",
      check_continuity_preservation(constant_functional(), tiny, tiny, 3));
  push_report(suite, "continuity-preservation-while",
              check_continuity_preservation(fx.functional, fx.states,
                                            fx.results, 3));
  push_control(
      suite, "control-continuity-rejects-inverting",
      check_continuity_preservation(inverting_functional(), tiny, tiny, 3));

  {
    // The closure-composition iterates and the engine approximants are the
    // same function.
    bool ok = true;
    std::string witness;
    std::uint64_t cases = 0;
    auto compare = [&](const auto& functional, const auto& sample,
                       const std::string& name) {
      FuelEvaluator evaluator(functional);
      for (std::uint64_t n = 0; n <= 8; ++n) {
        auto table = iterate_bottom(functional, n, sample);
        for (const auto& [a, value] : table) {
          ++cases;
          if (!(value == evaluator.eval_fuel(n, a))) {
            ok = false;
            witness = name + " at iterate " + std::to_string(n);
            return;
          }
        }
      }
    };
    compare(countdown_functional(), small_sample, "countdown");
    if (ok) compare(constant_functional(), small_sample, "constant");
    if (ok) compare(looping_functional(), small_sample, "looping");
    if (ok) compare(fx.functional, fx.states, "while");
    push(suite, "iterate-bottom-matches-eval-fuel", ok, cases, witness);
  }

  {
    // Where the search converges at fuel k, one more application of the
    // functional to the k-fuel approximant reproduces the value, and the
    // value stays put for a window of larger fuels.
    bool equation_ok = true;
    bool stable_ok = true;
    std::uint64_t cases = 0;
    auto probe = [&](const auto& functional, const auto& sample) {
      using Arg = std::decay_t<decltype(sample[0])>;
      FuelEvaluator evaluator(functional);
      for (const Arg& a : sample) {
        auto outcome = evaluator.eval_lfp(32, a);
        if (!outcome.is_converged()) continue;
        ++cases;
        std::uint64_t k = outcome.fuel_used();
        auto reapplied = functional(
            [&](const Arg& x) { return evaluator.eval_fuel(k, x); }, a);
        if (!(reapplied == Partial<std::decay_t<decltype(outcome.value())>>(
                               outcome.value())))
          equation_ok = false;
        for (std::uint64_t m = k; m <= k + 16; ++m) {
          auto at_m = evaluator.eval_fuel(m, a);
          if (!at_m || !(*at_m == outcome.value())) stable_ok = false;
        }
      }
    };
    probe(countdown_functional(), small_sample);
    probe(constant_functional(), small_sample);
    probe(fx.functional, fx.states);
    push(suite, "fixpoint-equation-at-converged", equation_ok, cases,
         "reapplication changed the value");
    push(suite, "converged-stable-over-larger-fuel", stable_ok, cases,
         "value changed within the fuel window");
  }

  {
    // Exhaustion means no fuel within the budget defines a value.
    FuelEvaluator evaluator(looping_functional());
    bool ok = true;
    std::uint64_t cases = 0;
    for (std::uint64_t a : small_sample) {
      auto outcome = evaluator.eval_lfp(12, a);
      ++cases;
      if (outcome.is_converged()) {
        ok = false;
        break;
      }
      for (std::uint64_t n = 0; n <= 12; ++n)
        if (evaluator.eval_fuel(n, a).has_value()) ok = false;
    }
    push(suite, "exhausted-means-bottom-throughout", ok, cases,
         "looping functional produced a value");
  }

  return suite;
}

SuiteResult run_monad_laws() {
  SuiteResult suite{"monad-laws", {}};
  std::vector<MachineState> states{
      MachineState(), MachineState(3, 0), MachineState(0, 7),
      MachineState(2, 5, {{5, 7}}), MachineState(5, 1, {{5, 7}, {7, 9}})};
  std::vector<std::uint64_t> values{0, 1, 5};

  auto reader_eq = [&](const Reader<MachineState, std::uint64_t>& a,
                       const Reader<MachineState, std::uint64_t>& b) {
    for (const auto& s : states)
      if (a(s) != b(s)) return false;
    return true;
  };
  auto prog_eq = [&](const Prog<MachineState, std::uint64_t>& a,
                     const Prog<MachineState, std::uint64_t>& b) {
    for (const auto& s : states)
      if (a(s) != b(s)) return false;
    return true;
  };

  auto rf = [](std::uint64_t x) {
    return rbind(get<MachineState>(), [x](const MachineState& s) {
      return ret<MachineState>(x + s.reg1());
    });
  };
  auto rg = [](std::uint64_t x) {
    return rbind(get<MachineState>(), [x](const MachineState& s) {
      return ret<MachineState>(x * 2 + s.reg2());
    });
  };

  {
    bool ok = true;
    for (std::uint64_t a : values)
      ok = ok && reader_eq(rbind(ret<MachineState>(a), rf), rf(a));
    push(suite, "reader-left-identity", ok, values.size() * states.size(),
         "rbind(ret a, f) != f a");
  }
  {
    Reader<MachineState, std::uint64_t> m = read_reg1();
    bool ok = reader_eq(
        rbind(m, [](std::uint64_t x) { return ret<MachineState>(x); }), m);
    push(suite, "reader-right-identity", ok, states.size(),
         "rbind(m, ret) != m");
  }
  {
    Reader<MachineState, std::uint64_t> m = read_reg2();
    auto lhs = rbind(rbind(m, rf), rg);
    auto rhs = rbind(m, [&](std::uint64_t x) { return rbind(rf(x), rg); });
    push(suite, "reader-associativity", reader_eq(lhs, rhs), states.size(),
         "rbind is not associative");
  }

  auto pret = [](std::uint64_t a) {
    return reader_to_program(ret<MachineState>(a));
  };
  auto pf = [](std::uint64_t x) {
    return bind(write_reg1(x), [x](Unit) {
      return reader_to_program(ret<MachineState>(x + 1));
    });
  };
  auto pg = [](std::uint64_t x) {
    return bind(incr_reg2(), [x](Unit) {
      return reader_to_program(ret<MachineState>(x * 3));
    });
  };
  Prog<MachineState, std::uint64_t> diverge =
      [](const MachineState&) -> Partial<std::pair<std::uint64_t, MachineState>> {
    return std::nullopt;
  };

  {
    bool ok = true;
    for (std::uint64_t a : values) ok = ok && prog_eq(bind(pret(a), pf), pf(a));
    push(suite, "program-left-identity", ok, values.size() * states.size(),
         "bind(ret a, f) != f a");
  }
  {
    auto m = pf(4);
    bool ok = prog_eq(bind(m, pret), m) &&
              prog_eq(bind(diverge, pret), diverge);
    push(suite, "program-right-identity", ok, 2 * states.size(),
         "bind(m, ret) != m");
  }
  {
    auto m = pf(2);
    auto lhs = bind(bind(m, pg), pf);
    auto rhs = bind(m, [&](std::uint64_t x) { return bind(pg(x), pf); });
    push(suite, "program-associativity", prog_eq(lhs, rhs), states.size(),
         "bind is not associative");
  }
  {
    bool ok = true;
    for (const auto& s : states)
      ok = ok && !bind(diverge, pf)(s).has_value();
    push(suite, "bind-propagates-bottom", ok, states.size(),
         "bottom did not propagate");
  }

  {
    // Coercion turns reader sequencing into program sequencing.
    Reader<MachineState, std::uint64_t> m = read_reg1();
    auto lhs = reader_to_program(rbind(m, rf));
    auto rhs = bind(reader_to_program(m), [&](std::uint64_t a) {
      return reader_to_program(rf(a));
    });
    push(suite, "coercion-homomorphism", prog_eq(lhs, rhs), states.size(),
         "coercion does not commute with sequencing");
  }
  {
    MachineState target(4, 4, {{9, 2}});
    auto lhs = bind(put(target), [](Unit) {
      return reader_to_program(get<MachineState>());
    });
    auto rhs = bind(put(target), [target](Unit) {
      return reader_to_program(ret<MachineState>(target));
    });
    bool ok = true;
    for (const auto& s : states)
      if (lhs(s) != rhs(s)) ok = false;
    push(suite, "put-get-law", ok, states.size(), "get after put mismatch");
  }

  return suite;
}

SuiteResult run_while_unfold(const RunConfig& config) {
  SuiteResult suite{"while-unfold", {}};
  auto states = sweep_states(config);
  for (const NamedLoop& loop : sweep_loops()) {
    push_report(suite, "unfold-" + loop.name,
                check_while_unfold(loop.cond, loop.body, states,
                                   sweep_budget(config)));
  }
  return suite;
}

SuiteResult run_while_iff_fuel(const RunConfig& config) {
  SuiteResult suite{"while-iff-fuel", {}};
  auto states = sweep_states(config);
  for (const NamedLoop& loop : sweep_loops()) {
    push_report(suite, "iff-fuel-" + loop.name,
                check_while_iff_fuel(loop.cond, loop.body, states,
                                     sweep_budget(config)));
  }

  {
    // On states the oracle certifies cyclic, every approximant of the
    // list-walking loop up to 10*(addr_bound+1) is bottom.
    std::uint64_t bound = 10 * (std::uint64_t{config.addr_bound} + 1);
    FuelEvaluator<MachineState, WhileResult> approximants(while_functional(
        cond_reader(length_loop_cond()), denote(length_loop_body(), 16)));
    bool ok = true;
    std::string witness;
    std::uint64_t cases = 0;
    for (const MachineState& s : generate_cyclic_states(sweep_family(config, 200))) {
      if (length_oracle(s, s.reg1()).is_defined()) continue;
      ++cases;
      for (std::uint64_t n = 0; n <= bound; ++n) {
        if (approximants.eval_fuel(n, s).has_value()) {
          ok = false;
          witness = "state " + s.to_string() + " defined at fuel " +
                    std::to_string(n);
          break;
        }
      }
      if (!ok) break;
      if (approximants.memo_size() > (std::size_t{1} << 20)) approximants.clear();
    }
    push(suite, "cyclic-states-bottom-at-every-fuel", ok, cases, witness);
  }
  return suite;
}

namespace {

std::vector<MachineState> mixed_universe(const RunConfig& config) {
  std::vector<MachineState> states;
  for (const ChainSpec& spec :
       generate_chain_family(sweep_family(config, 2000)))
    states.push_back(build_list_state(spec, spec.head(), 0));
  for (MachineState& s : generate_cyclic_states(sweep_family(config, 300)))
    states.push_back(std::move(s));
  return states;
}

std::vector<std::uint64_t> addr_sweep(const RunConfig& config) {
  std::vector<std::uint64_t> addrs{0};
  for (std::uint64_t a = 1; a <= config.addr_bound; a += 2) addrs.push_back(a);
  addrs.push_back(config.addr_bound);
  return addrs;
}

// The invariant behind the length correctness proofs, one instance per
// target total: whatever list hangs off reg1, its length plus reg2 stays
// equal to len0. Cyclic states satisfy it vacuously.
StatePredicate length_invariant(std::uint64_t len0) {
  return [len0](const MachineState& s) {
    LengthResult len = length_oracle(s, s.reg1());
    return !len.is_defined() || len.length() + s.reg2() == len0;
  };
}

}  // namespace

SuiteResult run_hoare_length(const RunConfig& config, bool mutate) {
  SuiteResult suite{"hoare-length", {}};
  std::uint64_t budget = std::min(config.budget, kHoareBudget);
  StateSampler sampler = StateSampler::of_states(mixed_universe(config));
  std::vector<std::uint64_t> addrs = addr_sweep(config);

  auto report = check_length_correct(sampler, budget, addrs);
  push(suite, "length-correct1", report.correct1.passed(),
       report.correct1.states_checked, verdict_witness(report.correct1));
  push(suite, "length-correct2", report.correct2.passed(),
       report.correct2.states_checked, verdict_witness(report.correct2));
  push(suite, "cyclic-states-exhaust-and-pass-vacuously",
       report.correct1.exhausted_budget > 0, report.correct1.states_checked,
       "no state exhausted the budget");

  if (!mutate) return suite;

  {
    // Planted defect: postcondition expects one more than the length.
    const std::uint64_t addr = 5;
    HoareTriple<std::uint64_t> mutated{
        [addr](const MachineState& s) {
          return length_oracle(s, addr).is_defined();
        },
        [addr](const MachineState& s, std::uint64_t b) {
          return length_computation(addr, b)(s);
        },
        [addr](const std::uint64_t& n, const MachineState& after) {
          LengthResult len = length_oracle(after, addr);
          return !len.is_defined() || n == len.length() + 1;
        }};
    auto verdict = check_triple(mutated, sampler, budget);
    push(suite, "mutation-post-off-by-one-detected", !verdict.passed(),
         verdict.states_checked, "mutated postcondition was not refuted");
  }
  {
    // Planted defect: an invariant the body plainly breaks.
    auto rule = check_while_rule(
        length_loop_cond(), length_loop_body(),
        [](const MachineState& s) { return s.reg2() == 0; }, sampler, budget);
    push(suite, "mutation-invariant-reg2-zero-detected",
         !rule.passed && rule.failed_phase == "premise",
         rule.premise.states_checked, "broken invariant was not refuted");
  }
  {
    // Planted defect: the loop body forgets to count.
    const std::uint64_t addr = 5;
    StmtPtr forgetful = ast::seq(
        ast::set_reg1(ast::lit(addr)),
        ast::seq(ast::set_reg2(ast::lit(0)),
                 ast::while_loop(length_loop_cond(),
                                 ast::set_reg1(ast::mem(ast::reg1())))));
    HoareTriple<std::uint64_t> mutated{
        [addr](const MachineState& s) {
          return length_oracle(s, addr).is_defined();
        },
        [forgetful](const MachineState& s, std::uint64_t b) {
          return bind(denote(forgetful, b), [](Unit) {
            return reader_to_program(read_reg2());
          })(s);
        },
        [addr](const std::uint64_t& n, const MachineState& after) {
          LengthResult len = length_oracle(after, addr);
          return !len.is_defined() || n == len.length();
        }};
    auto verdict = check_triple(mutated, sampler, budget);
    push(suite, "mutation-body-drops-incr-detected", !verdict.passed(),
         verdict.states_checked, "forgetful body was not refuted");
  }
  return suite;
}

SuiteResult run_length_terminates(const RunConfig& config) {
  SuiteResult suite{"length-terminates", {}};
  ChainFamily family = sweep_family(config, 2000);
  push_report(suite, "length-program-terminates",
              check_length_terminates(family, config.budget));
  push_report(suite, "bare-loop-terminates",
              check_while_terminates(family, {0, 1, 5, 13}, config.budget));
  return suite;
}

SuiteResult run_while_rule(const RunConfig& config) {
  SuiteResult suite{"while-rule", {}};
  std::uint64_t budget = std::min(config.budget, kHoareBudget);
  StateSampler sampler = StateSampler::of_states(mixed_universe(config));

  {
    bool ok = true;
    std::string witness;
    std::uint64_t cases = 0;
    for (std::uint64_t len0 = 0; len0 <= 4 && ok; ++len0) {
      auto rule = check_while_rule(length_loop_cond(), length_loop_body(),
                                   length_invariant(len0), sampler, budget);
      cases += rule.premise.states_checked;
      if (!rule.passed) {
        ok = false;
        witness = "len0=" + std::to_string(len0) + " failed " +
                  rule.failed_phase;
      }
    }
    push(suite, "rule-holds-for-length-invariant", ok, cases, witness);
  }
  {
    auto rule = check_while_rule(
        ast::eq(ast::lit(0), ast::lit(1)), ast::skip(),
        [](const MachineState&) { return true; }, sampler, budget);
    push(suite, "rule-trivial-false-condition", rule.passed,
         rule.premise.states_checked + (rule.conclusion ? rule.conclusion->states_checked : 0),
         rule.failed_phase);
  }
  {
    auto vacuous = check_fuel_triple(0, length_loop_cond(), length_loop_body(),
                                     length_invariant(3), sampler);
    push(suite, "fuel-triple-zero-vacuous",
         vacuous.passed() && vacuous.converged == 0, vacuous.states_checked,
         verdict_witness(vacuous));
  }
  {
    // The rule's fuel-indexed form holds at every fuel once the premise does.
    bool ok = true;
    std::string witness;
    std::uint64_t cases = 0;
    for (std::uint64_t fuel = 0; fuel <= 12 && ok; ++fuel) {
      auto verdict = check_fuel_triple(fuel, length_loop_cond(),
                                       length_loop_body(), length_invariant(2),
                                       sampler);
      cases += verdict.states_checked;
      if (!verdict.passed()) {
        ok = false;
        witness = "fuel " + std::to_string(fuel) + ": " + verdict_witness(verdict);
      }
    }
    push(suite, "fuel-triple-every-fuel", ok, cases, witness);
  }
  return suite;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "order-lab",    "fixpoint-laws",     "monad-laws",
      "while-unfold", "while-iff-fuel",    "hoare-length",
      "while-rule",   "length-terminates",
  };
  return names;
}

bool suite_exists(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteResult run_suite(const std::string& name, const RunConfig& config,
                      bool mutate) {
  if (name == "order-lab") return run_order_lab();
  if (name == "fixpoint-laws") return run_fixpoint_laws();
  if (name == "monad-laws") return run_monad_laws();
  if (name == "while-unfold") return run_while_unfold(config);
  if (name == "while-iff-fuel") return run_while_iff_fuel(config);
  if (name == "hoare-length") return run_hoare_length(config, mutate);
  if (name == "while-rule") return run_while_rule(config);
  if (name == "length-terminates") return run_length_terminates(config);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace lfpwhile
