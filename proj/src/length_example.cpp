#include "lfpwhile/length_example.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <set>
#include <stdexcept>

namespace lfpwhile {

ChainSpec::ChainSpec(std::vector<std::uint64_t> addresses)
    : addresses_(std::move(addresses)) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t addr : addresses_) {
    if (addr == 0) throw std::invalid_argument("ChainSpec: zero address");
    if (!seen.insert(addr).second)
      throw std::invalid_argument("ChainSpec: duplicate address " +
                                  std::to_string(addr));
  }
}

ChainSpec ChainSpec::parse(std::string_view text) {
  std::vector<std::uint64_t> addresses;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    std::uint64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size())
      throw std::invalid_argument("ChainSpec: bad address '" +
                                  std::string(item) + "'");
    addresses.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return ChainSpec(std::move(addresses));
}

std::string ChainSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < addresses_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(addresses_[i]);
  }
  return out;
}

MachineState build_list_state(const ChainSpec& spec, std::uint64_t reg1_init,
                              std::uint64_t reg2_init) {
  MachineState s(reg1_init, reg2_init);
  const auto& addrs = spec.addresses();
  for (std::size_t i = 0; i < addrs.size(); ++i) {
    s.store(addrs[i], i + 1 < addrs.size() ? addrs[i + 1] : 0);
  }
  return s;
}

std::string LengthResult::to_string() const {
  return defined_ ? "len " + std::to_string(n_)
                  : "cyclic at " + std::to_string(n_);
}

LengthResult length_oracle(const MachineState& s, std::uint64_t addr) {
  std::set<std::uint64_t> visited;
  std::uint64_t cur = addr;
  std::uint64_t len = 0;
  while (cur != 0) {
    if (!visited.insert(cur).second) return LengthResult::cyclic(cur);
    cur = s.load(cur);
    ++len;
  }
  return LengthResult::defined(len);
}

Cond length_loop_cond() { return ast::neq0(ast::reg1()); }

StmtPtr length_loop_body() {
  return ast::seq(ast::incr_reg2_stmt(), ast::set_reg1(ast::mem(ast::reg1())));
}

StmtPtr length_loop() {
  return ast::while_loop(length_loop_cond(), length_loop_body());
}

StmtPtr length_program(std::uint64_t addr) {
  return ast::seq(ast::set_reg1(ast::lit(addr)),
                  ast::seq(ast::set_reg2(ast::lit(0)), length_loop()));
}

Prog<MachineState, std::uint64_t> length_computation(std::uint64_t addr,
                                                     std::uint64_t budget) {
  return bind(denote(length_program(addr), budget), [](Unit) {
    return reader_to_program(read_reg2());
  });
}

std::vector<ChainSpec> generate_chain_family(const ChainFamily& family) {
  std::vector<ChainSpec> specs;
  specs.emplace_back();
  for (std::uint64_t a = 1; a <= family.addr_bound && family.max_len >= 1; ++a)
    specs.push_back(ChainSpec({a}));
  for (std::uint64_t a = 1; a <= family.addr_bound && family.max_len >= 2; ++a)
    for (std::uint64_t b = 1; b <= family.addr_bound; ++b)
      if (a != b) specs.push_back(ChainSpec({a, b}));

  std::mt19937_64 rng(family.seed);
  auto below = [&rng](std::uint64_t n) { return rng() % n; };
  std::vector<std::uint64_t> pool(family.addr_bound);
  for (std::uint32_t i = 0; i < family.addr_bound; ++i) pool[i] = i + 1;
  const std::uint64_t longest =
      std::min<std::uint64_t>(family.max_len, family.addr_bound);
  while (specs.size() < family.cap && longest >= 3) {
    std::uint64_t len = 3 + below(longest - 2);
    for (std::uint64_t i = 0; i < len; ++i)
      std::swap(pool[i], pool[i + below(pool.size() - i)]);
    specs.push_back(ChainSpec(
        std::vector<std::uint64_t>(pool.begin(), pool.begin() + len)));
  }
  if (specs.size() > family.cap) specs.resize(family.cap);
  return specs;
}

std::vector<MachineState> generate_cyclic_states(const ChainFamily& family) {
  std::vector<MachineState> states;
  for (const ChainSpec& spec : generate_chain_family(family)) {
    const auto& addrs = spec.addresses();
    if (addrs.empty()) continue;
    // Close the tail back onto each address of the chain.
    for (std::uint64_t target : addrs) {
      MachineState s = build_list_state(spec, addrs[0], 0);
      s.store(addrs.back(), target);
      states.push_back(std::move(s));
    }
  }
  return states;
}

CheckReport check_while_terminates(const ChainFamily& family,
                                   const std::vector<std::uint64_t>& n_values,
                                   std::uint64_t budget) {
  CheckReport report;
  PreparedProgram loop(length_loop(), budget);
  for (const ChainSpec& spec : generate_chain_family(family)) {
    for (std::uint64_t n : n_values) {
      MachineState start = build_list_state(spec, spec.head(), n);
      MachineState expected = start;
      expected.set_reg1(0).set_reg2(n + spec.length());
      auto outcome = loop.run(start);
      ++report.cases;
      if (!outcome.is_converged() ||
          !(outcome.value() == WhileResult{unit, expected})) {
        report.passed = false;
        report.witness = "chain [" + spec.to_string() + "], n=" +
                         std::to_string(n);
        return report;
      }
    }
  }
  return report;
}

CheckReport check_length_terminates(const ChainFamily& family,
                                    std::uint64_t budget) {
  CheckReport report;
  for (const ChainSpec& spec : generate_chain_family(family)) {
    MachineState start = build_list_state(spec, 9, 9);
    LengthResult len = length_oracle(start, spec.head());
    auto result = length_computation(spec.head(), budget)(start);
    ++report.cases;
    MachineState expected = start;
    expected.set_reg1(0).set_reg2(len.length());
    bool ok = len.is_defined() && len.length() == spec.length() &&
              result.has_value() && result->first == len.length() &&
              result->second == expected;
    if (!ok) {
      report.passed = false;
      report.witness = "chain [" + spec.to_string() + "]";
      return report;
    }
  }
  return report;
}

LengthCorrectReport check_length_correct(const StateSampler& sampler,
                                         std::uint64_t budget,
                                         const std::vector<std::uint64_t>& addrs) {
  LengthCorrectReport report;
  auto merge = [](Verdict<std::uint64_t>& into, Verdict<std::uint64_t> from) {
    into.states_checked += from.states_checked;
    into.converged += from.converged;
    into.exhausted_budget += from.exhausted_budget;
    if (!into.counterexample) into.counterexample = from.counterexample;
  };

  for (std::uint64_t addr : addrs) {
    auto cache = std::make_shared<
        std::optional<std::pair<std::uint64_t, Prog<MachineState, std::uint64_t>>>>();
    BudgetedProg<std::uint64_t> prog = [addr, cache](const MachineState& s,
                                                     std::uint64_t b) {
      if (!*cache || (*cache)->first != b)
        cache->emplace(b, length_computation(addr, b));
      return (*cache)->second(s);
    };
    // The program never writes memory, so the list at addr reads the same in
    // the final state as in the initial one; the oracle on the final state
    // recovers the unique length witness.
    HoareTriple<std::uint64_t> correct1{
        [](const MachineState&) { return true; },
        prog,
        [addr](const std::uint64_t&, const MachineState& after) {
          LengthResult len = length_oracle(after, addr);
          return !len.is_defined() || after.reg2() == len.length();
        }};
    HoareTriple<std::uint64_t> correct2{
        [addr](const MachineState& s) {
          return length_oracle(s, addr).is_defined();
        },
        prog,
        [addr](const std::uint64_t& n, const MachineState& after) {
          LengthResult len = length_oracle(after, addr);
          return !len.is_defined() || n == len.length();
        }};
    merge(report.correct1, check_triple(correct1, sampler, budget));
    merge(report.correct2, check_triple(correct2, sampler, budget));
  }
  report.passed = report.correct1.passed() && report.correct2.passed();
  return report;
}

}  // namespace lfpwhile
