#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lfpwhile/length_example.hpp"
#include "lfpwhile/parser.hpp"
#include "lfpwhile/semantics.hpp"
#include "lfpwhile/suites.hpp"

namespace {

using nlohmann::json;
using namespace lfpwhile;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitExhausted = 2;
constexpr int kExitCounterexample = 3;

struct ProgramFlags {
  std::string program;
  std::string file;
};

struct StateFlags {
  std::optional<std::uint64_t> reg1;
  std::optional<std::uint64_t> reg2;
  std::string mem;
  std::string chain;
};

std::uint64_t default_budget() {
  if (const char* env = std::getenv("LFPWHILE_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("LFPWHILE_BUDGET",
                                 "must be a natural number");
    }
  }
  return kDefaultBudget;
}

StmtPtr load_program(const ProgramFlags& flags) {
  if (flags.program.empty() == flags.file.empty())
    throw CLI::ValidationError("program",
                               "exactly one of --program/--file is required");
  if (!flags.program.empty()) return parse(flags.program);
  std::ifstream in(flags.file);
  if (!in) throw CLI::ValidationError("file", "cannot read " + flags.file);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

MachineState initial_state(const StateFlags& flags) {
  MachineState s;
  if (!flags.chain.empty()) {
    ChainSpec spec = ChainSpec::parse(flags.chain);
    s = build_list_state(spec, spec.head(), 0);
  }
  if (!flags.mem.empty()) {
    std::stringstream ss{flags.mem};
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto colon = item.find(':');
      if (colon == std::string::npos)
        throw CLI::ValidationError("mem", "entries look like addr:value");
      s.store(std::stoull(item.substr(0, colon)),
              std::stoull(item.substr(colon + 1)));
    }
  }
  if (flags.reg1) s.set_reg1(*flags.reg1);
  if (flags.reg2) s.set_reg2(*flags.reg2);
  return s;
}

json state_json(const MachineState& s) {
  json mem = json::array();
  for (const auto& [addr, value] : s.memory())
    mem.push_back(json::array({addr, value}));
  return json{{"reg1", s.reg1()}, {"reg2", s.reg2()}, {"memory", mem}};
}

int cmd_run(const ProgramFlags& pf, const StateFlags& sf, std::uint64_t budget,
            bool as_json) {
  StmtPtr stmt = load_program(pf);
  MachineState start = initial_state(sf);
  auto outcome = exec(stmt, budget, start);
  if (outcome.is_converged()) {
    const MachineState& state = outcome.value().second;
    if (as_json) {
      std::cout << json{{"outcome", "converged"},
                        {"value", "tt"},
                        {"fuel", outcome.fuel_used()},
                        {"state", state_json(state)}}
                       .dump()
                << "\n";
    } else {
      std::cout << "converged fuel=" << outcome.fuel_used() << " value=tt\n"
                << "state: " << state.to_string() << "\n";
    }
    return kExitOk;
  }
  if (as_json) {
    std::cout << json{{"outcome", "exhausted"}, {"budget", outcome.budget()}}
                     .dump()
              << "\n";
  } else {
    std::cout << "exhausted budget=" << outcome.budget() << "\n";
  }
  return kExitExhausted;
}

int cmd_fuel_scan(const ProgramFlags& pf, const StateFlags& sf,
                  std::uint64_t max_fuel, bool as_json) {
  StmtPtr stmt = load_program(pf);
  MachineState start = initial_state(sf);

  json rows = json::array();
  auto emit = [&](std::uint64_t fuel, const Partial<WhileResult>& value) {
    if (as_json) {
      json row{{"fuel", fuel}, {"defined", value.has_value()}};
      if (value) row["state"] = state_json(value->second);
      rows.push_back(row);
    } else if (value) {
      std::cout << "fuel " << fuel << ": defined " << value->second.to_string()
                << "\n";
    } else {
      std::cout << "fuel " << fuel << ": bottom\n";
    }
  };

  if (const auto* loop = std::get_if<WhileStmt>(&stmt->node)) {
    FuelEvaluator<MachineState, WhileResult> approximants(while_functional(
        cond_reader(loop->cond),
        denote(loop->body, std::max<std::uint64_t>(max_fuel, 1))));
    for (std::uint64_t fuel = 0; fuel <= max_fuel; ++fuel)
      emit(fuel, approximants.eval_fuel(fuel, start));
  } else {
    // The statement functional folds all non-loop structure into a single
    // application, so its approximant graph steps from bottom straight to the
    // converged result at the statement's minimal fuel.
    auto outcome = exec(stmt, std::max<std::uint64_t>(max_fuel, 1), start);
    for (std::uint64_t fuel = 0; fuel <= max_fuel; ++fuel) {
      if (outcome.is_converged() && fuel >= outcome.fuel_used())
        emit(fuel, outcome.value());
      else
        emit(fuel, std::nullopt);
    }
  }
  if (as_json) std::cout << json{{"rows", rows}}.dump() << "\n";
  return kExitOk;
}

json suite_json(const SuiteResult& result) {
  json properties = json::array();
  for (const auto& p : result.properties) {
    json entry{{"property", p.property},
               {"status", p.passed ? "pass" : "fail"},
               {"states_checked", p.states_checked}};
    if (!p.passed && !p.witness.empty()) entry["witness"] = p.witness;
    properties.push_back(entry);
  }
  return json{{"suite", result.suite},
              {"passed", result.passed()},
              {"properties", properties}};
}

int cmd_check(const std::string& suite, const RunConfig& config, bool mutate,
              bool as_json) {
  SuiteResult result = run_suite(suite, config, mutate);
  if (as_json) {
    std::cout << suite_json(result).dump() << "\n";
  } else {
    std::cout << "suite " << result.suite << "\n";
    for (const auto& p : result.properties) {
      std::cout << "  " << (p.passed ? "pass" : "FAIL") << " " << p.property
                << " (states_checked=" << p.states_checked << ")";
      if (!p.passed && !p.witness.empty())
        std::cout << " witness: " << p.witness;
      std::cout << "\n";
    }
  }
  return result.passed() ? kExitOk : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Budgeted least-fixpoint semantics for a small while-language"};
  app.require_subcommand(1);

  ProgramFlags pf;
  StateFlags sf;
  std::uint64_t budget = 0;
  std::uint64_t max_fuel = 32;
  std::string output = "text";
  bool mutate = false;
  RunConfig config;
  std::string suite;

  auto add_program_flags = [&](CLI::App* cmd) {
    cmd->add_option("--program", pf.program, "program text");
    cmd->add_option("--file", pf.file, "program file");
    cmd->add_option("--reg1", sf.reg1, "initial reg1");
    cmd->add_option("--reg2", sf.reg2, "initial reg2");
    cmd->add_option("--mem", sf.mem, "initial memory, addr:value pairs");
    cmd->add_option("--chain", sf.chain,
                    "linked-list memory from comma-separated addresses; also "
                    "sets reg1 to the head unless --reg1 is given");
    cmd->add_option("--output", output, "text or json");
  };

  CLI::App* run = app.add_subcommand("run", "parse and execute a program");
  add_program_flags(run);
  run->add_option("--budget", budget, "fuel budget");

  CLI::App* scan = app.add_subcommand(
      "fuel-scan", "print the approximant graph of a program");
  add_program_flags(scan);
  scan->add_option("--max-fuel", max_fuel, "largest fuel to tabulate");

  CLI::App* check = app.add_subcommand("check", "run a property suite");
  check->add_option("suite", suite, "one of the named suites")->required();
  check->add_option("--budget", budget, "fuel budget");
  check->add_option("--reg-bound", config.reg_bound, "register sweep bound");
  check->add_option("--addr-bound", config.addr_bound, "address sweep bound");
  check->add_option("--val-bound", config.val_bound, "value sweep bound");
  check->add_option("--max-support", config.max_support,
                    "memory support bound for the exhaustive sampler");
  check->add_option("--seed", config.seed, "sampling seed");
  check->add_flag("--mutate", mutate, "run the planted-defect variants");
  check->add_option("--output", output, "text or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    bool as_json = output == "json";
    if (!as_json && output != "text")
      throw CLI::ValidationError("output", "must be text or json");
    if (budget == 0) budget = default_budget();
    config.budget = budget;

    if (run->parsed()) return cmd_run(pf, sf, budget, as_json);
    if (scan->parsed()) return cmd_fuel_scan(pf, sf, max_fuel, as_json);
    if (check->parsed()) {
      if (!suite_exists(suite)) {
        std::cerr << "unknown suite '" << suite << "'; available:";
        for (const auto& name : suite_names()) std::cerr << " " << name;
        std::cerr << "\n";
        return kExitUsage;
      }
      return cmd_check(suite, config, mutate, as_json);
    }
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
