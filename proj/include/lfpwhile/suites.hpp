#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lfpwhile/semantics.hpp"

namespace lfpwhile {

struct RunConfig {
  std::uint64_t budget = kDefaultBudget;
  std::uint32_t reg_bound = 8;
  std::uint32_t addr_bound = 12;
  std::uint32_t val_bound = 12;
  std::uint32_t max_support = 2;
  std::uint64_t seed = 0;
};

struct PropertyResult {
  std::string property;
  bool passed = true;
  std::uint64_t states_checked = 0;
  std::string witness;
};

struct SuiteResult {
  std::string suite;
  std::vector<PropertyResult> properties;

  bool passed() const {
    for (const auto& p : properties)
      if (!p.passed) return false;
    return true;
  }
  bool has_counterexample() const {
    for (const auto& p : properties)
      if (!p.passed && !p.witness.empty()) return true;
    return false;
  }
};

// The deterministic state universe the loop-law sweeps run over: the
// exhaustive sampler at support <= 1, generated list states, and cyclic
// closures of those lists.
std::vector<MachineState> sweep_states(const RunConfig& config);

// The loops the loop-law sweeps exercise: the list-walking loop plus three
// generated companions.
struct NamedLoop {
  std::string name;
  Cond cond;
  StmtPtr body;
};
std::vector<NamedLoop> sweep_loops();

SuiteResult run_order_lab();
SuiteResult run_fixpoint_laws();
SuiteResult run_monad_laws();
SuiteResult run_while_unfold(const RunConfig& config);
SuiteResult run_while_iff_fuel(const RunConfig& config);
SuiteResult run_hoare_length(const RunConfig& config, bool mutate);
SuiteResult run_length_terminates(const RunConfig& config);
SuiteResult run_while_rule(const RunConfig& config);

// nullopt when the name is unknown; `mutate` only affects hoare-length.
const std::vector<std::string>& suite_names();
bool suite_exists(const std::string& name);
SuiteResult run_suite(const std::string& name, const RunConfig& config,
                      bool mutate);

}  // namespace lfpwhile
