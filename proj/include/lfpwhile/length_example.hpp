#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lfpwhile/hoare.hpp"
#include "lfpwhile/machine_state.hpp"
#include "lfpwhile/semantics.hpp"

namespace lfpwhile {

// A well-formed linked list: distinct nonzero addresses, each linking to the
// next, the last linking to 0.
class ChainSpec {
 public:
  ChainSpec() = default;
  explicit ChainSpec(std::vector<std::uint64_t> addresses);

  // Comma-separated addresses ("5,7,9"); empty text is the empty list.
  static ChainSpec parse(std::string_view text);

  const std::vector<std::uint64_t>& addresses() const { return addresses_; }
  std::uint64_t head() const { return addresses_.empty() ? 0 : addresses_[0]; }
  std::size_t length() const { return addresses_.size(); }
  std::string to_string() const;

 private:
  std::vector<std::uint64_t> addresses_;
};

MachineState build_list_state(const ChainSpec& spec, std::uint64_t reg1_init,
                              std::uint64_t reg2_init);

// Length of the list starting at an address, or the first revisited address
// when the links loop. Always terminates: the walk visits each reachable
// address at most once.
class LengthResult {
 public:
  static LengthResult defined(std::uint64_t len) {
    return LengthResult(true, len);
  }
  static LengthResult cyclic(std::uint64_t entry) {
    return LengthResult(false, entry);
  }

  bool is_defined() const { return defined_; }
  std::uint64_t length() const { return defined_ ? n_ : 0; }
  std::uint64_t cycle_entry() const { return defined_ ? 0 : n_; }
  std::string to_string() const;

  friend bool operator==(const LengthResult&, const LengthResult&) = default;

 private:
  LengthResult(bool defined, std::uint64_t n) : defined_(defined), n_(n) {}
  bool defined_;
  std::uint64_t n_;
};

LengthResult length_oracle(const MachineState& s, std::uint64_t addr);

// Condition and body of the list-walking loop: while reg1 != 0 { incr reg2;
// reg1 := mem[reg1] }.
Cond length_loop_cond();
StmtPtr length_loop_body();
StmtPtr length_loop();

// The full program: write addr to reg1, zero reg2, run the loop; reg2 then
// holds the length.
StmtPtr length_program(std::uint64_t addr);

// The same program as a value-returning computation, reading reg2 at the end.
Prog<MachineState, std::uint64_t> length_computation(std::uint64_t addr,
                                                     std::uint64_t budget);

// Generation parameters for families of list states.
struct ChainFamily {
  std::uint32_t addr_bound = 12;
  std::uint32_t max_len = 8;
  std::uint64_t cap = 2000;    // sampled when the family would exceed this
  std::uint64_t seed = 0;
};

// All chains up to length 2 plus a seeded sample of longer ones, capped.
std::vector<ChainSpec> generate_chain_family(const ChainFamily& family);

// States whose links loop: every generated chain of length >= 1 closed back
// onto each of its own addresses, reg1 at the head.
std::vector<MachineState> generate_cyclic_states(const ChainFamily& family);

// For every generated list and every initial n: the bare loop started at
// {reg1=head, reg2=n} converges to {reg1=0, reg2=n+len, memory unchanged}.
CheckReport check_while_terminates(const ChainFamily& family,
                                   const std::vector<std::uint64_t>& n_values,
                                   std::uint64_t budget);

// For every generated list: the length program converges to (len, {reg1=0,
// reg2=len, memory unchanged}) with len the oracle's answer.
CheckReport check_length_terminates(const ChainFamily& family,
                                    std::uint64_t budget);

struct LengthCorrectReport {
  Verdict<std::uint64_t> correct1;  // final reg2 is the list length at addr
  Verdict<std::uint64_t> correct2;  // the returned value is the list length
  bool passed = false;
};

// Runs both correctness triples through check_triple for each starting
// address. The length witness is recomputed from the final state's memory,
// which the program leaves untouched.
LengthCorrectReport check_length_correct(const StateSampler& sampler,
                                         std::uint64_t budget,
                                         const std::vector<std::uint64_t>& addrs);

}  // namespace lfpwhile
