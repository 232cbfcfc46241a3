#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace lfpwhile {

// Two registers plus a finite-support memory map; absent addresses read as
// zero. Entries are kept sorted with zero values dropped, so structural
// equality is state equality.
class MachineState {
 public:
  using Memory = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

  MachineState() = default;
  MachineState(std::uint64_t reg1, std::uint64_t reg2, Memory memory = {});

  std::uint64_t reg1() const { return reg1_; }
  std::uint64_t reg2() const { return reg2_; }
  std::uint64_t load(std::uint64_t addr) const;
  const Memory& memory() const { return mem_; }

  MachineState& set_reg1(std::uint64_t v) {
    reg1_ = v;
    return *this;
  }
  MachineState& set_reg2(std::uint64_t v) {
    reg2_ = v;
    return *this;
  }
  MachineState& store(std::uint64_t addr, std::uint64_t value);

  friend bool operator==(const MachineState&, const MachineState&) = default;

  std::string to_string() const;

 private:
  std::uint64_t reg1_ = 0;
  std::uint64_t reg2_ = 0;
  Memory mem_;
};

}  // namespace lfpwhile

template <>
struct std::hash<lfpwhile::MachineState> {
  std::size_t operator()(const lfpwhile::MachineState& s) const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ULL;
    };
    mix(s.reg1());
    mix(s.reg2());
    for (const auto& [addr, value] : s.memory()) {
      mix(addr);
      mix(value);
    }
    return static_cast<std::size_t>(h);
  }
};
