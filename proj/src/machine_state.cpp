#include "lfpwhile/machine_state.hpp"

#include <algorithm>

namespace lfpwhile {

MachineState::MachineState(std::uint64_t reg1, std::uint64_t reg2, Memory memory)
    : reg1_(reg1), reg2_(reg2) {
  std::sort(memory.begin(), memory.end());
  for (const auto& [addr, value] : memory) {
    if (value != 0) store(addr, value);
  }
}

std::uint64_t MachineState::load(std::uint64_t addr) const {
  auto it = std::lower_bound(
      mem_.begin(), mem_.end(), addr,
      [](const auto& entry, std::uint64_t a) { return entry.first < a; });
  if (it != mem_.end() && it->first == addr) return it->second;
  return 0;
}

MachineState& MachineState::store(std::uint64_t addr, std::uint64_t value) {
  auto it = std::lower_bound(
      mem_.begin(), mem_.end(), addr,
      [](const auto& entry, std::uint64_t a) { return entry.first < a; });
  if (it != mem_.end() && it->first == addr) {
    if (value == 0)
      mem_.erase(it);
    else
      it->second = value;
  } else if (value != 0) {
    mem_.insert(it, {addr, value});
  }
  return *this;
}

std::string MachineState::to_string() const {
  std::string out = "{reg1=" + std::to_string(reg1_) +
                    " reg2=" + std::to_string(reg2_) + " mem={";
  for (std::size_t i = 0; i < mem_.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(mem_[i].first) + ":" + std::to_string(mem_[i].second);
  }
  return out + "}}";
}

}  // namespace lfpwhile
