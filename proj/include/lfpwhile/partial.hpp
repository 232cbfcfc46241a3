#pragma once

#include <optional>

namespace lfpwhile {

// Return type of statements; `unit` is its only value.
struct Unit {
  friend constexpr bool operator==(Unit, Unit) noexcept { return true; }
  friend constexpr bool operator!=(Unit, Unit) noexcept { return false; }
};
inline constexpr Unit unit{};

// Flat-lifted value: disengaged = bottom (divergence), engaged = a defined
// result.
template <typename B>
using Partial = std::optional<B>;

template <typename B>
inline constexpr Partial<B> bottom{};

// Flat order: bottom lies below everything, defined values only below
// themselves.
template <typename B>
bool flat_leq(const Partial<B>& x, const Partial<B>& y) {
  if (!x.has_value()) return true;
  return y.has_value() && *x == *y;
}

}  // namespace lfpwhile
