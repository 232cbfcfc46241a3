#pragma once

#include <functional>
#include <type_traits>
#include <utility>

#include "lfpwhile/partial.hpp"

namespace lfpwhile {

// State-reading computation: runs against a state and yields a value without
// any way to emit a new state.
template <typename T, typename A>
using Reader = std::function<A(const T&)>;

// Stateful computation that may diverge; bottom encodes nontermination.
template <typename T, typename A>
using Prog = std::function<Partial<std::pair<A, T>>(const T&)>;

// Trivial computation: ignore the state.
template <typename T, typename A>
Reader<T, std::decay_t<A>> ret(A&& a) {
  return [a = std::forward<A>(a)](const T&) { return a; };
}

template <typename T>
Reader<T, T> get() {
  return [](const T& s) { return s; };
}

// Sequencing of reading computations: pass the result and the unchanged
// state on.
template <typename T, typename A, typename F>
auto rbind(Reader<T, A> m, F f) {
  using MB = std::invoke_result_t<F, A>;
  using B = std::invoke_result_t<MB, const T&>;
  return Reader<T, B>(
      [m = std::move(m), f = std::move(f)](const T& s) { return f(m(s))(s); });
}

// A reading computation is the special case of a program that defines a
// result and leaves the state alone. Call sites spell the conversion out.
template <typename T, typename A>
Prog<T, A> reader_to_program(Reader<T, A> m) {
  return [m = std::move(m)](const T& s) -> Partial<std::pair<A, T>> {
    return std::pair<A, T>(m(s), s);
  };
}

template <typename T>
Prog<T, Unit> put(T s) {
  return [s = std::move(s)](const T&) -> Partial<std::pair<Unit, T>> {
    return std::pair<Unit, T>(unit, s);
  };
}

// Sequencing of programs: bottom propagates, otherwise the second computation
// sees the value and the possibly-changed state.
template <typename T, typename A, typename F>
auto bind(Prog<T, A> m, F f) {
  using MB = std::invoke_result_t<F, A>;
  using PB = std::invoke_result_t<MB, const T&>;
  using B = typename PB::value_type::first_type;
  return Prog<T, B>([m = std::move(m), f = std::move(f)](
                        const T& s) -> Partial<std::pair<B, T>> {
    auto r = m(s);
    if (!r) return std::nullopt;
    return f(std::move(r->first))(r->second);
  });
}

}  // namespace lfpwhile
