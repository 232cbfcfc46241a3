#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lfpwhile/order_core.hpp"
#include "lfpwhile/partial.hpp"

namespace lfpwhile {

// A fuel-indexed approximation of the function under construction.
template <typename A, typename B>
using Approximant = std::function<Partial<B>(const A&)>;

// The abstract body of a recursive function: given an approximation of the
// function and an argument, produce a result. Must be pure and total in both
// arguments; the engine re-runs functional bodies freely, so any side effect
// would be observed an unspecified number of times.
template <typename A, typename B>
using Functional = std::function<Partial<B>(const Approximant<A, B>&, const A&)>;

template <typename B>
class EvalOutcome {
 public:
  static EvalOutcome converged(B value, std::uint64_t fuel_used) {
    return EvalOutcome(Partial<B>(std::move(value)), fuel_used);
  }
  static EvalOutcome exhausted(std::uint64_t budget) {
    return EvalOutcome(std::nullopt, budget);
  }

  bool is_converged() const { return value_.has_value(); }
  const B& value() const {
    if (!value_) throw std::logic_error("EvalOutcome::value: exhausted");
    return *value_;
  }
  // Minimal fuel at which the result is defined.
  std::uint64_t fuel_used() const {
    if (!value_) throw std::logic_error("EvalOutcome::fuel_used: exhausted");
    return fuel_;
  }
  std::uint64_t budget() const {
    if (value_) throw std::logic_error("EvalOutcome::budget: converged");
    return fuel_;
  }

  friend bool operator==(const EvalOutcome&, const EvalOutcome&) = default;

 private:
  EvalOutcome(Partial<B> value, std::uint64_t fuel)
      : value_(std::move(value)), fuel_(fuel) {}
  Partial<B> value_;
  std::uint64_t fuel_;
};

// Evaluates fuel-indexed approximants without recursing on the host stack, so
// large fuel values cannot overflow it. Every (fuel, argument) pair is
// memoized. A functional body that asks its approximant for a value not yet
// computed gets bottom and the request is recorded; the engine then computes
// the missing entries and re-runs the body. Re-running is harmless because
// functionals are pure, and each retry resolves at least one recorded
// request, so evaluation terminates whenever the body does.
template <typename A, typename B, typename Hash = std::hash<A>>
class FuelEvaluator {
 public:
  explicit FuelEvaluator(Functional<A, B> f) : f_(std::move(f)) {}

  Partial<B> eval_fuel(std::uint64_t fuel, const A& a) {
    Key root{fuel, a};
    if (auto it = memo_.find(root); it != memo_.end()) return it->second;

    struct Probe {
      const FuelEvaluator* self;
      std::uint64_t below = 0;
      std::vector<A> missing;
    } probe{this, 0, {}};
    Approximant<A, B> approx = [&probe](const A& x) -> Partial<B> {
      auto it = probe.self->memo_.find(Key{probe.below, x});
      if (it != probe.self->memo_.end()) return it->second;
      probe.missing.push_back(x);
      return std::nullopt;
    };

    std::vector<Key> pending{root};
    while (!pending.empty()) {
      Key cur = pending.back();
      if (memo_.count(cur)) {
        pending.pop_back();
        continue;
      }
      if (cur.first == 0) {
        memo_.emplace(std::move(cur), std::nullopt);
        pending.pop_back();
        continue;
      }
      probe.below = cur.first - 1;
      probe.missing.clear();
      Partial<B> out = f_(approx, cur.second);
      if (probe.missing.empty()) {
        memo_.emplace(std::move(cur), std::move(out));
        pending.pop_back();
      } else {
        for (auto& x : probe.missing)
          pending.emplace_back(cur.first - 1, std::move(x));
      }
    }
    return memo_.at(root);
  }

  // Least fuel <= budget at which the approximant defines a value, found by
  // doubling then bisecting; definedness is monotone in the fuel for
  // fuel-monotone functionals, which minimal-fuel reporting relies on.
  EvalOutcome<B> eval_lfp(std::uint64_t budget, const A& a) {
    if (budget < 1) throw std::invalid_argument("eval_lfp: budget must be >= 1");
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    bool found = false;
    for (std::uint64_t probe = 1;;) {
      if (eval_fuel(probe, a).has_value()) {
        hi = probe;
        found = true;
        break;
      }
      lo = probe;
      if (probe >= budget) break;
      probe = (probe > budget / 2) ? budget : probe * 2;
    }
    if (!found) return EvalOutcome<B>::exhausted(budget);
    while (hi - lo > 1) {
      std::uint64_t mid = lo + (hi - lo) / 2;
      if (eval_fuel(mid, a).has_value())
        hi = mid;
      else
        lo = mid;
    }
    return EvalOutcome<B>::converged(*eval_fuel(hi, a), hi);
  }

  std::size_t memo_size() const { return memo_.size(); }
  void clear() { memo_.clear(); }

 private:
  using Key = std::pair<std::uint64_t, A>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = Hash{}(k.second);
      return h ^ (std::hash<std::uint64_t>{}(k.first) + 0x9e3779b97f4a7c15ULL +
                  (h << 6) + (h >> 2));
    }
  };

  Functional<A, B> f_;
  std::unordered_map<Key, Partial<B>, KeyHash> memo_;
};

template <typename A, typename B, typename Hash = std::hash<A>>
Partial<B> eval_fuel(const Functional<A, B>& f, std::uint64_t fuel, const A& a) {
  FuelEvaluator<A, B, Hash> ev(f);
  return ev.eval_fuel(fuel, a);
}

template <typename A, typename B, typename Hash = std::hash<A>>
EvalOutcome<B> eval_lfp(const Functional<A, B>& f, std::uint64_t budget,
                        const A& a) {
  FuelEvaluator<A, B, Hash> ev(f);
  return ev.eval_lfp(budget, a);
}

// The n-th iterate of the functional from the constant-bottom map, restricted
// to a sample of arguments. Built by literal n-fold composition, so evaluation
// recurses n host frames; meant for small n.
template <typename A, typename B>
std::vector<std::pair<A, Partial<B>>> iterate_bottom(
    const Functional<A, B>& f, std::uint64_t n, const std::vector<A>& sample) {
  Approximant<A, B> approx = [](const A&) -> Partial<B> { return std::nullopt; };
  for (std::uint64_t i = 0; i < n; ++i) {
    approx = [&f, prev = std::move(approx)](const A& a) { return f(prev, a); };
  }
  std::vector<std::pair<A, Partial<B>>> table;
  table.reserve(sample.size());
  for (const A& a : sample) table.emplace_back(a, approx(a));
  return table;
}

struct CheckReport {
  bool passed = true;
  std::uint64_t cases = 0;
  std::string witness;
};

struct SampleMode {
  std::uint64_t count = 256;
  std::uint64_t seed = 0;
};

// Default candidate-function bound for the exhaustive functional checks.
inline constexpr std::uint64_t kFunctionSpaceBound = 4096;

// eval_fuel(f, n, a) must climb the flat order as n grows.
template <typename A, typename B, typename Hash = std::hash<A>>
CheckReport check_fuel_monotone(const Functional<A, B>& f,
                                std::uint64_t fuel_bound,
                                const std::vector<A>& sample) {
  CheckReport report;
  FuelEvaluator<A, B, Hash> ev(f);
  for (std::size_t i = 0; i < sample.size(); ++i) {
    Partial<B> prev = ev.eval_fuel(0, sample[i]);
    for (std::uint64_t n = 1; n <= fuel_bound; ++n) {
      Partial<B> cur = ev.eval_fuel(n, sample[i]);
      ++report.cases;
      if (!flat_leq(prev, cur)) {
        report.passed = false;
        report.witness = "argument #" + std::to_string(i) + ", fuel " +
                         std::to_string(n - 1) + " -> " + std::to_string(n);
        return report;
      }
      prev = std::move(cur);
    }
  }
  return report;
}

namespace detail {

// Total maps finite_A -> Partial(finite_B) encoded as one code per argument:
// 0 = bottom, j = finite_B[j-1].
template <typename A, typename B>
Approximant<A, B> decode_map(const std::vector<A>& domain,
                             const std::vector<B>& codomain,
                             std::vector<std::uint32_t> codes) {
  return [&domain, &codomain, codes = std::move(codes)](const A& x) -> Partial<B> {
    for (std::size_t i = 0; i < domain.size(); ++i) {
      if (domain[i] == x)
        return codes[i] == 0 ? Partial<B>{} : Partial<B>{codomain[codes[i] - 1]};
    }
    return std::nullopt;
  };
}

inline bool codes_pointwise_leq(const std::vector<std::uint32_t>& f,
                                const std::vector<std::uint32_t>& g) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] != 0 && f[i] != g[i]) return false;
  return true;
}

inline std::string codes_to_string(const std::vector<std::uint32_t>& codes) {
  std::string out = "[";
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i) out += ",";
    out += codes[i] == 0 ? "_" : std::to_string(codes[i]);
  }
  return out + "]";
}

}  // namespace detail

// F f a <= F f' a whenever f <= f' pointwise, over every total map (or a
// seeded sample of pairs) from finite_A into the flat lift of finite_B.
// Arguments outside finite_A read as bottom in the candidate maps.
template <typename A, typename B>
CheckReport check_functional_monotone(
    const Functional<A, B>& f, const std::vector<A>& finite_a,
    const std::vector<B>& finite_b,
    const std::optional<SampleMode>& sample = std::nullopt,
    std::uint64_t bound = kFunctionSpaceBound) {
  CheckReport report;
  const std::uint32_t radix = static_cast<std::uint32_t>(finite_b.size()) + 1;

  auto check_pair = [&](const std::vector<std::uint32_t>& lo_codes,
                        const std::vector<std::uint32_t>& hi_codes) -> bool {
    auto lo = detail::decode_map(finite_a, finite_b, lo_codes);
    auto hi = detail::decode_map(finite_a, finite_b, hi_codes);
    for (std::size_t i = 0; i < finite_a.size(); ++i) {
      ++report.cases;
      if (!flat_leq(f(lo, finite_a[i]), f(hi, finite_a[i]))) {
        report.passed = false;
        report.witness = "f=" + detail::codes_to_string(lo_codes) +
                         " f'=" + detail::codes_to_string(hi_codes) +
                         " argument #" + std::to_string(i);
        return false;
      }
    }
    return true;
  };

  if (!sample) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < finite_a.size(); ++i) {
      total *= radix;
      if (total > bound)
        throw std::invalid_argument(
            "check_functional_monotone: function space exceeds bound");
    }
    std::vector<std::uint32_t> lo(finite_a.size()), hi(finite_a.size());
    for (std::uint64_t u = 0; u < total; ++u) {
      std::uint64_t uu = u;
      for (std::size_t i = 0; i < lo.size(); ++i) {
        lo[i] = static_cast<std::uint32_t>(uu % radix);
        uu /= radix;
      }
      for (std::uint64_t v = 0; v < total; ++v) {
        std::uint64_t vv = v;
        for (std::size_t i = 0; i < hi.size(); ++i) {
          hi[i] = static_cast<std::uint32_t>(vv % radix);
          vv /= radix;
        }
        if (!detail::codes_pointwise_leq(lo, hi)) continue;
        if (!check_pair(lo, hi)) return report;
      }
    }
    return report;
  }

  std::mt19937_64 rng(sample->seed);
  auto below = [&rng](std::uint64_t n) {
    return static_cast<std::uint32_t>(rng() % n);
  };
  std::vector<std::uint32_t> lo(finite_a.size()), hi(finite_a.size());
  for (std::uint64_t round = 0; round < sample->count; ++round) {
    for (std::size_t i = 0; i < lo.size(); ++i) {
      lo[i] = below(radix);
      hi[i] = (lo[i] == 0 && below(2) == 0) ? 1 + below(radix - 1) : lo[i];
    }
    if (!check_pair(lo, hi)) return report;
  }
  return report;
}

namespace detail {

// A family g : conat -> finite_A -> Partial(finite_B) given by one monotone
// sequence per argument. Code 0 = never defined; code 1 + k*|B| + j =
// threshold k with value finite_B[j].
template <typename B>
std::vector<MonotoneSeq<B>> decode_family(const std::vector<B>& codomain,
                                          std::uint64_t code,
                                          std::uint64_t choices,
                                          std::size_t arity) {
  std::vector<MonotoneSeq<B>> seqs;
  seqs.reserve(arity);
  for (std::size_t i = 0; i < arity; ++i) {
    std::uint64_t c = code % choices;
    code /= choices;
    if (c == 0) {
      seqs.push_back(MonotoneSeq<B>::never_defined());
    } else {
      std::uint64_t k = (c - 1) / codomain.size();
      std::uint64_t j = (c - 1) % codomain.size();
      seqs.push_back(MonotoneSeq<B>::threshold(k, codomain[j]));
    }
  }
  return seqs;
}

}  // namespace detail

// For every family g built from per-argument monotone sequences with
// thresholds <= threshold_bound (so each n |-> g n a is continuous by
// construction), the composite n |-> F (g n) a' must be continuous too, with
// F applied to the pointwise-lub function at infinity. Families are
// enumerated exhaustively when their count stays within `bound`, otherwise
// sampled with the given seed.
template <typename A, typename B>
CheckReport check_continuity_preservation(
    const Functional<A, B>& f, const std::vector<A>& finite_a,
    const std::vector<B>& finite_b, std::uint64_t threshold_bound,
    std::uint64_t bound = kFunctionSpaceBound, std::uint64_t seed = 0) {
  CheckReport report;
  const std::uint64_t choices = 1 + (threshold_bound + 1) * finite_b.size();
  std::uint64_t total = 1;
  bool exhaustive = true;
  for (std::size_t i = 0; i < finite_a.size(); ++i) {
    total *= choices;
    if (total > bound) {
      exhaustive = false;
      total = bound;
      break;
    }
  }

  auto lookup = [&finite_a](const std::vector<MonotoneSeq<B>>& seqs, const A& x)
      -> const MonotoneSeq<B>* {
    for (std::size_t i = 0; i < finite_a.size(); ++i)
      if (finite_a[i] == x) return &seqs[i];
    return nullptr;
  };

  auto check_family = [&](const std::vector<MonotoneSeq<B>>& seqs,
                          std::uint64_t code) -> bool {
    Approximant<A, B> at_infinity = [&](const A& x) -> Partial<B> {
      const MonotoneSeq<B>* seq = lookup(seqs, x);
      return seq ? lift_monotone(*seq).at_infinity : Partial<B>{};
    };
    for (std::size_t ai = 0; ai < finite_a.size(); ++ai) {
      std::vector<Partial<B>> prefix;
      prefix.reserve(threshold_bound + 3);
      for (std::uint64_t n = 0; n <= threshold_bound + 2; ++n) {
        Approximant<A, B> level = [&, n](const A& x) -> Partial<B> {
          const MonotoneSeq<B>* seq = lookup(seqs, x);
          return seq ? seq->at(n) : Partial<B>{};
        };
        prefix.push_back(f(level, finite_a[ai]));
      }
      ++report.cases;
      if (!check_continuous(prefix, f(at_infinity, finite_a[ai]))) {
        report.passed = false;
        report.witness = "family code " + std::to_string(code) +
                         ", argument #" + std::to_string(ai);
        return false;
      }
    }
    return true;
  };

  if (exhaustive) {
    for (std::uint64_t code = 0; code < total; ++code) {
      auto seqs = detail::decode_family(finite_b, code, choices, finite_a.size());
      if (!check_family(seqs, code)) return report;
    }
    return report;
  }
  std::mt19937_64 rng(seed);
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < finite_a.size(); ++i) {
    if (space > (std::uint64_t{1} << 62) / choices) {
      space = std::uint64_t{1} << 62;
      break;
    }
    space *= choices;
  }
  for (std::uint64_t round = 0; round < total; ++round) {
    std::uint64_t code = rng() % space;
    auto seqs = detail::decode_family(finite_b, code, choices, finite_a.size());
    if (!check_family(seqs, code)) return report;
  }
  return report;
}

}  // namespace lfpwhile
