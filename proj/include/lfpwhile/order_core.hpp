#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lfpwhile/conat.hpp"
#include "lfpwhile/partial.hpp"

namespace lfpwhile {

// Exhaustive subset enumeration refuses to run above this many elements
// (4096 subsets).
inline constexpr std::size_t kEnumerationBound = 12;

// A finite pointed partial order over named elements. The order is stored as
// an explicit relation and validated at construction: reflexive (implied
// pairs are added), transitive, antisymmetric, with the bottom below every
// element.
class FinitePpo {
 public:
  FinitePpo(std::vector<std::string> elements,
            const std::vector<std::pair<std::string, std::string>>& leq_pairs,
            const std::string& bottom);

  // Carrier plus an implicit bottom named `bottom_name`.
  static FinitePpo flat(const std::vector<std::string>& carrier,
                        const std::string& bottom_name = "bot");
  // Total order following the given element sequence.
  static FinitePpo chain(const std::vector<std::string>& increasing);
  // Reflexive-transitive closure of the given cover pairs.
  static FinitePpo from_covers(
      std::vector<std::string> elements,
      const std::vector<std::pair<std::string, std::string>>& covers,
      const std::string& bottom);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& elements() const { return names_; }
  const std::string& name_of(std::size_t i) const { return names_.at(i); }
  std::size_t index_of(const std::string& name) const;
  std::size_t bottom_index() const { return bottom_; }

  bool leq(std::size_t a, std::size_t b) const {
    return leq_[a * names_.size() + b] != 0;
  }

  // Least upper bound of a subset (indices), if one exists.
  std::optional<std::size_t> lub_index(
      const std::vector<std::size_t>& subset) const;

 private:
  FinitePpo() = default;
  void validate() const;

  std::vector<std::string> names_;
  std::vector<char> leq_;
  std::size_t bottom_ = 0;
};

// A set lifted with an implicit bottom; distinct carrier elements are
// incomparable.
class FlatDomain {
 public:
  explicit FlatDomain(std::vector<std::string> carrier);

  const std::vector<std::string>& carrier() const { return carrier_; }
  bool contains(const std::string& name) const;
  FinitePpo to_ppo(const std::string& bottom_name = "bot") const;

 private:
  std::vector<std::string> carrier_;
};

// Element of a flat domain: disengaged = the implicit bottom.
using FlatElem = Partial<std::string>;

// Nonempty, and every pair of members has an upper bound inside the subset.
bool is_directed(const FinitePpo& ppo, const std::vector<std::size_t>& subset);
bool is_directed(const FinitePpo& ppo, const std::vector<std::string>& subset);

// All directed subsets, in subset-mask order. Refuses PPOs larger than
// `max_elements`.
std::vector<std::vector<std::string>> enumerate_directed(
    const FinitePpo& ppo, std::size_t max_elements = kEnumerationBound);

// Least upper bound in a flat domain. The subset must be directed there:
// nonempty and naming at most one distinct carrier element.
FlatElem lub_flat(const FlatDomain& domain, const std::vector<FlatElem>& subset);

// Compactness of an element of a finite PPO, decided by enumerating every
// directed subset that has a lub.
bool is_compact(const FinitePpo& ppo, std::size_t element,
                std::size_t max_elements = kEnumerationBound);

struct AlgebraicityReport {
  bool algebraic = true;
  std::uint64_t elements_checked = 0;
  std::string witness;
};

// For each element s: the compacts below s form a directed set whose lub is
// s. The second overload takes an explicit compactness table instead of
// computing one, so tests can probe doctored structures.
AlgebraicityReport check_algebraic(const FinitePpo& ppo);
AlgebraicityReport check_algebraic(const FinitePpo& ppo,
                                   const std::vector<bool>& compact_table);
// Same check against conat, probing finite elements up to `probe_depth`; the
// compacts below infinity are the all-naturals descriptor.
AlgebraicityReport check_algebraic_conat(std::uint64_t probe_depth);

// Canonical form of a monotone function from naturals into a flat domain:
// bottom strictly below a threshold, one fixed value from it onward (or
// bottom everywhere).
template <typename B>
class MonotoneSeq {
 public:
  static MonotoneSeq never_defined() { return MonotoneSeq(); }
  static MonotoneSeq threshold(std::uint64_t index, B value) {
    MonotoneSeq s;
    s.t_.emplace(index, std::move(value));
    return s;
  }

  bool is_never_defined() const { return !t_.has_value(); }
  std::uint64_t threshold_index() const {
    if (!t_) throw std::logic_error("MonotoneSeq: never defined");
    return t_->first;
  }
  const B& threshold_value() const {
    if (!t_) throw std::logic_error("MonotoneSeq: never defined");
    return t_->second;
  }

  Partial<B> at(std::uint64_t n) const {
    if (!t_ || n < t_->first) return std::nullopt;
    return t_->second;
  }

  friend bool operator==(const MonotoneSeq&, const MonotoneSeq&) = default;

 private:
  MonotoneSeq() = default;
  std::optional<std::pair<std::uint64_t, B>> t_;
};

// A function on conat: a monotone finite part plus its value at infinity.
template <typename B>
struct ContinuousExt {
  MonotoneSeq<B> on_finite;
  Partial<B> at_infinity;

  Partial<B> at(const Conat& x) const {
    return x.is_finite() ? on_finite.at(x.value()) : at_infinity;
  }

  friend bool operator==(const ContinuousExt&, const ContinuousExt&) = default;
};

// The unique continuous extension of a monotone sequence: agree on the
// naturals, take the lub of the image at infinity.
template <typename B>
ContinuousExt<B> lift_monotone(const MonotoneSeq<B>& seq) {
  ContinuousExt<B> out{seq, std::nullopt};
  if (!seq.is_never_defined()) out.at_infinity = seq.threshold_value();
  return out;
}

// Continuity of a conat -> flat function given its finite prefix f(0..N) and
// the value at infinity: the prefix must be monotone and the infinity value
// must equal the lub of the prefix image. Exact for functions whose finite
// part stabilizes within the prefix, which the flat codomain forces at the
// threshold.
template <typename B>
bool check_continuous(const std::vector<Partial<B>>& finite_prefix,
                      const Partial<B>& at_infinity) {
  Partial<B> lub;
  for (std::size_t i = 0; i < finite_prefix.size(); ++i) {
    if (i + 1 < finite_prefix.size() &&
        !flat_leq(finite_prefix[i], finite_prefix[i + 1])) {
      return false;
    }
    if (finite_prefix[i].has_value()) lub = finite_prefix[i];
  }
  return at_infinity == lub;
}

template <typename B>
bool check_continuous(const ContinuousExt<B>& f, std::uint64_t probe) {
  std::vector<Partial<B>> prefix;
  prefix.reserve(probe + 1);
  for (std::uint64_t n = 0; n <= probe; ++n) prefix.push_back(f.on_finite.at(n));
  return check_continuous(prefix, f.at_infinity);
}

// Continuity of a conat -> conat function, probed on {0..N, infinity}. The
// lub of the image of the naturals is judged from the prefix: a function
// still growing at the probe edge is taken to be unbounded.
bool check_continuous(const std::function<Conat(Conat)>& f,
                      std::uint64_t probe);

// An injection of a finite PPO onto the compacts of a (finite stand-in for
// a) CPO. `uninject` inverts it on the image and is bottom elsewhere.
struct Embedding {
  FinitePpo source;
  FinitePpo target;
  std::vector<std::size_t> inject;

  std::size_t uninject(std::size_t target_index) const;
};

struct EmbeddingReport {
  bool valid = true;
  std::string witness;
};

// Checks that `inject` is injective, bottom-preserving, monotonic, and maps
// the source exactly onto the target's compacts; also that uninject composes
// to the identity on the source and is bottom off the image. A compactness
// table may be supplied for negative controls.
EmbeddingReport check_embedding(
    const Embedding& e,
    const std::optional<std::vector<bool>>& target_compacts = std::nullopt);

}  // namespace lfpwhile
