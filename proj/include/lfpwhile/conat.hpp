#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lfpwhile {

// Natural numbers extended with an infinity element. finite(0) is the least
// element; infinity sits above every finite value.
class Conat {
 public:
  static Conat finite(std::uint64_t n) { return Conat(n); }
  static Conat infinity() { return Conat(std::nullopt); }

  bool is_finite() const { return n_.has_value(); }
  bool is_infinity() const { return !n_.has_value(); }

  std::uint64_t value() const {
    if (!n_) throw std::logic_error("Conat::value called on infinity");
    return *n_;
  }

  bool leq(const Conat& other) const {
    if (other.is_infinity()) return true;
    return is_finite() && *n_ <= *other.n_;
  }

  friend bool operator==(const Conat&, const Conat&) = default;

  std::string to_string() const { return n_ ? std::to_string(*n_) : "inf"; }

 private:
  explicit Conat(std::optional<std::uint64_t> n) : n_(n) {}
  std::optional<std::uint64_t> n_;
};

Conat succ_conat(const Conat& x);

// The only two shapes of directed subsets the engine ever has to name: an
// explicit nonempty finite set, or the whole of the naturals. Arbitrary
// infinite subsets are not representable.
class ConatSubset {
 public:
  static ConatSubset of(std::vector<Conat> elements) {
    ConatSubset s;
    s.elements_ = std::move(elements);
    return s;
  }
  static ConatSubset all_naturals() {
    ConatSubset s;
    s.all_ = true;
    return s;
  }

  bool is_all_naturals() const { return all_; }
  const std::vector<Conat>& elements() const {
    if (all_) throw std::logic_error("ConatSubset::elements on all-naturals");
    return elements_;
  }

 private:
  ConatSubset() = default;
  bool all_ = false;
  std::vector<Conat> elements_;
};

// Least upper bound: the maximum of a finite set, infinity for the set of all
// naturals or any set containing infinity. Empty descriptors are rejected.
Conat lub_conat(const ConatSubset& subset);

// The compact elements are exactly the finite values.
bool is_compact(const Conat& x);

}  // namespace lfpwhile
