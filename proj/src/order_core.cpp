#include "lfpwhile/order_core.hpp"

#include <algorithm>
#include <set>

namespace lfpwhile {

Conat succ_conat(const Conat& x) {
  if (x.is_infinity()) return Conat::infinity();
  return Conat::finite(x.value() + 1);
}

Conat lub_conat(const ConatSubset& subset) {
  if (subset.is_all_naturals()) return Conat::infinity();
  const auto& elems = subset.elements();
  if (elems.empty()) throw std::invalid_argument("lub_conat: empty descriptor");
  Conat best = elems.front();
  for (const auto& x : elems) {
    if (best.leq(x)) best = x;
  }
  return best;
}

bool is_compact(const Conat& x) { return x.is_finite(); }

FinitePpo::FinitePpo(std::vector<std::string> elements,
                     const std::vector<std::pair<std::string, std::string>>& leq_pairs,
                     const std::string& bottom) {
  names_ = std::move(elements);
  {
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != names_.size())
      throw std::invalid_argument("FinitePpo: duplicate element names");
  }
  if (names_.empty()) throw std::invalid_argument("FinitePpo: no elements");
  leq_.assign(names_.size() * names_.size(), 0);
  for (std::size_t i = 0; i < names_.size(); ++i) leq_[i * names_.size() + i] = 1;
  for (const auto& [lo, hi] : leq_pairs) {
    leq_[index_of(lo) * names_.size() + index_of(hi)] = 1;
  }
  bottom_ = index_of(bottom);
  validate();
}

FinitePpo FinitePpo::flat(const std::vector<std::string>& carrier,
                          const std::string& bottom_name) {
  std::vector<std::string> names{bottom_name};
  names.insert(names.end(), carrier.begin(), carrier.end());
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& a : carrier) pairs.emplace_back(bottom_name, a);
  return FinitePpo(std::move(names), pairs, bottom_name);
}

FinitePpo FinitePpo::chain(const std::vector<std::string>& increasing) {
  if (increasing.empty()) throw std::invalid_argument("FinitePpo::chain: empty");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < increasing.size(); ++i)
    for (std::size_t j = i + 1; j < increasing.size(); ++j)
      pairs.emplace_back(increasing[i], increasing[j]);
  return FinitePpo(increasing, pairs, increasing.front());
}

FinitePpo FinitePpo::from_covers(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& covers,
    const std::string& bottom) {
  FinitePpo ppo;
  ppo.names_ = std::move(elements);
  const std::size_t n = ppo.names_.size();
  if (n == 0) throw std::invalid_argument("FinitePpo: no elements");
  ppo.leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) ppo.leq_[i * n + i] = 1;
  for (const auto& [lo, hi] : covers)
    ppo.leq_[ppo.index_of(lo) * n + ppo.index_of(hi)] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (ppo.leq_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (ppo.leq_[k * n + j]) ppo.leq_[i * n + j] = 1;
  ppo.bottom_ = ppo.index_of(bottom);
  ppo.validate();
  return ppo;
}

std::size_t FinitePpo::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
    throw std::invalid_argument("FinitePpo: unknown element '" + name + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

void FinitePpo::validate() const {
  const std::size_t n = names_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq(i, i)) throw std::invalid_argument("FinitePpo: not reflexive");
    if (!leq(bottom_, i))
      throw std::invalid_argument("FinitePpo: bottom not below '" + names_[i] + "'");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq(i, j) && leq(j, i))
        throw std::invalid_argument("FinitePpo: not antisymmetric on '" +
                                    names_[i] + "', '" + names_[j] + "'");
      for (std::size_t k = 0; k < n; ++k) {
        if (leq(i, j) && leq(j, k) && !leq(i, k))
          throw std::invalid_argument("FinitePpo: not transitive via '" +
                                      names_[j] + "'");
      }
    }
  }
}

std::optional<std::size_t> FinitePpo::lub_index(
    const std::vector<std::size_t>& subset) const {
  const std::size_t n = names_.size();
  std::vector<std::size_t> uppers;
  for (std::size_t u = 0; u < n; ++u) {
    bool ok = true;
    for (std::size_t s : subset) {
      if (s >= n) throw std::invalid_argument("FinitePpo: index out of range");
      if (!leq(s, u)) {
        ok = false;
        break;
      }
    }
    if (ok) uppers.push_back(u);
  }
  for (std::size_t u : uppers) {
    bool least = true;
    for (std::size_t v : uppers) {
      if (!leq(u, v)) {
        least = false;
        break;
      }
    }
    if (least) return u;
  }
  return std::nullopt;
}

FlatDomain::FlatDomain(std::vector<std::string> carrier)
    : carrier_(std::move(carrier)) {
  std::set<std::string> seen(carrier_.begin(), carrier_.end());
  if (seen.size() != carrier_.size())
    throw std::invalid_argument("FlatDomain: duplicate carrier elements");
}

bool FlatDomain::contains(const std::string& name) const {
  return std::find(carrier_.begin(), carrier_.end(), name) != carrier_.end();
}

FinitePpo FlatDomain::to_ppo(const std::string& bottom_name) const {
  return FinitePpo::flat(carrier_, bottom_name);
}

bool is_directed(const FinitePpo& ppo, const std::vector<std::size_t>& subset) {
  if (subset.empty()) return false;
  for (std::size_t s : subset)
    if (s >= ppo.size())
      throw std::invalid_argument("is_directed: index out of range");
  for (std::size_t x : subset) {
    for (std::size_t y : subset) {
      bool found = false;
      for (std::size_t z : subset) {
        if (ppo.leq(x, z) && ppo.leq(y, z)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

bool is_directed(const FinitePpo& ppo, const std::vector<std::string>& subset) {
  std::vector<std::size_t> idx;
  idx.reserve(subset.size());
  for (const auto& name : subset) idx.push_back(ppo.index_of(name));
  return is_directed(ppo, idx);
}

std::vector<std::vector<std::string>> enumerate_directed(
    const FinitePpo& ppo, std::size_t max_elements) {
  const std::size_t n = ppo.size();
  if (n > max_elements)
    throw std::invalid_argument("enumerate_directed: " + std::to_string(n) +
                                " elements exceed bound " +
                                std::to_string(max_elements));
  std::vector<std::vector<std::string>> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) subset.push_back(i);
    if (is_directed(ppo, subset)) {
      std::vector<std::string> names;
      names.reserve(subset.size());
      for (std::size_t i : subset) names.push_back(ppo.name_of(i));
      out.push_back(std::move(names));
    }
  }
  return out;
}

FlatElem lub_flat(const FlatDomain& domain, const std::vector<FlatElem>& subset) {
  if (subset.empty())
    throw std::invalid_argument("lub_flat: empty subset is not directed");
  FlatElem value;
  for (const auto& x : subset) {
    if (!x.has_value()) continue;
    if (!domain.contains(*x))
      throw std::invalid_argument("lub_flat: '" + *x + "' not in the carrier");
    if (value.has_value() && *value != *x)
      throw std::invalid_argument(
          "lub_flat: subset with two distinct proper elements is not directed");
    value = x;
  }
  return value;
}

bool is_compact(const FinitePpo& ppo, std::size_t element,
                std::size_t max_elements) {
  const std::size_t n = ppo.size();
  if (element >= n) throw std::invalid_argument("is_compact: index out of range");
  if (n > max_elements)
    throw std::invalid_argument("is_compact: PPO exceeds enumeration bound");
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) subset.push_back(i);
    if (!is_directed(ppo, subset)) continue;
    auto lub = ppo.lub_index(subset);
    if (!lub || !ppo.leq(element, *lub)) continue;
    bool below_member = false;
    for (std::size_t t : subset) {
      if (ppo.leq(element, t)) {
        below_member = true;
        break;
      }
    }
    if (!below_member) return false;
  }
  return true;
}

namespace {

AlgebraicityReport check_algebraic_with(
    const FinitePpo& ppo, const std::function<bool(std::size_t)>& compact) {
  AlgebraicityReport report;
  for (std::size_t s = 0; s < ppo.size(); ++s) {
    std::vector<std::size_t> below;
    for (std::size_t c = 0; c < ppo.size(); ++c)
      if (compact(c) && ppo.leq(c, s)) below.push_back(c);
    ++report.elements_checked;
    if (!is_directed(ppo, below)) {
      report.algebraic = false;
      report.witness = "compacts below '" + ppo.name_of(s) + "' are not directed";
      return report;
    }
    auto lub = ppo.lub_index(below);
    if (!lub || *lub != s) {
      report.algebraic = false;
      report.witness = "lub of compacts below '" + ppo.name_of(s) +
                       "' is " + (lub ? "'" + ppo.name_of(*lub) + "'" : "missing");
      return report;
    }
  }
  return report;
}

}  // namespace

AlgebraicityReport check_algebraic(const FinitePpo& ppo) {
  return check_algebraic_with(ppo,
                              [&](std::size_t c) { return is_compact(ppo, c); });
}

AlgebraicityReport check_algebraic(const FinitePpo& ppo,
                                   const std::vector<bool>& compact_table) {
  if (compact_table.size() != ppo.size())
    throw std::invalid_argument("check_algebraic: table size mismatch");
  return check_algebraic_with(
      ppo, [&](std::size_t c) { return compact_table[c]; });
}

AlgebraicityReport check_algebraic_conat(std::uint64_t probe_depth) {
  AlgebraicityReport report;
  for (std::uint64_t n = 0; n <= probe_depth; ++n) {
    std::vector<Conat> below;
    for (std::uint64_t m = 0; m <= n; ++m) below.push_back(Conat::finite(m));
    ++report.elements_checked;
    if (lub_conat(ConatSubset::of(below)) != Conat::finite(n)) {
      report.algebraic = false;
      report.witness = "lub of compacts below " + std::to_string(n);
      return report;
    }
  }
  ++report.elements_checked;
  if (lub_conat(ConatSubset::all_naturals()) != Conat::infinity()) {
    report.algebraic = false;
    report.witness = "lub of all naturals is not infinity";
  }
  return report;
}

bool check_continuous(const std::function<Conat(Conat)>& f,
                      std::uint64_t probe) {
  if (probe < 1) throw std::invalid_argument("check_continuous: probe must be >= 1");
  Conat prev = f(Conat::finite(0));
  Conat last = prev;
  for (std::uint64_t n = 1; n <= probe; ++n) {
    Conat cur = f(Conat::finite(n));
    if (!prev.leq(cur)) return false;
    prev = cur;
    last = cur;
  }
  Conat at_inf = f(Conat::infinity());
  if (!last.leq(at_inf)) return false;
  Conat before_last = f(Conat::finite(probe - 1));
  Conat image_lub = (last.is_infinity() || !(last == before_last))
                        ? Conat::infinity()
                        : last;
  return at_inf == image_lub;
}

std::size_t Embedding::uninject(std::size_t target_index) const {
  for (std::size_t s = 0; s < inject.size(); ++s)
    if (inject[s] == target_index) return s;
  return source.bottom_index();
}

EmbeddingReport check_embedding(
    const Embedding& e, const std::optional<std::vector<bool>>& target_compacts) {
  EmbeddingReport report;
  auto fail = [&](std::string why) {
    report.valid = false;
    report.witness = std::move(why);
    return report;
  };
  if (e.inject.size() != e.source.size())
    return fail("injection map does not cover the source");
  std::vector<bool> image(e.target.size(), false);
  for (std::size_t s = 0; s < e.source.size(); ++s) {
    if (e.inject[s] >= e.target.size())
      return fail("injection out of target range");
    if (image[e.inject[s]])
      return fail("not injective at '" + e.source.name_of(s) + "'");
    image[e.inject[s]] = true;
  }
  if (e.inject[e.source.bottom_index()] != e.target.bottom_index())
    return fail("bottom is not preserved");
  for (std::size_t a = 0; a < e.source.size(); ++a)
    for (std::size_t b = 0; b < e.source.size(); ++b)
      if (e.source.leq(a, b) && !e.target.leq(e.inject[a], e.inject[b]))
        return fail("not monotonic on '" + e.source.name_of(a) + "' <= '" +
                    e.source.name_of(b) + "'");
  for (std::size_t t = 0; t < e.target.size(); ++t) {
    bool compact =
        target_compacts ? (*target_compacts)[t] : is_compact(e.target, t);
    if (compact != image[t])
      return fail("image does not match the compacts at '" +
                  e.target.name_of(t) + "'");
  }
  for (std::size_t s = 0; s < e.source.size(); ++s)
    if (e.uninject(e.inject[s]) != s)
      return fail("uninject does not invert at '" + e.source.name_of(s) + "'");
  for (std::size_t t = 0; t < e.target.size(); ++t)
    if (!image[t] && e.uninject(t) != e.source.bottom_index())
      return fail("uninject off the image is not bottom");
  return report;
}

}  // namespace lfpwhile
