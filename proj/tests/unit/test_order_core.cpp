#include <doctest.h>

#include <algorithm>
#include <set>

#include "lfpwhile/order_core.hpp"

using namespace lfpwhile;

namespace {

std::set<std::set<std::string>> as_sets(
    std::vector<std::vector<std::string>> subsets) {
  std::set<std::set<std::string>> out;
  for (auto& subset : subsets)
    out.insert(std::set<std::string>(subset.begin(), subset.end()));
  return out;
}

}  // namespace

TEST_CASE("conat order and successor") {
  CHECK(Conat::finite(3).leq(Conat::finite(5)));
  CHECK_FALSE(Conat::finite(5).leq(Conat::finite(3)));
  CHECK(Conat::finite(5).leq(Conat::infinity()));
  CHECK_FALSE(Conat::infinity().leq(Conat::finite(5)));
  CHECK(Conat::infinity().leq(Conat::infinity()));

  CHECK(succ_conat(Conat::finite(3)) == Conat::finite(4));
  CHECK(succ_conat(Conat::finite(0)) == Conat::finite(1));
  CHECK(succ_conat(Conat::infinity()) == Conat::infinity());
}

TEST_CASE("lub_conat") {
  CHECK(lub_conat(ConatSubset::of({Conat::finite(1), Conat::finite(5)})) ==
        Conat::finite(5));
  CHECK(lub_conat(ConatSubset::all_naturals()) == Conat::infinity());
  CHECK(lub_conat(ConatSubset::of({Conat::infinity()})) == Conat::infinity());
  CHECK(lub_conat(ConatSubset::of({Conat::finite(2), Conat::infinity()})) ==
        Conat::infinity());
  CHECK_THROWS_AS(lub_conat(ConatSubset::of({})), std::invalid_argument);

  SUBCASE("idempotent under duplicates, monotone under inclusion") {
    std::vector<Conat> base{Conat::finite(1), Conat::finite(4), Conat::finite(2)};
    auto doubled = base;
    doubled.insert(doubled.end(), base.begin(), base.end());
    CHECK(lub_conat(ConatSubset::of(base)) == lub_conat(ConatSubset::of(doubled)));
    auto bigger = base;
    bigger.push_back(Conat::finite(9));
    CHECK(lub_conat(ConatSubset::of(base)).leq(lub_conat(ConatSubset::of(bigger))));
  }
}

TEST_CASE("is_directed on flat domains") {
  auto ppo = FinitePpo::flat({"a", "b"});
  CHECK(is_directed(ppo, std::vector<std::string>{"bot", "a"}));
  CHECK_FALSE(is_directed(ppo, std::vector<std::string>{"a", "b"}));
  CHECK_FALSE(is_directed(ppo, std::vector<std::string>{}));
  CHECK(is_directed(ppo, std::vector<std::string>{"a"}));
  CHECK_THROWS_AS(is_directed(ppo, std::vector<std::string>{"zap"}),
                  std::invalid_argument);
}

TEST_CASE("enumerate_directed") {
  SUBCASE("flat over one element") {
    auto subsets = as_sets(enumerate_directed(FinitePpo::flat({"a"})));
    std::set<std::set<std::string>> expected{
        {"bot"}, {"a"}, {"bot", "a"}};
    CHECK(subsets == expected);
  }

  SUBCASE("chain: every nonempty subset, against a brute-force oracle") {
    auto chain = FinitePpo::chain({"0", "1", "2"});
    // Oracle: directedness spelled out from scratch over all 7 subsets.
    std::set<std::set<std::string>> expected;
    std::vector<std::string> names{"0", "1", "2"};
    for (std::size_t mask = 1; mask < 8; ++mask) {
      std::vector<std::size_t> subset;
      for (std::size_t i = 0; i < 3; ++i)
        if (mask & (1u << i)) subset.push_back(i);
      bool directed = !subset.empty();
      for (std::size_t x : subset)
        for (std::size_t y : subset) {
          bool has_upper = false;
          for (std::size_t z : subset) has_upper = has_upper || (x <= z && y <= z);
          directed = directed && has_upper;
        }
      if (directed) {
        std::set<std::string> s;
        for (std::size_t i : subset) s.insert(names[i]);
        expected.insert(s);
      }
    }
    CHECK(expected.size() == 7);
    CHECK(as_sets(enumerate_directed(chain)) == expected);
  }

  SUBCASE("flat over the empty carrier") {
    auto subsets = as_sets(enumerate_directed(FinitePpo::flat({})));
    CHECK(subsets == std::set<std::set<std::string>>{{"bot"}});
  }

  SUBCASE("refuses oversized orders") {
    std::vector<std::string> big;
    for (int i = 0; i < 13; ++i) big.push_back("e" + std::to_string(i));
    CHECK_THROWS_AS(enumerate_directed(FinitePpo::flat(big)),
                    std::invalid_argument);
  }
}

TEST_CASE("lub_flat") {
  FlatDomain domain({"a", "b"});
  CHECK(lub_flat(domain, {std::nullopt}) == FlatElem{});
  CHECK(lub_flat(domain, {std::nullopt, FlatElem{"a"}}) == FlatElem{"a"});
  CHECK(lub_flat(domain, {FlatElem{"a"}}) == FlatElem{"a"});
  CHECK_THROWS_AS(lub_flat(domain, {FlatElem{"a"}, FlatElem{"b"}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(lub_flat(domain, {}), std::invalid_argument);
  CHECK_THROWS_AS(lub_flat(domain, {FlatElem{"zap"}}), std::invalid_argument);
}

TEST_CASE("compactness") {
  CHECK(is_compact(Conat::finite(3)));
  CHECK(is_compact(Conat::finite(0)));
  CHECK_FALSE(is_compact(Conat::infinity()));

  auto flat = FinitePpo::flat({"a", "b"});
  for (std::size_t i = 0; i < flat.size(); ++i) CHECK(is_compact(flat, i));
}

TEST_CASE("check_algebraic") {
  CHECK(check_algebraic(FinitePpo::flat({"a", "b"})).algebraic);
  CHECK(check_algebraic_conat(10).algebraic);

  SUBCASE("doctored diamond fails, and the oracle agrees it should") {
    auto diamond = FinitePpo::from_covers(
        {"bot", "a", "b", "top"},
        {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}}, "bot");
    CHECK(check_algebraic(diamond).algebraic);

    // With the top declared non-compact, the compacts below it are
    // {bot, a, b}; brute force shows no member bounds both a and b.
    std::vector<std::size_t> below{diamond.index_of("bot"),
                                   diamond.index_of("a"),
                                   diamond.index_of("b")};
    bool directed = true;
    for (std::size_t x : below)
      for (std::size_t y : below) {
        bool has_upper = false;
        for (std::size_t z : below)
          has_upper = has_upper || (diamond.leq(x, z) && diamond.leq(y, z));
        directed = directed && has_upper;
      }
    CHECK_FALSE(directed);

    auto report = check_algebraic(diamond, {true, true, true, false});
    CHECK_FALSE(report.algebraic);
    CHECK(report.witness.find("top") != std::string::npos);
  }
}

TEST_CASE("monotone sequences and their continuous extensions") {
  auto never = MonotoneSeq<std::string>::never_defined();
  CHECK(lift_monotone(never).at_infinity == Partial<std::string>{});

  SUBCASE("threshold sequence, infinity value from the flat lub") {
    auto seq = MonotoneSeq<std::string>::threshold(2, "b");
    auto lifted = lift_monotone(seq);
    CHECK(lifted.at(Conat::finite(1)) == Partial<std::string>{});
    CHECK(lifted.at(Conat::finite(5)) == Partial<std::string>{"b"});

    FlatDomain domain({"b"});
    std::vector<FlatElem> image;
    for (std::uint64_t n = 0; n <= 5; ++n) image.push_back(seq.at(n));
    CHECK(lifted.at(Conat::infinity()) == lub_flat(domain, image));
  }

  CHECK(lift_monotone(MonotoneSeq<int>::threshold(0, 7)).at(Conat::finite(0)) ==
        Partial<int>{7});
  CHECK(lift_monotone(MonotoneSeq<int>::threshold(0, 7)).at(Conat::infinity()) ==
        Partial<int>{7});
}

TEST_CASE("check_continuous") {
  SUBCASE("lifted sequences pass") {
    CHECK(check_continuous(lift_monotone(MonotoneSeq<int>::threshold(2, 9)), 5));
    CHECK(check_continuous(lift_monotone(MonotoneSeq<int>::never_defined()), 5));
  }
  SUBCASE("bottom prefix with a defined infinity fails") {
    std::vector<Partial<int>> prefix(6, std::nullopt);
    CHECK_FALSE(check_continuous(prefix, Partial<int>{3}));
  }
  SUBCASE("non-monotone table fails") {
    std::vector<Partial<int>> prefix{std::nullopt, Partial<int>{3},
                                     std::nullopt};
    CHECK_FALSE(check_continuous(prefix, Partial<int>{3}));
  }
  SUBCASE("successor on conat passes at every probe") {
    for (std::uint64_t probe = 1; probe <= 16; ++probe)
      CHECK(check_continuous([](Conat x) { return succ_conat(x); }, probe));
  }
  SUBCASE("conat functions that break continuity at infinity fail") {
    auto jump = [](Conat x) {
      return x.is_infinity() ? Conat::infinity() : Conat::finite(0);
    };
    CHECK_FALSE(check_continuous(jump, 8));
  }
}

TEST_CASE("canonical form: monotone stabilizing tables match exactly one sequence") {
  // Every monotone g : {0..N} -> flat(B) that stabilizes within N restricts
  // exactly one monotone sequence, checked by exhaustion for |B| <= 3, N <= 6.
  const std::vector<int> values{10, 20, 30};
  const std::uint64_t probe = 6;
  for (std::size_t bsize = 1; bsize <= 3; ++bsize) {
    std::uint64_t tables = 1;
    for (std::uint64_t i = 0; i <= probe; ++i) tables *= (bsize + 1);
    for (std::uint64_t code = 0; code < tables; ++code) {
      std::vector<Partial<int>> table;
      std::uint64_t c = code;
      for (std::uint64_t i = 0; i <= probe; ++i) {
        std::uint64_t digit = c % (bsize + 1);
        c /= (bsize + 1);
        table.push_back(digit == 0 ? Partial<int>{}
                                   : Partial<int>{values[digit - 1]});
      }
      bool monotone = true;
      for (std::uint64_t i = 0; i + 1 <= probe; ++i)
        monotone = monotone && flat_leq(table[i], table[i + 1]);
      // Stabilized means any defined value appears strictly inside the probe,
      // which the flat order forces as soon as one entry is defined.
      if (!monotone) continue;

      std::vector<MonotoneSeq<int>> matches;
      std::vector<MonotoneSeq<int>> candidates{MonotoneSeq<int>::never_defined()};
      for (std::uint64_t k = 0; k <= probe; ++k)
        for (std::size_t j = 0; j < bsize; ++j)
          candidates.push_back(MonotoneSeq<int>::threshold(k, values[j]));
      for (const auto& seq : candidates) {
        bool agrees = true;
        for (std::uint64_t i = 0; i <= probe; ++i)
          agrees = agrees && seq.at(i) == table[i];
        if (agrees) matches.push_back(seq);
      }
      CHECK(matches.size() == 1);
    }
  }
}

TEST_CASE("lifting uniqueness by exhausting candidate infinity values") {
  const std::vector<int> values{1, 2, 3};
  for (std::size_t bsize = 1; bsize <= 3; ++bsize) {
    std::vector<MonotoneSeq<int>> seqs{MonotoneSeq<int>::never_defined()};
    for (std::uint64_t k = 0; k <= 6; ++k)
      for (std::size_t j = 0; j < bsize; ++j)
        seqs.push_back(MonotoneSeq<int>::threshold(k, values[j]));
    for (const auto& seq : seqs) {
      auto lifted = lift_monotone(seq);
      std::vector<Partial<int>> candidates{std::nullopt};
      for (std::size_t j = 0; j < bsize; ++j)
        candidates.push_back(Partial<int>{values[j]});
      for (const auto& cand : candidates) {
        ContinuousExt<int> ext{seq, cand};
        CHECK(check_continuous(ext, 8) == (ext == lifted));
      }
    }
  }
}

TEST_CASE("finite PPO validation") {
  CHECK_THROWS_AS(FinitePpo({"a", "a"}, {}, "a"), std::invalid_argument);
  CHECK_THROWS_AS(FinitePpo({"a", "b"}, {}, "a"), std::invalid_argument);
  CHECK_THROWS_AS(
      FinitePpo({"a", "b"}, {{"a", "b"}, {"b", "a"}}, "a"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      FinitePpo({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}, "b"),
      std::invalid_argument);
  CHECK_THROWS_AS(FinitePpo({"a"}, {}, "zap"), std::invalid_argument);
  // Transitivity is checked, not silently completed.
  CHECK_THROWS_AS(FinitePpo({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, "a"),
                  std::invalid_argument);
  CHECK(FinitePpo::from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, "a")
            .leq(0, 2));
}

TEST_CASE("embeddings") {
  auto flat = FinitePpo::flat({"a", "b"});
  Embedding identity{flat, flat, {0, 1, 2}};
  CHECK(check_embedding(identity).valid);
  CHECK(identity.uninject(1) == 1);

  auto nats = FinitePpo::chain({"0", "1", "2"});
  auto conats = FinitePpo::chain({"0", "1", "2", "inf"});
  Embedding inclusion{nats, conats, {0, 1, 2}};
  std::vector<bool> conat_compacts{true, true, true, false};
  CHECK(check_embedding(inclusion, conat_compacts).valid);
  // Off the image the inverse is the source bottom.
  CHECK(inclusion.uninject(3) == nats.bottom_index());

  SUBCASE("violations are reported") {
    Embedding not_monotone{nats, conats, {1, 0, 2}};
    CHECK_FALSE(check_embedding(not_monotone, conat_compacts).valid);
    Embedding wrong_bottom{nats, conats, {1, 2, 0}};
    CHECK_FALSE(check_embedding(wrong_bottom, conat_compacts).valid);
    Embedding misses_compact{nats, conats, {0, 1, 3}};
    CHECK_FALSE(check_embedding(misses_compact, conat_compacts).valid);
    Embedding not_injective{nats, conats, {0, 1, 1}};
    CHECK_FALSE(check_embedding(not_injective, conat_compacts).valid);
  }
}
