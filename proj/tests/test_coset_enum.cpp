#include <set>

#include <gtest/gtest.h>

#include "chiforge/catalog.hpp"
#include "chiforge/coset_enum.hpp"
#include "chiforge/error.hpp"
#include "oracle.hpp"

using namespace chiforge;

namespace {
  Presentation pres(char const* text) {
    return parse_presentation(text);
  }
}  // namespace

TEST(Enumerate, CyclicOfOrderTwo) {
  auto t = enumerate(pres("gens: a\nrels: a^2"), {}, 100, Strategy::hlt);
  EXPECT_TRUE(t.complete());
  EXPECT_EQ(t.live_count(), 2u);
}

TEST(Enumerate, S3AndSubgroupIndex) {
  auto s3 = catalog_lookup("S3");
  EXPECT_EQ(enumerate(s3, {}, 100, Strategy::hlt).live_count(), 6u);
  std::vector<Word> h{Word{1}};
  auto              t = enumerate(s3, h, 100, Strategy::hlt);
  EXPECT_TRUE(t.complete());
  EXPECT_FALSE(t.trivial_subgroup());
  EXPECT_EQ(t.live_count(), 3u);
  EXPECT_EQ(enumerate(s3, h, 100, Strategy::felsch).live_count(), 3u);
}

TEST(Enumerate, Overflow) {
  EXPECT_THROW(enumerate(catalog_lookup("S3"), {}, 2), CosetOverflow);
  EXPECT_THROW(enumerate(pres("gens: a b\nrels: a^2 b^3"), {}, 500), CosetOverflow);
  try {
    enumerate(catalog_lookup("S3"), {}, 2);
  } catch (CosetOverflow const& e) {
    EXPECT_EQ(e.limit(), 2u);
    EXPECT_NE(std::string(e.what()).find("--max-cosets"), std::string::npos);
  }
}

TEST(Enumerate, TrivialGroup) {
  auto t = enumerate(pres("gens: a b\nrels: a b (a b^2)"), {});
  EXPECT_EQ(t.live_count(), 1u);
}

// Each catalog group agrees with the order of an independent permutation
// model that satisfies its relators, for both strategies.
TEST(Enumerate, CatalogMatchesModels) {
  for (auto const& e : catalog()) {
    auto const& m = oracle::models().at(std::string(e.name));
    auto        p = catalog_lookup(e.name);
    std::vector<oracle::Perm> gens;
    for (auto const& g : m.gens) {
      gens.push_back(oracle::raw(g));
    }
    for (auto const& r : p.relators) {
      EXPECT_EQ(oracle::eval(r, gens, m.degree), oracle::identity(m.degree)) << e.name;
    }
    auto model_order = oracle::closure(gens, m.degree).size();
    EXPECT_EQ(model_order, e.order) << e.name;
    for (auto s : {Strategy::hlt, Strategy::felsch}) {
      auto t = enumerate(p, {}, default_max_cosets, s);
      EXPECT_TRUE(t.complete());
      EXPECT_EQ(t.live_count(), e.order) << e.name;
    }
  }
}

TEST(Enumerate, CompactionUnderTightLimit) {
  // Enough room for the final table but not for every coset ever defined.
  auto p = catalog_lookup("A4");
  auto t = enumerate(p, {}, 40, Strategy::hlt);
  EXPECT_EQ(t.live_count(), 12u);
  EXPECT_EQ(enumerate(p, {}, 40, Strategy::felsch).live_count(), 12u);
}

TEST(TraceWord, Examples) {
  auto t = enumerate(pres("gens: a\nrels: a^2"), {});
  EXPECT_EQ(trace_word(t, 2, Word{}), 2u);
  EXPECT_EQ(trace_word(t, 1, Word{1}), 2u);
  EXPECT_EQ(trace_word(t, 1, Word{1, 1}), 1u);
}

TEST(TraceWord, RelatorsTraceHomeEverywhere) {
  auto p = catalog_lookup("Q8");
  auto t = enumerate(p, {});
  for (std::uint32_t c = 1; c <= t.live_count(); ++c) {
    for (auto const& r : p.relators) {
      EXPECT_EQ(trace_word(t, c, r), c);
    }
  }
}

TEST(RegularRepresentation, Examples) {
  auto c2 = regular_representation(enumerate(pres("gens: a\nrels: a^2"), {}));
  ASSERT_EQ(c2.size(), 1u);
  EXPECT_EQ(c2[0], Permutation::from_cycles(2, {{1, 2}}));

  auto triv = regular_representation(enumerate(pres("gens: a\nrels: a"), {}));
  ASSERT_EQ(triv.size(), 1u);
  EXPECT_EQ(triv[0].degree(), 1u);
  EXPECT_TRUE(triv[0].is_identity());

  auto s3   = catalog_lookup("S3");
  auto gens = regular_representation(enumerate(s3, {}));
  ASSERT_EQ(gens.size(), 2u);
  std::vector<oracle::Perm> raw{oracle::raw(gens[0]), oracle::raw(gens[1])};
  for (auto const& r : s3.relators) {
    EXPECT_EQ(oracle::eval(r, raw, 6), oracle::identity(6));
  }
  EXPECT_EQ(oracle::closure(raw, 6).size(), 6u);
}

TEST(RegularRepresentation, RejectsNonTrivialSubgroup) {
  std::vector<Word> h{Word{1}};
  auto              t = enumerate(catalog_lookup("S3"), h);
  EXPECT_THROW(regular_representation(t), ContractViolation);
}

TEST(CosetTable, HandBuiltCompleteness) {
  // C2 = <a | a^2>: coset 1 -a-> 2 -a-> 1.
  std::vector<Word> rels{Word{1, 1}};
  CosetTable        ok(1, {{2, 2}, {1, 1}}, rels, true);
  EXPECT_TRUE(ok.complete());
  EXPECT_EQ(ok.live_count(), 2u);
  EXPECT_EQ(regular_representation(ok)[0], Permutation::from_cycles(2, {{1, 2}}));

  CosetTable partial(1, {{2, 0}, {0, 1}}, rels, true);
  EXPECT_FALSE(partial.complete());
  EXPECT_EQ(trace_word(partial, 2, Word{1}), 0u);
  EXPECT_THROW(regular_representation(partial), ContractViolation);
  EXPECT_THROW(schreier_words(partial), ContractViolation);
}

TEST(SchreierWords, Examples) {
  auto c2 = schreier_words(enumerate(pres("gens: a\nrels: a^2"), {}));
  ASSERT_EQ(c2.size(), 2u);
  EXPECT_EQ(c2[0], Word{});
  EXPECT_EQ(c2[1], (Word{1}));

  auto c4 = schreier_words(enumerate(pres("gens: a\nrels: a^4"), {}));
  std::set<Word> expected{Word{}, Word{1}, Word{1, 1}, Word{-1}};
  EXPECT_EQ(std::set<Word>(c4.begin(), c4.end()), expected);
}

TEST(SchreierWords, TraceToDistinctCosets) {
  for (auto const& e : catalog()) {
    auto t     = enumerate(catalog_lookup(e.name), {});
    auto words = schreier_words(t);
    ASSERT_EQ(words.size(), t.live_count());
    for (std::uint32_t c = 1; c <= t.live_count(); ++c) {
      EXPECT_EQ(trace_word(t, 1, words[c - 1]), c) << e.name;
    }
  }
}
