#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "chiforge/catalog.hpp"
#include "chiforge/chi_nu.hpp"
#include "chiforge/error.hpp"
#include "chiforge/perm_group.hpp"
#include "oracle.hpp"

using namespace chiforge;

namespace {
  using P = Permutation;

  std::vector<oracle::Perm> raw(std::vector<P> const& v) {
    std::vector<oracle::Perm> out;
    for (auto const& p : v) {
      out.push_back(oracle::raw(p));
    }
    return out;
  }

  bool relators_hold(Presentation const& p, std::vector<P> const& images, std::size_t degree) {
    auto gens = raw(images);
    return std::all_of(p.relators.begin(), p.relators.end(), [&](Word const& r) {
      return oracle::eval(r, gens, degree) == oracle::identity(degree);
    });
  }

  // Product of two permutations acting on disjoint blocks of size n.
  P pair(P const& x, P const& y, std::size_t n) {
    std::vector<Point> v(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      v[i]     = x(static_cast<Point>(i));
      v[n + i] = static_cast<Point>(n + y(static_cast<Point>(i)));
    }
    return P(std::move(v));
  }
}  // namespace

TEST(BuildChi, C2) {
  auto base = catalog_lookup("C2");
  auto d    = build_chi(base, element_words_of(base));
  EXPECT_EQ(d.kind, DoubleKind::chi);
  EXPECT_EQ(d.doubled.gen_names, (std::vector<std::string>{"a", "a_f"}));
  std::vector<Word> expected{Word{1, 1}, Word{2, 2}, Word{-1, -2, 1, 2}};
  EXPECT_EQ(d.doubled.relators, expected);
  EXPECT_EQ(enumerate(d.doubled, {}).live_count(), 4u);
}

TEST(BuildChi, C3IsAbelianOfOrderNine) {
  auto base = catalog_lookup("C3");
  auto t    = enumerate(build_chi(base, element_words_of(base)).doubled, {});
  EXPECT_EQ(t.live_count(), 9u);
  auto gens = regular_representation(t);
  EXPECT_TRUE(PermGroup(9, gens).is_abelian());
}

TEST(BuildChi, RelatorCountAndOrdersMatchOracle) {
  for (auto const& e : catalog()) {
    auto base  = catalog_lookup(e.name);
    auto words = element_words_of(base);
    auto d     = build_chi(base, words);
    d.doubled.validate();
    EXPECT_EQ(d.doubled.relators.size(), 2 * base.relators.size() + e.order - 1) << e.name;
    EXPECT_EQ(enumerate(d.doubled, {}).live_count(), oracle::chi_orders().at(std::string(e.name)))
        << e.name;
  }
}

TEST(BuildChi, PhiSwapPreservesRelators) {
  for (auto const& e : catalog()) {
    auto              base = catalog_lookup(e.name);
    auto              d    = build_chi(base, element_words_of(base));
    auto const        r    = base.rank;
    std::vector<Word> swap = shift_map(r, r);
    for (std::size_t i = 1; i <= r; ++i) {
      swap.push_back(Word::generator(i));
    }
    std::set<Word> rels(d.doubled.relators.begin(), d.doubled.relators.end());
    for (auto const& rel : d.doubled.relators) {
      auto s = remap(rel, swap);
      EXPECT_TRUE(rels.count(s) || rels.count(invert(s))) << e.name;
    }
  }
}

// g -> g and g^phi -> g, and g -> (g, 1), g^phi -> (1, g), kill every relator.
TEST(BuildChi, QuotientMapsVerify) {
  for (auto const& e : catalog()) {
    auto const& m    = oracle::models().at(std::string(e.name));
    auto        base = catalog_lookup(e.name);
    auto        d    = build_chi(base, element_words_of(base));
    std::vector<P> fold(m.gens);
    fold.insert(fold.end(), m.gens.begin(), m.gens.end());
    auto h = verified_hom(d.doubled, fold, m.degree);
    EXPECT_TRUE(h.verified) << e.name;
    EXPECT_EQ(h.image.order(), e.order);

    std::vector<P> split;
    P const        id(m.degree);
    for (auto const& g : m.gens) {
      split.push_back(pair(g, id, m.degree));
    }
    for (auto const& g : m.gens) {
      split.push_back(pair(id, g, m.degree));
    }
    auto h2 = verified_hom(d.doubled, split, 2 * m.degree);
    EXPECT_TRUE(h2.verified) << e.name;
    EXPECT_EQ(h2.image.order(), e.order * e.order);
  }
}

TEST(BuildChi, C2xC2NeedsElementLevelRelators) {
  auto base  = catalog_lookup("C2xC2");
  auto words = element_words_of(base);
  auto d     = build_chi(base, words);
  // The element a*b gives [ab, (ab)^phi].
  Word ab{1, 2};
  EXPECT_NE(std::find(d.doubled.relators.begin(), d.doubled.relators.end(),
                      commutator(ab, phi(ab, 2))),
            d.doubled.relators.end());

  // With [x, x^phi] for generators only, a -> (s,1), b -> (1,s),
  // a^phi -> (1,t), b^phi -> (t,1) respects every relator for reflections
  // s, t of any dihedral group, so the group has quotients of every order
  // 4m^2 and is infinite.
  auto gen_level = build_chi_generator_level(base, words);
  for (std::size_t m = 3; m <= 6; ++m) {
    std::vector<Point> sv(m), tv(m);
    for (std::size_t i = 0; i < m; ++i) {
      sv[i] = static_cast<Point>((m - i) % m);
      tv[i] = static_cast<Point>((m + 1 - i) % m);
    }
    P s(sv), t(tv), id(m);
    std::vector<P> images{pair(s, id, m), pair(id, s, m), pair(id, t, m), pair(t, id, m)};
    ASSERT_TRUE(relators_hold(gen_level.doubled, images, 2 * m));
    EXPECT_EQ(oracle::closure(images, 2 * m).size(), 4 * m * m);
  }
  EXPECT_THROW(enumerate(gen_level.doubled, {}, 20000), CosetOverflow);
  EXPECT_EQ(enumerate(d.doubled, {}).live_count(), 32u);
}

TEST(BuildChi, RejectsIncompleteElementMap) {
  auto base  = catalog_lookup("S3");
  auto words = element_words_of(base);
  auto short_map = std::vector<Word>(words.begin(), words.end() - 1);
  EXPECT_THROW(build_chi(base, short_map), ContractViolation);
  auto repeated = words;
  repeated.back() = repeated.front();
  EXPECT_THROW(build_chi(base, repeated), ContractViolation);
  EXPECT_THROW(build_nu(base, short_map, NuScope::elements), ContractViolation);
}

TEST(BuildChi, RendersWithSuffixedNames) {
  auto base = catalog_lookup("S3");
  auto d    = build_chi(base, element_words_of(base));
  auto text = render_presentation(d.doubled);
  EXPECT_NE(text.find("gens: a b a_f b_f"), std::string::npos);
  auto back = parse_presentation(text);
  EXPECT_EQ(back.relators, d.doubled.relators);
}

TEST(BuildNu, C2RelatorCount) {
  auto base = catalog_lookup("C2");
  auto d    = build_nu(base, element_words_of(base), NuScope::elements);
  EXPECT_EQ(d.kind, DoubleKind::nu);
  EXPECT_LE(d.doubled.relators.size(), 2u + 16u);
}

// nu(C2) is dihedral of order 8: a -> (1 2)(3 4), a^phi -> (2 4) satisfies
// every relator and generates 8 elements, matching the enumeration, so the
// model is faithful. [a, a^phi] = (a a^phi)^2 then has order 2.
TEST(BuildNu, C2ModelAndCommutatorOrder) {
  auto base = catalog_lookup("C2");
  auto d    = build_nu(base, element_words_of(base), NuScope::elements);
  std::vector<P> model{P::from_cycles(4, {{1, 2}, {3, 4}}), P::from_cycles(4, {{2, 4}})};
  ASSERT_TRUE(relators_hold(d.doubled, model, 4));
  ASSERT_EQ(oracle::closure(model, 4).size(), 8u);

  auto t = enumerate(d.doubled, {});
  ASSERT_EQ(t.live_count(), 8u);
  auto gens = regular_representation(t);
  Word c    = commutator(Word{1}, Word{2});
  EXPECT_EQ(evaluate(c, gens, 8).order(), 2u);
  EXPECT_EQ(oracle::perm_order(oracle::eval(c, raw(model), 4)), 2u);
  EXPECT_EQ(evaluate(Word{1, 2}, gens, 8).order(), 4u);
}

TEST(BuildNu, C3CommutatorOrder) {
  auto base = catalog_lookup("C3");
  auto t    = enumerate(build_nu(base, element_words_of(base), NuScope::elements).doubled, {});
  EXPECT_EQ(t.live_count(), 27u);
  auto gens = regular_representation(t);
  EXPECT_EQ(evaluate(commutator(Word{1}, Word{2}), gens, 27).order(), 3u);
}

TEST(BuildNu, ScopesAgreeOnSmallGroups) {
  for (char const* name : {"C2", "C4", "C2xC2", "S3", "D4", "Q8"}) {
    auto base  = catalog_lookup(name);
    auto words = element_words_of(base);
    auto e     = enumerate(build_nu(base, words, NuScope::elements).doubled, {});
    auto g     = enumerate(build_nu(base, words, NuScope::generators).doubled, {});
    EXPECT_EQ(e.live_count(), g.live_count()) << name;
  }
}

TEST(DeltaGenerators, Examples) {
  auto c2 = catalog_lookup("C2");
  auto d2 = build_nu(c2, element_words_of(c2), NuScope::elements);
  EXPECT_EQ(delta_generators(d2), std::vector<Word>{commutator(Word{1}, Word{2})});

  auto triv = parse_presentation("gens: a\nrels: a", "1");
  EXPECT_TRUE(delta_generators(build_nu(triv, element_words_of(triv), NuScope::elements)).empty());

  auto c4 = catalog_lookup("C4");
  EXPECT_EQ(delta_generators(build_nu(c4, element_words_of(c4), NuScope::elements)).size(), 3u);

  EXPECT_THROW(delta_generators(build_chi(c2, element_words_of(c2))), ContractViolation);
}
