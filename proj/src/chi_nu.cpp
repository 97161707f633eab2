#include "chiforge/chi_nu.hpp"

#include <algorithm>
#include <set>

#include "chiforge/error.hpp"

namespace chiforge {

  namespace {
    void check_element_words(Presentation const&      base,
                             std::vector<Word> const& words) {
      base.validate();
      CosetTable t;
      try {
        t = enumerate(base, {}, std::max<std::size_t>(4096, 64 * words.size()));
      } catch (CosetOverflow const&) {
        throw ContractViolation("element map is incomplete: group has more than "
                                + std::to_string(words.size()) + " elements");
      }
      if (t.live_count() != words.size()) {
        throw ContractViolation("element map does not match the group order");
      }
      std::set<std::uint32_t> seen;
      for (Word const& w : words) {
        if (w.max_generator() > base.rank) {
          throw ContractViolation("element word uses an unknown generator");
        }
        if (!seen.insert(trace_word(t, 1, w)).second) {
          throw ContractViolation("element words repeat a group element");
        }
      }
    }

    DoubledPresentation doubled_base(Presentation const&      base,
                                     std::vector<Word> const& words,
                                     DoubleKind               kind,
                                     char const*              suffix) {
      DoubledPresentation d;
      d.base          = base;
      d.element_words = words;
      d.kind          = kind;
      d.doubled.name  = base.name.empty() ? std::string(suffix)
                                          : std::string(suffix) + "(" + base.name + ")";
      d.doubled.rank      = 2 * base.rank;
      d.doubled.gen_names = base.gen_names;
      for (auto const& n : base.gen_names) {
        d.doubled.gen_names.push_back(n + "_f");
      }
      d.doubled.relators = base.relators;
      for (Word const& r : base.relators) {
        d.doubled.relators.push_back(phi(r, base.rank));
      }
      return d;
    }
  }  // namespace

  Word phi(Word const& w, std::size_t rank) {
    return remap(w, shift_map(rank, rank));
  }

  std::vector<Word> element_words_of(Presentation const& base,
                                     std::size_t         max_cosets) {
    return schreier_words(enumerate(base, {}, max_cosets));
  }

  DoubledPresentation build_chi(Presentation const&      base,
                                std::vector<Word> const& element_words) {
    check_element_words(base, element_words);
    auto d = doubled_base(base, element_words, DoubleKind::chi, "chi");
    for (Word const& w : element_words) {
      if (!w.empty()) {
        d.doubled.relators.push_back(commutator(w, phi(w, base.rank)));
      }
    }
    return d;
  }

  DoubledPresentation build_chi_generator_level(
      Presentation const&      base,
      std::vector<Word> const& element_words) {
    check_element_words(base, element_words);
    auto d = doubled_base(base, element_words, DoubleKind::chi, "chi_gen");
    for (std::size_t i = 1; i <= base.rank; ++i) {
      Word x = Word::generator(i);
      d.doubled.relators.push_back(commutator(x, phi(x, base.rank)));
    }
    return d;
  }

  DoubledPresentation build_nu(Presentation const&      base,
                               std::vector<Word> const& element_words,
                               NuScope                  scope) {
    check_element_words(base, element_words);
    auto              d = doubled_base(base, element_words, DoubleKind::nu, "nu");
    std::size_t const r = base.rank;
    std::vector<Word> range;
    if (scope == NuScope::elements) {
      range = element_words;
    } else {
      for (std::size_t i = 1; i <= r; ++i) {
        range.push_back(Word::generator(i));
      }
    }
    for (Word const& g1 : range) {
      for (Word const& g2 : range) {
        Word t = commutator(g1, phi(g2, r));
        for (Word const& g3 : range) {
          Word rhs = commutator(conjugate(g1, g3), phi(conjugate(g2, g3), r));
          Word rhs_inv = invert(rhs);
          for (Word const& lhs : {conjugate(t, g3), conjugate(t, phi(g3, r))}) {
            Word rel = lhs * rhs_inv;
            if (!rel.empty()) {
              d.doubled.relators.push_back(std::move(rel));
            }
          }
        }
      }
    }
    return d;
  }

  std::vector<Word> delta_generators(DoubledPresentation const& d) {
    if (d.kind != DoubleKind::nu) {
      throw ContractViolation("delta_generators: presentation is not of kind nu");
    }
    std::vector<Word> out;
    for (Word const& w : d.element_words) {
      if (!w.empty()) {
        out.push_back(commutator(w, phi(w, d.base.rank)));
      }
    }
    return out;
  }

}  // namespace chiforge
