#pragma once

#include <cstddef>
#include <vector>

#include "chiforge/coset_enum.hpp"
#include "chiforge/presentation.hpp"
#include "chiforge/word.hpp"

namespace chiforge {

  enum class DoubleKind { chi, nu };
  enum class NuScope { elements, generators };

  // A presentation over the doubled alphabet: letters 1..r are the copy of G,
  // letters r+1..2r the copy G^phi, named with an "_f" suffix.
  struct DoubledPresentation {
    Presentation      base;
    Presentation      doubled;
    std::vector<Word> element_words;  // one word over base letters per element
    DoubleKind        kind = DoubleKind::chi;
  };

  // The phi-copy of a word over base letters 1..rank.
  Word phi(Word const& w, std::size_t rank);

  // Schreier words of the regular enumeration of base, one per element.
  std::vector<Word> element_words_of(Presentation const& base,
                                     std::size_t max_cosets = default_max_cosets);

  // Relators: base relators, their phi-copies, and [w, w^phi] for every
  // nonempty element word w. Throws ContractViolation unless element_words
  // name every element of the group exactly once.
  DoubledPresentation build_chi(Presentation const&      base,
                                std::vector<Word> const& element_words);

  // As build_chi but with [x, x^phi] only for the generators x. Not chi(G) in
  // general; kept to show that the relation must range over all of G.
  DoubledPresentation build_chi_generator_level(
      Presentation const&      base,
      std::vector<Word> const& element_words);

  // For each triple (g1, g2, g3) from the scope: [g1, g2^phi]^{g3} equals
  // [g1^{g3}, (g2^{g3})^phi] and so does [g1, g2^phi]^{g3^phi}.
  DoubledPresentation build_nu(Presentation const&      base,
                               std::vector<Word> const& element_words,
                               NuScope                  scope);

  // [w, w^phi] for every nonempty element word w. Requires kind == nu.
  std::vector<Word> delta_generators(DoubledPresentation const& d);

}  // namespace chiforge
