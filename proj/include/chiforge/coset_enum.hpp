#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "chiforge/permutation.hpp"
#include "chiforge/presentation.hpp"
#include "chiforge/word.hpp"

namespace chiforge {

  enum class Strategy { hlt, felsch };

  inline constexpr std::size_t default_max_cosets = 1'000'000;

  // The action of the generators (and their inverses) on a set of cosets.
  //
  // Cosets are numbered from 1; coset 1 is the subgroup itself and entry value
  // 0 means "undefined". Tables returned by enumerate() are complete, with
  // cosets numbered 1..live_count() in order of definition.
  class CosetTable {
   public:
    CosetTable() = default;

    // rows[c - 1][col] is the image of coset c under the letter with column
    // index col (see column()). Used to build tables by hand; completeness is
    // derived from the data.
    CosetTable(std::size_t                                     n_alphabet,
               std::vector<std::vector<std::uint32_t>> const& rows,
               std::vector<Word>                               relators,
               bool                                            trivial_subgroup);

    // Column 2(i-1) holds generator i, column 2(i-1)+1 its inverse.
    static std::size_t column(Letter x) noexcept {
      return x > 0 ? 2 * static_cast<std::size_t>(x - 1)
                   : 2 * static_cast<std::size_t>(-x - 1) + 1;
    }

    std::size_t n_alphabet() const noexcept {
      return n_alphabet_;
    }
    std::size_t live_count() const noexcept {
      return live_count_;
    }
    bool complete() const noexcept {
      return complete_;
    }
    bool trivial_subgroup() const noexcept {
      return trivial_subgroup_;
    }
    std::vector<Word> const& relators() const noexcept {
      return relators_;
    }

    // Image of coset c under letter x, 0 if undefined.
    std::uint32_t entry(std::uint32_t c, Letter x) const {
      return table_[c * width() + column(x)];
    }

   private:
    friend class CosetEnumerator;

    std::size_t width() const noexcept {
      return 2 * n_alphabet_;
    }
    void derive_completeness();

    std::size_t                n_alphabet_       = 0;
    std::size_t                live_count_       = 0;
    bool                       complete_         = false;
    bool                       trivial_subgroup_ = false;
    std::vector<std::uint32_t> table_;  // row 0 unused
    std::vector<Word>          relators_;
  };

  // Todd-Coxeter enumeration of the cosets of <subgroup_gens> in the group
  // presented by p. Throws CosetOverflow if more than max_cosets rows would
  // be needed at once.
  CosetTable enumerate(Presentation const&   p,
                       std::span<Word const> subgroup_gens,
                       std::size_t           max_cosets = default_max_cosets,
                       Strategy              strategy   = Strategy::hlt);

  // Applies w letter by letter from coset start; 0 if an undefined entry is
  // met.
  std::uint32_t trace_word(CosetTable const& t, std::uint32_t start, Word const& w);

  // One permutation of degree live_count() per generator. Requires a complete
  // table over the trivial subgroup.
  std::vector<Permutation> regular_representation(CosetTable const& t);

  // Breadth-first spanning tree words: result[c - 1] traces from coset 1 to
  // coset c; result[0] is the empty word.
  std::vector<Word> schreier_words(CosetTable const& t);

}  // namespace chiforge
