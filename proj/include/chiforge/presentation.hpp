#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "chiforge/word.hpp"

namespace chiforge {

  // A finite presentation <gen_names | relators>.
  struct Presentation {
    std::string              name;
    std::size_t              rank = 0;
    std::vector<std::string> gen_names;
    std::vector<Word>        relators;

    // Throws ContractViolation unless every invariant holds: rank matches
    // gen_names, names are distinct identifiers, relators are nonempty and
    // use only letters up to rank.
    void validate() const;
  };

  // Parses the text format:
  //
  //   gens: a b
  //   rels: a^2 b^3 (a b)^2      # one relator per whitespace-separated term
  //
  // Relator terms continue onto further lines. Throws ParseError.
  Presentation parse_presentation(std::string_view text,
                                  std::string      name = "");

  // Inverse of parse_presentation up to whitespace and comments.
  std::string render_presentation(Presentation const& p);

  // Renders one relator in term syntax, e.g. "(a b^-1)" or "a^3".
  std::string render_relator(Word const& w, std::vector<std::string> const& names);

  // Dense integer matrix, row-major.
  struct IntegerMatrix {
    std::size_t               rows = 0;
    std::size_t               cols = 0;
    std::vector<std::int64_t> entries;

    IntegerMatrix() = default;
    IntegerMatrix(std::size_t r, std::size_t c);
    explicit IntegerMatrix(
        std::vector<std::vector<std::int64_t>> const& grid);

    std::int64_t& at(std::size_t i, std::size_t j) {
      return entries[i * cols + j];
    }
    std::int64_t at(std::size_t i, std::size_t j) const {
      return entries[i * cols + j];
    }
  };

  // Diagonal d_1 | d_2 | ... | d_k of the Smith normal form, k = min(rows,
  // cols), nonnegative, zeros last.
  std::vector<std::int64_t> smith_normal_form(IntegerMatrix m);

  // Row i holds the exponent sums of relator i.
  IntegerMatrix relation_matrix(Presentation const& p);

  struct AbelianInvariants {
    // Sorted prime powers of the torsion part.
    std::vector<std::uint64_t> torsion;
    std::size_t                free_rank = 0;

    bool finite() const noexcept {
      return free_rank == 0;
    }
    friend bool operator==(AbelianInvariants const&,
                           AbelianInvariants const&) = default;
  };

  AbelianInvariants abelianization_invariants(Presentation const& p);

  // Splits each value into prime powers; the result is sorted and 1s dropped.
  std::vector<std::uint64_t> primary_decomposition(
      std::vector<std::uint64_t> const& cyclic_orders);

  // Inverse of primary_decomposition: invariant factors d_1 | ... | d_k.
  std::vector<std::uint64_t> invariant_factors(
      std::vector<std::uint64_t> const& prime_powers);

  // <x_1, ..., x_k | x_i^{d_i}, [x_i, x_j]>, or <a | a> when orders is empty.
  Presentation abelian_presentation(std::vector<std::uint64_t> const& orders,
                                    std::string                       name);

}  // namespace chiforge
