#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "chiforge/word.hpp"

namespace chiforge {

  using Point = std::uint32_t;

  // A permutation of {0, ..., degree - 1}, acting on the right: the product
  // p * q applies p first. Cycle notation in the interface is 1-based.
  class Permutation {
   public:
    Permutation() = default;
    explicit Permutation(std::size_t degree);  // identity
    explicit Permutation(std::vector<Point> images);

    // from_cycles(4, {{1, 2}, {3, 4}}) is (1 2)(3 4).
    static Permutation from_cycles(
        std::size_t                                           degree,
        std::initializer_list<std::initializer_list<Point>> cycles);

    std::size_t degree() const noexcept {
      return images_.size();
    }
    Point operator()(Point x) const {
      return images_[x];
    }
    std::span<Point const> images() const noexcept {
      return images_;
    }

    bool          is_identity() const noexcept;
    Permutation   inverse() const;
    Permutation   pow(std::int64_t k) const;
    std::uint64_t order() const;  // lcm of cycle lengths

    // Smallest moved point, or degree() for the identity.
    Point first_moved() const noexcept;

    Permutation operator*(Permutation const& rhs) const;

    std::string to_string() const;

    friend bool operator==(Permutation const&, Permutation const&)  = default;
    friend auto operator<=>(Permutation const&, Permutation const&) = default;

   private:
    std::vector<Point> images_;
  };

  Permutation commutator(Permutation const& a, Permutation const& b);
  Permutation conjugate(Permutation const& a, Permutation const& t);

  // Evaluates w with generator i mapped to gens[i - 1].
  Permutation evaluate(Word const&                  w,
                       std::span<Permutation const> gens,
                       std::size_t                  degree);

}  // namespace chiforge
