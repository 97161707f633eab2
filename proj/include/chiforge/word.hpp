#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace chiforge {

  // A signed generator letter: +i is generator i (1-based), -i its inverse.
  using Letter = std::int32_t;

  // A freely reduced word in a free group of some ambient rank.
  //
  // Words are values: every constructor reduces, so a Word never contains
  // an adjacent pair (x, -x).
  class Word {
   public:
    Word() = default;
    Word(std::initializer_list<Letter> letters);
    explicit Word(std::vector<Letter> letters);

    static Word generator(std::size_t i);

    std::span<Letter const> letters() const noexcept {
      return letters_;
    }
    std::size_t size() const noexcept {
      return letters_.size();
    }
    bool empty() const noexcept {
      return letters_.empty();
    }
    Letter operator[](std::size_t i) const {
      return letters_[i];
    }
    auto begin() const noexcept {
      return letters_.begin();
    }
    auto end() const noexcept {
      return letters_.end();
    }

    // Largest |letter| occurring, 0 for the empty word.
    std::size_t max_generator() const noexcept;

    // Concatenation followed by free reduction.
    Word operator*(Word const& that) const;

    friend bool operator==(Word const&, Word const&)  = default;
    friend auto operator<=>(Word const&, Word const&) = default;

   private:
    std::vector<Letter> letters_;
  };

  Word free_reduce(std::span<Letter const> letters);
  Word invert(Word const& w);
  Word power(Word const& w, std::int64_t k);

  // u^-1 v^-1 u v
  Word commutator(Word const& u, Word const& v);
  // t^-1 u t
  Word conjugate(Word const& u, Word const& t);
  // Left-normed [x, g, ..., g] with n copies of g; n >= 1.
  Word engel_word(Word const& x, Word const& g, int n);

  // Removes inverse letter pairs wrapping around the ends.
  Word cyclic_reduce(Word const& w);

  // images[i - 1] is the image of generator i. A negative letter maps to the
  // inverse of the image. Letters beyond images.size() are an error.
  Word remap(Word const& w, std::span<Word const> images);

  // The map i -> i + offset on generators 1..rank.
  std::vector<Word> shift_map(std::size_t rank, std::size_t offset);

  // The map i -> remap(f(i), g), that is g after f.
  std::vector<Word> compose(std::span<Word const> f, std::span<Word const> g);

  // Renders e.g. "a*b^-1*a_f"; the empty word is "1".
  std::string to_string(Word const& w, std::span<std::string const> names);

}  // namespace chiforge
