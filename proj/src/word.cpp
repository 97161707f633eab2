#include "chiforge/word.hpp"

#include <algorithm>
#include <cstdlib>

#include "chiforge/error.hpp"

namespace chiforge {

  namespace {
    void reduce_in_place(std::vector<Letter>& letters) {
      std::size_t top = 0;
      for (Letter x : letters) {
        if (x == 0) {
          throw ContractViolation("word letters must be nonzero");
        }
        if (top > 0 && letters[top - 1] == -x) {
          --top;
        } else {
          letters[top++] = x;
        }
      }
      letters.resize(top);
    }
  }  // namespace

  Word::Word(std::initializer_list<Letter> letters)
      : Word(std::vector<Letter>(letters)) {}

  Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    reduce_in_place(letters_);
  }

  Word Word::generator(std::size_t i) {
    return Word({static_cast<Letter>(i)});
  }

  std::size_t Word::max_generator() const noexcept {
    std::size_t m = 0;
    for (Letter x : letters_) {
      m = std::max<std::size_t>(m, std::abs(x));
    }
    return m;
  }

  Word Word::operator*(Word const& that) const {
    std::vector<Letter> out;
    out.reserve(letters_.size() + that.letters_.size());
    out.insert(out.end(), letters_.begin(), letters_.end());
    out.insert(out.end(), that.letters_.begin(), that.letters_.end());
    return Word(std::move(out));
  }

  Word free_reduce(std::span<Letter const> letters) {
    return Word(std::vector<Letter>(letters.begin(), letters.end()));
  }

  Word invert(Word const& w) {
    std::vector<Letter> out(w.size());
    std::transform(
        w.begin(), w.end(), out.rbegin(), [](Letter x) { return -x; });
    return Word(std::move(out));
  }

  Word power(Word const& w, std::int64_t k) {
    Word base = k < 0 ? invert(w) : w;
    Word result;
    for (std::int64_t i = 0; i < std::abs(k); ++i) {
      result = result * base;
    }
    return result;
  }

  Word commutator(Word const& u, Word const& v) {
    return invert(u) * invert(v) * u * v;
  }

  Word conjugate(Word const& u, Word const& t) {
    return invert(t) * u * t;
  }

  Word engel_word(Word const& x, Word const& g, int n) {
    if (n < 1) {
      throw ContractViolation("engel_word: n must be at least 1");
    }
    Word result = commutator(x, g);
    for (int i = 1; i < n; ++i) {
      result = commutator(result, g);
    }
    return result;
  }

  Word cyclic_reduce(Word const& w) {
    auto letters = w.letters();
    std::size_t first = 0;
    std::size_t last  = letters.size();
    while (last - first >= 2 && letters[first] == -letters[last - 1]) {
      ++first;
      --last;
    }
    return Word(std::vector<Letter>(letters.begin() + first,
                                    letters.begin() + last));
  }

  Word remap(Word const& w, std::span<Word const> images) {
    std::vector<Letter> out;
    for (Letter x : w) {
      std::size_t i = std::abs(x);
      if (i > images.size()) {
        throw ContractViolation("remap: no image for generator "
                                + std::to_string(i));
      }
      Word const& img = images[i - 1];
      if (x > 0) {
        out.insert(out.end(), img.begin(), img.end());
      } else {
        for (auto it = img.letters().rbegin(); it != img.letters().rend();
             ++it) {
          out.push_back(-*it);
        }
      }
    }
    return Word(std::move(out));
  }

  std::vector<Word> shift_map(std::size_t rank, std::size_t offset) {
    std::vector<Word> images;
    images.reserve(rank);
    for (std::size_t i = 1; i <= rank; ++i) {
      images.push_back(Word::generator(i + offset));
    }
    return images;
  }

  std::vector<Word> compose(std::span<Word const> f, std::span<Word const> g) {
    std::vector<Word> out;
    out.reserve(f.size());
    for (Word const& w : f) {
      out.push_back(remap(w, g));
    }
    return out;
  }

  std::string to_string(Word const& w, std::span<std::string const> names) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    auto        letters = w.letters();
    for (std::size_t i = 0; i < letters.size();) {
      Letter      x   = letters[i];
      std::size_t run = 1;
      while (i + run < letters.size() && letters[i + run] == x) {
        ++run;
      }
      std::size_t g = std::abs(x);
      if (!out.empty()) {
        out += '*';
      }
      out += g <= names.size() ? names[g - 1] : "x" + std::to_string(g);
      if (x < 0 || run > 1) {
        out += '^';
        out += std::to_string(x < 0 ? -static_cast<long>(run)
                                    : static_cast<long>(run));
      }
      i += run;
    }
    return out;
  }

}  // namespace chiforge
