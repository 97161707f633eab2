#include "chiforge/permutation.hpp"

#include <cstdlib>
#include <numeric>

#include "chiforge/error.hpp"

namespace chiforge {

  Permutation::Permutation(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), Point(0));
  }

  Permutation::Permutation(std::vector<Point> images)
      : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point x : images_) {
      if (x >= images_.size() || seen[x]) {
        throw ContractViolation("Permutation: images are not a bijection");
      }
      seen[x] = true;
    }
  }

  Permutation Permutation::from_cycles(
      std::size_t                                           degree,
      std::initializer_list<std::initializer_list<Point>> cycles) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point(0));
    std::vector<bool> used(degree, false);
    for (auto const& cycle : cycles) {
      std::vector<Point> pts(cycle);
      for (Point x : pts) {
        if (x == 0 || x > degree || used[x - 1]) {
          throw ContractViolation("Permutation::from_cycles: bad point");
        }
        used[x - 1] = true;
      }
      for (std::size_t i = 0; i < pts.size(); ++i) {
        images[pts[i] - 1] = pts[(i + 1) % pts.size()] - 1;
      }
    }
    return Permutation(std::move(images));
  }

  bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) {
        return false;
      }
    }
    return true;
  }

  Point Permutation::first_moved() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) {
        return static_cast<Point>(i);
      }
    }
    return static_cast<Point>(images_.size());
  }

  Permutation Permutation::inverse() const {
    Permutation result;
    result.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      result.images_[images_[i]] = static_cast<Point>(i);
    }
    return result;
  }

  Permutation Permutation::operator*(Permutation const& rhs) const {
    if (rhs.degree() != degree()) {
      throw ContractViolation("Permutation: degree mismatch");
    }
    Permutation result;
    result.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      result.images_[i] = rhs.images_[images_[i]];
    }
    return result;
  }

  Permutation Permutation::pow(std::int64_t k) const {
    Permutation base   = k < 0 ? inverse() : *this;
    Permutation result = Permutation(degree());
    for (std::uint64_t e = std::llabs(k); e != 0; e >>= 1) {
      if (e & 1) {
        result = result * base;
      }
      base = base * base;
    }
    return result;
  }

  std::uint64_t Permutation::order() const {
    std::vector<bool> seen(images_.size(), false);
    std::uint64_t     result = 1;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) {
        continue;
      }
      std::uint64_t len = 0;
      for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
        seen[x] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  std::string Permutation::to_string() const {
    std::string       out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) {
        continue;
      }
      out += '(';
      for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
        if (x != i) {
          out += ' ';
        }
        out += std::to_string(x + 1);
        seen[x] = true;
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  Permutation commutator(Permutation const& a, Permutation const& b) {
    return a.inverse() * b.inverse() * a * b;
  }

  Permutation conjugate(Permutation const& a, Permutation const& t) {
    return t.inverse() * a * t;
  }

  Permutation evaluate(Word const&                  w,
                       std::span<Permutation const> gens,
                       std::size_t                  degree) {
    std::vector<Permutation> inverses(gens.size());
    std::vector<Point>       images(degree);
    std::iota(images.begin(), images.end(), Point(0));
    for (Letter x : w) {
      std::size_t i = std::abs(x);
      if (i > gens.size()) {
        throw ContractViolation("evaluate: no image for generator "
                                + std::to_string(i));
      }
      Permutation const* g = &gens[i - 1];
      if (g->degree() != degree) {
        throw ContractViolation("evaluate: degree mismatch");
      }
      if (x < 0) {
        if (inverses[i - 1].degree() == 0) {
          inverses[i - 1] = g->inverse();
        }
        g = &inverses[i - 1];
      }
      for (Point& y : images) {
        y = (*g)(y);
      }
    }
    return Permutation(std::move(images));
  }

}  // namespace chiforge
