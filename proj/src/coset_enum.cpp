#include "chiforge/coset_enum.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>

#include "chiforge/error.hpp"

namespace chiforge {

  namespace {
    using Row = std::vector<std::uint32_t>;

    std::vector<std::uint32_t> to_columns(Word const& w) {
      std::vector<std::uint32_t> cols;
      cols.reserve(w.size());
      for (Letter x : w) {
        cols.push_back(static_cast<std::uint32_t>(CosetTable::column(x)));
      }
      return cols;
    }

    // Smallest rotation of w or w^-1; equal keys mean the relators have the
    // same normal closure.
    std::vector<Letter> canonical_key(Word const& w) {
      std::vector<Letter> best;
      for (Word const& v : {w, invert(w)}) {
        auto        letters = v.letters();
        std::size_t n       = letters.size();
        for (std::size_t k = 0; k < n; ++k) {
          std::vector<Letter> rot;
          rot.reserve(n);
          for (std::size_t i = 0; i < n; ++i) {
            rot.push_back(letters[(k + i) % n]);
          }
          if (best.empty() || rot < best) {
            best = std::move(rot);
          }
        }
      }
      return best;
    }
  }  // namespace

  class CosetEnumerator {
   public:
    CosetEnumerator(Presentation const&   p,
                    std::span<Word const> subgroup_gens,
                    std::size_t           max_cosets,
                    Strategy              strategy)
        : width_(2 * p.rank),
          max_(max_cosets),
          felsch_(strategy == Strategy::felsch),
          source_(p) {
      if (max_cosets == 0) {
        throw ContractViolation("enumerate: max_cosets must be positive");
      }
      std::set<std::vector<Letter>> seen;
      for (Word const& r : p.relators) {
        if (r.max_generator() > p.rank) {
          throw ContractViolation("enumerate: relator letter exceeds rank");
        }
        Word c = cyclic_reduce(r);
        if (!c.empty() && seen.insert(canonical_key(c)).second) {
          rels_.push_back(to_columns(c));
        }
      }
      trivial_ = true;
      for (Word const& w : subgroup_gens) {
        if (w.max_generator() > p.rank) {
          throw ContractViolation("enumerate: subgroup word exceeds rank");
        }
        if (!w.empty()) {
          trivial_ = false;
          subgens_.push_back(to_columns(w));
        }
      }
      if (felsch_) {
        rotations_.resize(width_);
        for (auto const& r : rels_) {
          for (std::size_t k = 0; k < r.size(); ++k) {
            std::vector<std::uint32_t> rot(r.begin() + k, r.end());
            rot.insert(rot.end(), r.begin(), r.begin() + k);
            rotations_[rot[0]].push_back(std::move(rot));
          }
        }
      }
      capacity_ = std::min<std::size_t>(max_, 1024);
      table_.assign((capacity_ + 1) * width_, 0);
      parent_.resize(capacity_ + 1);
      parent_[1] = 1;
    }

    CosetTable run() {
      std::uint32_t alpha = 1;
      for (auto const& w : subgens_) {
        ensure_room(w.size(), alpha);
        scan_and_fill(1, w);
        process_deductions();
      }
      if (felsch_) {
        felsch_pass();
      } else {
        hlt_pass();
      }
      while (repair_pass()) {
      }
      return extract();
    }

   private:
    std::uint32_t& at(std::uint32_t c, std::uint32_t x) {
      return table_[static_cast<std::size_t>(c) * width_ + x];
    }

    bool live(std::uint32_t c) const {
      return parent_[c] == c;
    }

    std::uint32_t rep(std::uint32_t c) {
      std::uint32_t r = c;
      while (parent_[r] != r) {
        r = parent_[r];
      }
      while (parent_[c] != r) {
        std::uint32_t next = parent_[c];
        parent_[c]         = r;
        c                  = next;
      }
      return r;
    }

    void merge(std::uint32_t k, std::uint32_t l) {
      std::uint32_t a = rep(k), b = rep(l);
      if (a == b) {
        return;
      }
      std::uint32_t lo = std::min(a, b), hi = std::max(a, b);
      parent_[hi] = lo;
      queue_.push_back(hi);
      --live_;
    }

    void coincidence(std::uint32_t a, std::uint32_t b) {
      queue_.clear();
      merge(a, b);
      for (std::size_t i = 0; i < queue_.size(); ++i) {
        std::uint32_t g = queue_[i];
        for (std::uint32_t x = 0; x < width_; ++x) {
          std::uint32_t d = at(g, x);
          if (d == 0) {
            continue;
          }
          at(d, x ^ 1u)    = 0;
          std::uint32_t mu = rep(g), nu = rep(d);
          if (at(mu, x) != 0) {
            merge(nu, at(mu, x));
          } else if (at(nu, x ^ 1u) != 0) {
            merge(mu, at(nu, x ^ 1u));
          } else {
            at(mu, x)      = nu;
            at(nu, x ^ 1u) = mu;
            push_deduction(mu, x);
          }
        }
      }
    }

    void push_deduction(std::uint32_t c, std::uint32_t x) {
      if (felsch_) {
        deductions_.emplace_back(c, x);
      }
    }

    bool grow(std::size_t needed) {
      if (capacity_ >= max_) {
        return false;
      }
      capacity_ = std::min(max_, std::max(2 * capacity_, needed));
      table_.resize((capacity_ + 1) * width_, 0);
      parent_.resize(capacity_ + 1);
      return true;
    }

    std::uint32_t define(std::uint32_t c, std::uint32_t x) {
      if (next_ == capacity_ && !grow(next_ + 1)) {
        throw CosetOverflow(max_);
      }
      auto d     = static_cast<std::uint32_t>(++next_);
      parent_[d] = d;
      ++live_;
      at(c, x)      = d;
      at(d, x ^ 1u) = c;
      push_deduction(c, x);
      return d;
    }

    // Makes room for k definitions if possible, compacting at the limit.
    // alpha is renumbered along with the table.
    void ensure_room(std::size_t k, std::uint32_t& alpha) {
      if (next_ + k <= capacity_) {
        return;
      }
      grow(next_ + k);
      if (next_ + k <= capacity_ || live_ == next_) {
        return;
      }
      std::vector<std::uint32_t> renumber(next_ + 1, 0);
      std::uint32_t              n = 0;
      for (std::uint32_t c = 1; c <= next_; ++c) {
        if (live(c)) {
          renumber[c] = ++n;
        }
      }
      for (std::uint32_t c = 1; c <= next_; ++c) {
        if (renumber[c] == 0) {
          continue;
        }
        for (std::uint32_t x = 0; x < width_; ++x) {
          std::uint32_t d                   = at(c, x);
          at(renumber[c], x)                = d == 0 ? 0 : renumber[rep(d)];
        }
      }
      std::fill(table_.begin() + (n + 1) * width_, table_.end(), 0);
      next_ = n;
      for (std::uint32_t c = 1; c <= n; ++c) {
        parent_[c] = c;
      }
      alpha = renumber[alpha];
    }

    void scan_and_fill(std::uint32_t alpha, std::vector<std::uint32_t> const& w) {
      std::uint32_t f = alpha, b = alpha;
      std::size_t   i = 0, j = w.size();  // unscanned letters are w[i, j)
      while (true) {
        while (i < j && at(f, w[i]) != 0) {
          f = at(f, w[i++]);
        }
        if (i == j) {
          if (f != alpha) {
            coincidence(f, alpha);
          }
          return;
        }
        while (j > i && at(b, w[j - 1] ^ 1u) != 0) {
          b = at(b, w[--j] ^ 1u);
        }
        if (j == i) {
          coincidence(f, b);
          return;
        }
        if (j == i + 1) {
          at(f, w[i])      = b;
          at(b, w[i] ^ 1u) = f;
          push_deduction(f, w[i]);
          return;
        }
        define(f, w[i]);
      }
    }

    void scan(std::uint32_t alpha, std::vector<std::uint32_t> const& w) {
      std::uint32_t f = alpha, b = alpha;
      std::size_t   i = 0, j = w.size();
      while (i < j && at(f, w[i]) != 0) {
        f = at(f, w[i++]);
      }
      if (i == j) {
        if (f != alpha) {
          coincidence(f, alpha);
        }
        return;
      }
      while (j > i && at(b, w[j - 1] ^ 1u) != 0) {
        b = at(b, w[--j] ^ 1u);
      }
      if (j == i) {
        coincidence(f, b);
      } else if (j == i + 1) {
        at(f, w[i])      = b;
        at(b, w[i] ^ 1u) = f;
        push_deduction(f, w[i]);
      }
    }

    void process_deductions() {
      while (!deductions_.empty()) {
        auto [c, x] = deductions_.back();
        deductions_.pop_back();
        if (!live(c)) {
          continue;
        }
        for (auto const& r : rotations_[x]) {
          if (!live(c)) {
            break;
          }
          scan(c, r);
        }
        if (!live(c)) {
          continue;
        }
        std::uint32_t d = at(c, x);
        if (d == 0) {
          continue;
        }
        for (auto const& r : rotations_[x ^ 1u]) {
          if (!live(d)) {
            break;
          }
          scan(d, r);
        }
      }
    }

    void hlt_pass() {
      for (std::uint32_t alpha = 1; alpha <= next_; ++alpha) {
        for (auto const& r : rels_) {
          if (!live(alpha)) {
            break;
          }
          ensure_room(r.size(), alpha);
          scan_and_fill(alpha, r);
        }
        fill_row(alpha);
      }
    }

    void felsch_pass() {
      for (std::uint32_t alpha = 1; alpha <= next_; ++alpha) {
        for (std::uint32_t x = 0; x < width_; ++x) {
          if (!live(alpha)) {
            break;
          }
          if (at(alpha, x) == 0) {
            ensure_room(1, alpha);
            define(alpha, x);
            process_deductions();
          }
        }
      }
    }

    void fill_row(std::uint32_t& alpha) {
      for (std::uint32_t x = 0; x < width_; ++x) {
        if (!live(alpha)) {
          return;
        }
        if (at(alpha, x) == 0) {
          ensure_room(1, alpha);
          define(alpha, x);
          process_deductions();
        }
      }
    }

    std::uint32_t trace(std::uint32_t c, std::vector<std::uint32_t> const& w) {
      for (std::uint32_t x : w) {
        c = at(c, x);
        if (c == 0) {
          return 0;
        }
      }
      return c;
    }

    // Closes any relator or subgroup generator left open and fills any
    // undefined entry. Returns true if the table changed.
    bool repair_pass() {
      bool          changed = false;
      std::uint32_t one     = 1;
      for (auto const& w : subgens_) {
        if (trace(1, w) != 1) {
          ensure_room(w.size(), one);
          scan_and_fill(1, w);
          process_deductions();
          changed = true;
        }
      }
      for (std::uint32_t alpha = 1; alpha <= next_; ++alpha) {
        for (auto const& r : rels_) {
          if (!live(alpha)) {
            break;
          }
          if (trace(alpha, r) != alpha) {
            ensure_room(r.size(), alpha);
            scan_and_fill(alpha, r);
            process_deductions();
            changed = true;
          }
        }
        for (std::uint32_t x = 0; x < width_ && live(alpha); ++x) {
          if (at(alpha, x) == 0) {
            changed = true;
          }
        }
        fill_row(alpha);
      }
      return changed;
    }

    CosetTable extract() {
      CosetTable t;
      t.n_alphabet_       = width_ / 2;
      t.live_count_       = live_;
      t.complete_         = true;
      t.trivial_subgroup_ = trivial_;
      t.relators_         = source_.relators;
      std::vector<std::uint32_t> renumber(next_ + 1, 0);
      std::uint32_t              n = 0;
      for (std::uint32_t c = 1; c <= next_; ++c) {
        if (live(c)) {
          renumber[c] = ++n;
        }
      }
      t.table_.assign((static_cast<std::size_t>(n) + 1) * width_, 0);
      for (std::uint32_t c = 1; c <= next_; ++c) {
        if (renumber[c] == 0) {
          continue;
        }
        for (std::uint32_t x = 0; x < width_; ++x) {
          t.table_[renumber[c] * width_ + x] = renumber[rep(at(c, x))];
        }
      }
      return t;
    }

    std::uint32_t                                       width_;
    std::size_t                                         max_;
    bool                                                felsch_;
    Presentation const&                                 source_;
    bool                                                trivial_ = true;
    std::vector<std::vector<std::uint32_t>>             rels_;
    std::vector<std::vector<std::uint32_t>>             subgens_;
    std::vector<std::vector<std::vector<std::uint32_t>>> rotations_;
    std::size_t                                         capacity_ = 0;
    std::size_t                                         next_     = 1;
    std::size_t                                         live_     = 1;
    std::vector<std::uint32_t>                          table_;
    std::vector<std::uint32_t>                          parent_;
    std::vector<std::uint32_t>                          queue_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> deductions_;
  };

  CosetTable::CosetTable(std::size_t                                     n_alphabet,
                         std::vector<std::vector<std::uint32_t>> const& rows,
                         std::vector<Word>                               relators,
                         bool trivial_subgroup)
      : n_alphabet_(n_alphabet),
        live_count_(rows.size()),
        trivial_subgroup_(trivial_subgroup),
        relators_(std::move(relators)) {
    table_.assign((rows.size() + 1) * width(), 0);
    for (std::size_t c = 0; c < rows.size(); ++c) {
      if (rows[c].size() != width()) {
        throw ContractViolation("CosetTable: row width mismatch");
      }
      for (std::size_t x = 0; x < width(); ++x) {
        if (rows[c][x] > rows.size()) {
          throw ContractViolation("CosetTable: entry out of range");
        }
        table_[(c + 1) * width() + x] = rows[c][x];
      }
    }
    derive_completeness();
  }

  void CosetTable::derive_completeness() {
    complete_ = true;
    for (std::uint32_t c = 1; c <= live_count_ && complete_; ++c) {
      for (std::size_t x = 0; x < width(); ++x) {
        std::uint32_t d = table_[c * width() + x];
        if (d == 0 || table_[d * width() + (x ^ 1u)] != c) {
          complete_ = false;
          break;
        }
      }
    }
    for (std::uint32_t c = 1; c <= live_count_ && complete_; ++c) {
      for (Word const& r : relators_) {
        if (trace_word(*this, c, r) != c) {
          complete_ = false;
          break;
        }
      }
    }
  }

  CosetTable enumerate(Presentation const&   p,
                       std::span<Word const> subgroup_gens,
                       std::size_t           max_cosets,
                       Strategy              strategy) {
    return CosetEnumerator(p, subgroup_gens, max_cosets, strategy).run();
  }

  std::uint32_t trace_word(CosetTable const& t, std::uint32_t start, Word const& w) {
    std::uint32_t c = start;
    for (Letter x : w) {
      if (c == 0) {
        return 0;
      }
      c = t.entry(c, x);
    }
    return c;
  }

  std::vector<Permutation> regular_representation(CosetTable const& t) {
    if (!t.complete()) {
      throw ContractViolation("regular_representation: incomplete table");
    }
    if (!t.trivial_subgroup()) {
      throw ContractViolation(
          "regular_representation: table is not over the trivial subgroup");
    }
    std::vector<Permutation> gens;
    for (std::size_t i = 1; i <= t.n_alphabet(); ++i) {
      std::vector<Point> images(t.live_count());
      for (std::uint32_t c = 1; c <= t.live_count(); ++c) {
        images[c - 1] = t.entry(c, static_cast<Letter>(i)) - 1;
      }
      gens.emplace_back(std::move(images));
    }
    for (Word const& r : t.relators()) {
      if (!evaluate(r, gens, t.live_count()).is_identity()) {
        throw Error("regular_representation: relator not satisfied");
      }
    }
    return gens;
  }

  std::vector<Word> schreier_words(CosetTable const& t) {
    if (!t.complete()) {
      throw ContractViolation("schreier_words: incomplete table");
    }
    std::vector<Word>          words(t.live_count());
    std::vector<bool>          seen(t.live_count() + 1, false);
    std::deque<std::uint32_t>  queue{1};
    seen[1] = true;
    while (!queue.empty()) {
      std::uint32_t c = queue.front();
      queue.pop_front();
      for (std::size_t i = 1; i <= t.n_alphabet(); ++i) {
        for (Letter x : {static_cast<Letter>(i), -static_cast<Letter>(i)}) {
          std::uint32_t d = t.entry(c, x);
          if (!seen[d]) {
            seen[d]      = true;
            words[d - 1] = words[c - 1] * Word{x};
            queue.push_back(d);
          }
        }
      }
    }
    return words;
  }

}  // namespace chiforge
