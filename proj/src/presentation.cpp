#include "chiforge/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "chiforge/error.hpp"

namespace chiforge {

  namespace {
    bool is_identifier(std::string const& s) {
      if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) {
        return false;
      }
      return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
      });
    }

    enum class Tok { ident, keyword, caret, integer, lparen, rparen, end };

    struct Token {
      Tok         kind;
      std::string text;
      std::size_t line;
      std::size_t column;
    };

    std::vector<Token> tokenize(std::string_view text) {
      std::vector<Token> out;
      std::size_t        line = 1, col = 1;
      std::size_t        i = 0;
      auto               advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
          if (text[i] == '\n') {
            ++line;
            col = 1;
          } else {
            ++col;
          }
          ++i;
        }
      };
      while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
          while (i < text.size() && text[i] != '\n') {
            advance(1);
          }
        } else if (std::isspace(static_cast<unsigned char>(c))) {
          advance(1);
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
          std::size_t j = i;
          while (j < text.size()
                 && (std::isalnum(static_cast<unsigned char>(text[j]))
                     || text[j] == '_')) {
            ++j;
          }
          std::string word(text.substr(i, j - i));
          Tok         kind = Tok::ident;
          if (j < text.size() && text[j] == ':') {
            kind = Tok::keyword;
            ++j;
          }
          out.push_back({kind, word, line, col});
          advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
          std::size_t j = i + 1;
          while (j < text.size()
                 && std::isdigit(static_cast<unsigned char>(text[j]))) {
            ++j;
          }
          if (c == '-' && j == i + 1) {
            throw ParseError("expected digits after '-'", line, col);
          }
          out.push_back({Tok::integer, std::string(text.substr(i, j - i)),
                         line, col});
          advance(j - i);
        } else if (c == '^' || c == '(' || c == ')') {
          Tok kind = c == '^' ? Tok::caret
                              : (c == '(' ? Tok::lparen : Tok::rparen);
          out.push_back({kind, std::string(1, c), line, col});
          advance(1);
        } else {
          throw ParseError(std::string("unexpected character '") + c + "'",
                           line,
                           col);
        }
      }
      out.push_back({Tok::end, "", line, col});
      return out;
    }

    class RelatorParser {
     public:
      RelatorParser(std::vector<Token> const&                 toks,
                    std::size_t                               pos,
                    std::map<std::string, std::size_t> const& gens)
          : toks_(toks), pos_(pos), gens_(gens) {}

      bool at_end() const {
        return peek().kind == Tok::end;
      }

      Token const& peek() const {
        return toks_[pos_];
      }

      std::vector<Letter> term() {
        Token const&        first = peek();
        std::vector<Letter> base;
        if (first.kind == Tok::ident) {
          auto it = gens_.find(first.text);
          if (it == gens_.end()) {
            throw ParseError("unknown generator '" + first.text + "'",
                             first.line,
                             first.column);
          }
          base.push_back(static_cast<Letter>(it->second));
          ++pos_;
        } else if (first.kind == Tok::lparen) {
          ++pos_;
          if (peek().kind == Tok::rparen) {
            throw ParseError("empty parentheses", first.line, first.column);
          }
          while (peek().kind != Tok::rparen) {
            if (peek().kind == Tok::end || peek().kind == Tok::keyword) {
              throw ParseError("unbalanced '('", first.line, first.column);
            }
            auto inner = term();
            base.insert(base.end(), inner.begin(), inner.end());
          }
          ++pos_;
        } else {
          throw ParseError("expected generator or '(' but found '"
                               + peek().text + "'",
                           peek().line,
                           peek().column);
        }
        while (peek().kind == Tok::caret) {
          ++pos_;
          Token const& e = peek();
          if (e.kind != Tok::integer) {
            throw ParseError(
                "expected integer exponent after '^'", e.line, e.column);
          }
          long k = std::strtol(e.text.c_str(), nullptr, 10);
          ++pos_;
          std::vector<Letter> powered;
          std::vector<Letter> unit = base;
          if (k < 0) {
            std::reverse(unit.begin(), unit.end());
            for (Letter& x : unit) {
              x = -x;
            }
          }
          for (long j = 0; j < std::labs(k); ++j) {
            powered.insert(powered.end(), unit.begin(), unit.end());
          }
          base = std::move(powered);
        }
        return base;
      }

     private:
      std::vector<Token> const&                 toks_;
      std::size_t                               pos_;
      std::map<std::string, std::size_t> const& gens_;
    };
  }  // namespace

  void Presentation::validate() const {
    if (rank == 0) {
      throw ContractViolation("presentation rank must be positive");
    }
    if (gen_names.size() != rank) {
      throw ContractViolation("presentation: gen_names size != rank");
    }
    std::set<std::string> seen;
    for (auto const& n : gen_names) {
      if (!is_identifier(n)) {
        throw ContractViolation("presentation: invalid generator name '" + n
                                + "'");
      }
      if (!seen.insert(n).second) {
        throw ContractViolation("presentation: duplicate generator name '"
                                + n + "'");
      }
    }
    for (auto const& r : relators) {
      if (r.empty()) {
        throw ContractViolation("presentation: empty relator");
      }
      if (r.max_generator() > rank) {
        throw ContractViolation("presentation: relator letter exceeds rank");
      }
    }
  }

  Presentation parse_presentation(std::string_view text, std::string name) {
    auto        toks = tokenize(text);
    std::size_t pos  = 0;
    if (toks[pos].kind != Tok::keyword || toks[pos].text != "gens") {
      throw ParseError(
          "expected 'gens:' at start of presentation", toks[pos].line, toks[pos].column);
    }
    ++pos;
    Presentation p;
    p.name = std::move(name);
    std::map<std::string, std::size_t> index;
    while (toks[pos].kind == Tok::ident) {
      auto const& t = toks[pos];
      if (index.count(t.text) != 0) {
        throw ParseError("duplicate generator '" + t.text + "'", t.line, t.column);
      }
      p.gen_names.push_back(t.text);
      index[t.text] = p.gen_names.size();
      ++pos;
    }
    if (p.gen_names.empty()) {
      throw ParseError("'gens:' lists no generators", toks[pos].line, toks[pos].column);
    }
    p.rank = p.gen_names.size();
    if (toks[pos].kind != Tok::keyword || toks[pos].text != "rels") {
      throw ParseError("expected 'rels:'", toks[pos].line, toks[pos].column);
    }
    ++pos;
    RelatorParser parser(toks, pos, index);
    while (!parser.at_end()) {
      Token const start = parser.peek();
      if (start.kind == Tok::keyword) {
        throw ParseError("unexpected '" + start.text + ":'", start.line, start.column);
      }
      Word w(parser.term());
      if (w.empty()) {
        throw ParseError("empty relator", start.line, start.column);
      }
      p.relators.push_back(std::move(w));
    }
    return p;
  }

  std::string render_relator(Word const&                     w,
                             std::vector<std::string> const& names) {
    auto letters = w.letters();
    // A single repeated letter renders as a power.
    if (!letters.empty()
        && std::all_of(letters.begin(), letters.end(), [&](Letter x) {
             return x == letters[0];
           })) {
      std::string out = names[std::abs(letters[0]) - 1];
      long        k   = letters[0] > 0 ? static_cast<long>(letters.size())
                                       : -static_cast<long>(letters.size());
      if (k != 1) {
        out += "^" + std::to_string(k);
      }
      return out;
    }
    std::string out = "(";
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += names[std::abs(letters[i]) - 1];
      if (letters[i] < 0) {
        out += "^-1";
      }
    }
    return out + ")";
  }

  std::string render_presentation(Presentation const& p) {
    std::ostringstream out;
    out << "gens:";
    for (auto const& n : p.gen_names) {
      out << ' ' << n;
    }
    out << "\nrels:";
    for (auto const& r : p.relators) {
      out << ' ' << render_relator(r, p.gen_names);
    }
    out << '\n';
    return out.str();
  }

  IntegerMatrix::IntegerMatrix(std::size_t r, std::size_t c)
      : rows(r), cols(c), entries(r * c, 0) {}

  IntegerMatrix::IntegerMatrix(
      std::vector<std::vector<std::int64_t>> const& grid)
      : rows(grid.size()), cols(grid.empty() ? 0 : grid[0].size()) {
    for (auto const& row : grid) {
      if (row.size() != cols) {
        throw ContractViolation("IntegerMatrix: ragged rows");
      }
      entries.insert(entries.end(), row.begin(), row.end());
    }
  }

  std::vector<std::int64_t> smith_normal_form(IntegerMatrix m) {
    std::size_t const k = std::min(m.rows, m.cols);
    auto swap_rows      = [&](std::size_t a, std::size_t b) {
      for (std::size_t j = 0; j < m.cols; ++j) {
        std::swap(m.at(a, j), m.at(b, j));
      }
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
      for (std::size_t i = 0; i < m.rows; ++i) {
        std::swap(m.at(i, a), m.at(i, b));
      }
    };
    std::vector<std::int64_t> diag;
    for (std::size_t t = 0; t < k; ++t) {
      while (true) {
        // Pivot on the smallest nonzero absolute value.
        std::size_t  pi = 0, pj = 0;
        std::int64_t best = 0;
        for (std::size_t i = t; i < m.rows; ++i) {
          for (std::size_t j = t; j < m.cols; ++j) {
            std::int64_t v = std::llabs(m.at(i, j));
            if (v != 0 && (best == 0 || v < best)) {
              best = v;
              pi   = i;
              pj   = j;
            }
          }
        }
        if (best == 0) {
          break;
        }
        swap_rows(t, pi);
        swap_cols(t, pj);
        std::int64_t const p     = m.at(t, t);
        bool               clean = true;
        for (std::size_t i = t + 1; i < m.rows; ++i) {
          std::int64_t q = m.at(i, t) / p;
          if (q != 0) {
            for (std::size_t j = t; j < m.cols; ++j) {
              m.at(i, j) -= q * m.at(t, j);
            }
          }
          clean = clean && m.at(i, t) == 0;
        }
        for (std::size_t j = t + 1; j < m.cols; ++j) {
          std::int64_t q = m.at(t, j) / p;
          if (q != 0) {
            for (std::size_t i = t; i < m.rows; ++i) {
              m.at(i, j) -= q * m.at(i, t);
            }
          }
          clean = clean && m.at(t, j) == 0;
        }
        if (clean) {
          break;
        }
      }
      diag.push_back(std::llabs(m.at(t, t)));
    }
    // Enforce d_i | d_{i+1}; gcd/lcm swaps keep the product and the group.
    for (std::size_t i = 0; i < diag.size(); ++i) {
      for (std::size_t j = i + 1; j < diag.size(); ++j) {
        std::int64_t a = diag[i], b = diag[j];
        if (a == 0 && b == 0) {
          continue;
        }
        std::int64_t g = std::gcd(a, b);
        std::int64_t l = (a == 0 || b == 0) ? 0 : a / g * b;
        diag[i]        = g;
        diag[j]        = l;
      }
    }
    return diag;
  }

  IntegerMatrix relation_matrix(Presentation const& p) {
    IntegerMatrix m(p.relators.size(), p.rank);
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      for (Letter x : p.relators[i]) {
        m.at(i, std::abs(x) - 1) += x > 0 ? 1 : -1;
      }
    }
    return m;
  }

  std::vector<std::uint64_t> primary_decomposition(
      std::vector<std::uint64_t> const& cyclic_orders) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n : cyclic_orders) {
      for (std::uint64_t q = 2; n > 1; ++q) {
        if (q * q > n) {
          q = n;
        }
        if (n % q == 0) {
          std::uint64_t pp = 1;
          while (n % q == 0) {
            n /= q;
            pp *= q;
          }
          out.push_back(pp);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::uint64_t> invariant_factors(
      std::vector<std::uint64_t> const& prime_powers) {
    // Group by prime, largest powers first, then multiply across primes.
    std::map<std::uint64_t, std::vector<std::uint64_t>> by_prime;
    for (std::uint64_t q : prime_powers) {
      if (q <= 1) {
        continue;
      }
      std::uint64_t p = 2;
      while (q % p != 0) {
        ++p;
      }
      by_prime[p].push_back(q);
    }
    std::size_t width = 0;
    for (auto& [p, qs] : by_prime) {
      std::sort(qs.rbegin(), qs.rend());
      width = std::max(width, qs.size());
    }
    std::vector<std::uint64_t> factors(width, 1);
    for (auto const& [p, qs] : by_prime) {
      for (std::size_t i = 0; i < qs.size(); ++i) {
        factors[i] *= qs[i];
      }
    }
    std::sort(factors.begin(), factors.end());
    return factors;
  }

  AbelianInvariants abelianization_invariants(Presentation const& p) {
    auto                       diag = smith_normal_form(relation_matrix(p));
    AbelianInvariants          result;
    std::vector<std::uint64_t> torsion;
    std::size_t                nonzero = 0;
    for (std::int64_t d : diag) {
      if (d != 0) {
        ++nonzero;
        torsion.push_back(static_cast<std::uint64_t>(d));
      }
    }
    result.free_rank = p.rank - nonzero;
    result.torsion   = primary_decomposition(torsion);
    return result;
  }

  Presentation abelian_presentation(std::vector<std::uint64_t> const& orders,
                                    std::string                       name) {
    Presentation p;
    p.name = std::move(name);
    if (orders.empty()) {
      p.rank      = 1;
      p.gen_names = {"a"};
      p.relators  = {Word{1}};
      return p;
    }
    p.rank = orders.size();
    for (std::size_t i = 0; i < orders.size(); ++i) {
      p.gen_names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i))
                                   : "x" + std::to_string(i + 1));
      p.relators.push_back(power(Word::generator(i + 1),
                                 static_cast<std::int64_t>(orders[i])));
    }
    for (std::size_t i = 1; i <= orders.size(); ++i) {
      for (std::size_t j = i + 1; j <= orders.size(); ++j) {
        p.relators.push_back(
            commutator(Word::generator(i), Word::generator(j)));
      }
    }
    return p;
  }

}  // namespace chiforge
