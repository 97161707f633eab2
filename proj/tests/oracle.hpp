#pragma once

// Independent reference computations for the tests. Nothing here calls the
// stabilizer chain or coset enumeration code under test.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "chiforge/permutation.hpp"
#include "chiforge/word.hpp"

namespace oracle {

  using chiforge::Permutation;
  using chiforge::Point;
  using chiforge::Word;

  // Images as plain vectors, composed left to right.
  using Perm = std::vector<Point>;

  inline Perm mul(Perm const& p, Perm const& q) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      r[i] = q[p[i]];
    }
    return r;
  }

  inline Perm inv(Perm const& p) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      r[p[i]] = static_cast<Point>(i);
    }
    return r;
  }

  inline Perm identity(std::size_t n) {
    Perm r(n);
    for (std::size_t i = 0; i < n; ++i) {
      r[i] = static_cast<Point>(i);
    }
    return r;
  }

  inline Perm raw(Permutation const& p) {
    return {p.images().begin(), p.images().end()};
  }

  // Every element of <gens>, by breadth-first multiplication.
  inline std::set<Perm> closure(std::vector<Perm> const& gens, std::size_t degree) {
    std::set<Perm>    seen{identity(degree)};
    std::vector<Perm> frontier{identity(degree)};
    while (!frontier.empty()) {
      std::vector<Perm> next;
      for (auto const& x : frontier) {
        for (auto const& g : gens) {
          auto y = mul(x, g);
          if (seen.insert(y).second) {
            next.push_back(y);
          }
        }
      }
      frontier = std::move(next);
    }
    return seen;
  }

  inline std::set<Perm> closure(std::vector<Permutation> const& gens, std::size_t degree) {
    std::vector<Perm> r;
    for (auto const& g : gens) {
      r.push_back(raw(g));
    }
    return closure(r, degree);
  }

  inline Perm eval(Word const& w, std::vector<Perm> const& gens, std::size_t degree) {
    Perm r = identity(degree);
    for (auto x : w) {
      auto const& g = gens[static_cast<std::size_t>(x > 0 ? x : -x) - 1];
      r             = mul(r, x > 0 ? g : inv(g));
    }
    return r;
  }

  inline std::uint64_t perm_order(Perm const& p) {
    Perm          x = p;
    std::uint64_t k = 1;
    while (x != identity(p.size())) {
      x = mul(x, p);
      ++k;
    }
    return k;
  }

  // A faithful permutation model of each catalog group, generator i of the
  // catalog presentation mapped to gens[i - 1].
  struct Model {
    std::size_t              degree;
    std::vector<Permutation> gens;
  };

  inline std::map<std::string, Model> const& models() {
    using P = Permutation;
    static std::map<std::string, Model> const m = {
        {"C2", {2, {P::from_cycles(2, {{1, 2}})}}},
        {"C3", {3, {P::from_cycles(3, {{1, 2, 3}})}}},
        {"C4", {4, {P::from_cycles(4, {{1, 2, 3, 4}})}}},
        {"C5", {5, {P::from_cycles(5, {{1, 2, 3, 4, 5}})}}},
        {"C6", {6, {P::from_cycles(6, {{1, 2, 3, 4, 5, 6}})}}},
        {"C8", {8, {P::from_cycles(8, {{1, 2, 3, 4, 5, 6, 7, 8}})}}},
        {"C2xC2", {4, {P::from_cycles(4, {{1, 2}}), P::from_cycles(4, {{3, 4}})}}},
        {"C2xC4", {6, {P::from_cycles(6, {{1, 2}}), P::from_cycles(6, {{3, 4, 5, 6}})}}},
        {"C2xC2xC2",
         {6, {P::from_cycles(6, {{1, 2}}), P::from_cycles(6, {{3, 4}}), P::from_cycles(6, {{5, 6}})}}},
        {"S3", {3, {P::from_cycles(3, {{1, 2}}), P::from_cycles(3, {{1, 2, 3}})}}},
        {"D4", {4, {P::from_cycles(4, {{1, 2, 3, 4}}), P::from_cycles(4, {{1, 3}})}}},
        {"Q8",
         {8, {P::from_cycles(8, {{1, 2, 3, 4}, {5, 6, 7, 8}}),
              P::from_cycles(8, {{1, 5, 3, 7}, {2, 8, 4, 6}})}}},
        {"D5", {5, {P::from_cycles(5, {{1, 2, 3, 4, 5}}), P::from_cycles(5, {{2, 5}, {3, 4}})}}},
        {"D6",
         {6, {P::from_cycles(6, {{1, 2, 3, 4, 5, 6}}), P::from_cycles(6, {{2, 6}, {3, 5}})}}},
        {"A4", {4, {P::from_cycles(4, {{1, 2}, {3, 4}}), P::from_cycles(4, {{1, 2, 3}})}}},
        {"C3xC3", {6, {P::from_cycles(6, {{1, 2, 3}}), P::from_cycles(6, {{4, 5, 6}})}}},
    };
    return m;
  }

  // |chi(G)| from an independent coset enumeration (sympy's fp_groups) of
  // the element-level presentation, frozen here.
  inline std::map<std::string, std::uint64_t> const& chi_orders() {
    static std::map<std::string, std::uint64_t> const m = {
        {"C2", 4},      {"C3", 9},      {"C4", 16},  {"C5", 25},       {"C6", 36},
        {"C8", 64},     {"C2xC2", 32},  {"S3", 108}, {"Q8", 128},      {"D4", 256},
        {"C2xC4", 128}, {"C3xC3", 243}, {"D5", 500}, {"C2xC2xC2", 1024}, {"A4", 1152},
        {"D6", 864},
    };
    return m;
  }

  // Schur multipliers worked out by hand: M(A) = A ^ A for abelian A
  // (C_m ^ C_n = C_gcd(m,n)), M(D_2n) = C2 for even n and trivial for odd n,
  // M(Q8) = 1, M(A4) = C2.
  inline std::map<std::string, std::vector<std::uint64_t>> const& schur() {
    static std::map<std::string, std::vector<std::uint64_t>> const m = {
        {"C2", {}},       {"C3", {}},        {"C4", {}},  {"C5", {}},  {"C6", {}},
        {"C8", {}},       {"C2xC2", {2}},    {"C2xC4", {2}},
        {"C2xC2xC2", {2, 2, 2}},             {"S3", {}},  {"D4", {2}}, {"Q8", {}},
        {"D5", {}},       {"D6", {2}},       {"A4", {2}}, {"C3xC3", {3}},
    };
    return m;
  }

}  // namespace oracle
