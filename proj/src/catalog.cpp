#include "chiforge/catalog.hpp"

#include <algorithm>

#include "chiforge/error.hpp"

namespace chiforge {

  namespace {
    // Multipliers: M(A) = A ^ A for abelian A; M(D_2n) = C2 for n even and
    // trivial for n odd; M(Q8) = 1; M(A4) = C2.
    std::vector<CatalogEntry> const& entries() {
      static std::vector<CatalogEntry> const table = {
          {"C2", "gens: a\nrels: a^2\n", 2, {}},
          {"C3", "gens: a\nrels: a^3\n", 3, {}},
          {"C4", "gens: a\nrels: a^4\n", 4, {}},
          {"C5", "gens: a\nrels: a^5\n", 5, {}},
          {"C6", "gens: a\nrels: a^6\n", 6, {}},
          {"C8", "gens: a\nrels: a^8\n", 8, {}},
          {"C2xC2", "gens: a b\nrels: a^2 b^2 (a b)^2\n", 4, {2}},
          {"C2xC4",
           "gens: a b\nrels: a^2 b^4 (a^-1 b^-1 a b)\n",
           8,
           {2}},
          {"C2xC2xC2",
           "gens: a b c\nrels: a^2 b^2 c^2 (a b)^2 (a c)^2 (b c)^2\n",
           8,
           {2, 2, 2}},
          {"S3", "gens: a b\nrels: a^2 b^3 (a b)^2\n", 6, {}},
          {"D4", "gens: a b\nrels: a^4 b^2 (a b)^2\n", 8, {2}},
          {"Q8", "gens: a b\nrels: a^4 (a^2 b^-2) (b^-1 a b a)\n", 8, {}},
          {"D5", "gens: a b\nrels: a^5 b^2 (a b)^2\n", 10, {}},
          {"D6", "gens: a b\nrels: a^6 b^2 (a b)^2\n", 12, {2}},
          {"A4", "gens: a b\nrels: a^2 b^3 (a b)^3\n", 12, {2}},
          {"C3xC3",
           "gens: a b\nrels: a^3 b^3 (a^-1 b^-1 a b)\n",
           9,
           {3}},
      };
      return table;
    }
  }  // namespace

  std::span<CatalogEntry const> catalog() {
    return entries();
  }

  CatalogEntry const& catalog_entry(std::string_view name) {
    auto const& all = entries();
    auto it = std::find_if(all.begin(), all.end(), [&](CatalogEntry const& e) {
      return e.name == name;
    });
    if (it == all.end()) {
      throw ContractViolation("unknown catalog group '" + std::string(name)
                              + "'");
    }
    return *it;
  }

  Presentation catalog_lookup(std::string_view name) {
    CatalogEntry const& e = catalog_entry(name);
    return parse_presentation(e.text, std::string(e.name));
  }

}  // namespace chiforge
