#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chiforge/presentation.hpp"

namespace chiforge {

  // A small finite group shipped with the library, together with its order
  // and the abelian invariants of its Schur multiplier.
  struct CatalogEntry {
    std::string_view           name;
    std::string_view           text;
    std::uint64_t              order;
    std::vector<std::uint64_t> schur_multiplier;
  };

  std::span<CatalogEntry const> catalog();

  // Throws ContractViolation on an unknown name.
  CatalogEntry const& catalog_entry(std::string_view name);
  Presentation        catalog_lookup(std::string_view name);

}  // namespace chiforge
