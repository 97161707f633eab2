#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "chiforge/permutation.hpp"
#include "chiforge/presentation.hpp"

namespace chiforge {

  inline constexpr std::size_t default_element_limit = 20'000;

  // A sequence of points whose images determine every element of some
  // ambient permutation group (for a regular action, any single point).
  // Groups sharing a Universe are subgroups of that ambient group, which lets
  // membership tests of ambient elements compare base images only.
  struct Universe {
    std::vector<Point> base;
  };

  std::shared_ptr<Universe const> make_universe(std::vector<Point> base);

  class StabilizerChain;

  // A permutation group given by generators, with a stabilizer chain built
  // on first use by deterministic Schreier-Sims.
  class PermGroup {
   public:
    PermGroup() : PermGroup(0, {}) {}
    PermGroup(std::size_t                     degree,
              std::vector<Permutation>        generators,
              std::shared_ptr<Universe const> universe = nullptr);

    std::size_t degree() const noexcept {
      return degree_;
    }
    std::span<Permutation const> generators() const noexcept {
      return generators_;
    }
    std::shared_ptr<Universe const> const& universe() const noexcept {
      return universe_;
    }

    std::uint64_t order() const;

    // Full membership test for an arbitrary permutation of the same degree.
    bool contains(Permutation const& p) const;

    // Membership test for p known to lie in this group's universe.
    bool contains_ambient_element(Permutation const& p) const;

    // The subgroup generated by gens, sharing this group's universe; the
    // caller guarantees gens lie in this group.
    PermGroup subgroup(std::vector<Permutation> gens) const;

    bool is_subgroup_of(PermGroup const& other) const;
    bool is_abelian() const;
    bool is_trivial() const;

    std::vector<Point> base() const;

    // Calls f on every element exactly once in a deterministic order. Throws
    // LimitExceeded if order() > limit.
    void for_each_element(std::function<void(Permutation const&)> const& f,
                          std::size_t limit = default_element_limit) const;

   private:
    StabilizerChain const& chain() const;

    struct Lazy;

    std::size_t                     degree_;
    std::vector<Permutation>        generators_;
    std::shared_ptr<Universe const> universe_;
    std::shared_ptr<Lazy>           lazy_;
  };

  std::uint64_t order(PermGroup const& g);
  bool          contains(PermGroup const& g, Permutation const& p);

  PermGroup subgroup_closure(std::size_t                     degree,
                             std::vector<Permutation> const& gens,
                             std::shared_ptr<Universe const> universe = nullptr);

  // Smallest subgroup of ambient that contains seeds and is normalized by
  // ambient. Throws ContractViolation if a seed is not in ambient.
  PermGroup normal_closure(PermGroup const&                ambient,
                           std::vector<Permutation> const& seeds);

  // [a, b] as the normal closure in <a, b> of the generator commutators.
  // Throws ContractViolation unless a, b <= ambient.
  PermGroup commutator_subgroup(PermGroup const& a,
                                PermGroup const& b,
                                PermGroup const& ambient);

  // Filters the elements of the smaller group through membership in the
  // other.
  PermGroup intersection(PermGroup const& a,
                         PermGroup const& b,
                         std::size_t      limit = default_element_limit);

  std::vector<Permutation> elements(PermGroup const& g,
                                    std::size_t limit = default_element_limit);

  std::uint64_t exponent(PermGroup const& g,
                         std::size_t      limit = default_element_limit);

  // Least k >= 1 with p^k = 1. Throws ContractViolation if p is not in g.
  std::uint64_t element_order(PermGroup const& g, Permutation const& p);

  // Prime-power invariants of an abelian group, from counts of element
  // orders. Throws ContractViolation for non-abelian input.
  std::vector<std::uint64_t> abelian_invariants(
      PermGroup const& g,
      std::size_t      limit = default_element_limit);

  // Invariants of the abelian quotient w / r. Requires r <= w, r normal in w
  // and w / r abelian (in particular any abelian w).
  std::vector<std::uint64_t> quotient_abelian_invariants(
      PermGroup const& w,
      PermGroup const& r,
      std::size_t      limit = default_element_limit);

  // Order of the coset x r in w / r: least k >= 1 with x^k in r.
  std::uint64_t coset_order(PermGroup const& r, Permutation const& x);

  // Recovers the prime-power invariants of a finite abelian group from the
  // number of its elements of each order.
  std::vector<std::uint64_t> invariants_from_order_counts(
      std::vector<std::uint64_t> const& element_orders);

  struct HomImage {
    PermGroup image;
    bool      verified = false;
    // First relator (rendered) that failed to map to the identity.
    std::string failed_relator;
  };

  // Maps generator i of src to images[i - 1] and checks every relator.
  HomImage verified_hom(Presentation const&             src,
                        std::vector<Permutation> const& images,
                        std::size_t                     target_degree,
                        std::shared_ptr<Universe const> universe = nullptr);

}  // namespace chiforge
