#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chiforge/chi_nu.hpp"
#include "chiforge/coset_enum.hpp"
#include "chiforge/perm_group.hpp"
#include "chiforge/permutation.hpp"
#include "chiforge/presentation.hpp"

namespace chiforge {

  struct AnalysisOptions {
    std::size_t max_cosets    = default_max_cosets;
    Strategy    strategy      = Strategy::hlt;
    NuScope     nu_scope      = NuScope::elements;
    std::size_t engel_max     = 10;
    std::size_t element_limit = default_element_limit;
  };

  // G in its regular representation together with one word per element.
  struct GroupModel {
    Presentation             presentation;
    std::vector<Word>        element_words;
    std::vector<Permutation> generators;
    std::vector<Permutation> element_images;  // element_images[i] is element_words[i]
    PermGroup                group;
  };

  GroupModel model_group(Presentation const& p, AnalysisOptions const& opts = {});

  // chi(G) in its regular representation. g_block and phi_block are the
  // images of the letters 1..r and r+1..2r; element_images[i] and
  // phi_images[i] those of element word i and its phi-copy.
  struct ChiModel {
    GroupModel               g;
    DoubledPresentation      presentation;
    std::vector<Permutation> generators;
    PermGroup                chi;
    std::vector<Permutation> g_block;
    std::vector<Permutation> phi_block;
    std::vector<Permutation> element_images;
    std::vector<Permutation> phi_images;
  };

  ChiModel model_chi(Presentation const& p, AnalysisOptions const& opts = {});

  struct Lattice {
    PermGroup g_bar;
    PermGroup g_phi;
    PermGroup L;
    PermGroup D;
    PermGroup W;
    PermGroup R;
  };

  Lattice compute_lattice(PermGroup const&                chi,
                          std::span<Permutation const>    g_block,
                          std::span<Permutation const>    phi_block,
                          std::vector<Permutation> const& element_images,
                          std::vector<Permutation> const& phi_images,
                          std::size_t limit = default_element_limit);

  // A member of T_chi(G) with the first pair (g, h) giving it.
  struct TensorMember {
    Permutation value;
    std::string label;  // "[g,h_f]"
  };

  // The commutators [g, h^phi] over all ordered element pairs, deduplicated,
  // in order of first occurrence. Throws LimitExceeded if |G|^2 > limit.
  std::vector<TensorMember> tensor_set(ChiModel const& m,
                                       std::size_t limit = default_element_limit);

  struct OrderCount {
    std::uint64_t order = 0;
    std::uint64_t count = 0;
  };

  struct TensorProfile {
    std::vector<OrderCount> counts;  // ascending by order
    // (p, all orders are powers of p) for each prime p dividing |G|
    std::vector<std::pair<std::uint64_t, bool>> p_power_orders;
  };

  TensorProfile tensor_order_profile(std::vector<TensorMember> const& tset,
                                     std::uint64_t                    order_G);

  // Least n in 1..max_n with [x,_n t] = 1, where [x,_1 t] = [x, t].
  std::optional<std::uint64_t> engel_degree(PermGroup const&   chi,
                                            Permutation const& t,
                                            Permutation const& x,
                                            std::uint64_t      max_n);

  struct CheckResult {
    std::string name;
    bool        pass = false;
    std::string witness;  // empty on a plain pass
  };

  struct EngelSample {
    std::string                  t;
    std::string                  x;
    std::optional<std::uint64_t> n;
  };

  struct ChiAnalysis {
    std::string                group_name;
    std::uint64_t              order_G     = 0;
    std::uint64_t              exp_G       = 0;
    std::uint64_t              order_chi   = 0;
    std::uint64_t              exp_chi     = 0;
    std::uint64_t              order_L     = 0;
    std::uint64_t              exp_L       = 0;
    std::uint64_t              order_D     = 0;
    std::uint64_t              exp_D       = 0;
    std::uint64_t              order_W     = 0;
    std::uint64_t              order_R     = 0;
    std::uint64_t              order_T3    = 0;
    std::uint64_t              t_chi_size  = 0;
    std::vector<std::uint64_t> w_mod_r_invariants;
    std::vector<std::uint64_t> g_ab_invariants;
    std::uint64_t              derived_order_G = 0;
    std::vector<CheckResult>   checks;
    TensorProfile              tensor_order_stats;
    std::vector<EngelSample>   engel_degrees;

    bool all_pass() const;
    CheckResult const* check(std::string_view name) const;
  };

  // Fills the lattice orders and evaluates every structural check. With
  // declared_schur unset the "schur" check is reported as not applicable.
  ChiAnalysis analyze(Presentation const&                              p,
                      std::optional<std::vector<std::uint64_t>> const& declared_schur,
                      AnalysisOptions const& opts = {});

  ChiAnalysis analyze(ChiModel const&                                  m,
                      std::optional<std::vector<std::uint64_t>> const& declared_schur,
                      AnalysisOptions const& opts = {});

  struct NuModel {
    DoubledPresentation      presentation;
    std::vector<Permutation> generators;
    PermGroup                nu;
  };

  NuModel model_nu(GroupModel const& g, NuScope scope, AnalysisOptions const& opts = {});

  struct NuComparison {
    std::string   group_name;
    NuScope       scope                 = NuScope::elements;
    std::uint64_t order_nu              = 0;
    std::uint64_t order_delta_generated = 0;
    std::uint64_t order_delta           = 0;  // after normal closure
    bool          closure_needed        = false;
    std::uint64_t order_chi             = 0;
    std::uint64_t order_R               = 0;
    // |nu(G)| with the other relator scope; unset if that enumeration
    // overflowed.
    std::optional<std::uint64_t> order_nu_other_scope;
    bool                         pass = false;
  };

  // Checks |nu| / |Delta| = |chi| / |R| at the level of orders.
  NuComparison verify_nu_chi(ChiModel const&        chi,
                             std::uint64_t          order_R,
                             AnalysisOptions const& opts = {});

  NuComparison verify_nu_chi(Presentation const& p, AnalysisOptions const& opts = {});

  struct SurveyRow {
    std::string                 name;
    std::optional<ChiAnalysis>  analysis;
    std::optional<NuComparison> nu;
    std::string                 error;  // nonempty if the row could not be computed

    bool all_pass() const;
  };

  // Analyzes every catalog entry, sorted by (order, name). nu comparisons are
  // run for orders up to nu_order_limit.
  std::vector<SurveyRow> survey(AnalysisOptions const& opts, std::uint64_t nu_order_limit);

  std::string to_json(ChiAnalysis const& a);
  std::string to_json(NuComparison const& n);
  std::string to_json(std::vector<SurveyRow> const& rows);
  std::string to_text(ChiAnalysis const& a);
  std::string to_text(NuComparison const& n);
  std::string to_text(std::vector<SurveyRow> const& rows);
  std::string csv_header();
  std::string to_csv_row(ChiAnalysis const& a, bool all_pass);
  std::string to_csv(std::vector<SurveyRow> const& rows);

}  // namespace chiforge
