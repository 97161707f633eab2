#include "chiforge/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "chiforge/catalog.hpp"
#include "chiforge/error.hpp"

namespace chiforge {

  namespace {
    std::string const not_applicable = "not applicable: ";

    std::string str(std::uint64_t v) {
      return std::to_string(v);
    }

    std::string join(std::vector<std::uint64_t> const& v) {
      std::string out = "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? "," : "") + str(v[i]);
      }
      return out + "]";
    }

    // The permutation of {0..k*n-1} acting on block b by parts[b].
    Permutation block_product(std::vector<Permutation> const& parts, std::size_t n) {
      std::vector<Point> images(parts.size() * n);
      for (std::size_t b = 0; b < parts.size(); ++b) {
        for (std::size_t i = 0; i < n; ++i) {
          images[b * n + i] = static_cast<Point>(b * n + parts[b](static_cast<Point>(i)));
        }
      }
      return Permutation(std::move(images));
    }

    std::vector<Point> block_base(std::size_t blocks, std::size_t n) {
      std::vector<Point> base;
      for (std::size_t b = 0; b < blocks; ++b) {
        base.push_back(static_cast<Point>(b * n));
      }
      return base;
    }

    std::vector<Permutation> dedup_nontrivial(std::vector<Permutation> v) {
      std::vector<Permutation> out;
      std::set<Permutation>    seen;
      for (auto& p : v) {
        if (!p.is_identity() && seen.insert(p).second) {
          out.push_back(std::move(p));
        }
      }
      return out;
    }

    bool same_subgroup(PermGroup const& a, PermGroup const& b) {
      if (a.order() != b.order()) {
        return false;
      }
      for (auto const& x : a.generators()) {
        if (!b.contains(x)) {
          return false;
        }
      }
      return true;
    }

    bool commute(Permutation const& a, Permutation const& b) {
      return a * b == b * a;
    }

    std::vector<std::uint64_t> primes_dividing(std::uint64_t n) {
      std::vector<std::uint64_t> out;
      for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
          out.push_back(p);
          while (n % p == 0) {
            n /= p;
          }
        }
      }
      if (n > 1) {
        out.push_back(n);
      }
      return out;
    }

    bool is_power_of(std::uint64_t v, std::uint64_t p) {
      while (v % p == 0) {
        v /= p;
      }
      return v == 1;
    }

    class CheckList {
     public:
      void add(std::string name, bool pass, std::string witness = {}) {
        checks_.push_back({std::move(name), pass, std::move(witness)});
      }
      void skip(std::string name, std::string const& reason) {
        add(std::move(name), true, not_applicable + reason);
      }
      std::vector<CheckResult> take() {
        return std::move(checks_);
      }

     private:
      std::vector<CheckResult> checks_;
    };
  }  // namespace

  GroupModel model_group(Presentation const& p, AnalysisOptions const& opts) {
    p.validate();
    auto       table = enumerate(p, {}, opts.max_cosets, opts.strategy);
    GroupModel g;
    g.presentation  = p;
    g.element_words = schreier_words(table);
    g.generators    = regular_representation(table);
    auto const n    = table.live_count();
    for (Word const& w : g.element_words) {
      g.element_images.push_back(evaluate(w, g.generators, n));
    }
    g.group = PermGroup(n, g.generators, make_universe({0}));
    return g;
  }

  ChiModel model_chi(Presentation const& p, AnalysisOptions const& opts) {
    ChiModel m;
    m.g            = model_group(p, opts);
    m.presentation = build_chi(p, m.g.element_words);
    auto table     = enumerate(m.presentation.doubled, {}, opts.max_cosets, opts.strategy);
    m.generators   = regular_representation(table);
    auto const n   = table.live_count();
    m.chi          = PermGroup(n, m.generators, make_universe({0}));
    auto const r   = p.rank;
    m.g_block.assign(m.generators.begin(), m.generators.begin() + r);
    m.phi_block.assign(m.generators.begin() + r, m.generators.end());
    for (Word const& w : m.g.element_words) {
      m.element_images.push_back(evaluate(w, m.g_block, n));
      m.phi_images.push_back(evaluate(w, m.phi_block, n));
    }
    return m;
  }

  Lattice compute_lattice(PermGroup const&                chi,
                          std::span<Permutation const>    g_block,
                          std::span<Permutation const>    phi_block,
                          std::vector<Permutation> const& element_images,
                          std::vector<Permutation> const& phi_images,
                          std::size_t                     limit) {
    if (element_images.size() != phi_images.size()) {
      throw ContractViolation("compute_lattice: element image lists differ in length");
    }
    Lattice lat;
    lat.g_bar = chi.subgroup({g_block.begin(), g_block.end()});
    lat.g_phi = chi.subgroup({phi_block.begin(), phi_block.end()});
    std::vector<Permutation> l_gens;
    for (std::size_t i = 0; i < element_images.size(); ++i) {
      l_gens.push_back(element_images[i].inverse() * phi_images[i]);
    }
    lat.L = chi.subgroup(dedup_nontrivial(std::move(l_gens)));
    lat.D = commutator_subgroup(lat.g_bar, lat.g_phi, chi);
    lat.W = intersection(lat.L, lat.D, limit);
    lat.R = commutator_subgroup(commutator_subgroup(lat.g_bar, lat.L, chi), lat.g_phi, chi);
    return lat;
  }

  std::vector<TensorMember> tensor_set(ChiModel const& m, std::size_t limit) {
    auto const n = m.element_images.size();
    if (n * n > limit) {
      throw LimitExceeded("tensor set pair evaluations", limit);
    }
    auto const& names = m.presentation.doubled.gen_names;
    auto const  r     = m.g.presentation.rank;
    std::vector<TensorMember> out;
    std::set<Permutation>     seen;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto c = commutator(m.element_images[i], m.phi_images[j]);
        if (seen.insert(c).second) {
          out.push_back({std::move(c),
                         "[" + to_string(m.g.element_words[i], names) + ","
                             + to_string(phi(m.g.element_words[j], r), names) + "]"});
        }
      }
    }
    return out;
  }

  TensorProfile tensor_order_profile(std::vector<TensorMember> const& tset,
                                     std::uint64_t                    order_G) {
    std::map<std::uint64_t, std::uint64_t> counts;
    for (auto const& t : tset) {
      ++counts[t.value.order()];
    }
    TensorProfile prof;
    for (auto const& [o, c] : counts) {
      prof.counts.push_back({o, c});
    }
    for (auto p : primes_dividing(order_G)) {
      bool all = std::all_of(counts.begin(), counts.end(),
                             [p](auto const& oc) { return is_power_of(oc.first, p); });
      prof.p_power_orders.emplace_back(p, all);
    }
    return prof;
  }

  std::optional<std::uint64_t> engel_degree(PermGroup const&   chi,
                                            Permutation const& t,
                                            Permutation const& x,
                                            std::uint64_t      max_n) {
    if (!chi.contains(t) || !chi.contains(x)) {
      throw ContractViolation("engel_degree: arguments must lie in the group");
    }
    Permutation y = commutator(x, t);
    for (std::uint64_t n = 1; n <= max_n; ++n) {
      if (y.is_identity()) {
        return n;
      }
      y = commutator(y, t);
    }
    return std::nullopt;
  }

  bool ChiAnalysis::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](CheckResult const& c) { return c.pass; });
  }

  CheckResult const* ChiAnalysis::check(std::string_view name) const {
    for (auto const& c : checks) {
      if (c.name == name) {
        return &c;
      }
    }
    return nullptr;
  }

  ChiAnalysis analyze(Presentation const&                              p,
                      std::optional<std::vector<std::uint64_t>> const& declared_schur,
                      AnalysisOptions const&                           opts) {
    return analyze(model_chi(p, opts), declared_schur, opts);
  }

  ChiAnalysis analyze(ChiModel const&                                  m,
                      std::optional<std::vector<std::uint64_t>> const& declared_schur,
                      AnalysisOptions const&                           opts) {
    auto const  limit = opts.element_limit;
    auto const& G     = m.g.group;
    auto const& chi   = m.chi;
    auto const  n     = G.degree();
    auto const& pres  = m.presentation.doubled;

    ChiAnalysis a;
    a.group_name = m.g.presentation.name;
    a.order_G    = G.order();
    a.exp_G      = exponent(G, limit);
    a.order_chi  = chi.order();
    a.exp_chi    = exponent(chi, limit);

    auto lat = compute_lattice(chi, m.g_block, m.phi_block, m.element_images, m.phi_images, limit);
    a.order_L = lat.L.order();
    a.exp_L   = exponent(lat.L, limit);
    a.order_D = lat.D.order();
    a.exp_D   = exponent(lat.D, limit);
    a.order_W = lat.W.order();
    a.order_R = lat.R.order();

    auto g_prime      = commutator_subgroup(G, G, G);
    a.derived_order_G = g_prime.order();
    a.g_ab_invariants = abelianization_invariants(m.g.presentation).torsion;

    // T(G) <= G^3 from its definition.
    std::vector<Permutation> t3_gens;
    Permutation const        id(n);
    for (auto const& e : m.g.element_images) {
      t3_gens.push_back(block_product({e, e, id}, n));
      t3_gens.push_back(block_product({id, e, e}, n));
    }
    PermGroup t3(3 * n, dedup_nontrivial(std::move(t3_gens)), make_universe(block_base(3, n)));
    a.order_T3 = t3.order();

    auto tset    = tensor_set(m, limit);
    a.t_chi_size = tset.size();

    CheckList checks;

    {
      std::string witness;
      for (std::size_t i = 0; i < lat.L.generators().size() && witness.empty(); ++i) {
        for (std::size_t j = 0; j < lat.D.generators().size(); ++j) {
          if (!commute(lat.L.generators()[i], lat.D.generators()[j])) {
            witness = "L generator " + str(i) + " does not commute with D generator " + str(j);
            break;
          }
        }
      }
      checks.add("commute_LD", witness.empty(), witness);
    }
    checks.add("W_abelian", lat.W.is_abelian(), lat.W.is_abelian() ? "" : "W is not abelian");

    // Homomorphisms out of chi(G), checked relator by relator.
    auto const r = m.g.presentation.rank;
    {
      std::vector<Permutation> images;
      for (std::size_t k = 0; k < 2; ++k) {
        images.insert(images.end(), m.g.generators.begin(), m.g.generators.end());
      }
      auto hom  = verified_hom(pres, images, n, G.universe());
      auto img  = hom.verified ? hom.image.order() : 0;
      bool pass = hom.verified && img == a.order_G && a.order_chi == a.order_G * a.order_L;
      checks.add("kernel_L", pass,
                 pass ? "" : !hom.verified ? "relator " + hom.failed_relator + " not killed"
                                           : "image order " + str(img) + ", |chi| = " + str(a.order_chi)
                                                 + ", |G||L| = " + str(a.order_G * a.order_L));
    }
    {
      std::vector<Permutation> images;
      for (auto const& g : m.g.generators) {
        images.push_back(block_product({g, id}, n));
      }
      for (auto const& g : m.g.generators) {
        images.push_back(block_product({id, g}, n));
      }
      auto hom  = verified_hom(pres, images, 2 * n, make_universe(block_base(2, n)));
      auto img  = hom.verified ? hom.image.order() : 0;
      auto g2   = a.order_G * a.order_G;
      bool pass = hom.verified && img == g2 && a.order_chi == g2 * a.order_D;
      checks.add("kernel_D", pass,
                 pass ? "" : !hom.verified ? "relator " + hom.failed_relator + " not killed"
                                           : "image order " + str(img) + ", |chi| = " + str(a.order_chi)
                                                 + ", |G|^2|D| = " + str(g2 * a.order_D));
    }
    {
      std::vector<Permutation> images;
      for (auto const& g : m.g.generators) {
        images.push_back(block_product({g, g, id}, n));
      }
      for (auto const& g : m.g.generators) {
        images.push_back(block_product({id, g, g}, n));
      }
      auto hom    = verified_hom(pres, images, 3 * n, t3.universe());
      bool inside = hom.verified && hom.image.is_subgroup_of(t3);
      auto img    = hom.verified ? hom.image.order() : 0;
      bool pass   = inside && img == a.order_T3 && a.order_chi == a.order_T3 * a.order_W;
      checks.add("kernel_W", pass,
                 pass ? "" : !hom.verified ? "relator " + hom.failed_relator + " not killed"
                                           : "image order " + str(img) + ", |T(G)| = " + str(a.order_T3)
                                                 + ", |T(G)||W| = " + str(a.order_T3 * a.order_W));
    }

    {
      std::string witness;
      if (a.order_D != a.order_W * a.derived_order_G) {
        witness = "|D|/|W| = " + str(a.order_D / std::max<std::uint64_t>(a.order_W, 1))
                + ", |G'| = " + str(a.derived_order_G);
      } else if (g_prime.is_abelian()) {
        try {
          auto q  = quotient_abelian_invariants(lat.D, lat.W, limit);
          auto gp = abelian_invariants(g_prime, limit);
          if (q != gp) {
            witness = "D/W invariants " + join(q) + ", G' invariants " + join(gp);
          }
        } catch (ContractViolation const& e) {
          witness = e.what();
        }
      }
      checks.add("D_mod_W_is_Gprime", witness.empty(), witness);
    }

    {
      std::string witness;
      try {
        a.w_mod_r_invariants = quotient_abelian_invariants(lat.W, lat.R, limit);
      } catch (ContractViolation const& e) {
        witness = std::string("W/R: ") + e.what();
      }
      if (!witness.empty()) {
        checks.add("schur", false, witness);
      } else if (!declared_schur) {
        checks.skip("schur", "no declared multiplier for this input");
      } else if (*declared_schur != a.w_mod_r_invariants) {
        checks.add("schur", false,
                   "W/R invariants " + join(a.w_mod_r_invariants) + ", declared " + join(*declared_schur));
      } else {
        checks.add("schur", true);
      }
    }

    {
      auto        l_prime = commutator_subgroup(lat.L, lat.L, chi);
      std::string witness;
      for (std::size_t i = 0; i < m.element_images.size(); ++i) {
        auto x = m.element_images[i].inverse() * m.phi_images[i];
        auto k = coset_order(l_prime, x);
        auto o = m.g.element_images[i].order();
        if (o % k != 0) {
          witness = "element " + to_string(m.g.element_words[i], m.g.presentation.gen_names)
                  + " has order " + str(o) + " but its L/L' class has order " + str(k);
          break;
        }
      }
      checks.add("thmA_order_divides", witness.empty(), witness);
    }

    checks.add("thmB_sets", a.t_chi_size <= a.order_D,
               a.t_chi_size <= a.order_D
                   ? ""
                   : "|T_chi| = " + str(a.t_chi_size) + " > |D| = " + str(a.order_D));

    if (!G.is_abelian()) {
      checks.skip("abelian_square_identity", "G is not abelian");
    } else {
      std::string witness;
      auto const  k = m.element_images.size();
      for (std::size_t i = 0; i < k && witness.empty(); ++i) {
        auto const& x  = m.element_images[i];
        auto        x2 = x * x;
        for (std::size_t j = 0; j < k; ++j) {
          auto const& y = m.phi_images[j];
          if (commutator(x2, y) != commutator(x, y).pow(2)) {
            witness = "fails for pair (" + str(i) + ", " + str(j) + ")";
            break;
          }
        }
      }
      checks.add("abelian_square_identity", witness.empty(), witness);
    }

    auto g_bar_prime = commutator_subgroup(lat.g_bar, lat.g_bar, chi);
    auto g_phi_prime = commutator_subgroup(lat.g_phi, lat.g_phi, chi);
    auto k_sub       = commutator_subgroup(g_bar_prime, lat.g_phi, chi);
    {
      auto ab    = abelian_presentation(a.g_ab_invariants, a.group_name + "^ab");
      auto m_ab  = model_chi(ab, opts);
      auto d_ab  = commutator_subgroup(m_ab.chi.subgroup(m_ab.g_block),
                                       m_ab.chi.subgroup(m_ab.phi_block), m_ab.chi);
      auto lhs   = a.order_D;
      auto rhs   = k_sub.order() * d_ab.order();
      checks.add("exact_sequence_orders", lhs == rhs,
                 lhs == rhs ? "" : "|D| = " + str(lhs) + ", |[G',G^phi]||D(G^ab)| = " + str(rhs));
    }
    {
      std::vector<Permutation> gens(g_bar_prime.generators().begin(), g_bar_prime.generators().end());
      gens.insert(gens.end(), g_phi_prime.generators().begin(), g_phi_prime.generators().end());
      auto both  = chi.subgroup(gens);
      auto inter = intersection(lat.D, both, limit);
      bool pass  = same_subgroup(k_sub, inter) && same_subgroup(inter, k_sub);
      checks.add("intersection_formula", pass,
                 pass ? "" : "|[G',G^phi]| = " + str(k_sub.order()) + ", |D meet <G',G'^phi>| = "
                                 + str(inter.order()));

      // With <G',G'^phi> replaced by its normal closure, the kernel of
      // chi(G) -> chi(G^ab).
      auto kernel     = normal_closure(chi, dedup_nontrivial(std::move(gens)));
      auto inter_norm = intersection(lat.D, kernel, limit);
      bool pass_norm  = same_subgroup(k_sub, inter_norm) && same_subgroup(inter_norm, k_sub);
      checks.add("intersection_formula_normal", pass_norm,
                 pass_norm ? "" : "|[G',G^phi]| = " + str(k_sub.order())
                                      + ", |D meet <G',G'^phi>^chi| = " + str(inter_norm.order()));
    }

    checks.add("exp_surjection", a.exp_chi % a.exp_G == 0,
               a.exp_chi % a.exp_G == 0 ? ""
                                        : "exp(G) = " + str(a.exp_G) + ", exp(chi) = " + str(a.exp_chi));

    {
      bool pass = a.order_chi == a.order_G * a.order_L
               && a.order_chi == a.order_G * a.order_G * a.order_D
               && a.order_chi == a.order_T3 * a.order_W;
      checks.add("order_factorizations", pass,
                 pass ? "" : "|G||L| = " + str(a.order_G * a.order_L) + ", |G|^2|D| = "
                                 + str(a.order_G * a.order_G * a.order_D) + ", |T(G)||W| = "
                                 + str(a.order_T3 * a.order_W) + ", |chi| = " + str(a.order_chi));
    }
    {
      std::string witness;
      std::vector<std::pair<char const*, std::uint64_t>> const subs = {
          {"L", a.order_L}, {"D", a.order_D}, {"W", a.order_W}, {"R", a.order_R}, {"T(G)", a.order_T3}};
      for (auto const& [name, o] : subs) {
        if (o == 0 || a.order_chi % o != 0) {
          witness = std::string("|") + name + "| = " + str(o) + " does not divide |chi|";
          break;
        }
      }
      if (witness.empty() && !(lat.R.is_subgroup_of(lat.W) && lat.W.is_subgroup_of(lat.L)
                               && lat.W.is_subgroup_of(lat.D))) {
        witness = "R <= W <= L meet D fails";
      }
      checks.add("lagrange", witness.empty(), witness);
    }
    {
      std::string witness;
      std::vector<std::pair<char const*, PermGroup const*>> const subs = {
          {"L", &lat.L}, {"D", &lat.D}, {"R", &lat.R}};
      for (auto const& [name, h] : subs) {
        std::vector<Permutation> gens(h->generators().begin(), h->generators().end());
        if (normal_closure(chi, gens).order() != h->order()) {
          witness = std::string(name) + " is not normal";
          break;
        }
      }
      checks.add("normal_subgroups", witness.empty(), witness);
    }
    {
      bool pass = true;
      for (auto const& w : lat.W.generators()) {
        for (auto const* h : {&lat.L, &lat.D}) {
          for (auto const& x : h->generators()) {
            pass = pass && commute(w, x);
          }
        }
      }
      checks.add("W_central", pass, pass ? "" : "a W generator fails to commute with <L, D>");
    }
    {
      std::string              witness;
      std::vector<Permutation> members;
      for (auto const& t : tset) {
        if (!lat.D.contains_ambient_element(t.value)) {
          witness = t.label + " is not in D";
          break;
        }
        members.push_back(t.value);
      }
      if (witness.empty()) {
        auto closure = normal_closure(chi, dedup_nontrivial(std::move(members)));
        if (closure.order() != a.order_D) {
          witness = "normal closure of T_chi has order " + str(closure.order());
        }
      }
      checks.add("T_chi_generates_D", witness.empty(), witness);
    }

    a.checks             = checks.take();
    a.tensor_order_stats = tensor_order_profile(tset, a.order_G);

    std::vector<std::pair<std::string, Permutation const*>> xs;
    for (std::size_t i = 0; i < 2 * r; ++i) {
      xs.emplace_back(pres.gen_names[i], &m.generators[i]);
    }
    for (auto const& t : tset) {
      for (auto const& [name, x] : xs) {
        a.engel_degrees.push_back({t.label, name, engel_degree(chi, t.value, *x, opts.engel_max)});
      }
    }
    return a;
  }

  NuModel model_nu(GroupModel const& g, NuScope scope, AnalysisOptions const& opts) {
    NuModel nm;
    nm.presentation = build_nu(g.presentation, g.element_words, scope);
    auto table      = enumerate(nm.presentation.doubled, {}, opts.max_cosets, opts.strategy);
    nm.generators   = regular_representation(table);
    nm.nu           = PermGroup(table.live_count(), nm.generators, make_universe({0}));
    return nm;
  }

  NuComparison verify_nu_chi(ChiModel const&        m,
                             std::uint64_t          order_R,
                             AnalysisOptions const& opts) {
    NuComparison c;
    c.group_name = m.g.presentation.name;
    c.scope      = opts.nu_scope;
    c.order_chi  = m.chi.order();
    c.order_R    = order_R;

    auto nm    = model_nu(m.g, opts.nu_scope, opts);
    c.order_nu = nm.nu.order();
    std::vector<Permutation> delta;
    for (Word const& w : delta_generators(nm.presentation)) {
      delta.push_back(evaluate(w, nm.generators, nm.nu.degree()));
    }
    delta                   = dedup_nontrivial(std::move(delta));
    c.order_delta_generated = nm.nu.subgroup(delta).order();
    c.order_delta           = normal_closure(nm.nu, delta).order();
    c.closure_needed        = c.order_delta != c.order_delta_generated;
    c.pass = c.order_R != 0 && c.order_delta != 0 && c.order_chi % c.order_R == 0
          && c.order_nu % c.order_delta == 0
          && c.order_nu / c.order_delta == c.order_chi / c.order_R;

    auto other = opts.nu_scope == NuScope::elements ? NuScope::generators : NuScope::elements;
    try {
      auto d                 = build_nu(m.g.presentation, m.g.element_words, other);
      c.order_nu_other_scope = enumerate(d.doubled, {}, opts.max_cosets, opts.strategy).live_count();
    } catch (CosetOverflow const&) {
      c.order_nu_other_scope.reset();
    }
    return c;
  }

  NuComparison verify_nu_chi(Presentation const& p, AnalysisOptions const& opts) {
    auto m   = model_chi(p, opts);
    auto lat = compute_lattice(m.chi, m.g_block, m.phi_block, m.element_images, m.phi_images,
                               opts.element_limit);
    return verify_nu_chi(m, lat.R.order(), opts);
  }

  bool SurveyRow::all_pass() const {
    return error.empty() && analysis && analysis->all_pass() && (!nu || nu->pass);
  }

  std::vector<SurveyRow> survey(AnalysisOptions const& opts, std::uint64_t nu_order_limit) {
    std::vector<CatalogEntry const*> entries;
    for (auto const& e : catalog()) {
      entries.push_back(&e);
    }
    std::sort(entries.begin(), entries.end(), [](auto const* x, auto const* y) {
      return std::pair(x->order, x->name) < std::pair(y->order, y->name);
    });
    std::vector<SurveyRow> rows;
    for (auto const* e : entries) {
      SurveyRow row;
      row.name = std::string(e->name);
      try {
        auto m       = model_chi(catalog_lookup(e->name), opts);
        row.analysis = analyze(m, e->schur_multiplier, opts);
        if (row.analysis->order_G <= nu_order_limit) {
          row.nu = verify_nu_chi(m, row.analysis->order_R, opts);
        }
      } catch (Error const& err) {
        row.error = err.what();
      }
      rows.push_back(std::move(row));
    }
    return rows;
  }

}  // namespace chiforge
