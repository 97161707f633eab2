#include "chiforge/perm_group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "chiforge/error.hpp"

namespace chiforge {

  std::shared_ptr<Universe const> make_universe(std::vector<Point> base) {
    return std::make_shared<Universe const>(Universe{std::move(base)});
  }

  // Deterministic Schreier-Sims. Transversals are stored as Schreier vectors
  // over a shared pool of strong generators.
  //
  // With a Universe, base points are taken from the universe base and a
  // Schreier generator is tested by sifting the images of those points only;
  // the full permutation is formed just for the few that become new strong
  // generators.
  class StabilizerChain {
   public:
    StabilizerChain(std::size_t degree, std::shared_ptr<Universe const> universe)
        : degree_(degree), universe_(std::move(universe)) {}

    // Returns false if g was already a member.
    bool add_generator(Permutation const& g) {
      auto [h, j] = sift_full(g, 0);
      if (j == levels_.size() && h.is_identity()) {
        return false;
      }
      add_residue(std::move(h), 0, j);
      complete(j);
      return true;
    }

    std::uint64_t order() const {
      std::uint64_t n = 1;
      for (auto const& level : levels_) {
        n *= level.orbit.size();
      }
      return n;
    }

    bool contains(Permutation const& p) const {
      if (p.degree() != degree_) {
        throw ContractViolation("membership test: degree mismatch");
      }
      auto [h, j] = sift_full(p, 0);
      return j == levels_.size() && h.is_identity();
    }

    bool contains_ambient(Permutation const& p) const {
      if (!universe_) {
        return contains(p);
      }
      if (p.degree() != degree_) {
        throw ContractViolation("membership test: degree mismatch");
      }
      std::vector<Point> images;
      images.reserve(universe_->base.size());
      for (Point b : universe_->base) {
        images.push_back(p(b));
      }
      return sift_images(images, 0);
    }

    std::vector<Point> base() const {
      std::vector<Point> out;
      for (auto const& level : levels_) {
        out.push_back(level.base);
      }
      return out;
    }

    void for_each_element(
        std::function<void(Permutation const&)> const& f) const {
      if (levels_.empty()) {
        f(Permutation(degree_));
        return;
      }
      visit(levels_.size() - 1, Permutation(degree_), f);
    }

   private:
    struct Level {
      Point                     base;
      std::size_t               base_index = 0;  // into universe base
      std::vector<std::size_t>  gens;            // pool indices
      std::vector<std::int32_t> schreier;        // -1 outside, -2 root
      std::vector<Point>        orbit;
      std::vector<std::size_t>  done;  // Schreier generators tested per point
    };

    static constexpr std::int32_t outside = -1;
    static constexpr std::int32_t root    = -2;

    // Pool indices k_1, ..., k_d with u_beta = s_{k_1} ... s_{k_d}, returned
    // in reverse (k_d first).
    void path(Level const& level, Point beta, std::vector<std::size_t>& out) const {
      out.clear();
      while (level.schreier[beta] != root) {
        auto k = static_cast<std::size_t>(level.schreier[beta]);
        out.push_back(k);
        beta = inverses_[k](beta);
      }
    }

    Point apply_path(std::vector<std::size_t> const& p, Point x) const {
      for (auto it = p.rbegin(); it != p.rend(); ++it) {
        x = pool_[*it](x);
      }
      return x;
    }

    Point apply_path_inverse(std::vector<std::size_t> const& p, Point x) const {
      for (std::size_t k : p) {
        x = inverses_[k](x);
      }
      return x;
    }

    // Returns the residue and the level at which sifting stopped
    // (levels_.size() if it passed every level).
    std::pair<Permutation, std::size_t> sift_full(Permutation g,
                                                  std::size_t from) const {
      std::vector<std::size_t> p;
      std::vector<Point>       images(g.images().begin(), g.images().end());
      for (std::size_t l = from; l < levels_.size(); ++l) {
        Level const& level = levels_[l];
        Point        beta  = images[level.base];
        if (level.schreier[beta] == outside) {
          return {Permutation(std::move(images)), l};
        }
        path(level, beta, p);
        for (Point& y : images) {
          y = apply_path_inverse(p, y);
        }
      }
      return {Permutation(std::move(images)), levels_.size()};
    }

    // images[i] is the image of universe base point i; true if the element
    // sifts to the identity.
    bool sift_images(std::vector<Point>& images, std::size_t from) const {
      std::vector<std::size_t> p;
      for (std::size_t l = from; l < levels_.size(); ++l) {
        Level const& level = levels_[l];
        Point        beta  = images[level.base_index];
        if (level.schreier[beta] == outside) {
          return false;
        }
        path(level, beta, p);
        for (Point& y : images) {
          y = apply_path_inverse(p, y);
        }
      }
      for (std::size_t i = 0; i < images.size(); ++i) {
        if (images[i] != universe_->base[i]) {
          return false;
        }
      }
      return true;
    }

    Permutation schreier_generator(Level const& level, Point beta, std::size_t k) const {
      std::vector<std::size_t> pu, pv;
      path(level, beta, pu);
      path(level, pool_[k](beta), pv);
      std::vector<Point> images(degree_);
      for (Point x = 0; x < degree_; ++x) {
        images[x] = apply_path_inverse(pv, pool_[k](apply_path(pu, x)));
      }
      return Permutation(std::move(images));
    }

    void new_level(Permutation const& h) {
      Level level;
      if (universe_) {
        auto const& ub = universe_->base;
        auto        it = std::find_if(ub.begin(), ub.end(), [&](Point b) {
          return h(b) != b;
        });
        if (it == ub.end()) {
          throw Error("universe base does not determine a group element");
        }
        level.base       = *it;
        level.base_index = static_cast<std::size_t>(it - ub.begin());
      } else {
        level.base = h.first_moved();
      }
      level.schreier.assign(degree_, outside);
      level.schreier[level.base] = root;
      level.orbit                = {level.base};
      level.done                 = {0};
      levels_.push_back(std::move(level));
    }

    void add_to_level(std::size_t l, std::size_t k) {
      Level& level = levels_[l];
      level.gens.push_back(k);
      std::size_t old = level.orbit.size();
      for (std::size_t i = 0; i < old; ++i) {
        Point y = pool_[k](level.orbit[i]);
        if (level.schreier[y] == outside) {
          level.schreier[y] = static_cast<std::int32_t>(k);
          level.orbit.push_back(y);
        }
      }
      for (std::size_t i = old; i < level.orbit.size(); ++i) {
        for (std::size_t g : level.gens) {
          Point y = pool_[g](level.orbit[i]);
          if (level.schreier[y] == outside) {
            level.schreier[y] = static_cast<std::int32_t>(g);
            level.orbit.push_back(y);
          }
        }
      }
      level.done.resize(level.orbit.size(), 0);
    }

    // Adds h as a strong generator of levels from..to, creating level `to` if
    // it does not exist yet.
    void add_residue(Permutation h, std::size_t from, std::size_t to) {
      if (to == levels_.size()) {
        new_level(h);
      }
      inverses_.push_back(h.inverse());
      pool_.push_back(std::move(h));
      std::size_t k = pool_.size() - 1;
      for (std::size_t l = from; l <= to; ++l) {
        add_to_level(l, k);
      }
    }

    void complete(std::size_t start) {
      std::vector<Point> images;
      auto               i = static_cast<std::ptrdiff_t>(start);
      while (i >= 0) {
        bool restart = false;
        auto li      = static_cast<std::size_t>(i);
        for (std::size_t pos = 0; pos < levels_[li].orbit.size() && !restart; ++pos) {
          while (levels_[li].done[pos] < levels_[li].gens.size()) {
            Level const& level = levels_[li];
            std::size_t  k     = level.gens[level.done[pos]];
            levels_[li].done[pos]++;
            Point beta  = level.orbit[pos];
            Point image = pool_[k](beta);
            if (level.schreier[image] == static_cast<std::int32_t>(k)
                && inverses_[k](image) == beta) {
              continue;  // tree edge: the Schreier generator is trivial
            }
            if (universe_) {
              std::vector<std::size_t> pu, pv;
              path(level, beta, pu);
              path(level, image, pv);
              images.clear();
              for (Point b : universe_->base) {
                images.push_back(apply_path_inverse(pv, pool_[k](apply_path(pu, b))));
              }
              if (sift_images(images, li + 1)) {
                continue;
              }
            }
            auto [h, j] = sift_full(schreier_generator(level, beta, k), li + 1);
            if (j == levels_.size() && h.is_identity()) {
              continue;
            }
            add_residue(std::move(h), li + 1, j);
            i       = static_cast<std::ptrdiff_t>(j);
            restart = true;
            break;
          }
        }
        if (!restart) {
          --i;
        }
      }
    }

    void visit(std::size_t                                     l,
               Permutation const&                              prefix,
               std::function<void(Permutation const&)> const& f) const {
      Level const&             level = levels_[l];
      std::vector<std::size_t> p;
      for (Point beta : level.orbit) {
        path(level, beta, p);
        std::vector<Point> images(degree_);
        for (Point x = 0; x < degree_; ++x) {
          images[x] = apply_path(p, prefix(x));
        }
        Permutation g(std::move(images));
        if (l == 0) {
          f(g);
        } else {
          visit(l - 1, g, f);
        }
      }
    }

    std::size_t                     degree_;
    std::shared_ptr<Universe const> universe_;
    std::vector<Permutation>        pool_;
    std::vector<Permutation>        inverses_;
    std::vector<Level>              levels_;
  };

  struct PermGroup::Lazy {
    std::once_flag                   flag;
    std::unique_ptr<StabilizerChain> chain;
  };

  namespace {
    // Accumulates generators of a subgroup while keeping its chain current.
    class GroupBuilder {
     public:
      GroupBuilder(std::size_t degree, std::shared_ptr<Universe const> universe)
          : degree_(degree),
            universe_(universe),
            chain_(std::make_unique<StabilizerChain>(degree, std::move(universe))) {}

      // Adds p unless it already lies in the group; p must lie in the universe
      // when one is set.
      bool add(Permutation const& p) {
        if (p.is_identity() || chain_->contains_ambient(p)) {
          return false;
        }
        chain_->add_generator(p);
        gens_.push_back(p);
        return true;
      }

      std::vector<Permutation> const& generators() const {
        return gens_;
      }

      std::unique_ptr<StabilizerChain> release() {
        return std::move(chain_);
      }

      std::size_t                      degree_;
      std::shared_ptr<Universe const>  universe_;
      std::unique_ptr<StabilizerChain> chain_;
      std::vector<Permutation>         gens_;
    };
  }  // namespace

  PermGroup::PermGroup(std::size_t                     degree,
                       std::vector<Permutation>        generators,
                       std::shared_ptr<Universe const> universe)
      : degree_(degree),
        generators_(std::move(generators)),
        universe_(std::move(universe)),
        lazy_(std::make_shared<Lazy>()) {
    for (auto const& g : generators_) {
      if (g.degree() != degree_) {
        throw ContractViolation("PermGroup: generator degree mismatch");
      }
    }
    if (universe_) {
      for (Point b : universe_->base) {
        if (b >= degree_) {
          throw ContractViolation("PermGroup: universe base point out of range");
        }
      }
    }
  }

  StabilizerChain const& PermGroup::chain() const {
    std::call_once(lazy_->flag, [this] {
      auto chain = std::make_unique<StabilizerChain>(degree_, universe_);
      for (auto const& g : generators_) {
        chain->add_generator(g);
      }
      lazy_->chain = std::move(chain);
    });
    return *lazy_->chain;
  }

  std::uint64_t PermGroup::order() const {
    return chain().order();
  }

  bool PermGroup::contains(Permutation const& p) const {
    return chain().contains(p);
  }

  bool PermGroup::contains_ambient_element(Permutation const& p) const {
    return chain().contains_ambient(p);
  }

  PermGroup PermGroup::subgroup(std::vector<Permutation> gens) const {
    return PermGroup(degree_, std::move(gens), universe_);
  }

  bool PermGroup::is_subgroup_of(PermGroup const& other) const {
    return std::all_of(generators_.begin(),
                       generators_.end(),
                       [&](Permutation const& g) { return other.contains(g); });
  }

  bool PermGroup::is_abelian() const {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      for (std::size_t j = i + 1; j < generators_.size(); ++j) {
        if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) {
          return false;
        }
      }
    }
    return true;
  }

  bool PermGroup::is_trivial() const {
    return std::all_of(generators_.begin(),
                       generators_.end(),
                       [](Permutation const& g) { return g.is_identity(); });
  }

  std::vector<Point> PermGroup::base() const {
    return chain().base();
  }

  void PermGroup::for_each_element(
      std::function<void(Permutation const&)> const& f,
      std::size_t                                    limit) const {
    if (order() > limit) {
      throw LimitExceeded("element enumeration", limit);
    }
    chain().for_each_element(f);
  }

  std::uint64_t order(PermGroup const& g) {
    return g.order();
  }

  bool contains(PermGroup const& g, Permutation const& p) {
    return g.contains(p);
  }

  PermGroup subgroup_closure(std::size_t                     degree,
                             std::vector<Permutation> const& gens,
                             std::shared_ptr<Universe const> universe) {
    std::vector<Permutation> kept;
    for (auto const& g : gens) {
      if (g.degree() != degree) {
        throw ContractViolation("subgroup_closure: generator degree mismatch");
      }
      if (!g.is_identity()
          && std::find(kept.begin(), kept.end(), g) == kept.end()) {
        kept.push_back(g);
      }
    }
    return PermGroup(degree, std::move(kept), std::move(universe));
  }

  PermGroup normal_closure(PermGroup const&                ambient,
                           std::vector<Permutation> const& seeds) {
    for (auto const& s : seeds) {
      if (!ambient.contains(s)) {
        throw ContractViolation("normal_closure: seed not in ambient group");
      }
    }
    GroupBuilder             builder(ambient.degree(), ambient.universe());
    std::vector<Permutation> queue;
    for (auto const& s : seeds) {
      if (builder.add(s)) {
        queue.push_back(s);
      }
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto const& a : ambient.generators()) {
        Permutation c = conjugate(queue[i], a);
        if (builder.add(c)) {
          queue.push_back(std::move(c));
        }
      }
    }
    return PermGroup(ambient.degree(), builder.generators(), ambient.universe());
  }

  PermGroup commutator_subgroup(PermGroup const& a,
                                PermGroup const& b,
                                PermGroup const& ambient) {
    if (!a.is_subgroup_of(ambient) || !b.is_subgroup_of(ambient)) {
      throw ContractViolation(
          "commutator_subgroup: arguments must lie in the ambient group");
    }
    std::vector<Permutation> joint(a.generators().begin(), a.generators().end());
    joint.insert(joint.end(), b.generators().begin(), b.generators().end());
    std::vector<Permutation> seeds;
    for (auto const& x : a.generators()) {
      for (auto const& y : b.generators()) {
        Permutation c = commutator(x, y);
        if (!c.is_identity()
            && std::find(seeds.begin(), seeds.end(), c) == seeds.end()) {
          seeds.push_back(std::move(c));
        }
      }
    }
    return normal_closure(ambient.subgroup(std::move(joint)), seeds);
  }

  PermGroup intersection(PermGroup const& a,
                         PermGroup const& b,
                         std::size_t      limit) {
    if (a.degree() != b.degree()) {
      throw ContractViolation("intersection: degree mismatch");
    }
    bool             a_smaller = a.order() <= b.order();
    PermGroup const& small     = a_smaller ? a : b;
    PermGroup const& large     = a_smaller ? b : a;
    bool const shared = small.universe() && small.universe() == large.universe();
    GroupBuilder builder(a.degree(), shared ? small.universe() : nullptr);
    small.for_each_element(
        [&](Permutation const& x) {
          bool in = shared ? large.contains_ambient_element(x) : large.contains(x);
          if (in) {
            builder.add(x);
          }
        },
        limit);
    return PermGroup(a.degree(), builder.generators(), shared ? small.universe() : nullptr);
  }

  std::vector<Permutation> elements(PermGroup const& g, std::size_t limit) {
    std::vector<Permutation> out;
    g.for_each_element([&](Permutation const& x) { out.push_back(x); }, limit);
    return out;
  }

  std::uint64_t exponent(PermGroup const& g, std::size_t limit) {
    std::uint64_t e = 1;
    g.for_each_element([&](Permutation const& x) { e = std::lcm(e, x.order()); },
                       limit);
    return e;
  }

  std::uint64_t element_order(PermGroup const& g, Permutation const& p) {
    if (!g.contains(p)) {
      throw ContractViolation("element_order: element not in group");
    }
    return p.order();
  }

  std::vector<std::uint64_t> invariants_from_order_counts(
      std::vector<std::uint64_t> const& element_orders) {
    std::uint64_t const n = element_orders.size();
    std::vector<std::uint64_t> result;
    std::uint64_t              m = n;
    for (std::uint64_t p = 2; m > 1; ++p) {
      if (m % p != 0) {
        continue;
      }
      while (m % p == 0) {
        m /= p;
      }
      // log_p of the number of elements whose order divides p^k
      auto exponent_at = [&](std::uint64_t k) {
        std::uint64_t pk = 1;
        for (std::uint64_t i = 0; i < k; ++i) {
          pk *= p;
        }
        std::uint64_t count = 0;
        for (std::uint64_t o : element_orders) {
          count += (pk % o == 0) ? 1 : 0;
        }
        std::uint64_t e = 0;
        while (count % p == 0 && count > 1) {
          count /= p;
          ++e;
        }
        if (count != 1) {
          throw Error("element order counts do not describe an abelian group");
        }
        return e;
      };
      std::vector<std::uint64_t> s{0};
      while (s.size() < 2 || s.back() != s[s.size() - 2]) {
        s.push_back(exponent_at(s.size()));
      }
      // ge[k] = number of cyclic factors of order at least p^k
      for (std::size_t k = 1; k + 1 < s.size(); ++k) {
        std::uint64_t at_least_k   = s[k] - s[k - 1];
        std::uint64_t at_least_k1  = s[k + 1] - s[k];
        std::uint64_t pk           = 1;
        for (std::size_t i = 0; i < k; ++i) {
          pk *= p;
        }
        for (std::uint64_t c = 0; c < at_least_k - at_least_k1; ++c) {
          result.push_back(pk);
        }
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  std::vector<std::uint64_t> abelian_invariants(PermGroup const& g,
                                                std::size_t      limit) {
    if (!g.is_abelian()) {
      throw ContractViolation("abelian_invariants: group is not abelian");
    }
    std::vector<std::uint64_t> orders;
    g.for_each_element([&](Permutation const& x) { orders.push_back(x.order()); },
                       limit);
    return invariants_from_order_counts(orders);
  }

  std::uint64_t coset_order(PermGroup const& r, Permutation const& x) {
    std::uint64_t k = 1;
    Permutation   y = x;
    while (!r.contains(y)) {
      y = y * x;
      ++k;
    }
    return k;
  }

  std::vector<std::uint64_t> quotient_abelian_invariants(PermGroup const& w,
                                                         PermGroup const& r,
                                                         std::size_t limit) {
    if (!r.is_subgroup_of(w)) {
      throw ContractViolation("quotient_abelian_invariants: r is not in w");
    }
    auto const& wg = w.generators();
    for (auto const& x : wg) {
      for (auto const& y : r.generators()) {
        if (!r.contains(conjugate(y, x))) {
          throw ContractViolation("quotient_abelian_invariants: r not normal in w");
        }
      }
      for (auto const& y : wg) {
        if (!r.contains(commutator(x, y))) {
          throw ContractViolation("quotient_abelian_invariants: w / r not abelian");
        }
      }
    }
    std::vector<Permutation>   reps;
    std::vector<std::uint64_t> orders;
    w.for_each_element(
        [&](Permutation const& x) {
          for (auto const& y : reps) {
            if (r.contains(x * y.inverse())) {
              return;
            }
          }
          reps.push_back(x);
          orders.push_back(coset_order(r, x));
        },
        limit);
    return invariants_from_order_counts(orders);
  }

  HomImage verified_hom(Presentation const&             src,
                        std::vector<Permutation> const& images,
                        std::size_t                     target_degree,
                        std::shared_ptr<Universe const> universe) {
    if (images.size() != src.rank) {
      throw ContractViolation("verified_hom: need one image per generator");
    }
    HomImage result{PermGroup(target_degree, images, std::move(universe)), true, ""};
    for (Word const& r : src.relators) {
      if (!evaluate(r, images, target_degree).is_identity()) {
        result.verified       = false;
        result.failed_relator = render_relator(r, src.gen_names);
        break;
      }
    }
    return result;
  }

}  // namespace chiforge
