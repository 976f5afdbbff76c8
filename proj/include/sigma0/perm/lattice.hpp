#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "sigma0/errors.hpp"
#include "sigma0/perm/group.hpp"

namespace sigma0 {

inline constexpr std::size_t kDefaultLatticeCap = 5040;

/// One conjugacy class of subgroups, with every member stored as an element set of G.
struct SubgroupClass {
  ElementSet rep;
  std::vector<std::uint32_t> gens; // element indices of G generating rep
  std::size_t order = 0;
  std::vector<ElementSet> members; // all conjugates, rep first
  std::size_t class_size() const { return members.size(); }
};

/// Conjugacy classes of subgroups of a small group.
///
/// Built by join-closure: starting from the trivial group, each class
/// representative H is extended by one cyclic subgroup of prime-power order
/// per N(H)-orbit. Every subgroup is generated by its elements of prime-power
/// order, so every class is reached.
class SubgroupLattice {
public:
  explicit SubgroupLattice(const ConcreteGroup& g, std::size_t cap = kDefaultLatticeCap)
      : g_(&g), table_(check_cap(g, cap)) {
    identity_ = g.require_index(Perm::identity(g.degree()));
    build();
  }

  const ConcreteGroup& group() const { return *g_; }
  const MulTable& table() const { return table_; }
  const std::vector<SubgroupClass>& classes() const { return classes_; }

  std::size_t subgroup_count() const {
    std::size_t c = 0;
    for (const auto& k : classes_) c += k.class_size();
    return c;
  }

  /// Class indices of maximal subgroups (proper, contained in no larger proper subgroup).
  std::vector<std::size_t> maximal_classes() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < classes_.size(); ++i) {
      const auto& h = classes_[i];
      if (h.order == g_->size()) continue;
      bool maximal = true;
      for (std::size_t j = 0; j < classes_.size() && maximal; ++j) {
        const auto& k = classes_[j];
        if (k.order == g_->size() || k.order <= h.order || k.order % h.order != 0) continue;
        for (const auto& m : k.members)
          if (h.rep.is_subset_of(m)) {
            maximal = false;
            break;
          }
      }
      if (maximal) out.push_back(i);
    }
    return out;
  }

  /// Every maximal subgroup (all conjugates) as an element set of G.
  std::vector<ElementSet> maximal_subgroup_sets() const {
    std::vector<ElementSet> out;
    for (auto i : maximal_classes())
      for (const auto& m : classes_[i].members) out.push_back(m);
    return out;
  }

  ConcreteGroup as_group(const ElementSet& s) const { return g_->subgroup_from_set(s); }

private:
  static const ConcreteGroup& check_cap(const ConcreteGroup& g, std::size_t cap) {
    if (g.size() > cap)
      throw cap_exceeded("subgroup lattice: |G| = " + std::to_string(g.size()) + " exceeds cap " +
                         std::to_string(cap));
    return g;
  }

  ElementSet normalizer(const SubgroupClass& h) const {
    ElementSet nrm(g_->size());
    for (std::uint32_t x = 0; x < g_->size(); ++x) {
      bool ok = true;
      for (auto s : h.gens)
        if (!h.rep.test(table_.conj(s, x))) {
          ok = false;
          break;
        }
      if (ok) nrm.set(x);
    }
    return nrm;
  }

  void add_class(ElementSet rep, std::vector<std::uint32_t> gens) {
    SubgroupClass c;
    c.order = rep.count();
    c.rep = rep;
    c.gens = std::move(gens);
    const auto nrm = normalizer(c);
    std::vector<char> covered(g_->size(), 0);
    for (std::uint32_t x = 0; x < g_->size(); ++x) {
      if (covered[x]) continue;
      for (auto k = nrm.find_first(); k != ElementSet::npos; k = nrm.find_next(k))
        covered[table_.mul(static_cast<std::uint32_t>(k), x)] = 1;
      ElementSet conj(g_->size());
      for (auto e = rep.find_first(); e != ElementSet::npos; e = rep.find_next(e))
        conj.set(table_.conj(static_cast<std::uint32_t>(e), x));
      seen_.insert(conj);
      c.members.push_back(std::move(conj));
    }
    classes_.push_back(std::move(c));
  }

  void build() {
    const std::size_t n = g_->size();
    // cyclic subgroups of prime-power order > 1, and the cyclic subgroup each zuppo generates
    std::vector<std::uint32_t> cyc_gen;
    std::vector<ElementSet> cyc_set;
    std::vector<std::int32_t> cyc_of(n, -1);
    for (std::uint32_t z = 0; z < n; ++z) {
      if (z == identity_ || !is_primary(g_->element(z)) || cyc_of[z] >= 0) continue;
      const auto s = close_in(table_, {z}, identity_);
      const auto id = static_cast<std::int32_t>(cyc_set.size());
      // every generator of <z> maps to the same cyclic subgroup
      std::uint32_t p = z;
      do {
        if (g_->element(p).order() == g_->element(z).order()) cyc_of[p] = id;
        p = table_.mul(p, z);
      } while (p != identity_);
      cyc_gen.push_back(z);
      cyc_set.push_back(s);
    }

    ElementSet trivial(n);
    trivial.set(identity_);
    add_class(trivial, {});

    for (std::size_t i = 0; i < classes_.size(); ++i) {
      if (classes_[i].order == n) continue;
      const auto nrm = normalizer(classes_[i]);
      std::vector<char> done(cyc_set.size(), 0);
      for (std::size_t c = 0; c < cyc_set.size(); ++c) {
        if (done[c]) continue;
        for (auto k = nrm.find_first(); k != ElementSet::npos; k = nrm.find_next(k))
          done[static_cast<std::size_t>(cyc_of[table_.conj(cyc_gen[c], static_cast<std::uint32_t>(k))])] = 1;
        if (cyc_set[c].is_subset_of(classes_[i].rep)) continue;
        auto gens = classes_[i].gens;
        gens.push_back(cyc_gen[c]);
        auto k = close_in(table_, gens, identity_);
        if (seen_.count(k)) continue;
        add_class(std::move(k), std::move(gens));
      }
    }
  }

  const ConcreteGroup* g_;
  MulTable table_;
  std::uint32_t identity_ = 0;
  std::vector<SubgroupClass> classes_;
  std::unordered_set<ElementSet, ElementSetHash> seen_;
};

} // namespace sigma0
