#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "sigma0/cover/instance.hpp"
#include "sigma0/cover/solve.hpp"
#include "sigma0/families/members.hpp"
#include "sigma0/perm/enumerate.hpp"
#include "sigma0/perm/lattice.hpp"

namespace sigma0 {

/// Where the maximal subgroups come from: the full subgroup lattice, or the
/// family catalog for G = S_n.
enum class MaximalMode { lattice, catalog };

/// A subgroup of an enumerated group, as element indices of that group.
struct LabeledSubgroup {
  std::string label;
  ElementSet elements;
  bool assumed = false; // maximality taken from an unverified catalog entry
};

/// Whether H is maximal in G: for one x in each double coset HxH outside H,
/// <H, x> = G.
inline bool is_maximal_subgroup(const ConcreteGroup& g, const ElementSet& h) {
  const auto order = h.count();
  if (order == g.size() || order == 0) return false;
  const std::vector<Perm> gens = g.subgroup_from_set(h).generators();
  ElementSet seen = h;
  std::vector<std::uint32_t> stack;
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (seen.test(x)) continue;
    auto with = gens;
    with.push_back(g.element(x));
    if (ConcreteGroup::close(std::move(with), g.degree(), g.size() + 1).size() != g.size()) return false;
    seen.set(x);
    stack.assign(1, static_cast<std::uint32_t>(x));
    while (!stack.empty()) {
      const Perm y = g.element(stack.back());
      stack.pop_back();
      for (const auto& s : gens)
        for (const Perm& z : {y * s, s * y}) {
          const auto i = g.require_index(z);
          if (!seen.test(i)) {
            seen.set(i);
            stack.push_back(i);
          }
        }
    }
  }
  return true;
}

/// All maximal subgroups of g from its subgroup lattice.
inline std::vector<LabeledSubgroup> lattice_maximal_subgroups(const ConcreteGroup& g,
                                                              std::size_t cap = kDefaultLatticeCap) {
  const SubgroupLattice lat(g, cap);
  std::vector<LabeledSubgroup> out;
  for (auto c : lat.maximal_classes()) {
    const auto& k = lat.classes()[c];
    for (std::size_t j = 0; j < k.members.size(); ++j)
      out.push_back({"M" + std::to_string(k.order) + "." + std::to_string(c) + "#" + std::to_string(j + 1), k.members[j]});
  }
  return out;
}

inline bool is_full_symmetric(const ConcreteGroup& g) {
  return g.degree() >= 1 && g.order() == factorial(g.degree());
}

/// Maximal subgroups of S_n from the family catalog, realized on g's elements.
inline std::vector<LabeledSubgroup> catalog_maximal_subgroups(const ConcreteGroup& g, const PrimitiveCatalog& catalog) {
  if (!is_full_symmetric(g)) throw precondition_error("catalog mode needs G = S_n");
  std::vector<LabeledSubgroup> out;
  for (const auto& m : catalog_maximal_subgroups(g.degree(), catalog)) {
    ElementSet s(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
      if (m.contains(g.element(i))) s.set(i);
    out.push_back({m.label(), std::move(s), m.maximality() == Maximality::assumed});
  }
  return out;
}

struct GroupInstanceOptions {
  bool primary_only = true;      // universe G_0 rather than G
  bool allow_non_maximal = false;
};

/// Universe: non-identity elements of g (primary ones only by default); one
/// set per subgroup. The identity lies in every subgroup and is left out.
inline CoverInstance group_cover_instance(const ConcreteGroup& g, const std::vector<LabeledSubgroup>& subgroups,
                                          const GroupInstanceOptions& opt = {}) {
  const auto identity = g.require_index(Perm::identity(g.degree()));
  const ElementSet want = opt.primary_only ? g.primary_elements() : g.all_set();
  std::vector<std::int64_t> id(g.size(), -1);
  CoverInstance inst;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (want.test(i) && i != identity) id[i] = static_cast<std::int64_t>(inst.universe++);
  for (const auto& h : subgroups) {
    if (h.elements.size() != g.size()) throw precondition_error("group_cover_instance: subgroup of another group");
    if (!opt.allow_non_maximal && !is_maximal_subgroup(g, h.elements))
      throw precondition_error("group_cover_instance: " + h.label + " is not maximal");
    std::vector<std::uint32_t> members;
    for (auto i = h.elements.find_first(); i != ElementSet::npos; i = h.elements.find_next(i))
      if (id[i] >= 0) members.push_back(static_cast<std::uint32_t>(id[i]));
    inst.add_set(h.label, std::move(members));
  }
  return inst;
}

namespace detail {

inline CoverSolution infinite_solution() {
  CoverSolution s;
  s.status = CoverStatus::infinite;
  return s;
}

inline CoverSolution solve_group(const ConcreteGroup& g, MaximalMode mode, const PrimitiveCatalog* catalog,
                                 bool primary_only, const Budget& budget) {
  std::vector<LabeledSubgroup> subs;
  if (mode == MaximalMode::catalog) {
    if (!catalog) throw precondition_error("catalog mode needs a primitive catalog");
    subs = catalog_maximal_subgroups(g, *catalog);
  } else {
    subs = lattice_maximal_subgroups(g);
  }
  // maximal by construction; the lattice decides it, the catalog asserts it
  const auto inst = group_cover_instance(g, subs, {primary_only, true});
  auto sol = solve_exact(inst, budget);
  for (auto s : sol.chosen) sol.assumed_maximality |= subs[s].assumed;
  if (mode == MaximalMode::catalog)
    sol.assumed_maximality |= std::any_of(subs.begin(), subs.end(), [](const auto& s) { return s.assumed; });
  return sol;
}

} // namespace detail

/// Smallest number of proper subgroups whose union contains the primary
/// elements; infinite for cyclic p-groups.
inline CoverSolution sigma0_exact(const ConcreteGroup& g, MaximalMode mode = MaximalMode::lattice,
                                  const PrimitiveCatalog* catalog = nullptr, const Budget& budget = {}) {
  if (g.is_cyclic_p_group()) return detail::infinite_solution();
  return detail::solve_group(g, mode, catalog, true, budget);
}

/// Covering number; infinite for cyclic groups.
inline CoverSolution sigma_exact(const ConcreteGroup& g, MaximalMode mode = MaximalMode::lattice,
                                 const PrimitiveCatalog* catalog = nullptr, const Budget& budget = {}) {
  if (g.is_cyclic()) return detail::infinite_solution();
  return detail::solve_group(g, mode, catalog, false, budget);
}

/// Fewest conjugacy classes of proper subgroups whose conjugates together
/// contain the primary elements. Maximal classes suffice.
inline CoverSolution gamma0_exact(const ConcreteGroup& g, const Budget& budget = {}) {
  if (g.is_cyclic_p_group()) return detail::infinite_solution();
  const SubgroupLattice lat(g);
  const auto identity = g.require_index(Perm::identity(g.degree()));
  const auto primary = g.primary_elements();
  std::vector<std::int64_t> id(g.size(), -1);
  CoverInstance inst;
  for (auto i = primary.find_first(); i != ElementSet::npos; i = primary.find_next(i))
    if (i != identity) id[i] = static_cast<std::int64_t>(inst.universe++);
  for (auto c : lat.maximal_classes()) {
    std::vector<std::uint32_t> members;
    for (const auto& m : lat.classes()[c].members)
      for (auto i = m.find_first(); i != ElementSet::npos; i = m.find_next(i))
        if (id[i] >= 0) members.push_back(static_cast<std::uint32_t>(id[i]));
    inst.add_set("class" + std::to_string(c) + "/order" + std::to_string(lat.classes()[c].order), std::move(members));
  }
  return solve_exact(inst, budget);
}

struct SingleClassReport {
  bool holds = true;
  std::size_t classes_checked = 0;
  std::vector<std::size_t> violations; // orders of classes whose conjugates cover G_0
};

/// Checks that no single conjugacy class of proper subgroups covers G_0.
inline SingleClassReport no_single_class_covers(const ConcreteGroup& g) {
  SingleClassReport r;
  const SubgroupLattice lat(g);
  const auto primary = g.primary_elements();
  for (const auto& k : lat.classes()) {
    if (k.order == g.size()) continue;
    ++r.classes_checked;
    ElementSet u(g.size());
    for (const auto& m : k.members) u |= m;
    if (primary.is_subset_of(u)) {
      r.holds = false;
      r.violations.push_back(k.order);
    }
  }
  return r;
}

/// Covering one conjugacy class of S_n by maximal subgroups.
struct ClassCoverInstance {
  unsigned n = 0;
  Partition lambda;
  CoverInstance instance;
  std::vector<std::string> family_of_set; // family label per set
  bool assumed_maximality = false;
};

/// Universe: the class lambda of S_n; sets: every member of the given
/// families, restricted to the class. Members meeting the class trivially are
/// kept so that set ids follow the family listing.
inline ClassCoverInstance class_cover_instance(unsigned n, const Partition& lambda,
                                               const std::vector<FamilySpec>& families,
                                               std::uint64_t class_budget = 5'000'000) {
  ClassCoverInstance out;
  out.n = n;
  out.lambda = lambda.n() == n ? lambda : lambda.padded_to(n);
  const auto elems = enumerate_class(n, out.lambda, class_budget);
  // rank -> element id by binary search over sorted ranks
  std::vector<std::pair<std::uint64_t, std::uint32_t>> by_rank;
  by_rank.reserve(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) by_rank.emplace_back(elems[i].rank(), static_cast<std::uint32_t>(i));
  std::sort(by_rank.begin(), by_rank.end());
  const auto lookup = [&](const Perm& p) -> std::int64_t {
    const auto r = p.rank();
    auto it = std::lower_bound(by_rank.begin(), by_rank.end(), std::make_pair(r, 0u));
    return it != by_rank.end() && it->first == r ? it->second : -1;
  };
  out.instance.universe = elems.size();
  for (const auto& spec : families) {
    const auto members = family_members(spec);
    std::shared_ptr<const ConcreteGroup> base;
    std::vector<Perm> base_in_class;
    if (spec.kind == FamilyKind::primitive) {
      // the base group's elements of this type, conjugated per member
      base = std::make_shared<const ConcreteGroup>(spec.entry->build());
      for (const auto& p : base->elements())
        if (p.cycle_type() == out.lambda) base_in_class.push_back(p);
      out.assumed_maximality |= spec.entry->maximality == Maximality::assumed;
    }
    for (const auto& m : members) {
      std::vector<std::uint32_t> ids;
      if (spec.kind == FamilyKind::primitive) {
        for (const auto& p : base_in_class) ids.push_back(static_cast<std::uint32_t>(lookup(p.conjugate_by(m.conjugator()))));
      } else {
        for (std::size_t i = 0; i < elems.size(); ++i)
          if (m.contains(elems[i])) ids.push_back(static_cast<std::uint32_t>(i));
      }
      out.instance.add_set(m.label(), std::move(ids));
      out.family_of_set.push_back(spec.label());
    }
  }
  return out;
}

/// The smallest single family whose members already cover the class, as set
/// ids of the instance; empty when no family does.
struct FamilyCover {
  std::string family;
  std::vector<std::uint32_t> sets;
};

inline FamilyCover family_warm_start(const ClassCoverInstance& ci) {
  std::map<std::string, std::vector<std::uint32_t>> by_family;
  for (std::uint32_t s = 0; s < ci.family_of_set.size(); ++s) by_family[ci.family_of_set[s]].push_back(s);
  FamilyCover best;
  for (const auto& [label, ids] : by_family)
    if (verify_cover(ci.instance, ids) && (best.sets.empty() || ids.size() < best.sets.size())) best = {label, ids};
  return best;
}

struct CountingBound {
  Nat class_size;
  Nat best_count;        // largest |M cap class| over the families
  std::string best_family;
  Nat bound;             // ceil(class_size / best_count)
};

/// ceil(|class| / max |M cap class|): no fewer members can cover the class.
/// Counts one member per family by brute force; conjugates meet the class
/// equally often.
inline CountingBound counting_lower_bound(unsigned n, const Partition& lambda, const std::vector<FamilySpec>& families) {
  CountingBound b;
  const Partition full = lambda.n() == n ? lambda : lambda.padded_to(n);
  b.class_size = class_size(full);
  for (const auto& spec : families) {
    Nat c;
    if (spec.kind == FamilyKind::primitive) {
      const auto g = spec.entry->build();
      std::uint64_t k = 0;
      for (const auto& p : g.elements()) k += p.cycle_type() == full;
      c = k;
    } else if (spec.kind == FamilyKind::alternating) {
      c = intersect_alt(full);
    } else if (spec.kind == FamilyKind::set_stab) {
      c = intersect_setstab(full, spec.size);
    } else if (2 * spec.size == n && blockstab_half_violation(full).empty()) {
      c = intersect_blockstab_half(full);
    } else {
      const auto ms = family_members(spec);
      if (spec.order() <= 200000 && spec.order() < b.class_size) {
        // walking the subgroup is cheaper than walking the class
        std::uint64_t k = 0;
        const auto sub = ms.front().group(200000);
        for (const auto& p : sub.elements()) k += p.cycle_type() == full;
        c = k;
      } else {
        c = brute_intersection(ms.front(), full);
      }
    }
    if (c > b.best_count) {
      b.best_count = c;
      b.best_family = spec.label();
    }
  }
  if (b.best_count == 0) throw precondition_error("counting_lower_bound: no family meets the class");
  b.bound = ceil_div(b.class_size, b.best_count);
  return b;
}

} // namespace sigma0
