#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sigma0/cover/instance.hpp"

namespace sigma0 {

struct Reduction {
  CoverInstance instance;                  // what is left to cover
  std::vector<std::uint32_t> set_origin;   // reduced set index -> original set index
  std::vector<std::uint32_t> elem_origin;  // reduced element id -> original element id
  std::vector<std::uint32_t> forced;       // original set indices every cover of the rest must add
  std::vector<std::uint32_t> uncoverable;  // original ids with no candidate set
  std::size_t removed_sets = 0;
  std::size_t removed_elements = 0;
  std::size_t rounds = 0;

  bool infeasible() const { return !uncoverable.empty(); }

  /// Lifts a cover of the reduced instance to original set indices.
  std::vector<std::uint32_t> lift(const std::vector<std::uint32_t>& reduced_choice) const {
    std::vector<std::uint32_t> out = forced;
    for (auto s : reduced_choice) out.push_back(set_origin[s]);
    std::sort(out.begin(), out.end());
    return out;
  }
};

/// Removes dominated sets and elements and forces sets that are the only
/// candidate of some element, until nothing changes. The optimum of the
/// original instance equals forced.size() plus the optimum of the result.
inline Reduction reduce(const CoverInstance& inst) {
  Reduction r;
  const std::size_t nu = inst.universe, ns = inst.sets.size();
  std::vector<Bits> set_bits(ns, Bits(nu)), elem_cands(nu, Bits(ns));
  for (std::size_t s = 0; s < ns; ++s)
    for (auto e : inst.sets[s].members) {
      set_bits[s].set(e);
      elem_cands[e].set(s);
    }
  Bits alive_sets(ns), alive_elems(nu);
  alive_sets.set();
  alive_elems.set();

  for (std::size_t e = 0; e < nu; ++e)
    if (elem_cands[e].none()) r.uncoverable.push_back(static_cast<std::uint32_t>(e));
  if (r.infeasible()) return r;

  for (bool changed = true; changed;) {
    changed = false;
    ++r.rounds;
    // forced sets
    for (auto e = alive_elems.find_first(); e != Bits::npos; e = alive_elems.find_next(e)) {
      const Bits c = elem_cands[e] & alive_sets;
      if (c.count() != 1) continue;
      const auto s = c.find_first();
      r.forced.push_back(static_cast<std::uint32_t>(s));
      alive_elems -= set_bits[s];
      alive_sets.reset(s);
      changed = true;
    }
    // dominated sets: s is removed when another live set covers its live elements
    for (auto s = alive_sets.find_first(); s != Bits::npos; s = alive_sets.find_next(s)) {
      const Bits mine = set_bits[s] & alive_elems;
      if (mine.none()) {
        alive_sets.reset(s);
        changed = true;
        continue;
      }
      Bits sup = alive_sets;
      for (auto e = mine.find_first(); e != Bits::npos && sup.any(); e = mine.find_next(e)) sup &= elem_cands[e];
      sup.reset(s);
      const auto my_size = mine.count();
      for (auto t = sup.find_first(); t != Bits::npos; t = sup.find_next(t)) {
        const auto other = (set_bits[t] & alive_elems).count();
        if (other > my_size || t < s) {
          alive_sets.reset(s);
          changed = true;
          break;
        }
      }
    }
    // dominated elements: f is dropped when every cover of e also covers f
    for (auto e = alive_elems.find_first(); e != Bits::npos; e = alive_elems.find_next(e)) {
      const Bits mine = elem_cands[e] & alive_sets;
      Bits sup = alive_elems;
      for (auto s = mine.find_first(); s != Bits::npos; s = mine.find_next(s)) sup &= set_bits[s];
      sup.reset(e);
      const auto my_count = mine.count();
      for (auto f = sup.find_first(); f != Bits::npos; f = sup.find_next(f)) {
        if ((elem_cands[f] & alive_sets).count() > my_count || f > e) {
          alive_elems.reset(f);
          changed = true;
        }
      }
    }
  }

  std::vector<std::int64_t> new_id(nu, -1);
  for (auto e = alive_elems.find_first(); e != Bits::npos; e = alive_elems.find_next(e)) {
    new_id[e] = static_cast<std::int64_t>(r.elem_origin.size());
    r.elem_origin.push_back(static_cast<std::uint32_t>(e));
  }
  r.instance.universe = r.elem_origin.size();
  for (auto s = alive_sets.find_first(); s != Bits::npos; s = alive_sets.find_next(s)) {
    std::vector<std::uint32_t> members;
    for (auto e : inst.sets[s].members)
      if (new_id[e] >= 0) members.push_back(static_cast<std::uint32_t>(new_id[e]));
    r.instance.add_set(inst.sets[s].label, std::move(members));
    r.set_origin.push_back(static_cast<std::uint32_t>(s));
  }
  std::sort(r.forced.begin(), r.forced.end());
  r.removed_sets = ns - r.set_origin.size() - r.forced.size();
  r.removed_elements = nu - r.elem_origin.size();
  return r;
}

} // namespace sigma0
