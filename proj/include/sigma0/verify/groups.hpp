#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sigma0/cover.hpp"
#include "sigma0/perm/corpus.hpp"
#include "sigma0/verify/report.hpp"

namespace sigma0 {

namespace detail {

/// Finite value of an exact solve, nullopt for infinity. Throws when the
/// budget ran out, since a bare incumbent cannot back an equality.
inline std::optional<std::size_t> exact_value(const CoverSolution& s) {
  if (s.status == CoverStatus::infinite) return std::nullopt;
  if (s.status != CoverStatus::optimal) throw cap_exceeded("solve did not finish within the budget");
  return s.size();
}

inline std::string value_str(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "inf"; }

/// a <= b with infinity on top.
inline bool le_inf(const std::optional<std::size_t>& a, const std::optional<std::size_t>& b) {
  if (!b) return true;
  return a && *a <= *b;
}

inline std::string corpus_range(const std::vector<CorpusEntry>& corpus) {
  return std::to_string(corpus.size()) + " corpus groups";
}

inline constexpr std::size_t kCorpusOrderCap = 720;

} // namespace detail

/// If G/G' is not a p-group then sigma_0(G) = 2, else sigma_0(G) = sigma(G);
/// both sides solved exactly. Non-solvable groups are skipped with a note.
inline CheckReport check_theorem_solvable(const std::vector<CorpusEntry>& corpus, const Budget& budget = {}) {
  CheckReport r("solvable", detail::corpus_range(corpus));
  std::size_t checked = 0;
  for (const auto& e : corpus) {
    const auto g = e.build();
    if (g.size() > detail::kCorpusOrderCap) {
      r.note(e.name, "skipped: order above " + std::to_string(detail::kCorpusOrderCap));
      continue;
    }
    if (!g.is_solvable()) {
      r.note(e.name, "skipped: not solvable");
      continue;
    }
    const auto ab = abelianization_is_p_group(g);
    const auto s0 = detail::exact_value(sigma0_exact(g, MaximalMode::lattice, nullptr, budget));
    const std::string tag = "|G/G'|=" + std::to_string(ab.quotient_order) + " sigma0=" + detail::value_str(s0);
    if (!ab.p_group) {
      r.expect(s0 == std::optional<std::size_t>(2), e.name + ": " + tag + " but G/G' is not a p-group");
      r.note(e.name, tag);
    } else {
      const auto s = detail::exact_value(sigma_exact(g, MaximalMode::lattice, nullptr, budget));
      r.expect(s0 == s, e.name + ": " + tag + " sigma=" + detail::value_str(s));
      r.note(e.name, tag + " sigma=" + detail::value_str(s));
    }
    ++checked;
  }
  r.note("groups checked", checked);
  return r;
}

namespace detail {

struct NormalSubgroup {
  ElementSet set;
  std::size_t order = 0;
};

inline std::vector<NormalSubgroup> normal_subgroups(const SubgroupLattice& lat) {
  std::vector<NormalSubgroup> out;
  for (const auto& k : lat.classes())
    if (k.class_size() == 1) out.push_back({k.rep, k.order});
  return out;
}

inline ElementSet frattini(const ConcreteGroup& g, const SubgroupLattice& lat) {
  ElementSet f = g.all_set();
  for (const auto& m : lat.maximal_subgroup_sets()) f &= m;
  return f;
}

} // namespace detail

/// sigma_0(G) <= sigma_0(G/N) for every proper nontrivial normal N, with
/// equality when N lies in the Frattini subgroup.
inline CheckReport check_quotient_bound(const std::vector<CorpusEntry>& corpus, std::size_t order_cap = 120,
                                        const Budget& budget = {}) {
  CheckReport r("quotient", detail::corpus_range(corpus) + ", |G| <= " + std::to_string(order_cap));
  std::size_t pairs = 0, frattini_pairs = 0;
  for (const auto& e : corpus) {
    const auto g = e.build();
    if (g.size() > order_cap || g.size() < 2) continue;
    const SubgroupLattice lat(g);
    const auto phi = detail::frattini(g, lat);
    const auto s0 = detail::exact_value(sigma0_exact(g, MaximalMode::lattice, nullptr, budget));
    for (const auto& nsub : detail::normal_subgroups(lat)) {
      if (nsub.order == 1 || nsub.order == g.size()) continue;
      if (g.size() / nsub.order > Perm::kMaxDegree) continue;
      const auto q = quotient_group(g, g.subgroup_from_set(nsub.set));
      const auto sq = detail::exact_value(sigma0_exact(q, MaximalMode::lattice, nullptr, budget));
      const std::string at = e.name + "/N(|N|=" + std::to_string(nsub.order) + ")";
      r.expect(detail::le_inf(s0, sq), at + ": sigma0(G)=" + detail::value_str(s0) + " > sigma0(G/N)=" +
                                           detail::value_str(sq));
      if (nsub.set.is_subset_of(phi)) {
        ++frattini_pairs;
        r.expect(s0 == sq, at + ": N in Frattini but sigma0 differs");
      }
      ++pairs;
    }
  }
  r.note("pairs", pairs);
  r.note("frattini pairs", frattini_pairs);
  return r;
}

/// A maximal M with sigma_0(M) > sigma_0(G) lies in every minimal primary
/// covering: removing M alone raises the optimum.
inline CheckReport check_maximal_forcing(const std::vector<CorpusEntry>& corpus, std::size_t order_cap = 120,
                                         const Budget& budget = {}) {
  CheckReport r("forcing", detail::corpus_range(corpus) + ", |G| <= " + std::to_string(order_cap));
  std::size_t instances = 0;
  for (const auto& e : corpus) {
    const auto g = e.build();
    if (g.size() > order_cap || g.is_cyclic_p_group()) continue;
    const auto s0 = detail::exact_value(sigma0_exact(g, MaximalMode::lattice, nullptr, budget));
    const auto subs = lattice_maximal_subgroups(g);
    for (std::size_t i = 0; i < subs.size(); ++i) {
      const auto m = g.subgroup_from_set(subs[i].elements);
      const auto sm = detail::exact_value(sigma0_exact(m, MaximalMode::lattice, nullptr, budget));
      if (detail::le_inf(sm, s0)) continue;
      auto rest = subs;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      const auto sol = solve_exact(group_cover_instance(g, rest), budget);
      const bool raised = sol.status == CoverStatus::infeasible ||
                          (sol.status == CoverStatus::optimal && sol.size() > *s0);
      r.expect(raised, e.name + ": a minimal covering avoids " + subs[i].label);
      ++instances;
    }
  }
  r.note("forced subgroups checked", instances);
  return r;
}

/// For a complemented minimal normal subgroup N of a solvable G with b
/// complements: b > 1 implies b >= |N|.
inline CheckReport check_complements(const std::vector<CorpusEntry>& corpus, std::size_t order_cap = 120) {
  CheckReport r("complements", detail::corpus_range(corpus) + ", |G| <= " + std::to_string(order_cap));
  std::size_t cases = 0;
  for (const auto& e : corpus) {
    const auto g = e.build();
    if (g.size() > order_cap || !g.is_solvable()) continue;
    const SubgroupLattice lat(g);
    const auto normals = detail::normal_subgroups(lat);
    const auto identity = g.require_index(Perm::identity(g.degree()));
    ElementSet trivial(g.size());
    trivial.set(identity);
    for (const auto& nsub : normals) {
      if (nsub.order == 1) continue;
      bool minimal = true;
      for (const auto& k : normals)
        if (k.order > 1 && k.order < nsub.order && k.set.is_subset_of(nsub.set)) minimal = false;
      if (!minimal) continue;
      std::size_t b = 0;
      for (const auto& cls : lat.classes()) {
        if (cls.order * nsub.order != g.size()) continue;
        for (const auto& h : cls.members) b += (h & nsub.set) == trivial;
      }
      if (b == 0) continue;
      ++cases;
      r.expect(b == 1 || b >= nsub.order, e.name + ": |N|=" + std::to_string(nsub.order) + " has " +
                                              std::to_string(b) + " complements");
      r.note(e.name + " |N|=" + std::to_string(nsub.order), "b=" + std::to_string(b));
    }
  }
  r.note("complemented minimal normal subgroups", cases);
  return r;
}

/// gamma_0 = 2 for groups of non prime power order that are solvable or
/// symmetric.
inline CheckReport check_gamma0(const std::vector<CorpusEntry>& corpus, const Budget& budget = {}) {
  CheckReport r("gamma0", detail::corpus_range(corpus));
  for (const auto& e : corpus) {
    const auto g = e.build();
    if (g.size() > detail::kCorpusOrderCap) continue;
    if (prime_power_base(static_cast<std::uint64_t>(g.size())) != 0) continue;
    if (!g.is_solvable() && !is_full_symmetric(g)) continue;
    const auto v = detail::exact_value(gamma0_exact(g, budget));
    r.expect(v == std::optional<std::size_t>(2), e.name + ": gamma0=" + detail::value_str(v));
    r.note(e.name, detail::value_str(v));
  }
  return r;
}

/// No single conjugacy class of proper subgroups covers the primary elements.
inline CheckReport check_single_class(const std::vector<CorpusEntry>& corpus) {
  CheckReport r("single-class", detail::corpus_range(corpus));
  std::size_t classes = 0;
  for (const auto& e : corpus) {
    const auto g = e.build();
    if (g.size() > detail::kCorpusOrderCap || g.size() < 2) continue;
    const auto rep = no_single_class_covers(g);
    classes += rep.classes_checked;
    for (auto ord : rep.violations) r.fail(e.name + ": the class of subgroups of order " + std::to_string(ord) +
                                           " covers G_0");
  }
  r.note("subgroup classes checked", classes);
  r.assume("checked on the corpus only");
  return r;
}

/// sigma_0(S_n) for 3 <= n <= n_max (<= 7) from the full lattice.
inline CheckReport check_small_symmetric(unsigned n_max = 6, const Budget& budget = {}) {
  if (n_max < 3 || n_max > 7) throw precondition_error("check_small_symmetric: need 3 <= n_max <= 7");
  CheckReport r("sigma0-small", "3.." + std::to_string(n_max));
  const std::size_t expected[] = {0, 0, 0, 4, 4, 6, 7, 8};
  for (unsigned n = 3; n <= n_max; ++n) {
    const auto g = ConcreteGroup::symmetric(n);
    const auto v = detail::exact_value(sigma0_exact(g, MaximalMode::lattice, nullptr, budget));
    r.expect(v == std::optional<std::size_t>(expected[n]),
             "S" + std::to_string(n) + ": sigma0=" + detail::value_str(v) + ", expected " + std::to_string(expected[n]));
    r.note("S" + std::to_string(n), detail::value_str(v));
  }
  return r;
}

} // namespace sigma0
