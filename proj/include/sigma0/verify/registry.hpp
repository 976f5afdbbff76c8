#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sigma0/families.hpp"
#include "sigma0/perm/corpus.hpp"
#include "sigma0/verify/groups.hpp"
#include "sigma0/verify/inequalities.hpp"
#include "sigma0/verify/report.hpp"
#include "sigma0/verify/symmetric.hpp"
#include "sigma0/verify/table.hpp"

namespace sigma0 {

/// Parameters shared by all checks; unset values fall back to per-check defaults.
struct CheckParams {
  std::optional<unsigned> n;
  std::optional<unsigned> max;
  Budget budget;
  bool heavy = false; // element-level S_12 walk and the S_10 solve
  const PrimitiveCatalog* catalog = nullptr;
  const std::vector<CorpusEntry>* corpus = nullptr;
};

struct CheckInfo {
  std::string id;
  std::string summary;
  std::function<std::vector<CheckReport>(const CheckParams&)> run;
};

namespace detail {

inline const PrimitiveCatalog& need_catalog(const CheckParams& p) {
  if (!p.catalog) throw precondition_error("this check needs a primitive catalog");
  return *p.catalog;
}

inline const std::vector<CorpusEntry>& need_corpus(const CheckParams& p) {
  if (!p.corpus) throw precondition_error("this check needs a group corpus");
  return *p.corpus;
}

inline unsigned log2_exact(unsigned n, const char* what) {
  if (!is_power_of_two(n)) throw precondition_error(std::string(what) + ": n must be a power of two");
  return static_cast<unsigned>(__builtin_ctz(n));
}

inline std::string base_id(const std::string& ref) { return ref.substr(0, ref.find('(')); }

} // namespace detail

inline const std::vector<CheckInfo>& check_registry();

/// The table itself: exact rows match the trivial upper bound outside the
/// small degrees, intervals are ordered, and every cited check exists.
inline CheckReport check_theorem_table(unsigned n_max = 64) {
  CheckReport r("theorem-table", "3.." + std::to_string(n_max));
  std::set<std::string> ids;
  for (const auto& c : check_registry()) ids.insert(c.id);
  for (const auto& row : reproduce_theorem_table(n_max)) {
    const std::string at = detail::nstr(row.n);
    for (const auto& ref : row.certified_by)
      r.expect(ids.count(detail::base_id(ref)) == 1, at + ": unknown check " + ref);
    r.expect(row.low <= row.high, at + ": empty interval");
    if (row.regime != "small" && row.exact())
      r.expect(row.low == trivial_upper_bound(row.n), at + ": value differs from the construction");
    if (row.regime == "small") r.expect(row.low <= trivial_upper_bound(row.n), at + ": small value above the bound");
  }
  const auto rows = reproduce_theorem_table(std::min(n_max, 12u));
  for (const auto& row : rows)
    if (row.n == 7 || row.n == 8 || row.n == 12) r.note(detail::nstr(row.n), row.value());
  return r;
}

inline const std::vector<CheckInfo>& check_registry() {
  using V = std::vector<CheckReport>;
  static const std::vector<CheckInfo> reg{
      {"lemma-swap", "a!^b b! >= b!^a a!, equality iff b = 1",
       [](const CheckParams& p) { return V{check_lemma_swap(p.max.value_or(40))}; }},
      {"lemma-ab", "smallest prime divisor maximizes the wreath order",
       [](const CheckParams& p) { return V{check_lemma_ab(p.max.value_or(60))}; }},
      {"order-dominance", "subgroup orders below 2 floor(n/2)! ceil(n/2)!",
       [](const CheckParams& p) { return V{check_order_dominance(12, p.max.value_or(60))}; }},
      {"f-char", "f(n) < 1 characterization",
       [](const CheckParams& p) { return V{check_f_characterization(p.max.value_or(200))}; }},
      {"stirling", "Stirling lower bound, sanity only",
       [](const CheckParams& p) { return V{check_stirling(p.max.value_or(200))}; }},
      {"solvable", "sigma_0 = 2 or sigma_0 = sigma on solvable corpus groups",
       [](const CheckParams& p) { return V{check_theorem_solvable(detail::need_corpus(p), p.budget)}; }},
      {"quotient", "sigma_0(G) <= sigma_0(G/N), equality over Frattini",
       [](const CheckParams& p) { return V{check_quotient_bound(detail::need_corpus(p), 120, p.budget)}; }},
      {"forcing", "maximal subgroups with larger sigma_0 lie in every minimal covering",
       [](const CheckParams& p) { return V{check_maximal_forcing(detail::need_corpus(p), 120, p.budget)}; }},
      {"complements", "b > 1 complements implies b >= |N|",
       [](const CheckParams& p) { return V{check_complements(detail::need_corpus(p))}; }},
      {"gamma0", "normal primary covering number 2",
       [](const CheckParams& p) { return V{check_gamma0(detail::need_corpus(p), p.budget)}; }},
      {"single-class", "no single class of subgroups covers G_0",
       [](const CheckParams& p) { return V{check_single_class(detail::need_corpus(p))}; }},
      {"sigma0-small", "sigma_0(S_n) for n <= 7 from the lattice",
       [](const CheckParams& p) { return V{check_small_symmetric(p.max.value_or(6), p.budget)}; }},
      {"oracle", "closed-form counts against brute force",
       [](const CheckParams& p) { return V{check_oracle(p.max.value_or(8))}; }},
      {"half-block", "half-block intersection count",
       [](const CheckParams& p) { return V{check_half_block(p.max.value_or(8))}; }},
      {"trivial-bound", "upper bound 1 + C(n, n_2), or 1 + C(n, n/2)/2",
       [](const CheckParams& p) { return V{check_trivial_bound(p.max.value_or(40))}; }},
      {"subsum", "2-power partitions of 2^a and 3*2^a",
       [](const CheckParams& p) { return V{check_subsum(p.max.value_or(6))}; }},
      {"power2", "n = 2^a",
       [](const CheckParams& p) {
         V out;
         if (p.n) {
           const auto a = detail::log2_exact(*p.n, "power2");
           out.push_back(check_power2(a, a <= 3, p.budget));
         } else {
           for (unsigned a = 2; a <= 5; ++a) out.push_back(check_power2(a, a <= 3, p.budget));
         }
         return out;
       }},
      {"s5", "degree 5", [](const CheckParams& p) { return V{check_s5(detail::need_catalog(p), p.budget)}; }},
      {"s6", "degree 6", [](const CheckParams& p) { return V{check_s6(p.budget)}; }},
      {"unbeatable", "X_{n_2} definitely unbeatable on Pi",
       [](const CheckParams& p) {
         V out;
         if (p.n) return V{check_unbeatable(*p.n, p.catalog)};
         std::set<unsigned> degrees(unbeatable_small_degrees().begin(), unbeatable_small_degrees().end());
         if (p.max)
           for (unsigned n = 5; n <= *p.max; ++n)
             if (in_pi_domain(n)) degrees.insert(n);
         for (auto n : degrees) out.push_back(check_unbeatable(n, p.catalog));
         return out;
       }},
      {"32a", "n = 3 * 2^a",
       [](const CheckParams& p) {
         V out;
         if (p.n) {
           if (*p.n % 3) throw precondition_error("32a: n must be 3 * 2^a");
           const auto a = detail::log2_exact(*p.n / 3, "32a");
           out.push_back(check_32a(a, p.heavy && a == 2, p.catalog));
         } else {
           for (unsigned a = 2; a <= 5; ++a) out.push_back(check_32a(a, p.heavy && a == 2, p.catalog));
         }
         return out;
       }},
      {"s10", "degree 10",
       [](const CheckParams& p) { return V{check_s10(detail::need_catalog(p), p.budget, p.heavy)}; }},
      {"theorem-table", "sigma_0(S_n) table",
       [](const CheckParams& p) { return V{check_theorem_table(p.max.value_or(64))}; }},
  };
  return reg;
}

inline const CheckInfo* find_check(const std::string& id) {
  for (const auto& c : check_registry())
    if (c.id == id) return &c;
  return nullptr;
}

/// Runs one check, or every check for "all". An n or max meant for one check
/// is not forwarded to the others under "all".
inline std::vector<CheckReport> run_check(const std::string& id, const CheckParams& params) {
  params.budget.validate();
  if (id == "all") {
    CheckParams base = params;
    base.n.reset();
    base.max.reset();
    std::vector<CheckReport> out;
    for (const auto& c : check_registry()) {
      auto part = c.run(base);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  const auto* c = find_check(id);
  if (!c) throw precondition_error("unknown check '" + id + "'");
  return c->run(params);
}

/// Results and the checks that exercise them.
struct ManifestEntry {
  std::string result;
  std::vector<std::string> checks;
};

inline const std::vector<ManifestEntry>& coverage_manifest() {
  static const std::vector<ManifestEntry> m{
      {"solvable groups: sigma_0 = 2 or sigma_0 = sigma", {"solvable"}},
      {"sigma_0 of S_n by degree regime", {"theorem-table", "sigma0-small", "power2", "32a", "unbeatable"}},
      {"normal primary covering number", {"gamma0", "single-class"}},
      {"abelianization not a p-group gives 2", {"solvable"}},
      {"quotients and Frattini", {"quotient"}},
      {"forced maximal subgroups", {"forcing"}},
      {"number of complements", {"complements"}},
      {"factorial swap inequality", {"lemma-swap"}},
      {"wreath orders and the smallest prime", {"lemma-ab"}},
      {"largest imprimitive and primitive orders", {"order-dominance"}},
      {"half-block intersection count", {"half-block", "oracle"}},
      {"upper bounds from set and block stabilizers", {"trivial-bound"}},
      {"powers of two", {"power2"}},
      {"degree five", {"s5"}},
      {"X_{n_2} unbeatable when f(n) < 1", {"unbeatable", "f-char"}},
      {"f(n) < 1 characterization", {"f-char", "stirling"}},
      {"unbeatable at small degrees", {"unbeatable"}},
      {"degree ten", {"s10"}},
      {"degrees other than 3 * 2^a", {"trivial-bound", "unbeatable", "s5", "s10"}},
      {"degree six", {"s6"}},
      {"subsums of 2-power partitions", {"subsum"}},
      {"degrees 3 * 2^a", {"32a", "subsum"}},
  };
  return m;
}

} // namespace sigma0
