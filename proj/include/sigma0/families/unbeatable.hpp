#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sigma0/combinat/numbers.hpp"
#include "sigma0/combinat/partition.hpp"
#include "sigma0/combinat/subsum.hpp"
#include "sigma0/combinat/two_adic.hpp"
#include "sigma0/families/catalog.hpp"
#include "sigma0/families/counts.hpp"
#include "sigma0/families/spec.hpp"

namespace sigma0 {

enum class RatioBasis {
  same_family,     // the covering family itself, ratio 1
  exact,           // exact intersection count
  order_bound,     // |M| as an upper bound on |M cap Pi|
  external_bound   // primitive order bound taken from the literature
};

inline const char* to_string(RatioBasis b) {
  switch (b) {
  case RatioBasis::same_family: return "same-family";
  case RatioBasis::exact: return "exact";
  case RatioBasis::order_bound: return "order-bound";
  case RatioBasis::external_bound: return "external-bound";
  }
  return "?";
}

/// Upper bound on c(M) = |M cap Pi| / |X_{n_2} cap Pi| for one family.
struct CRatio {
  std::string family;
  Nat numerator;      // |M cap Pi| or an upper bound for it
  Nat denominator;    // |X_{n_2} cap Pi|
  ExactRatio value;
  RatioBasis basis = RatioBasis::exact;
  bool is_exact() const { return basis == RatioBasis::exact || basis == RatioBasis::same_family; }
};

namespace detail {

inline CRatio make_ratio(std::string family, Nat num, const Nat& den, RatioBasis basis) {
  CRatio r;
  r.family = std::move(family);
  r.value = ratio(num, den);
  r.numerator = std::move(num);
  r.denominator = den;
  r.basis = basis;
  return r;
}

inline Nat exact_primitive_count(const PrimitiveCatalogEntry& e, const Partition& lambda) {
  const auto group = e.build();
  std::uint64_t c = 0;
  for (const auto& g : group.elements()) c += g.cycle_type() == lambda;
  return c;
}

} // namespace detail

/// c(M) for family `spec` in S_n, Pi = pi_class(n). Exact for A_n, set
/// stabilizers and half-block stabilizers meeting the counting hypothesis;
/// |M| / |X_{n_2} cap Pi| otherwise.
inline CRatio c_ratio(const FamilySpec& spec, unsigned n) {
  require_pi_domain(n, "c_ratio");
  if (spec.n != n) throw precondition_error("c_ratio: family degree differs from n");
  const Partition pi = pi_class(n);
  const unsigned n2 = two_part(n);
  const Nat den = intersect_setstab(pi, n2);
  const auto label = spec.label();
  switch (spec.kind) {
  case FamilyKind::alternating: return detail::make_ratio(label, intersect_alt(pi), den, RatioBasis::exact);
  case FamilyKind::set_stab:
    if (spec.size == n2 && !spec.anchor) return detail::make_ratio(label, den, den, RatioBasis::same_family);
    return detail::make_ratio(label, intersect_setstab(pi, spec.size), den, RatioBasis::exact);
  case FamilyKind::block_stab:
    if (2 * spec.size == n && blockstab_half_violation(pi).empty())
      return detail::make_ratio(label, intersect_blockstab_half(pi), den, RatioBasis::exact);
    return detail::make_ratio(label, spec.order(), den, RatioBasis::order_bound);
  case FamilyKind::primitive: return detail::make_ratio(label, spec.order(), den, RatioBasis::order_bound);
  }
  return {};
}

/// c(M) bound for an arbitrary proper primitive subgroup from the external order bound.
inline CRatio c_ratio_generic_primitive(unsigned n) {
  require_pi_domain(n, "c_ratio_generic_primitive");
  const Partition pi = pi_class(n);
  return detail::make_ratio("P(any)", primitive_order_bound(n), intersect_setstab(pi, two_part(n)),
                            RatioBasis::external_bound);
}

enum class UnbeatableVerdict { strong, non_strong, beaten, inconclusive };

inline const char* to_string(UnbeatableVerdict v) {
  switch (v) {
  case UnbeatableVerdict::strong: return "strong";
  case UnbeatableVerdict::non_strong: return "non-strong";
  case UnbeatableVerdict::beaten: return "beaten";
  case UnbeatableVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

struct UnbeatableCertificate {
  unsigned n = 0;
  Partition pi;
  unsigned n2 = 0;
  Nat base_count;               // |X_{n_2} cap Pi|
  Nat stabilized_sets;          // n_2-sets fixed by one element of Pi
  bool coverage = false;        // every element of Pi fixes some n_2-set
  bool disjoint = false;        // and no element fixes two
  std::vector<CRatio> ratios;
  UnbeatableVerdict verdict = UnbeatableVerdict::inconclusive;
  std::string beaten_by;
  std::vector<std::string> assumed_inputs;
};

/// Checks that X_{n_2} is definitely unbeatable on Pi in S_n. Primitive
/// competitors are counted exactly when the catalog lists degree n, and
/// bounded by the external order bound otherwise.
inline UnbeatableCertificate unbeatable_certificate(unsigned n, const PrimitiveCatalog* catalog = nullptr) {
  require_pi_domain(n, "unbeatable_certificate");
  UnbeatableCertificate c;
  c.n = n;
  c.pi = pi_class(n);
  c.n2 = two_part(n);
  c.base_count = intersect_setstab(c.pi, c.n2);
  // an element of Pi fixes an n_2-set exactly when some of its cycles cover it
  c.stabilized_sets = count_index_subsets_with_sum(c.pi.parts(), c.n2);
  c.coverage = c.stabilized_sets >= 1;
  c.disjoint = c.stabilized_sets <= 1;

  c.ratios.push_back(c_ratio(FamilySpec::alternating(n), n));
  for (unsigned m = 1; 2 * m < n; ++m) c.ratios.push_back(c_ratio(FamilySpec::set_stab(n, m), n));
  for (unsigned d = 2; d < n; ++d)
    if (n % d == 0) c.ratios.push_back(c_ratio(FamilySpec::block_stab(n, d), n));
  if (catalog && catalog->covers_degree(n)) {
    for (const auto& e : catalog->entries_for(n)) {
      c.ratios.push_back(detail::make_ratio(e->name, detail::exact_primitive_count(*e, c.pi), c.base_count, RatioBasis::exact));
      if (e->maximality == Maximality::assumed) c.assumed_inputs.push_back("maximality of " + e->name);
    }
    c.assumed_inputs.push_back("completeness of the primitive catalog at degree " + std::to_string(n));
  } else {
    c.ratios.push_back(c_ratio_generic_primitive(n));
    c.assumed_inputs.push_back("primitive order bound " + std::string(n <= 24 ? "3^n" : "2^n"));
  }

  const ExactRatio one(1);
  const CRatio* worst_exact = nullptr;
  bool all_below = true, max_is_one = true;
  for (const auto& r : c.ratios) {
    if (r.basis == RatioBasis::same_family) continue;
    if (r.is_exact() && r.value > one && (!worst_exact || r.value > worst_exact->value)) worst_exact = &r;
    if (r.value >= one) all_below = false;
    if (r.value > one || (r.value == one && !r.is_exact())) max_is_one = false;
  }
  if (!c.coverage || !c.disjoint) {
    c.verdict = UnbeatableVerdict::inconclusive;
  } else if (worst_exact) {
    c.verdict = UnbeatableVerdict::beaten;
    c.beaten_by = worst_exact->family;
  } else if (all_below) {
    c.verdict = UnbeatableVerdict::strong;
  } else if (max_is_one) {
    c.verdict = UnbeatableVerdict::non_strong;
  } else {
    c.verdict = UnbeatableVerdict::inconclusive;
  }
  return c;
}

} // namespace sigma0
