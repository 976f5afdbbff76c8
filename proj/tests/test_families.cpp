#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "sigma0/combinat.hpp"
#include "sigma0/families.hpp"
#include "sigma0/perm/enumerate.hpp"
#include "sigma0/perm/lattice.hpp"

using namespace sigma0;

namespace {

const PrimitiveCatalog& catalog() {
  static const PrimitiveCatalog c = PrimitiveCatalog::shipped();
  return c;
}

std::vector<Partition> partitions_of(unsigned n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::uint32_t low_mask(unsigned m) { return (1u << m) - 1u; }

// blocks {1..n/2}, {n/2+1..n}
FamilyMember half_blocks(unsigned n) {
  std::vector<std::uint8_t> b(n);
  for (unsigned i = 0; i < n; ++i) b[i] = i < n / 2 ? 0 : 1;
  return FamilyMember::block_stab(n, b);
}

bool has_triple_part(const Partition& p) {
  for (auto [part, mult] : p.multiplicities())
    if (mult >= 3) return true;
  return false;
}

} // namespace

TEST(FamilyStats, Examples) {
  const auto w4 = family_stats(FamilySpec::block_stab(8, 4));
  EXPECT_EQ(w4.conjugates, 35);
  const auto x2 = family_stats(FamilySpec::set_stab(10, 2));
  EXPECT_EQ(x2.conjugates, 45);
  EXPECT_EQ(x2.order, 2 * factorial(8));
  const auto a6 = family_stats(FamilySpec::alternating(6));
  EXPECT_EQ(a6.order, 360);
  EXPECT_EQ(a6.index, 2);
  EXPECT_EQ(family_stats(FamilySpec::anchored_set_stab(12, 4, 0)).conjugates, 165);
  EXPECT_THROW(FamilySpec::set_stab(8, 4), precondition_error);
  EXPECT_THROW(FamilySpec::block_stab(8, 3), precondition_error);
  EXPECT_THROW(catalog().find(7, "PGL25"), precondition_error);
}

TEST(FamilyStats, OrderTimesIndex) {
  for (unsigned n = 3; n <= 60; ++n) {
    std::vector<FamilySpec> specs{FamilySpec::alternating(n)};
    for (unsigned m = 1; 2 * m < n; ++m) specs.push_back(FamilySpec::set_stab(n, m));
    for (unsigned d = 2; d < n; ++d)
      if (n % d == 0) specs.push_back(FamilySpec::block_stab(n, d));
    for (const auto& e : catalog().entries_for(n)) specs.push_back(FamilySpec::primitive(e));
    for (const auto& s : specs) {
      const auto st = family_stats(s);
      ASSERT_EQ(st.order * st.index, factorial(n)) << s.label() << " n=" << n;
      if (s.kind == FamilyKind::block_stab) ASSERT_EQ(st.conjugates, st.index);
    }
  }
}

TEST(Counts, Examples) {
  EXPECT_EQ(intersect_setstab(Partition{2, 2, 2, 1}, 1), 15);
  EXPECT_EQ(intersect_setstab(Partition{4, 4, 2, 1}, 1), 56700);
  EXPECT_EQ(intersect_setstab(Partition{4, 4, 2}, 2), 1260);
  EXPECT_EQ(intersect_blockstab_half(Partition{8}), 144);
  EXPECT_EQ(intersect_blockstab_half(Partition{8}), factorial(4) * factorial(3));
  EXPECT_EQ(intersect_blockstab_half(Partition{4, 4, 2}), 1800);
  EXPECT_EQ(intersect_blockstab_half(Partition{8, 4, 2}), 3175200);
  EXPECT_EQ(intersect_blockstab_half(Partition{4, 4, 4}), 10800);
  EXPECT_THROW(intersect_blockstab_half(Partition{4, 4}), precondition_error);
  EXPECT_NE(blockstab_half_violation(Partition{4, 4}).find("sum to n/2"), std::string::npos);
  EXPECT_NE(blockstab_half_violation(Partition{4, 2, 1, 1}).find("fixed points"), std::string::npos);
  EXPECT_EQ(intersect_alt(Partition{2, 2, 2}), 0);
  EXPECT_EQ(intersect_alt(Partition{5, 5}), 72576);
  EXPECT_EQ(intersect_alt(Partition{3, 1, 1}), 20);
  EXPECT_EQ(class_size(Partition{5, 5}) / 576, 126);
}

TEST(Counts, OrderBounds) {
  EXPECT_EQ(imprimitive_order_max(12).order, 1036800);
  EXPECT_EQ(imprimitive_order_max(9).order, 1296);
  EXPECT_EQ(imprimitive_order_max(15).order, 10368000);
  EXPECT_EQ(imprimitive_order_max(15).blocks, 3u);
  EXPECT_THROW(imprimitive_order_max(7), precondition_error);
  // direct maximum over divisors
  for (unsigned n = 4; n <= 60; ++n) {
    if (is_prime(n)) continue;
    Nat best = 0;
    for (unsigned d = 2; d < n; ++d)
      if (n % d == 0) best = std::max(best, block_stab_order(n, d));
    ASSERT_EQ(imprimitive_order_max(n).order, best) << n;
    ASSERT_EQ(imprimitive_order_max(n).blocks, smallest_prime_divisor(n)) << n;
  }
  EXPECT_EQ(primitive_order_bound(14), 4782969);
  EXPECT_EQ(primitive_order_bound(40), pow2(40));
  EXPECT_EQ(primitive_order_bound(24), pow_nat(3, 24));
}

TEST(Counts, FullCycles) {
  EXPECT_EQ(pgl2_fullcycle_count(3), 84);
  EXPECT_EQ(pgl2_fullcycle_count(5), 7440);
  EXPECT_THROW(pgl2_fullcycle_count(4), precondition_error);
  EXPECT_LT(pgl2_fullcycle_count(3), intersect_blockstab_half(Partition{8}));
  EXPECT_EQ(intersect_blockstab_half(Partition{16}), factorial(8) * factorial(7));
  // 8-cycles of the catalogued PGL(2,7)
  const auto pgl = catalog().find(8, "PGL27")->build();
  std::size_t eight = 0;
  for (const auto& g : pgl.elements()) eight += g.cycle_type() == Partition{8};
  EXPECT_EQ(Nat(eight), pgl2_fullcycle_count(3));
}

TEST(Counts, TrivialUpperBound) {
  EXPECT_EQ(trivial_upper_bound(8), 36);
  EXPECT_EQ(trivial_upper_bound(7), 8);
  EXPECT_EQ(trivial_upper_bound(10), 46);
}

TEST(Counts, Bounds32a) {
  const auto b2 = bounds_3_2a(2);
  EXPECT_EQ(b2.c1, 117);
  EXPECT_EQ(b2.c2, 216);
  EXPECT_EQ(b2.c2, 2 + binomial(11, 3) + 49);
  const auto b3 = bounds_3_2a(3);
  Nat c2 = 2 + binomial(23, 7);
  for (unsigned i = 2; i <= 16; ++i) c2 += binomial(24 - i, 3);
  EXPECT_EQ(b3.c1, 1 + binomial(23, 7));
  EXPECT_EQ(b3.c2, c2);
  EXPECT_EQ(ceil_div(factorial(12), 8 * factorial(6) * factorial(6)), 116);
}

TEST(Counts, BruteForceAgreementUpTo8) {
  std::size_t checks = 0;
  for (unsigned n = 2; n <= 8; ++n) {
    std::vector<FamilyMember> setstabs;
    for (unsigned m = 1; m < n; ++m) setstabs.push_back(FamilyMember::set_stab(n, low_mask(m)));
    const auto alt = FamilyMember::alternating(n);
    for (const auto& lambda : partitions_of(n)) {
      std::vector<std::uint64_t> in_set(n, 0);
      std::uint64_t in_alt = 0, in_half = 0;
      const bool half_ok = n % 2 == 0 && blockstab_half_violation(lambda).empty();
      const auto half = n % 2 == 0 ? half_blocks(n) : alt;
      for_each_in_class(n, lambda, [&](const Perm& g) {
        for (unsigned m = 1; m < n; ++m) in_set[m] += setstabs[m - 1].contains(g);
        in_alt += alt.contains(g);
        if (half_ok) in_half += half.contains(g);
      });
      for (unsigned m = 1; m < n; ++m) {
        ASSERT_EQ(intersect_setstab(lambda, m), in_set[m]) << lambda.str() << " m=" << m;
        ++checks;
      }
      ASSERT_EQ(intersect_alt(lambda), in_alt) << lambda.str();
      if (half_ok) {
        ASSERT_EQ(intersect_blockstab_half(lambda), in_half) << lambda.str();
        ++checks;
      }
    }
  }
  EXPECT_GT(checks, 100u);
}

TEST(Counts, DoubleCountingUpTo8) {
  for (unsigned n = 3; n <= 8; ++n) {
    auto specs = maximal_families(n, catalog());
    for (unsigned m = (n + 1) / 2; m < n; ++m) specs.push_back(FamilySpec::anchored_set_stab(n, m, 0));
    for (const auto& spec : specs) {
      const auto members = family_members(spec);
      ASSERT_EQ(Nat(members.size()), family_stats(spec).conjugates) << spec.label() << " n=" << n;
      if (spec.anchor) continue;
      for (const auto& lambda : partitions_of(n)) {
        const auto g = class_representative(n, lambda);
        std::size_t containing = 0;
        for (const auto& m : members) containing += m.contains(g);
        const Nat meet = brute_intersection(members.front(), lambda);
        ASSERT_EQ(Nat(members.size()) * meet, class_size(lambda) * containing)
            << spec.label() << " " << lambda.str();
      }
    }
  }
}

TEST(Counts, PiIdentities) {
  for (unsigned n = 5; n <= 60; ++n) {
    if (!in_pi_domain(n)) continue;
    const auto pi = pi_class(n);
    const unsigned n2 = two_part(n);
    const Nat exact = intersect_setstab(pi, n2);
    const Nat formula = factorial(n2) * factorial(n - n2) / pow2(s_exponent(n));
    // the closed form overcounts by 3 when a part occurs three times
    if (has_triple_part(pi))
      EXPECT_EQ(formula, 3 * exact) << n;
    else
      EXPECT_EQ(formula, exact) << n;
    // each element of Pi fixes exactly one n_2-set
    EXPECT_EQ(count_index_subsets_with_sum(pi.parts(), n2), 1) << n;
    // |X_m cap Pi| / |X_{n_2} cap Pi| = m_M C(n,n_2)/C(n,m)
    for (unsigned m = 1; 2 * m < n; ++m) {
      const Nat mm = count_index_subsets_with_sum(pi.parts(), m);
      EXPECT_EQ(ratio(intersect_setstab(pi, m), exact), ratio(mm * binomial(n, n2), binomial(n, m))) << n << " m=" << m;
    }
  }
  EXPECT_EQ(intersect_setstab(pi_class(7), 1), 15);
  EXPECT_EQ(intersect_setstab(pi_class(13), 1), 1247400);
}

TEST(Catalog, ShippedValidates) {
  const auto v = catalog().validate();
  EXPECT_EQ(v.size(), catalog().size());
  for (unsigned n = 5; n <= 13; ++n) EXPECT_TRUE(catalog().covers_degree(n)) << n;
  EXPECT_FALSE(catalog().covers_degree(14));
  for (const auto& x : v) EXPECT_TRUE(x.has_odd) << x.id;
}

TEST(Catalog, ParseErrors) {
  std::istringstream bad_fields("6;PGL25;120;6;assumed\n");
  EXPECT_THROW(PrimitiveCatalog::parse(bad_fields), parse_error);
  std::istringstream bad_status("6;PGL25;120;6;maybe;(3,4,6,5)|(1,2,3)(4,5,6)\n");
  EXPECT_THROW(PrimitiveCatalog::parse(bad_status), parse_error);
  std::istringstream wrong_order("6;PGL25;60;12;assumed;(3,4,6,5)|(1,2,3)(4,5,6)\n");
  EXPECT_THROW(PrimitiveCatalog::parse(wrong_order).validate(), parse_error);
  std::istringstream imprimitive("4;D8;8;3;assumed;(1,2,3,4)|(1,3)\n");
  EXPECT_THROW(PrimitiveCatalog::parse(imprimitive).validate(), parse_error);
}

TEST(Members, Examples) {
  const auto x1 = family_members(FamilySpec::set_stab(5, 1));
  ASSERT_EQ(x1.size(), 5u);
  for (const auto& m : x1) EXPECT_EQ(m.group().size(), 24u);
  const auto w3 = family_members(FamilySpec::block_stab(6, 3));
  ASSERT_EQ(w3.size(), 10u);
  for (const auto& m : w3) EXPECT_EQ(m.group().size(), 72u);
  const auto a6 = family_members(FamilySpec::alternating(6));
  ASSERT_EQ(a6.size(), 1u);
  EXPECT_EQ(a6[0].group().size(), 360u);
  EXPECT_EQ(family_members(FamilySpec::anchored_set_stab(12, 4, 0)).size(), 165u);
}

TEST(Members, StructureMatchesClosure) {
  for (unsigned n = 3; n <= 7; ++n) {
    for (const auto& spec : maximal_families(n, catalog())) {
      for (const auto& m : family_members(spec)) {
        const auto g = m.group();
        ASSERT_EQ(g.order(), spec.order()) << m.label();
        for (const auto& x : g.elements()) ASSERT_TRUE(m.contains(x)) << m.label();
      }
    }
  }
}

TEST(Members, PrimitiveConjugates) {
  for (unsigned n : {5u, 6u, 7u, 8u, 9u, 10u}) {
    for (const auto& e : catalog().entries_for(n)) {
      const auto members = family_members(FamilySpec::primitive(e));
      EXPECT_EQ(Nat(members.size()), e->conjugates) << e->name;
    }
  }
  EXPECT_THROW(family_members(FamilySpec::primitive(catalog().find(12, "PGL211"))), cap_exceeded);
}

TEST(Members, CatalogMatchesLattice) {
  for (unsigned n = 3; n <= 7; ++n) {
    const auto sn = ConcreteGroup::symmetric(n);
    const SubgroupLattice lat(sn);
    auto from_lattice = lat.maximal_subgroup_sets();
    std::vector<ElementSet> from_catalog;
    for (const auto& m : catalog_maximal_subgroups(n, catalog())) {
      ElementSet s(sn.size());
      for (std::size_t i = 0; i < sn.size(); ++i)
        if (m.contains(sn.element(i))) s.set(i);
      from_catalog.push_back(s);
    }
    std::sort(from_lattice.begin(), from_lattice.end());
    std::sort(from_catalog.begin(), from_catalog.end());
    EXPECT_EQ(from_lattice, from_catalog) << "S" << n;
  }
  EXPECT_EQ(catalog_maximal_subgroups(5, catalog()).size(), 22u);
  EXPECT_EQ(catalog_maximal_subgroups(6, catalog()).size(), 53u);
}

TEST(Members, DoubleCosetMaximalityS8) {
  for (const auto& spec : maximal_families(8, catalog())) {
    const auto m = family_members(spec).front();
    EXPECT_TRUE(is_maximal_by_double_cosets(m)) << m.label();
  }
  // the stabilizer of a 4-set lies inside a half-block stabilizer
  EXPECT_FALSE(is_maximal_by_double_cosets(FamilyMember::set_stab(8, low_mask(4))));
  EXPECT_FALSE(is_maximal_by_double_cosets(FamilyMember::set_stab(6, low_mask(3))));
  EXPECT_TRUE(is_maximal_by_double_cosets(FamilyMember::set_stab(7, low_mask(3))));
}

TEST(Unbeatable, CRatioExamples) {
  const auto p11 = c_ratio(FamilySpec::primitive(catalog().find(11, "AGL111")), 11);
  EXPECT_EQ(p11.value, ratio(110, 56700));
  EXPECT_EQ(p11.basis, RatioBasis::order_bound);
  const auto w7 = c_ratio(FamilySpec::block_stab(14, 7), 14);
  EXPECT_EQ(w7.numerator, 3175200);
  EXPECT_EQ(w7.denominator, 14968800);
  EXPECT_TRUE(w7.is_exact());
  // set stabilizer of a 2^c-set with n_2 < 2^c
  for (unsigned n : {11u, 13u, 14u, 22u, 27u}) {
    const unsigned n2 = two_part(n);
    for (unsigned c = 0; (1u << c) * 2 < n; ++c) {
      if ((1u << c) <= n2) continue;
      const auto r = c_ratio(FamilySpec::set_stab(n, 1u << c), n);
      const unsigned m = 1u << c;
      const Nat mm = count_index_subsets_with_sum(pi_class(n).parts(), m);
      EXPECT_EQ(r.value, ratio(mm * binomial(n, n2), binomial(n, m))) << n << " " << m;
      EXPECT_LT(r.value, ExactRatio(1)) << n << " " << m;
    }
  }
}

TEST(Unbeatable, Verdicts) {
  const auto c10 = unbeatable_certificate(10, &catalog());
  EXPECT_EQ(c10.verdict, UnbeatableVerdict::beaten);
  EXPECT_EQ(c10.beaten_by, "W5");
  const auto c5 = unbeatable_certificate(5, &catalog());
  EXPECT_EQ(c5.verdict, UnbeatableVerdict::beaten);
  EXPECT_EQ(c5.beaten_by, "AGL15");
  EXPECT_EQ(c5.base_count, 6);
  // at n = 7 the 2-set stabilizers tie with the point stabilizers on (2,2,2,1)
  const auto c7 = unbeatable_certificate(7, &catalog());
  EXPECT_EQ(c7.verdict, UnbeatableVerdict::non_strong);
  EXPECT_EQ(c7.base_count, 15);
  const auto x2 = std::find_if(c7.ratios.begin(), c7.ratios.end(), [](const CRatio& r) { return r.family == "X2"; });
  ASSERT_NE(x2, c7.ratios.end());
  EXPECT_EQ(x2->numerator, 15);
  EXPECT_EQ(brute_intersection(FamilyMember::set_stab(7, 0b11), Partition{2, 2, 2, 1}), 15);
  const auto agl = std::find_if(c7.ratios.begin(), c7.ratios.end(), [](const CRatio& r) { return r.family == "AGL17"; });
  ASSERT_NE(agl, c7.ratios.end());
  EXPECT_EQ(agl->numerator, 7);
  for (unsigned n = 5; n <= 200; ++n) {
    if (!in_pi_domain(n)) continue;
    const auto c = unbeatable_certificate(n, &catalog());
    EXPECT_TRUE(c.coverage && c.disjoint) << n;
    if (n == 5 || n == 10)
      EXPECT_EQ(c.verdict, UnbeatableVerdict::beaten) << n;
    else if (n == 7)
      EXPECT_EQ(c.verdict, UnbeatableVerdict::non_strong);
    else
      EXPECT_EQ(c.verdict, UnbeatableVerdict::strong) << n;
  }
}
