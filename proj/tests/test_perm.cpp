#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "sigma0/perm/corpus.hpp"
#include "sigma0/perm/enumerate.hpp"
#include "sigma0/perm/group.hpp"
#include "sigma0/perm/lattice.hpp"

using namespace sigma0;

TEST(Perm, ParseCycles) {
  const auto t = Perm::parse_cycles("(1,2)", 3);
  EXPECT_EQ(t(0), 1u);
  EXPECT_EQ(t(1), 0u);
  EXPECT_EQ(t(2), 2u);
  const auto c = Perm::parse_cycles("(3,4,6,5)", 6);
  EXPECT_EQ(c.str(), "(3,4,6,5)");
  EXPECT_EQ(c(0), 0u);
  EXPECT_EQ(Perm::parse_cycles("(3465)", 6), c);
  EXPECT_THROW(Perm::parse_cycles("(1,2)(1,3)", 3), parse_error);
  EXPECT_THROW(Perm::parse_cycles("(1,4)", 3), parse_error);
  EXPECT_THROW(Perm::parse_cycles("(1,2", 3), parse_error);
  EXPECT_THROW(Perm::parse_cycles("1,2)", 3), parse_error);
  EXPECT_EQ(Perm::parse_cycles("()", 4), Perm::identity(4));
}

TEST(Perm, Algebra) {
  const auto p = Perm::parse_cycles("(1,2,3,4)(5,6)", 6);
  EXPECT_EQ(p.order(), 4u);
  EXPECT_EQ(Perm::identity(5).cycle_type(), (Partition{1, 1, 1, 1, 1}));
  EXPECT_EQ(Perm::parse_cycles("(1,2,3,4,5,6,7,8)", 8).sign(), Parity::odd);
  const auto a = Perm::parse_cycles("(1,2)", 3);
  const auto b = Perm::parse_cycles("(2,3)", 3);
  // a first, then b: 1 -> 2 -> 3
  EXPECT_EQ((a * b)(0), 2u);
  EXPECT_EQ((a * b).str(), "(1,3,2)");
  EXPECT_TRUE((p * p.inverse()).is_identity());
  EXPECT_THROW(a * Perm::identity(4), precondition_error);
  EXPECT_EQ(a.conjugate_by(b), Perm::parse_cycles("(1,3)", 3));
}

TEST(Perm, Primary) {
  EXPECT_TRUE(is_primary(Perm::parse_cycles("(1,2,3,4)", 5)));
  EXPECT_FALSE(is_primary(Perm::parse_cycles("(1,2,3)(4,5)", 5)));
  EXPECT_TRUE(is_primary(Perm::identity(5)));
  EXPECT_TRUE(is_primary_type(Partition{4, 2, 1}));
  EXPECT_FALSE(is_primary_type(Partition{3, 2}));
}

TEST(Perm, RankRoundTrip) {
  for (unsigned n : {1u, 4u, 7u}) {
    const auto total = static_cast<std::uint64_t>(factorial(n));
    std::uint64_t prev = 0;
    for (std::uint64_t r = 0; r < total; ++r) {
      const auto p = Perm::unrank(r, n);
      ASSERT_EQ(p.rank(), r);
      if (r) ASSERT_TRUE(Perm::unrank(prev, n) < p);
      prev = r;
    }
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t r = rng() % static_cast<std::uint64_t>(factorial(20));
    ASSERT_EQ(Perm::unrank(r, 20).rank(), r);
  }
}

TEST(Enumerate, ClassCountsMatchFormula) {
  for (unsigned n = 1; n <= 10; ++n) {
    for_each_partition(n, [&](const Partition& lambda) {
      std::uint64_t count = 0;
      bool types_ok = true;
      for_each_in_class(n, lambda, [&](const Perm& p) {
        ++count;
        if (n <= 7 && !(p.cycle_type() == lambda)) types_ok = false;
      });
      ASSERT_EQ(Nat(count), class_size(lambda)) << lambda.str();
      ASSERT_TRUE(types_ok);
    });
  }
}

TEST(Enumerate, DistinctElements) {
  std::set<Perm> seen;
  for_each_in_class(6, Partition{2, 2, 1, 1}, [&](const Perm& p) { seen.insert(p); });
  EXPECT_EQ(seen.size(), 45u);
  EXPECT_EQ(enumerate_class(3, Partition{2, 1}).size(), 3u);
  EXPECT_THROW(enumerate_class(10, Partition{5, 5}, 1000), cap_exceeded);
  EXPECT_EQ(enumerate_class(10, Partition{5, 5}).size(), 72576u);
}

TEST(Group, Closure) {
  const auto s3 = ConcreteGroup::close({Perm::parse_cycles("(1,2)", 3), Perm::parse_cycles("(1,2,3)", 3)}, 3);
  EXPECT_EQ(s3.size(), 6u);
  const auto p = ConcreteGroup::close(
      {Perm::parse_cycles("(3,4,6,5)", 6), Perm::parse_cycles("(1,2,3)(4,5,6)", 6)}, 6);
  EXPECT_EQ(p.size(), 120u);
  EXPECT_TRUE(p.is_transitive());
  const auto f20 = ConcreteGroup::close({Perm::parse_cycles("(1,2,3,4,5)", 5), Perm::parse_cycles("(2,3,5,4)", 5)}, 5);
  EXPECT_EQ(f20.size(), 20u);
  EXPECT_THROW(ConcreteGroup::symmetric(6, 100), cap_exceeded);
  // idempotence
  const auto again = ConcreteGroup::close(f20.generators(), 5);
  EXPECT_TRUE(again == f20);
  const auto from_set = f20.subgroup_from_set(f20.all_set());
  EXPECT_TRUE(ConcreteGroup::close(from_set.generators(), 5) == f20);
}

TEST(Group, PrimaryElements) {
  EXPECT_EQ(ConcreteGroup::symmetric(3).primary_elements().count(), 6u);
  EXPECT_EQ(ConcreteGroup::symmetric(5).primary_elements().count(), 100u);
  EXPECT_EQ(ConcreteGroup::cyclic(6).primary_elements().count(), 4u);
  // primary iff the cycle type is primary
  const auto s6 = ConcreteGroup::symmetric(6);
  for (const auto& g : s6.elements()) ASSERT_EQ(is_primary(g), is_primary_type(g.cycle_type()));
}

TEST(Group, Abelianization) {
  const auto s4 = ConcreteGroup::symmetric(4);
  auto r = abelianization_is_p_group(s4);
  EXPECT_TRUE(r.p_group);
  EXPECT_EQ(r.p, 2u);
  r = abelianization_is_p_group(ConcreteGroup::cyclic(6));
  EXPECT_FALSE(r.p_group);
  EXPECT_EQ(r.q1, 2u);
  EXPECT_EQ(r.q2, 3u);
  const auto d12 = ConcreteGroup::close({Perm::parse_cycles("(1,2,3,4,5,6)", 6), Perm::parse_cycles("(2,6)(3,5)", 6)}, 6);
  r = abelianization_is_p_group(d12);
  EXPECT_TRUE(r.p_group);
  EXPECT_EQ(r.p, 2u);
  EXPECT_EQ(r.quotient_order, 4u);
  EXPECT_TRUE(s4.is_solvable());
  EXPECT_FALSE(ConcreteGroup::symmetric(5).is_solvable());
}

TEST(Group, DerivedSubgroupMatchesAllCommutators) {
  for (const char* ref : {"S4", "A4", "S5", "D12"}) {
    const auto corpus = load_corpus(SIGMA0_DATA_DIR "/group_corpus.txt");
    const auto g = group_by_ref(ref, corpus);
    std::vector<Perm> comms;
    for (const auto& a : g.elements())
      for (const auto& b : g.elements()) comms.push_back(a.inverse() * b.inverse() * a * b);
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    const auto full = ConcreteGroup::close(comms, g.degree());
    EXPECT_TRUE(full == g.derived_subgroup()) << ref;
  }
}

TEST(Group, Quotient) {
  const auto s4 = ConcreteGroup::symmetric(4);
  const auto v4 = ConcreteGroup::close({Perm::parse_cycles("(1,2)(3,4)", 4), Perm::parse_cycles("(1,3)(2,4)", 4)}, 4);
  const auto q = quotient_group(s4, v4);
  EXPECT_EQ(q.size(), 6u);
  EXPECT_FALSE(q.is_abelian());
  const auto c2 = ConcreteGroup::close({Perm::parse_cycles("(1,2)", 4)}, 4);
  EXPECT_THROW(quotient_group(s4, c2), precondition_error);
}

TEST(Corpus, LoadsShippedFile) {
  const auto corpus = load_corpus(SIGMA0_DATA_DIR "/group_corpus.txt");
  EXPECT_GE(corpus.size(), 15u);
  std::map<std::string, std::size_t> orders;
  for (const auto& e : corpus) orders[e.name] = e.build().size();
  EXPECT_EQ(orders["Q8"], 8u);
  EXPECT_EQ(orders["C5:C4"], 20u);
  EXPECT_EQ(orders["S6"], 720u);
  EXPECT_EQ(group_by_ref("A5", corpus).size(), 60u);
  EXPECT_EQ(group_by_ref("C7", corpus).size(), 7u);
  EXPECT_THROW(group_by_ref("X9", corpus), precondition_error);
  std::istringstream bad("G;3;(1,2,4)\n");
  EXPECT_THROW(parse_corpus(bad), parse_error);
}

namespace {

std::map<std::size_t, std::size_t> class_order_histogram(const SubgroupLattice& l) {
  std::map<std::size_t, std::size_t> h;
  for (const auto& c : l.classes()) ++h[c.order];
  return h;
}

} // namespace

TEST(Lattice, SmallSymmetricGroups) {
  const auto s3 = ConcreteGroup::symmetric(3);
  EXPECT_EQ(SubgroupLattice(s3).classes().size(), 4u);
  const auto s4 = ConcreteGroup::symmetric(4);
  const SubgroupLattice l4(s4);
  EXPECT_EQ(l4.classes().size(), 11u);
  EXPECT_EQ(l4.subgroup_count(), 30u);
  const auto s5 = ConcreteGroup::symmetric(5);
  const SubgroupLattice l5(s5);
  EXPECT_EQ(l5.classes().size(), 19u);
  EXPECT_EQ(l5.subgroup_count(), 156u);
  bool f20 = false;
  for (const auto& c : l5.classes())
    if (c.order == 20 && c.class_size() == 6) f20 = true;
  EXPECT_TRUE(f20);
  EXPECT_EQ(class_order_histogram(l5)[120], 1u);
}

TEST(Lattice, MaximalSubgroups) {
  const auto s5 = ConcreteGroup::symmetric(5);
  const SubgroupLattice l5(s5);
  std::map<std::size_t, std::size_t> by_order;
  for (const auto& m : l5.maximal_subgroup_sets()) ++by_order[m.count()];
  EXPECT_EQ(by_order, (std::map<std::size_t, std::size_t>{{12, 10}, {20, 6}, {24, 5}, {60, 1}}));
  const auto c6 = ConcreteGroup::cyclic(6);
  const SubgroupLattice lc(c6);
  std::set<std::size_t> orders;
  for (const auto& m : lc.maximal_subgroup_sets()) orders.insert(m.count());
  EXPECT_EQ(orders, (std::set<std::size_t>{2, 3}));
  EXPECT_EQ(lc.maximal_subgroup_sets().size(), 2u);
}

TEST(Lattice, EveryProperSubgroupInsideAMaximal) {
  for (unsigned n : {4u, 5u, 6u}) {
    const auto g = ConcreteGroup::symmetric(n);
    const SubgroupLattice l(g);
    const auto maxes = l.maximal_subgroup_sets();
    for (std::size_t i = 0; i < maxes.size(); ++i)
      for (std::size_t j = 0; j < maxes.size(); ++j)
        if (i != j) ASSERT_FALSE(maxes[i].is_subset_of(maxes[j]));
    for (const auto& c : l.classes()) {
      if (c.order == g.size()) continue;
      // Lagrange
      ASSERT_EQ(g.size() % c.order, 0u);
      for (const auto& m : c.members)
        ASSERT_TRUE(std::any_of(maxes.begin(), maxes.end(), [&](const ElementSet& x) { return m.is_subset_of(x); }));
    }
  }
}

TEST(Lattice, S6Counts) {
  const auto s6 = ConcreteGroup::symmetric(6);
  const SubgroupLattice l(s6);
  EXPECT_EQ(l.classes().size(), 56u);
  EXPECT_EQ(l.subgroup_count(), 1455u);
  EXPECT_EQ(l.maximal_subgroup_sets().size(), 53u);
  EXPECT_THROW(SubgroupLattice(ConcreteGroup::symmetric(7), 720), cap_exceeded);
}
