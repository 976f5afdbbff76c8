#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "sigma0/cover.hpp"
#include "sigma0/families.hpp"
#include "sigma0/perm/corpus.hpp"

using namespace sigma0;

namespace {

const PrimitiveCatalog& catalog() {
  static const PrimitiveCatalog c = PrimitiveCatalog::shipped();
  return c;
}

const std::vector<CorpusEntry>& corpus() {
  static const auto c = load_corpus(SIGMA0_DATA_DIR "/group_corpus.txt");
  return c;
}

CoverInstance make(std::size_t universe, std::vector<std::vector<std::uint32_t>> sets) {
  CoverInstance inst;
  inst.universe = universe;
  for (std::size_t i = 0; i < sets.size(); ++i) inst.add_set("s" + std::to_string(i), sets[i]);
  return inst;
}

CoverInstance random_instance(std::mt19937& rng, std::size_t max_universe, std::size_t max_sets) {
  std::uniform_int_distribution<std::size_t> u_dist(1, max_universe), s_dist(1, max_sets);
  const auto nu = u_dist(rng), ns = s_dist(rng);
  std::bernoulli_distribution pick(0.25);
  std::uniform_int_distribution<std::size_t> which(0, ns - 1);
  std::vector<std::vector<std::uint32_t>> sets(ns);
  for (std::uint32_t e = 0; e < nu; ++e) {
    bool placed = false;
    for (auto& s : sets)
      if (pick(rng)) {
        s.push_back(e);
        placed = true;
      }
    if (!placed) sets[which(rng)].push_back(e);
  }
  return make(nu, sets);
}

std::size_t exhaustive_optimum(const CoverInstance& inst) {
  const auto ns = inst.sets.size();
  std::size_t best = ns + 1;
  for (std::uint32_t mask = 0; mask < (1u << ns); ++mask) {
    const auto k = static_cast<std::size_t>(__builtin_popcount(mask));
    if (k >= best) continue;
    std::vector<std::uint32_t> chosen;
    for (std::uint32_t s = 0; s < ns; ++s)
      if (mask >> s & 1u) chosen.push_back(s);
    if (verify_cover(inst, chosen)) best = k;
  }
  return best;
}

std::size_t solved_size(const CoverSolution& s) {
  EXPECT_EQ(s.status, CoverStatus::optimal);
  return s.size();
}

} // namespace

TEST(Reduce, IdenticalSetsCollapse) {
  const auto r = reduce(make(3, {{0, 1}, {0, 1}, {1, 2}, {2}}));
  EXPECT_GE(r.removed_sets, 1u);
  EXPECT_EQ(r.forced.size() + solve_exact(r.instance).size(), 2u);
}

TEST(Reduce, FlagsInfeasible) {
  const auto inst = make(3, {{0}, {1}});
  EXPECT_FALSE(inst.feasible());
  EXPECT_TRUE(reduce(inst).infeasible());
  EXPECT_EQ(solve_exact(inst).status, CoverStatus::infeasible);
  EXPECT_THROW(greedy(inst), precondition_error);
}

TEST(Reduce, EightCyclesForceHalfBlocks) {
  const auto ci = class_cover_instance(8, Partition{8}, {FamilySpec::block_stab(8, 4)});
  ASSERT_EQ(ci.instance.universe, 5040u);
  ASSERT_EQ(ci.instance.sets.size(), 35u);
  for (const auto& s : ci.instance.sets) EXPECT_EQ(s.members.size(), 144u);
  const auto r = reduce(ci.instance);
  EXPECT_EQ(r.forced.size(), 35u);
  EXPECT_EQ(r.instance.universe, 0u);
}

TEST(Greedy, Examples) {
  EXPECT_EQ(greedy(make(3, {{0, 1}, {1, 2}, {2}})).size(), 2u);
  EXPECT_EQ(greedy(make(4, {{0, 1, 2, 3}, {0}})).size(), 1u);
  // ties go to the lowest index
  EXPECT_EQ(greedy(make(2, {{0}, {1}, {0, 1}, {0, 1}})).chosen, std::vector<std::uint32_t>{2});
  const auto s5 = ConcreteGroup::symmetric(5);
  const auto inst = group_cover_instance(s5, lattice_maximal_subgroups(s5));
  EXPECT_EQ(inst.sets.size(), 22u);
  EXPECT_GE(greedy(inst).size(), 6u);
}

TEST(LowerBound, Examples) {
  EXPECT_EQ(lower_bound(make(4, {{0}, {1}, {2}, {3}})), 4u);
  EXPECT_EQ(lower_bound(make(3, {{0, 1}, {1, 2}, {2}})), 2u);

  std::vector<FamilySpec> s10;
  for (const auto& f : maximal_families(10, catalog()))
    if (f.kind != FamilyKind::alternating) s10.push_back(f);
  const auto b10 = counting_lower_bound(10, Partition{5, 5}, s10);
  EXPECT_EQ(b10.class_size, 72576);
  EXPECT_EQ(b10.best_count, 576);
  EXPECT_EQ(b10.best_family, "W5");
  EXPECT_EQ(b10.bound, 126);

  std::vector<FamilySpec> s12;
  for (const auto& f : maximal_families(12, catalog()))
    if (f.kind != FamilyKind::alternating) s12.push_back(f);
  const auto b12 = counting_lower_bound(12, Partition{4, 4, 4}, s12);
  EXPECT_EQ(b12.class_size, 1247400);
  EXPECT_EQ(b12.best_count, 10800);
  EXPECT_EQ(b12.bound, 116);
}

TEST(LowerBound, FiveFiveInstance) {
  std::vector<FamilySpec> fams;
  for (const auto& f : maximal_families(10, catalog()))
    if (f.kind != FamilyKind::alternating) fams.push_back(f);
  const auto ci = class_cover_instance(10, Partition{5, 5}, fams);
  EXPECT_EQ(ci.instance.universe, 72576u);
  EXPECT_GE(lower_bound(ci.instance), 126u);
}

TEST(Solve, MatchesExhaustiveSearch) {
  std::mt19937 rng(20240601);
  for (int t = 0; t < 300; ++t) {
    const auto inst = random_instance(rng, 30, 15);
    const auto sol = solve_exact(inst);
    ASSERT_TRUE(verify_cover(inst, sol.chosen));
    ASSERT_EQ(solved_size(sol), exhaustive_optimum(inst)) << "trial " << t;
    ASSERT_LE(lower_bound(inst), sol.size());
    ASSERT_GE(greedy(inst).size(), sol.size());
  }
}

TEST(Solve, ReducePreservesOptimum) {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    const auto inst = random_instance(rng, 40, 25);
    const auto r = reduce(inst);
    const auto direct = solve_exact(inst);
    const auto reduced = r.instance.universe ? solve_exact(r.instance).size() : 0u;
    ASSERT_EQ(r.forced.size() + reduced, solved_size(direct)) << "trial " << t;
    ASSERT_TRUE(verify_cover(inst, r.lift(solve_exact(r.instance).chosen)));
  }
}

TEST(Solve, DeterministicAndRoundTrip) {
  std::mt19937 rng(99);
  const auto inst = random_instance(rng, 60, 40);
  const auto a = solve_exact(inst), b = solve_exact(inst);
  EXPECT_EQ(a.chosen, b.chosen);
  EXPECT_EQ(a.nodes, b.nodes);

  std::stringstream text;
  inst.dump(text);
  const auto back = CoverInstance::load(text);
  std::stringstream again;
  back.dump(again);
  text.clear();
  text.seekg(0);
  EXPECT_EQ(text.str(), again.str());
  EXPECT_EQ(solve_exact(back).chosen, a.chosen);

  std::istringstream bad("universe 3\nset 1 x: 0\n");
  EXPECT_THROW(CoverInstance::load(bad), parse_error);
  std::istringstream outside("universe 2\nset 0 x: 5\n");
  EXPECT_THROW(CoverInstance::load(outside), parse_error);
}

TEST(Solve, ThreadedMatchesSize) {
  std::mt19937 rng(5);
  Budget par;
  par.deterministic = false;
  par.threads = 3;
  for (int t = 0; t < 30; ++t) {
    const auto inst = random_instance(rng, 40, 25);
    const auto one = solve_exact(inst), many = solve_exact(inst, par);
    ASSERT_EQ(one.size(), many.size());
    ASSERT_EQ(one.lower_bound, many.lower_bound);
  }
}

TEST(Solve, BudgetExhaustionKeepsInterval) {
  std::mt19937 rng(11);
  CoverInstance inst;
  inst.universe = 120;
  std::uniform_int_distribution<std::uint32_t> e(0, 119);
  for (int s = 0; s < 90; ++s) {
    std::vector<std::uint32_t> m;
    for (int k = 0; k < 12; ++k) m.push_back(e(rng));
    inst.add_set("r" + std::to_string(s), m);
  }
  for (std::uint32_t x = 0; x < 120; ++x) inst.add_set("one" + std::to_string(x), {x});
  Budget tiny;
  tiny.max_nodes = 5;
  const auto sol = solve_exact(inst, tiny);
  EXPECT_TRUE(verify_cover(inst, sol.chosen));
  EXPECT_LE(sol.lower_bound, sol.size());
  if (sol.status == CoverStatus::upper_bound_only) EXPECT_LT(sol.lower_bound, sol.size());
  EXPECT_THROW(parse_budget("5x"), parse_error);
  EXPECT_EQ(parse_budget("10m").max_seconds, 600);
  EXPECT_EQ(parse_budget("200n").max_nodes, 200u);
}

TEST(GroupCover, SmallSymmetric) {
  EXPECT_EQ(solved_size(sigma0_exact(ConcreteGroup::symmetric(3))), 4u);
  EXPECT_EQ(solved_size(sigma0_exact(ConcreteGroup::symmetric(4))), 4u);
  EXPECT_EQ(solved_size(sigma0_exact(ConcreteGroup::symmetric(5))), 6u);
  EXPECT_EQ(solved_size(sigma0_exact(ConcreteGroup::symmetric(6))), 7u);
}

TEST(GroupCover, CatalogModeAgrees) {
  for (unsigned n = 5; n <= 6; ++n) {
    const auto g = ConcreteGroup::symmetric(n);
    const auto sol = sigma0_exact(g, MaximalMode::catalog, &catalog());
    EXPECT_EQ(solved_size(sol), n == 5 ? 6u : 7u);
    EXPECT_FALSE(sol.assumed_maximality);
  }
  EXPECT_THROW(sigma0_exact(ConcreteGroup::alternating(5), MaximalMode::catalog, &catalog()), precondition_error);
}

TEST(GroupCover, FiveOptimumIsAlternatingPlusPointStabilizers) {
  const auto s5 = ConcreteGroup::symmetric(5);
  const auto subs = catalog_maximal_subgroups(s5, catalog());
  const auto sol = solve_exact(group_cover_instance(s5, subs));
  std::vector<std::string> labels;
  for (auto s : sol.chosen) labels.push_back(subs[s].label);
  EXPECT_EQ(labels, (std::vector<std::string>{"A5", "X1{1}", "X1{2}", "X1{3}", "X1{4}", "X1{5}"}));
}

TEST(GroupCover, Degenerate) {
  const auto c6 = ConcreteGroup::cyclic(6);
  EXPECT_EQ(solved_size(sigma0_exact(c6)), 2u);
  EXPECT_EQ(sigma_exact(c6).status, CoverStatus::infinite);
  EXPECT_EQ(sigma0_exact(ConcreteGroup::cyclic(8)).status, CoverStatus::infinite);
  EXPECT_EQ(sigma0_exact(ConcreteGroup::cyclic(1)).status, CoverStatus::infinite);
  EXPECT_EQ(solved_size(sigma_exact(ConcreteGroup::symmetric(3))), 4u);
  EXPECT_EQ(solved_size(sigma_exact(ConcreteGroup::symmetric(4))), 4u);
}

TEST(GroupCover, Gamma0) {
  EXPECT_EQ(solved_size(gamma0_exact(ConcreteGroup::symmetric(5))), 2u);
  EXPECT_EQ(solved_size(gamma0_exact(ConcreteGroup::symmetric(4))), 2u);
  EXPECT_EQ(solved_size(gamma0_exact(ConcreteGroup::cyclic(6))), 2u);
}

TEST(GroupCover, NoSingleClassCovers) {
  for (const char* ref : {"S4", "S5", "C6", "A4", "D8", "Q8"}) {
    const auto r = no_single_class_covers(group_by_ref(ref, corpus()));
    EXPECT_TRUE(r.holds) << ref;
    EXPECT_GT(r.classes_checked, 0u);
  }
}

TEST(GroupCover, RefusesNonMaximal) {
  const auto s4 = ConcreteGroup::symmetric(4);
  const auto v4 = ConcreteGroup::close({Perm::parse_cycles("(1,2)(3,4)", 4), Perm::parse_cycles("(1,3)(2,4)", 4)}, 4);
  const std::vector<LabeledSubgroup> subs{{"V4", s4.set_of(v4)}};
  EXPECT_THROW(group_cover_instance(s4, subs), precondition_error);
  EXPECT_NO_THROW(group_cover_instance(s4, subs, {true, true}));
  const auto a4 = ConcreteGroup::alternating(4);
  EXPECT_TRUE(is_maximal_subgroup(s4, s4.set_of(a4)));
  EXPECT_FALSE(is_maximal_subgroup(s4, s4.all_set()));
}

TEST(GroupCover, MonotoneAndQuotient) {
  for (const auto& e : corpus()) {
    const auto g = e.build();
    if (g.size() > 120) continue;
    const auto s0 = sigma0_exact(g), s = sigma_exact(g);
    if (!s.finite()) continue;
    ASSERT_TRUE(s0.finite()) << e.name;
    EXPECT_LE(s0.size(), s.size()) << e.name;
  }
  // S4 / V4 = S3
  const auto s4 = ConcreteGroup::symmetric(4);
  const auto v4 = ConcreteGroup::close({Perm::parse_cycles("(1,2)(3,4)", 4), Perm::parse_cycles("(1,3)(2,4)", 4)}, 4);
  const auto q = quotient_group(s4, v4);
  ASSERT_EQ(q.size(), 6u);
  EXPECT_LE(sigma0_exact(s4).size(), sigma0_exact(q).size());
}

TEST(SolveExact, WarmStartIsVerifiedAndUsedAsIncumbent) {
  // greedy takes the big middle set first and needs 3; {0, 1} is optimal
  const auto inst = make(6, {{0, 1, 2}, {3, 4, 5}, {1, 2, 3, 4}, {0}, {5}});
  EXPECT_THROW(solve_exact(inst, {}, {0, 3}), precondition_error);
  const auto warm = solve_exact(inst, {}, {1, 0, 0});
  EXPECT_EQ(warm.status, CoverStatus::optimal);
  EXPECT_EQ(warm.chosen, (std::vector<std::uint32_t>{0, 1}));
  const auto worse = solve_exact(inst, {}, {2, 3, 4});
  EXPECT_EQ(worse.size(), 2u);
  EXPECT_EQ(worse.status, CoverStatus::optimal);
}
