#include "sl2bar/group.hpp"

#include <gtest/gtest.h>

#include <map>
#include <memory>

#include "sl2bar/error.hpp"
#include "test_support.hpp"

namespace sl2bar {
namespace {

const GroupTable& sl2(int n) {
  static std::map<int, std::unique_ptr<GroupTable>> cache;
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GroupTable>(GroupTable::enumerate(Level(n), GroupKind::kSL2));
  return *slot;
}

const GroupTable& gl2(int n) {
  static std::map<int, std::unique_ptr<GroupTable>> cache;
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GroupTable>(GroupTable::enumerate(Level(n), GroupKind::kGL2));
  return *slot;
}

Elt elt(const GroupTable& g, std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
  const auto i = g.find(std::array<std::uint32_t, 4>{a, b, c, d});
  if (!i) throw std::logic_error("not a group element");
  return *i;
}

std::vector<Elt> as_vector(const Subgroup& h) { return h.members(); }

TEST(GroupTableTest, OrdersMatchFormulas) {
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t q = std::uint64_t{1} << n;
    EXPECT_EQ(sl2(n).size(), q * (q * q - 1)) << n;
  }
  for (int n = 1; n <= 3; ++n) {
    const std::uint64_t q = std::uint64_t{1} << n;
    EXPECT_EQ(gl2(n).size(), (q * q - 1) * (q * q - q)) << n;
  }
  EXPECT_EQ(sl2(1).size(), 6U);
  EXPECT_EQ(sl2(2).size(), 60U);
  EXPECT_EQ(sl2(3).size(), 504U);
  EXPECT_THROW(GroupTable::enumerate(Level(6), GroupKind::kSL2), Error);
  EXPECT_THROW(GroupTable::enumerate(Level(4), GroupKind::kGL2), Error);
}

TEST(GroupTableTest, IdentityFirstThenLexicographic) {
  const GroupTable& g = sl2(2);
  EXPECT_EQ(g.to_mat(0), Mat2::identity());
  for (Elt i = 2; i < g.size(); ++i) EXPECT_LT(g.entries(i - 1), g.entries(i));
  for (Elt i = 0; i < g.size(); ++i) EXPECT_EQ(g.find(g.to_mat(i)), i);
  EXPECT_FALSE(g.find(Mat2::diag(ClosureElt::from(FieldElt::generator(Level(3))))).has_value());
  EXPECT_FALSE(g.find(Mat2{ClosureElt::one(), ClosureElt::one(), ClosureElt::one(), ClosureElt::one()}).has_value());
}

TEST(GroupTableTest, MultiplicationMatchesMatrices) {
  for (const GroupTable* g : {&sl2(2), &sl2(3), &gl2(2)}) {
    for (int i = 0; i < 2000; ++i) {
      const Elt x = static_cast<Elt>(testing::rng()() % g->size());
      const Elt y = static_cast<Elt>(testing::rng()() % g->size());
      ASSERT_EQ(g->to_mat(g->mul(x, y)), g->to_mat(x) * g->to_mat(y));
      ASSERT_EQ(g->to_mat(g->inv(x)), minv(g->to_mat(x)));
      ASSERT_EQ(g->commute(x, y), g->mul(x, y) == g->mul(y, x));
    }
  }
}

TEST(GroupTableTest, LevelFiveWithoutCayleyTable) {
  const GroupTable g = GroupTable::enumerate(Level(5), GroupKind::kSL2);
  EXPECT_EQ(g.size(), 32736U);
  EXPECT_FALSE(g.has_cayley());
  for (int i = 0; i < 500; ++i) {
    const Elt x = static_cast<Elt>(testing::rng()() % g.size());
    const Elt y = static_cast<Elt>(testing::rng()() % g.size());
    ASSERT_EQ(g.to_mat(g.mul(x, y)), g.to_mat(x) * g.to_mat(y));
    ASSERT_EQ(g.commute(x, y), g.mul(x, y) == g.mul(y, x));
    ASSERT_EQ(g.order(x), morder(g.to_mat(x)));
  }
}

TEST(GroupTableTest, OrderDichotomyAndTraceCriterion) {
  for (int n = 1; n <= 4; ++n) {
    const GroupTable& g = sl2(n);
    for (Elt x = 0; x < g.size(); ++x) {
      const Mat2 m = g.to_mat(x);
      const std::uint64_t ord = g.order(x);
      ASSERT_TRUE(ord <= 2 || ord % 2 == 1);
      ASSERT_EQ(ord == 2, x != GroupTable::identity() && mtrace(m).is_zero());
      ASSERT_EQ(ord, morder(m));
    }
  }
}

TEST(GroupTableTest, JordanClassIsCompleteConjugacyInvariant) {
  for (int n = 1; n <= 3; ++n) {
    const GroupTable& g = sl2(n);
    const auto classes = conjugacy_classes(g);
    std::vector<std::size_t> class_of(g.size());
    for (std::size_t k = 0; k < classes.size(); ++k) {
      for (Elt x : classes[k]) class_of[x] = k;
    }
    std::vector<JordanClass> jordan;
    for (Elt x = 0; x < g.size(); ++x) jordan.push_back(classify_jordan(g.to_mat(x)));
    for (Elt x = 0; x < g.size(); ++x) {
      for (Elt y = 0; y < g.size(); ++y) {
        ASSERT_EQ(jordan[x] == jordan[y], class_of[x] == class_of[y]) << n << ": " << x << " " << y;
      }
    }
    // Spot-check the predicate itself against the brute-force classes.
    for (int i = 0; i < 200; ++i) {
      const Elt x = static_cast<Elt>(testing::rng()() % g.size());
      const Elt y = static_cast<Elt>(testing::rng()() % g.size());
      ASSERT_EQ(are_conjugate(g.to_mat(x), g.to_mat(y)), class_of[x] == class_of[y]);
    }
  }
}

TEST(GroupTableTest, InverseTransposeIsSwapConjugation) {
  for (int n = 1; n <= 3; ++n) {
    const GroupTable& g = sl2(n);
    const Elt swap = elt(g, 0, 1, 1, 0);
    for (Elt x = 0; x < g.size(); ++x) ASSERT_EQ(g.to_mat(g.conj(swap, x)), inv_transpose(g.to_mat(x)));
  }
}

TEST(GroupTableTest, DeterminantAndTraceLaws) {
  const GroupTable& g = gl2(1);
  const GroupTable& h = sl2(2);
  for (const GroupTable* t : {&g, &h}) {
    for (Elt x = 0; x < t->size(); ++x) {
      for (Elt y = 0; y < t->size(); ++y) {
        const Mat2 mx = t->to_mat(x);
        const Mat2 my = t->to_mat(y);
        ASSERT_EQ(mdet(mx * my), mdet(mx) * mdet(my));
        ASSERT_EQ(mtrace(conjugate(mx, my)), mtrace(my));
      }
    }
  }
}

TEST(SubgroupTest, FromMembersRejectsNonSubgroups) {
  const GroupTable& g = sl2(2);
  EXPECT_THROW(Subgroup::from_members(g, {1}), Error);
  EXPECT_THROW(Subgroup::from_members(g, subset_members(g, SubsetName::kOffDiag)), Error);
  EXPECT_THROW(named_subgroup(g, SubsetName::kOffDiag), Error);
  EXPECT_EQ(Subgroup::from_members(g, {0, 0}), Subgroup::trivial(g));
}

TEST(CentralizerTest, Examples) {
  const GroupTable& g = sl2(2);
  EXPECT_EQ(centralizer_bf(g, GroupTable::identity()), Subgroup::whole(g));
  const Elt d = elt(g, 2, 0, 0, 3);
  EXPECT_EQ(as_vector(centralizer_bf(g, d)), subset_members(g, SubsetName::kDiag));
  EXPECT_EQ(centralizer_bf(g, d).size(), 3U);
  const Elt u = elt(g, 1, 1, 0, 1);
  EXPECT_EQ(as_vector(centralizer_bf(g, u)), subset_members(g, SubsetName::kUpperUni));
  EXPECT_EQ(centralizer_bf(g, u).size(), 4U);
}

TEST(CentralizerTest, DiagonalAndUnipotentCentralizers) {
  for (int n = 2; n <= 4; ++n) {
    const GroupTable& g = sl2(n);
    const auto diag = subset_members(g, SubsetName::kDiag);
    const auto ut = subset_members(g, SubsetName::kUpperUni);
    const auto lt = subset_members(g, SubsetName::kLowerUni);
    for (std::uint32_t l = 1; l < (1U << n); ++l) {
      const FieldElt lam = FieldElt::make(Level(n), l);
      EXPECT_EQ(as_vector(centralizer_bf(g, elt(g, 1, l, 0, 1))), ut);
      EXPECT_EQ(as_vector(centralizer_bf(g, elt(g, 1, 0, l, 1))), lt);
      if (l == 1) continue;
      EXPECT_EQ(as_vector(centralizer_bf(g, elt(g, l, 0, 0, inv(lam).mask()))), diag);
    }
    EXPECT_EQ(diag.size(), Level(n).unit_count());
    EXPECT_EQ(ut.size(), std::size_t{1} << n);
    // Elementary abelian: every nontrivial element has order 2.
    for (Elt x : ut) EXPECT_EQ(g.mul(x, x), GroupTable::identity());
  }
}

TEST(NormalizerTest, Examples) {
  const GroupTable& g = sl2(2);
  const Subgroup diag = named_subgroup(g, SubsetName::kDiag);
  const Subgroup n_diag = normalizer_bf(g, diag);
  EXPECT_EQ(n_diag.size(), 6U);
  std::vector<Elt> expected = subset_members(g, SubsetName::kDiag);
  const auto off = subset_members(g, SubsetName::kOffDiag);
  expected.insert(expected.end(), off.begin(), off.end());
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(n_diag.members(), expected);
  EXPECT_EQ(normalizer_bf(g, named_subgroup(g, SubsetName::kUpperUni)), named_subgroup(g, SubsetName::kUpperTri));
  EXPECT_EQ(named_subgroup(g, SubsetName::kUpperTri).size(), 12U);
  EXPECT_EQ(normalizer_bf(g, named_subgroup(g, SubsetName::kLowerUni)), named_subgroup(g, SubsetName::kLowerTri));
  EXPECT_EQ(normalizer_bf(g, Subgroup::whole(g)), Subgroup::whole(g));
}

TEST(AbelianTest, Examples) {
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(is_abelian(named_subgroup(sl2(n), SubsetName::kDiag)));
  const GroupTable& g = sl2(2);
  const Subgroup n_diag = normalizer_bf(g, named_subgroup(g, SubsetName::kDiag));
  EXPECT_FALSE(is_abelian(n_diag));
  EXPECT_TRUE(is_metabelian(n_diag));
  EXPECT_TRUE(is_metabelian(named_subgroup(g, SubsetName::kUpperTri)));
  EXPECT_FALSE(is_abelian(named_subgroup(g, SubsetName::kUpperTri)));
  EXPECT_FALSE(is_metabelian(Subgroup::whole(g)));
  EXPECT_EQ(derived_subgroup(Subgroup::whole(g)), Subgroup::whole(g));
  // S3: derived subgroup is the rotation subgroup of order 3.
  EXPECT_EQ(derived_subgroup(Subgroup::whole(sl2(1))).size(), 3U);
}

TEST(CtTest, CentralizerCriterion) {
  EXPECT_TRUE(ct_check_centralizers(sl2(1)).holds);
  for (int n = 2; n <= 4; ++n) {
    const CtReport r = ct_check_centralizers(sl2(n));
    EXPECT_TRUE(r.holds) << n;
    EXPECT_FALSE(r.witness.has_value());
  }
  const CtReport bad = ct_check_centralizers(gl2(2));
  ASSERT_FALSE(bad.holds);
  ASSERT_TRUE(bad.witness.has_value());
  EXPECT_TRUE(is_ct_witness(gl2(2), *bad.witness));
}

TEST(CtTest, TripleScanAgrees) {
  for (const GroupTable* g : {&sl2(1), &sl2(2), &gl2(1), &gl2(2)}) {
    EXPECT_EQ(ct_check_triples(*g), ct_check_centralizers(*g)) << to_string(g->kind()) << g->level().value();
  }
  EXPECT_TRUE(ct_check_triples(sl2(2)).holds);
  EXPECT_FALSE(ct_check_triples(gl2(2)).holds);
  EXPECT_THROW(ct_check_triples(sl2(4)), Error);
}

TEST(CtTest, WitnessInvolvesACentralElement) {
  // The least witness in GL2(F4) is centralized on both sides by a scalar.
  const GroupTable& g = gl2(2);
  const CtWitness w = *ct_check_centralizers(g).witness;
  EXPECT_EQ(w.x, 1U);
  const Mat2 y = g.to_mat(w.y);
  EXPECT_TRUE(y.b.is_zero() && y.c.is_zero());
}

TEST(MaximalAbelianTest, Examples) {
  EXPECT_TRUE(maximal_abelian_intersections(sl2(2)));
  EXPECT_TRUE(maximal_abelian_intersections(sl2(3)));
  EXPECT_FALSE(maximal_abelian_intersections(gl2(2)));
  EXPECT_EQ(maximal_abelian_intersections(sl2(1)), ct_check_centralizers(sl2(1)).holds);
  EXPECT_EQ(maximal_abelian_intersections(gl2(1)), ct_check_centralizers(gl2(1)).holds);
}

TEST(MaximalAbelianTest, SelfCentralizingAndCoveringInSl2F4) {
  const GroupTable& g = sl2(2);
  const auto subs = maximal_abelian_subgroups(g);
  // 5 Sylow-2 subgroups, 10 tori of order 3, 6 of order 5.
  EXPECT_EQ(subs.size(), 21U);
  std::vector<int> cover(g.size(), 0);
  for (const auto& a : subs) {
    EXPECT_TRUE(is_abelian(a));
    for (Elt x = 0; x < g.size(); ++x) {
      const bool centralizes =
          std::all_of(a.members().begin(), a.members().end(), [&](Elt y) { return g.commute(x, y); });
      EXPECT_EQ(centralizes, a.contains(x));
    }
    for (Elt x : a.members()) ++cover[x];
  }
  for (Elt x = 1; x < g.size(); ++x) EXPECT_EQ(cover[x], 1) << x;
}

TEST(GenerationTest, Examples) {
  const GroupTable& g = sl2(2);
  EXPECT_EQ(subgroup_generated(g, involutions(g)), Subgroup::whole(g));
  std::vector<Elt> gens = subset_members(g, SubsetName::kLowerUni);
  gens.push_back(elt(g, 0, 1, 1, 0));
  EXPECT_EQ(subgroup_generated(g, gens), Subgroup::whole(g));
  EXPECT_EQ(subgroup_generated(g, {GroupTable::identity()}), Subgroup::trivial(g));
  EXPECT_EQ(subgroup_generated(g, {}), Subgroup::trivial(g));
  EXPECT_EQ(subgroup_generated(g, {elt(g, 2, 0, 0, 3)}).size(), 3U);
}

TEST(GenerationTest, ChainAtLevelsTwoToFour) {
  for (int n = 2; n <= 4; ++n) {
    const GroupTable& g = sl2(n);
    EXPECT_EQ(subgroup_generated(g, involutions(g)).size(), g.size());
    auto gens = subset_members(g, SubsetName::kLowerUni);
    gens.push_back(elt(g, 0, 1, 1, 0));
    EXPECT_EQ(subgroup_generated(g, gens).size(), g.size());
    auto chain = normalizer_bf(g, named_subgroup(g, SubsetName::kDiag)).members();
    const auto l = subset_members(g, SubsetName::kLowerTri);
    chain.insert(chain.end(), l.begin(), l.end());
    EXPECT_EQ(subgroup_generated(g, chain).size(), g.size());
  }
}

TEST(SimplicityTest, Examples) {
  EXPECT_TRUE(is_simple(sl2(2)));
  EXPECT_FALSE(is_simple(sl2(1)));
  EXPECT_TRUE(is_simple(sl2(3)));
  EXPECT_FALSE(is_simple(gl2(2)));
  EXPECT_EQ(conjugacy_classes(sl2(2)).size(), 5U);
}

TEST(ProjectiveActionTest, A5AtLevelTwo) {
  const GroupTable& g = sl2(2);
  const ProjectiveAction act = projective_action(g);
  EXPECT_EQ(act.points, 5);
  EXPECT_EQ(act.kernel_size(), 1U);
  EXPECT_EQ(act.image_order(), 60U);
  EXPECT_TRUE(act.all_even());
  const auto& u = act.images[elt(g, 1, 1, 0, 1)];
  int fixed = 0;
  for (int p = 0; p < 5; ++p) {
    EXPECT_EQ(u[u[p]], p);
    if (u[p] == p) ++fixed;
  }
  EXPECT_EQ(fixed, 1);
}

TEST(ProjectiveActionTest, S3AtLevelOne) {
  const ProjectiveAction act = projective_action(sl2(1));
  EXPECT_EQ(act.points, 3);
  EXPECT_EQ(act.image_order(), 6U);
  EXPECT_FALSE(act.all_even());
  EXPECT_THROW(projective_action(gl2(1)), Error);
}

TEST(ProjectiveActionTest, EveryImageIsAPermutation) {
  for (int n = 1; n <= 3; ++n) {
    const ProjectiveAction act = projective_action(sl2(n));
    for (const auto& p : act.images) {
      std::vector<int> sorted = p;
      std::sort(sorted.begin(), sorted.end());
      for (int i = 0; i < act.points; ++i) ASSERT_EQ(sorted[i], i);
    }
    EXPECT_EQ(act.kernel_size(), 1U);
  }
  EXPECT_EQ(permutation_sign({1, 0, 2}), -1);
  EXPECT_EQ(permutation_sign({1, 2, 0}), 1);
}

TEST(Order3Test, Examples) {
  const GroupTable& g = sl2(2);
  const auto [a, b] = unipotent_as_order3_product(g);
  EXPECT_EQ(g.order(a), 3U);
  EXPECT_EQ(g.order(b), 3U);
  EXPECT_EQ(g.mul(a, b), elt(g, 1, 1, 0, 1));
  int count = 0;
  for (Elt x = 0; x < g.size(); ++x) {
    if (g.order(x) != 3) continue;
    ++count;
    for (Elt y = 0; y < g.size(); ++y) {
      if (g.order(y) == 3 && g.mul(x, y) == GroupTable::identity()) {
        EXPECT_EQ(y, g.inv(x));
      }
    }
  }
  EXPECT_EQ(count, 20);
  EXPECT_THROW(unipotent_as_order3_product(sl2(3)), Error);
}

TEST(SemidirectTest, Examples) {
  const GroupTable& g = sl2(2);
  const Subgroup diag = named_subgroup(g, SubsetName::kDiag);
  const Subgroup swap = subgroup_generated(g, {elt(g, 0, 1, 1, 0)});
  EXPECT_TRUE(semidirect_check(g, diag, swap));
  EXPECT_TRUE(semidirect_check(g, named_subgroup(g, SubsetName::kUpperUni), diag));
  EXPECT_TRUE(semidirect_check(g, Subgroup::whole(g), Subgroup::trivial(g)));
  EXPECT_FALSE(semidirect_check(g, swap, diag));
  EXPECT_FALSE(semidirect_check(g, diag, diag));
}

TEST(DisjointnessTest, Examples) {
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(ut_lt_disjointness(sl2(n))) << n;
  const GroupTable& g = sl2(1);
  EXPECT_FALSE(g.commute(elt(g, 1, 1, 0, 1), elt(g, 1, 0, 1, 1)));
}

}  // namespace
}  // namespace sl2bar
