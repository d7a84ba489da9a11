#include <gtest/gtest.h>

#include <chrono>

#include "support.hpp"

using namespace garside;
using namespace garside::testing;

namespace {

std::vector<std::string> sorted_names(const GermTable& t, const std::vector<ElementId>& ids) {
  auto n = names_of(t, ids);
  std::sort(n.begin(), n.end());
  return n;
}

// Greatest element of a J-set by direct definition, for comparison.
std::optional<ElementId> greatest_by_definition(const GermTable& t, ElementId g1, ElementId g2) {
  const LocalDivisibility div(t);
  std::vector<ElementId> members;
  for (std::size_t g = 0; g < t.num_elements(); ++g) {
    const ElementId x{g};
    if (t.composable(g1, x) && t.defined(g1, x) && t.source(x) == t.source(g2) && div.left_divides(x, g2)) {
      members.push_back(x);
    }
  }
  for (auto m : members) {
    if (std::all_of(members.begin(), members.end(), [&](ElementId y) { return div.left_divides(y, m); })) return m;
  }
  return std::nullopt;
}

}  // namespace

TEST(JSet, Examples) {
  const auto t = s3_classical();
  EXPECT_EQ(sorted_names(t, j_set(t, el(t, "a"), el(t, "ba"))), (std::vector<std::string>{"b", "ba", "e"}));
  EXPECT_EQ(names_of(t, j_set(t, el(t, "a"), el(t, "a"))), std::vector<std::string>{"e"});
  for (std::size_t g = 0; g < t.num_elements(); ++g) {
    EXPECT_EQ(j_set(t, ElementId{g}, el(t, "e")), std::vector<ElementId>{el(t, "e")});
  }
  EXPECT_EQ(sorted_names(t, i_set(t, el(t, "a"), el(t, "ba"))), (std::vector<std::string>{"a", "ab", "Δ"}));
}

TEST(JSet, EndpointMismatch) {
  const auto t = arrow_germ();
  EXPECT_THROW((void)j_set(t, el(t, "u"), el(t, "1x")), PreconditionError);
}

TEST(MaxJ, IdentityOnlyGerm) {
  const auto t = identity_germ();
  const auto r = max_j_function(t);
  ASSERT_TRUE(r.table);
  EXPECT_EQ((*r.table)(ElementId{0}, ElementId{0}), ElementId{0});
}

TEST(MaxJ, ClassicalS3MatchesDefinition) {
  const auto t = s3_classical();
  const auto r = max_j_function(t);
  ASSERT_TRUE(r.table);
  EXPECT_EQ(t.name((*r.table)(el(t, "a"), el(t, "ba"))), "ba");
  EXPECT_EQ(t.name((*r.table)(el(t, "b"), el(t, "a"))), "a");
  for (std::size_t a = 0; a < t.num_elements(); ++a) {
    for (std::size_t b = 0; b < t.num_elements(); ++b) {
      EXPECT_EQ((*r.table)(ElementId{a}, ElementId{b}), greatest_by_definition(t, ElementId{a}, ElementId{b}));
    }
  }
}

TEST(MaxJ, IncomparableMembersHaveNoGreatest) {
  const auto t = no_greatest_j_germ();
  const auto r = max_j_function(t);
  EXPECT_FALSE(r.table);
  ASSERT_TRUE(r.missing);
  EXPECT_EQ(t.name(r.missing->first), "x");
  EXPECT_EQ(t.name(r.missing->second), "ab");
  EXPECT_EQ(sorted_names(t, j_set(t, r.missing->first, r.missing->second)),
            (std::vector<std::string>{"1", "a", "b"}));
  EXPECT_EQ(sorted_names(t, r.maximal_members), (std::vector<std::string>{"a", "b"}));
  const auto v = is_garside_germ(t);
  EXPECT_FALSE(v.is_garside);
  EXPECT_EQ(v.failed_criterion, FailedCriterion::no_greatest_j);
}

TEST(MaxJ, RefusesUnsupportedGerms) {
  const auto t = s3_classical();
  EXPECT_THROW((void)max_j_function(t.without_product(el(t, "a"), el(t, "b"))), UnsupportedGermError);
}

TEST(IsGarside, Examples) {
  EXPECT_TRUE(is_garside_germ(s3_classical()).is_garside);
  EXPECT_TRUE(is_garside_germ(dual_germ({CoxeterFamily::A, 3})).is_garside);
  EXPECT_TRUE(is_garside_germ(identity_germ()).is_garside);
  EXPECT_TRUE(is_garside_germ(parity_germ()).is_garside);
  const auto t = s3_classical();
  const auto v = is_garside_germ(t.without_product(el(t, "a"), el(t, "b")));
  EXPECT_FALSE(v.is_garside);
  EXPECT_EQ(v.failed_criterion, FailedCriterion::not_left_associative);
  EXPECT_EQ(v.witness.size(), 3u);
  EXPECT_THROW((void)is_garside_germ(t.without_product(el(t, "a"), el(t, "ba"))), PreconditionError);
}

TEST(Laws, IdentityGermHoldsVacuously) {
  const auto t = identity_germ();
  const auto r = verify_laws(t, *max_j_function(t).table);
  EXPECT_TRUE(r.all_hold());
}

TEST(Laws, PerturbedJBreaksTheJLaw) {
  const auto t = s3_classical();
  auto j = *max_j_function(t).table;
  j.set(el(t, "a"), el(t, "ba"), el(t, "b"));
  const auto r = verify_laws(t, j);
  EXPECT_TRUE(r.j_function);
  EXPECT_FALSE(r.sharp_j_law);
  ASSERT_TRUE(r.j_law_witness);
  const auto g1 = (*r.j_law_witness)[0], g2 = (*r.j_law_witness)[1], g3 = (*r.j_law_witness)[2];
  const auto lhs = j.at(g1, *t.product(g2, j(g2, g3)));
  const auto rhs = t.product(g2, j(*t.product(g1, g2), g3));
  EXPECT_NE(lhs, rhs);
}

TEST(Laws, ParityGermHoldsWithSelector) {
  const auto t = parity_germ();
  EXPECT_TRUE(verify_laws(t, *max_j_function(t).table).all_hold());
}

TEST(Laws, HeadPropertyOnPairs) {
  // Every h ∈ S dividing g1 g2 in the category divides the computed head.
  const auto t = s3_classical();
  const CategoryEngine eng(t);
  ClosureOracle oracle(t, 6);
  const LocalDivisibility div(t);
  for (std::size_t a = 0; a < t.num_elements(); ++a) {
    for (std::size_t b = 0; b < t.num_elements(); ++b) {
      const auto h = eng.head_sharp(PathWord::of(t, {ElementId{a}, ElementId{b}}));
      for (const auto& rep : oracle.closure({ElementId{a}, ElementId{b}})) {
        if (!rep.empty()) { EXPECT_TRUE(div.left_divides(rep.front(), h)); }
      }
    }
  }
}

TEST(Laws, ISetBracketsG1AndProduct) {
  const auto t = classical_germ({CoxeterFamily::A, 4});
  const auto j = *max_j_function(t).table;
  const LocalDivisibility div(t);
  for (const auto& p : t.products()) {
    const auto i = t.product(p.left, j(p.left, p.right));
    ASSERT_TRUE(i);
    EXPECT_TRUE(div.left_divides(p.left, *i));
    EXPECT_TRUE(div.left_divides(*i, p.result));
  }
}

TEST(Noetherian, DerivedGermsAreNoetherian) {
  for (auto t : {s3_classical(), dual_germ({CoxeterFamily::A, 4}), classical_germ({CoxeterFamily::B, 2})}) {
    const auto r = noetherian_report(t);
    EXPECT_TRUE(r.left_noetherian);
    EXPECT_TRUE(r.right_noetherian);
  }
}

TEST(Noetherian, InvertiblesGiveNoProperChains) {
  const auto r = noetherian_report(inverse_pair_germ());
  EXPECT_TRUE(r.left_noetherian && r.right_noetherian);
}

TEST(Noetherian, CycleIsReported) {
  // p•q = r and r•s = p: p properly divides r and r properly divides p.
  GermBuilder b;
  const auto x = b.add_object("x");
  b.add_identity("1", x);
  const auto p = b.add_element("p", x, x);
  const auto q = b.add_element("q", x, x);
  const auto r = b.add_element("r", x, x);
  const auto s = b.add_element("s", x, x);
  b.identity_products().product(p, q, r).product(r, s, p);
  const auto t = b.build();
  const auto rep = noetherian_report(t);
  EXPECT_FALSE(rep.right_noetherian && rep.left_noetherian);
  const auto& cyc = rep.left_noetherian ? rep.right_cycle : rep.left_cycle;
  EXPECT_GE(cyc.size(), 2u);
}

TEST(Lcm, ClassicalS3PackageApplies) {
  const auto r = lcm_criteria(s3_classical());
  EXPECT_TRUE(r.right_lcms);
  EXPECT_TRUE(r.lcm_package);
  EXPECT_TRUE(r.local_lcm_package);
  EXPECT_TRUE(r.noetherian_criterion_garside);
}

TEST(Lcm, NoGreatestGermFailsTheCommonMultipleTest) {
  const auto t = no_greatest_j_germ();
  const auto r = lcm_criteria(t);
  EXPECT_TRUE(r.right_noetherian);
  EXPECT_FALSE(r.j_sets_admit_common_multiples);
  ASSERT_EQ(r.common_multiple_witness.size(), 4u);
  EXPECT_FALSE(r.noetherian_criterion_garside);
}
