#include <gtest/gtest.h>

#include "gwalk/group.hpp"

using namespace gwalk;

namespace {

template <class B>
class GroupEngineTest : public ::testing::Test {};

using Backends = ::testing::Types<MonomialBackend, ExactBackend>;
TYPED_TEST_SUITE(GroupEngineTest, Backends);

}  // namespace

TYPED_TEST(GroupEngineTest, TrivialClosure) {
  using B = TypeParam;
  const auto id = B::identity_of(B::gen_G(3));
  EXPECT_EQ(generate_closure<B>({id}).order(), 1u);
}

TYPED_TEST(GroupEngineTest, OrderOfK) {
  using B = TypeParam;
  EXPECT_EQ(generate_K<B>(2).order(), 8u);
  EXPECT_EQ(generate_K<B>(3).order(), 12u);
  EXPECT_EQ(generate_K<B>(4).order(), 64u);
}

TYPED_TEST(GroupEngineTest, ClosureIsAGroup) {
  using B = TypeParam;
  const auto K = generate_K<B>(3);
  EXPECT_EQ(K.elements().front(), K.identity());
  for (const auto& a : K.elements()) {
    EXPECT_TRUE(K.contains(B::inverse(a)));
    for (const auto& b : K.elements()) ASSERT_TRUE(K.contains(B::compose(a, b)));
  }
}

TYPED_TEST(GroupEngineTest, CommutatorSubgroup) {
  using B = TypeParam;
  EXPECT_EQ(generate_H<B>(2).order(), 2u);
  EXPECT_EQ(generate_H<B>(5).order(), 16u);
  const auto H = generate_H<B>(6);
  EXPECT_EQ(H.order(), 32u);
  for (const auto& h : H.elements()) {
    if (h == H.identity()) continue;
    EXPECT_EQ(element_order<B>(h), 2u);
  }
}

TYPED_TEST(GroupEngineTest, Normality) {
  using B = TypeParam;
  for (unsigned n : {4u, 5u}) {
    const auto K = generate_K<B>(n);
    EXPECT_TRUE(is_normal<B>(generate_H<B>(n), K)) << "n=" << n;
    EXPECT_TRUE(is_normal<B>(generate_closure<B>({K.identity()}), K));
    // <S> is not normal: G S G is not a power of S.
    EXPECT_FALSE(is_normal<B>(generate_closure<B>({B::gen_S(n)}), K));
  }
}

TYPED_TEST(GroupEngineTest, Quotients) {
  using B = TypeParam;
  const auto K4 = generate_K<B>(4);
  const auto q4 = quotient<B>(K4, generate_H<B>(4));
  EXPECT_EQ(q4.order(), 8u);
  EXPECT_TRUE(q4.is_group());
  EXPECT_TRUE(q4.is_abelian());
  EXPECT_EQ(q4.coset_representatives.front(), K4.identity());

  const auto K5 = generate_K<B>(5);
  EXPECT_EQ(quotient<B>(K5, generate_H<B>(5)).order(), 5u);
  const auto whole = quotient<B>(K5, K5);
  EXPECT_EQ(whole.order(), 1u);
  EXPECT_TRUE(whole.is_group());

  EXPECT_THROW(quotient<B>(K4, generate_closure<B>({B::gen_S(4)})), PreconditionViolation);
}

TYPED_TEST(GroupEngineTest, CosetRepresentatives) {
  using B = TypeParam;
  for (auto [n, count] : {std::pair{2u, 4u}, {4u, 8u}, {5u, 5u}}) {
    const auto r = coset_representative_check<B>(n, generate_K<B>(n), generate_H<B>(n));
    EXPECT_TRUE(r.passed()) << "n=" << n;
    EXPECT_EQ(r.representatives, count);
  }
}

TYPED_TEST(GroupEngineTest, Membership) {
  using B = TypeParam;
  const auto H3 = generate_H<B>(3);
  EXPECT_TRUE(H3.contains(B::gen_G(3)));
  const auto H4 = generate_H<B>(4);
  EXPECT_FALSE(H4.contains(B::gen_G(4)));
  EXPECT_FALSE(H4.contains(walk_word<B>(4, 2, 0)));
  EXPECT_FALSE(H4.contains(walk_word<B>(4, 3, 1)));
  EXPECT_FALSE(generate_H<B>(2).contains(B::gen_S(2)));
  for (unsigned n = 2; n <= 6; ++n) {
    const auto facts = membership_suite<B>(n, generate_H<B>(n));
    EXPECT_TRUE(facts.consistent()) << "n=" << n;
    EXPECT_EQ(facts.facts.size(), 2 * (n - 1) + 1);
  }
}

TYPED_TEST(GroupEngineTest, CosetSwap) {
  using B = TypeParam;
  EXPECT_TRUE(coset_swap_check<B>(3, generate_H<B>(3)));
  EXPECT_TRUE(coset_swap_check<B>(6, generate_H<B>(6)));
  // k = 0 compares an element with itself.
  EXPECT_EQ(walk_word<B>(5, 3, 0), walk_word_reversed<B>(5, 3, 0));
}

TYPED_TEST(GroupEngineTest, MinimalCommonExponent) {
  using B = TypeParam;
  EXPECT_EQ(minimal_common_exponent<B>(2), 4u);
  EXPECT_EQ(minimal_common_exponent<B>(3), 6u);
  EXPECT_EQ(minimal_common_exponent<B>(4), 8u);
  EXPECT_EQ(minimal_common_exponent<B>(4, 5), std::nullopt);
}

TYPED_TEST(GroupEngineTest, PeriodStructure) {
  using B = TypeParam;
  for (unsigned n = 2; n <= 6; ++n) {
    const auto H = generate_H<B>(n);
    const auto sg = walk_word<B>(n, 1, 1);
    for (unsigned j = 0; j < n; ++j) EXPECT_TRUE(H.contains(element_power<B>(walk_word<B>(n, j, 1), n)));
    EXPECT_EQ(smallest_power_in<B>(sg, H), n);
    if (n % 2 == 0) EXPECT_FALSE(element_power<B>(sg, n) == H.identity());
    else EXPECT_EQ(element_power<B>(B::gen_G(n), n), B::gen_G(n));
  }
}

TEST(GroupEngine, CeilingAborts) {
  EXPECT_THROW(generate_K<MonomialBackend>(6, 100), ClosureLimitExceeded);
  try {
    generate_K<MonomialBackend>(6, 100);
  } catch (const ClosureLimitExceeded& e) {
    EXPECT_EQ(e.ceiling(), 100u);
  }
  EXPECT_NO_THROW(generate_K<MonomialBackend>(6, 6 * 64));
}

TEST(GroupEngine, BackendsAgreeOnSizes) {
  for (unsigned n = 2; n <= 6; ++n) {
    EXPECT_EQ(generate_K<MonomialBackend>(n).order(), generate_K<ExactBackend>(n).order()) << "n=" << n;
    EXPECT_EQ(generate_H<MonomialBackend>(n).order(), generate_H<ExactBackend>(n).order()) << "n=" << n;
  }
}

TEST(AbelianType, OrderMultisets) {
  using M = std::map<std::size_t, std::size_t>;
  EXPECT_EQ((AbelianType{{4, 2}}.order_multiset()), (M{{1, 1}, {2, 3}, {4, 4}}));
  EXPECT_EQ((AbelianType{{8}}.order_multiset()), (M{{1, 1}, {2, 1}, {4, 2}, {8, 4}}));
  EXPECT_EQ((AbelianType{{2, 2}}.order_multiset()), (M{{1, 1}, {2, 3}}));
  EXPECT_EQ((AbelianType{{6, 2}}.label()), "Z_6 x Z_2");
}

TEST(AbelianType, IdentifiesQuotients) {
  auto identify = [](unsigned n) {
    const auto K = generate_K<MonomialBackend>(n);
    return identify_abelian_structure(quotient<MonomialBackend>(K, generate_H<MonomialBackend>(n)), n);
  };
  EXPECT_EQ(identify(6).label(), "Z_6 x Z_2");
  EXPECT_EQ(identify(7).label(), "Z_7");
  EXPECT_EQ(identify(2).label(), "Z_2 x Z_2");
}

TEST(AbelianType, RejectsWrongStructure) {
  // Z_8 has the right order for n = 4 but the wrong element orders.
  QuotientGroup<int> z8;
  z8.coset_representatives.assign(8, 0);
  z8.parent_order = 8;
  z8.normal_order = 1;
  z8.table.assign(8, std::vector<std::size_t>(8));
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) z8.table[a][b] = (a + b) % 8;
  ASSERT_TRUE(z8.is_group());
  EXPECT_THROW(identify_abelian_structure(z8, 4), TheoremViolation);
  EXPECT_EQ(match_abelian_type(z8, quotient_candidates(4))->label(), "Z_8");

  // K itself (n = 2) is dihedral of order 8.
  const auto K2 = generate_K<MonomialBackend>(2);
  const auto trivial = generate_closure<MonomialBackend>({K2.identity()});
  EXPECT_THROW(identify_abelian_structure(quotient<MonomialBackend>(K2, trivial), 2), PreconditionViolation);
}
