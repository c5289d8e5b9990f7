#include <gtest/gtest.h>

#include "gammaspace/algebra.hpp"

using namespace gammaspace;

TEST(Monoid, Validation) {
  EXPECT_NO_THROW(FinAbMonoid({"0", "1"}, 0, {{0, 1}, {1, 1}}));
  try {
    FinAbMonoid({"0", "1", "2"}, 0, {{0, 1, 2}, {1, 0, 0}, {2, 0, 1}});
    FAIL() << "non-associative table accepted";
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.axiom(), "associativity");
    EXPECT_EQ(e.witness().size(), 3u);
  }
  EXPECT_THROW(FinAbMonoid({"0", "1"}, 0, {{0, 1}, {0, 1}}), AlgebraError);
  EXPECT_THROW(FinAbMonoid({"0", "1"}, 1, {{0, 1}, {1, 1}}), AlgebraError);
  EXPECT_THROW(FinAbMonoid({"0", "1"}, 0, {{0, 2}, {1, 1}}), InvalidArgument);
  EXPECT_THROW(FinAbMonoid({"0", "1", "2"}, 0, {{0, 1, 2}, {1, 2, 0}, {2, 1, 1}}), AlgebraError);
}

TEST(Monoid, Inverses) {
  EXPECT_TRUE(cyclic_monoid(5).is_group());
  EXPECT_EQ(cyclic_monoid(5).inverse(2), 3u);
  EXPECT_FALSE(max_monoid().is_group());
  EXPECT_FALSE(max_monoid().inverse(1).has_value());
  EXPECT_TRUE(trivial_monoid().is_group());
}

TEST(Monoid, EnumerationCounts) {
  // Commutative monoids up to isomorphism: 1, 2, 5, 19 for orders 1..4.
  const std::vector<std::size_t> expect{1, 2, 5, 19};
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto all = enumerate_abelian_monoids(n);
    EXPECT_EQ(all.size(), expect[n - 1]) << "order " << n;
    std::size_t groups = 0;
    for (const auto& m : all) groups += m.is_group();
    EXPECT_EQ(groups, n == 4 ? 2u : 1u) << "abelian groups of order " << n;
  }
}

TEST(Monoid, EnumerationIsCanonical) {
  const auto all = enumerate_abelian_monoids(3);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) EXPECT_FALSE(all[i] == all[j]);
  for (const auto& m : all) EXPECT_EQ(m.unit(), 0u);
}

TEST(Group, AbelianGroupNegation) {
  const FinAbGroup g(cyclic_monoid(4));
  EXPECT_EQ(g.negate(1), 3u);
  EXPECT_EQ(g.element_order(2), 2u);
  EXPECT_EQ(g.element_order(0), 1u);
  EXPECT_THROW(FinAbGroup{max_monoid()}, AlgebraError);
}

TEST(Group, InvariantFactors) {
  EXPECT_EQ(invariant_factors(FinAbGroup(cyclic_monoid(4))), (std::vector<std::size_t>{4}));
  EXPECT_EQ(invariant_factors(FinAbGroup(trivial_monoid())), std::vector<std::size_t>{});
  const auto klein = product_monoid(cyclic_monoid(2), cyclic_monoid(2));
  EXPECT_EQ(invariant_factors(FinAbGroup(klein)), (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(invariant_factors(FinAbGroup(product_monoid(cyclic_monoid(2), cyclic_monoid(3)))),
            (std::vector<std::size_t>{6}));
  EXPECT_EQ(invariant_factors(FinAbGroup(product_monoid(cyclic_monoid(2), cyclic_monoid(4)))),
            (std::vector<std::size_t>{2, 4}));
  EXPECT_EQ(invariant_factors(FinAbGroup(product_monoid(cyclic_monoid(6), cyclic_monoid(4)))),
            (std::vector<std::size_t>{2, 12}));
}

TEST(GMonoidTest, FixturesValidate) {
  EXPECT_EQ(inversion_action(3).act(1, 1), 2u);
  EXPECT_EQ(swap_action().act(1, 1), 2u);
  const auto t = GMonoid::trivial_action(cyclic_monoid(2), FiniteGroup::cyclic(2));
  EXPECT_EQ(t.act(1, 1), 1u);
}

TEST(GMonoidTest, RejectsBadActions) {
  const auto z2 = FiniteGroup::cyclic(2);
  // not multiplicative: swaps 1 and 2 in Z/4
  EXPECT_THROW(GMonoid(cyclic_monoid(4), z2, {{0, 1, 2, 3}, {0, 2, 1, 3}}), AlgebraError);
  // identity must act trivially
  EXPECT_THROW(GMonoid(cyclic_monoid(3), z2, {{0, 2, 1}, {0, 2, 1}}), AlgebraError);
  // not an action: Z/3 cannot act on Z/3 by inversion
  EXPECT_THROW(GMonoid(cyclic_monoid(3), FiniteGroup::cyclic(3), {{0, 1, 2}, {0, 2, 1}, {0, 2, 1}}),
               AlgebraError);
  EXPECT_THROW(GMonoid(cyclic_monoid(3), z2, {{0, 1, 2}}), InvalidArgument);
}
