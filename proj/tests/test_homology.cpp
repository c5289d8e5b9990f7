#include <gtest/gtest.h>

#include "gammaspace/homology.hpp"
#include "oracles.hpp"

using namespace gammaspace;

namespace {

HomologyGroup group(std::size_t rank, std::vector<std::int64_t> torsion = {}) {
  return {rank, std::move(torsion)};
}

// Levelwise map of nerves induced by a monoid endomorphism.
SimplicialMap nerve_map(const std::vector<std::size_t>& phi, std::size_t m, std::size_t d) {
  SimplicialMap f;
  std::size_t size = 1;
  for (std::size_t p = 0; p <= d; ++p, size *= m) {
    LevelTable t(size);
    for (std::size_t x = 0; x < size; ++x) {
      auto v = oracle::unpack(x, p, m);
      for (auto& e : v) e = phi[e];
      t[x] = oracle::pack(v, m);
    }
    f.levels.push_back(std::move(t));
  }
  return f;
}

// H_p through the unnormalized complex with boundary matrices assembled here
// and reduced by determinantal divisors only.
HomologyGroup homology_by_minors(const TruncatedSimplicialSet& x, std::size_t p) {
  auto boundary = [&](std::size_t q) {
    Matrix m(x.size(q - 1), x.size(q));
    for (std::size_t s = 0; s < x.size(q); ++s)
      for (std::size_t i = 0; i <= q; ++i) m(x.face(q, i, s), s) += i % 2 ? -1 : 1;
    return m;
  };
  const auto in = oracle::invariant_factors_by_minors(boundary(p + 1));
  const std::size_t rank_out = p == 0 ? 0 : oracle::invariant_factors_by_minors(boundary(p)).size();
  HomologyGroup h;
  h.free_rank = x.size(p) - rank_out - in.size();
  for (auto f : in)
    if (f > 1) h.torsion.push_back(f);
  return h;
}

}  // namespace

TEST(Homology, GroupFormatting) {
  EXPECT_EQ(group(0).to_string(), "0");
  EXPECT_EQ(group(1, {3}).to_string(), "Z + Z/3");
  EXPECT_EQ(group(2, {2, 2}).to_string(), "Z^2 + Z/2 + Z/2");
  EXPECT_EQ(canonical_group({2, 3}), group(0, {6}));
  EXPECT_EQ(canonical_group({0, 4, 1}), group(1, {4}));
}

TEST(Homology, BoundarySquaresToZero) {
  const std::vector<TruncatedSimplicialSet> spaces{
      point(4), suspension(4, 4), oracle::nerve(cyclic_monoid(3), 4), oracle::nerve(max_monoid(), 4),
      oracle::CocycleModel(2, 4).build()};
  for (const auto& x : spaces) {
    EXPECT_TRUE(boundary_squares_to_zero(normalized_chain_complex(x, 4)));
    EXPECT_TRUE(boundary_squares_to_zero(unnormalized_chain_complex(x, 4)));
  }
}

TEST(Homology, NormalizedRanksSkipDegenerates) {
  const auto c = normalized_chain_complex(oracle::nerve(cyclic_monoid(3), 3), 3);
  EXPECT_EQ(c.ranks, (std::vector<std::size_t>{1, 2, 4, 8}));
  EXPECT_EQ(c.boundary[0].rows(), 0u);
  const auto u = unnormalized_chain_complex(oracle::nerve(cyclic_monoid(3), 3), 3);
  EXPECT_EQ(u.ranks, (std::vector<std::size_t>{1, 3, 9, 27}));
}

TEST(Homology, Point) {
  const auto c = normalized_chain_complex(point(4), 4);
  EXPECT_EQ(homology(c, 0), group(1));
  for (std::size_t p = 1; p <= 3; ++p) EXPECT_TRUE(homology(c, p).is_zero());
}

TEST(Homology, WedgeOfCircles) {
  const auto c = normalized_chain_complex(suspension(3, 3), 3);
  EXPECT_EQ(homology(c, 0), group(1));
  EXPECT_EQ(homology(c, 1), group(2));
  EXPECT_TRUE(homology(c, 2).is_zero());
}

TEST(Homology, CyclicGroupNerve) {
  for (std::size_t n : {2, 3, 4}) {
    const auto c = normalized_chain_complex(oracle::nerve(cyclic_monoid(n), 4), 4);
    const auto t = static_cast<std::int64_t>(n);
    EXPECT_EQ(homology(c, 1), group(0, {t}));
    EXPECT_TRUE(homology(c, 2).is_zero());
    EXPECT_EQ(homology(c, 3), group(0, {t}));
  }
}

TEST(Homology, KleinNerve) {
  const auto c = normalized_chain_complex(oracle::nerve(product_monoid(cyclic_monoid(2), cyclic_monoid(2)), 4), 4);
  EXPECT_EQ(homology(c, 1), group(0, {2, 2}));
  EXPECT_EQ(homology(c, 2), group(0, {2}));
  EXPECT_EQ(homology(c, 3), group(0, {2, 2, 2}));
}

TEST(Homology, MonoidWithAbsorbingElementIsContractible) {
  const auto c = normalized_chain_complex(oracle::nerve(max_monoid(), 4), 4);
  EXPECT_EQ(homology(c, 0), group(1));
  for (std::size_t p = 1; p <= 3; ++p) EXPECT_TRUE(homology(c, p).is_zero());
}

TEST(Homology, NormalizedAgreesWithUnnormalized) {
  const std::vector<TruncatedSimplicialSet> spaces{
      point(4),
      suspension(3, 4),
      oracle::nerve(cyclic_monoid(2), 4),
      oracle::nerve(cyclic_monoid(3), 4),
      oracle::nerve(max_monoid(), 4),
      oracle::nerve(product_monoid(cyclic_monoid(2), cyclic_monoid(2)), 4),
      oracle::CocycleModel(2, 4).build()};
  for (const auto& x : spaces) {
    const auto n = normalized_chain_complex(x, 4);
    const auto u = unnormalized_chain_complex(x, 4);
    for (std::size_t p = 0; p <= 3; ++p) EXPECT_EQ(homology(n, p), homology(u, p)) << "degree " << p;
  }
}

TEST(Homology, CocycleModelOfSecondEilenbergMacLane) {
  const auto k = oracle::CocycleModel(2, 4).build();
  EXPECT_TRUE(validate(k).ok);
  EXPECT_EQ(k.sizes(), (std::vector<std::size_t>{1, 1, 2, 8, 64}));
  const auto c = normalized_chain_complex(k, 4);
  EXPECT_TRUE(homology(c, 1).is_zero());
  EXPECT_EQ(homology(c, 2), group(0, {2}));
  EXPECT_TRUE(homology(c, 3).is_zero());
  // The same degrees with no Smith reduction at all.
  EXPECT_TRUE(homology_by_minors(k, 1).is_zero());
  EXPECT_EQ(homology_by_minors(k, 2), group(0, {2}));
}

TEST(Homology, NeedsTruncationBeyondDegree) {
  const auto c = normalized_chain_complex(oracle::nerve(cyclic_monoid(2), 2), 2);
  EXPECT_NO_THROW(homology(c, 1));
  try {
    homology(c, 2);
    FAIL();
  } catch (const TruncationError& e) {
    EXPECT_EQ(e.required(), 3u);
  }
  EXPECT_THROW(normalized_chain_complex(point(2), 3), TruncationError);
}

TEST(Homology, PresentationCoordinates) {
  const auto c = normalized_chain_complex(oracle::nerve(cyclic_monoid(4), 3), 3);
  const auto hp = present_homology(c, 1);
  ASSERT_EQ(hp.orders, (std::vector<std::int64_t>{4}));
  EXPECT_EQ(hp.coordinates(hp.generators[0]), (std::vector<std::int64_t>{1}));
  // The 1-simplex [a] represents a times the class of [1].
  std::vector<std::int64_t> one(c.ranks[1], 0), three(c.ranks[1], 0);
  for (std::size_t k = 0; k < c.basis[1].size(); ++k) {
    if (c.basis[1][k] == 1) one[k] = 1;
    if (c.basis[1][k] == 3) three[k] = 1;
  }
  const auto g = hp.coordinates(one)[0];
  EXPECT_EQ((3 * g) % 4, hp.coordinates(three)[0]);
  EXPECT_NE(g % 2, 0);
}

TEST(Homology, InducedMaps) {
  const std::size_t d = 3;
  const auto x = oracle::nerve(cyclic_monoid(3), d);
  const auto id = induced_map_on_homology(identity_map(x), x, x, 1);
  EXPECT_EQ(id.matrix, Matrix{{1}});
  const auto neg = induced_map_on_homology(nerve_map({0, 2, 1}, 3, d), x, x, 1);
  EXPECT_EQ(neg.matrix, Matrix{{2}});
  EXPECT_EQ(compose(neg, neg).matrix, Matrix{{1}});

  const auto y = oracle::nerve(cyclic_monoid(4), d);
  const auto times3 = nerve_map({0, 3, 2, 1}, 4, d);
  const auto times2 = nerve_map({0, 2, 0, 2}, 4, d);
  const auto a = induced_map_on_homology(times3, y, y, 1);
  const auto b = induced_map_on_homology(times2, y, y, 1);
  EXPECT_EQ(a.matrix, Matrix{{3}});
  EXPECT_EQ(b.matrix, Matrix{{2}});
  EXPECT_EQ(compose(b, a), induced_map_on_homology(compose(times2, times3), y, y, 1));
  EXPECT_THROW(induced_map_on_homology(identity_map(y), y, y, 3), TruncationError);
}
