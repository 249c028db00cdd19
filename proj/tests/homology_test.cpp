#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "rcc/homology.hpp"
#include "rcc/moves.hpp"
#include "rcc/rcc.hpp"
#include "test_support.hpp"

using namespace rcc;
namespace oracle = rcc::testing;

TEST(Homology, FixtureDimensions) {
  EXPECT_EQ(homology_context(fixtures::curl()).dimension(), 0U);
  EXPECT_EQ(homology_context(fixtures::torus11()).dimension(), 2U);
  const auto rp2 = homology_context(fixtures::rp2curl());
  EXPECT_EQ(rp2.dimension(), 1U);
  EXPECT_EQ(rp2.boundary_rank(), 1U);
  EXPECT_EQ(homology_context(fixtures::trefoil()).dimension(), 0U);
}

TEST(Homology, EmptySetAndBoundariesAreZero) {
  for (const auto& d : {fixtures::curl(), fixtures::torus11(), fixtures::rp2curl(), fixtures::trefoil()}) {
    const auto fs = faces(d);
    const HomologyContext ctx(d, fs);
    EXPECT_TRUE(ctx.class_of(gf2::BitVector(d.num_edges())).none());
    for (const auto& r : fs.regions) EXPECT_TRUE(ctx.class_of(r.edge_parity).none());
  }
}

TEST(Homology, CrossCapGenerator) {
  const auto ctx = homology_context(fixtures::rp2curl());
  EXPECT_TRUE(ctx.class_of_edges({0}).any());
  EXPECT_EQ(ctx.class_of_edges({0}), ctx.class_of_edges({0, 1}));
  EXPECT_TRUE(ctx.class_of_edges({1}).none());
}

TEST(Homology, TorusComponentsAreIndependent) {
  const auto ctx = homology_context(fixtures::torus11());
  const auto a = ctx.class_of_edges({0});
  const auto b = ctx.class_of_edges({1});
  EXPECT_TRUE(a.any());
  EXPECT_TRUE(b.any());
  EXPECT_NE(a, b);
}

TEST(Homology, NonCycleIsRejected) {
  const auto ctx = homology_context(fixtures::trefoil());
  try {
    (void)ctx.class_of_edges({0});
    FAIL() << "expected NotACycleError";
  } catch (const NotACycleError& e) {
    EXPECT_LT(e.crossing(), 3U);
  }
  EXPECT_THROW((void)ctx.class_of(gf2::BitVector(5)), std::invalid_argument);
}

TEST(HomologyMatrix, Fixtures) {
  const auto curl = homology_matrix(fixtures::curl());
  EXPECT_EQ(curl.matrix.rows(), 1U);
  EXPECT_EQ(curl.matrix.cols(), 0U);
  EXPECT_EQ(curl.rank, 0U);

  const auto torus = homology_matrix(fixtures::torus11());
  EXPECT_EQ(torus.matrix.rows(), 2U);
  EXPECT_EQ(torus.matrix.cols(), 2U);
  EXPECT_EQ(torus.rank, 2U);

  const auto rp2 = homology_matrix(fixtures::rp2curl());
  EXPECT_EQ(rp2.matrix, (gf2::BitMatrix{{1}}));
  EXPECT_EQ(rp2.rank, 1U);
}

TEST(HomologyProperties, DimensionIsTwoMinusEuler) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto d = random_diagram(1 + seed % 12, (seed % 3) * 0.5, 3000 + seed);
    const Analysis a(d);
    const auto& ctx = a.homology();
    EXPECT_EQ(ctx.dimension(), static_cast<std::size_t>(a.surface().h1_dim));
    EXPECT_EQ(ctx.cycle_rank() - ctx.boundary_rank(), ctx.dimension());
    EXPECT_EQ(ctx.cycle_rank(), d.num_edges() - d.num_crossings() + 1);
    EXPECT_EQ(ctx.boundary_rank(), a.num_regions() - 1);
  }
}

TEST(HomologyProperties, ClassIsLinear) {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto d = random_diagram(2 + seed % 9, 0.5, 4000 + seed);
    const auto ctx = homology_context(d);
    const auto& basis = ctx.cycle_basis();
    for (int trial = 0; trial < 5; ++trial) {
      gf2::BitVector z1(d.num_edges());
      gf2::BitVector z2(d.num_edges());
      for (const auto& b : basis) {
        if (rng() & 1U) z1 ^= b;
        if (rng() & 1U) z2 ^= b;
      }
      gf2::BitVector sum = z1;
      sum ^= z2;
      gf2::BitVector expected = ctx.class_of(z1);
      expected ^= ctx.class_of(z2);
      EXPECT_EQ(ctx.class_of(sum), expected);
    }
  }
}

TEST(HomologyProperties, RankMatchesOracle) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto d = random_diagram(1 + seed % 8, (seed % 3) * 0.5, 5000 + seed);
    const auto oracle_values = oracle::oracle_summary(d.data());
    EXPECT_EQ(homology_matrix(d).rank, oracle_values.rank_homology) << "seed " << seed;
  }
}

TEST(HomologyProperties, RankInvariantUnderRelabelling) {
  std::mt19937_64 rng(4);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto d = random_diagram(2 + seed % 9, 0.5, 6000 + seed);
    const auto perm = oracle::random_permutation(d.num_crossings(), rng);
    const auto order = oracle::random_permutation(d.num_edges(), rng);
    const auto e = validate(oracle::relabel(d.data(), perm, order));
    EXPECT_EQ(homology_matrix(e).rank, homology_matrix(d).rank);
  }
}

TEST(HomologyProperties, PlanarLinksHaveZeroClasses) {
  for (const auto& b : oracle::link_braids()) {
    const auto h = homology_matrix(import_pd(oracle::braid_closure_pd(b.strands, b.word)));
    EXPECT_EQ(h.matrix.cols(), 0U) << b.name;
    EXPECT_EQ(h.rank, 0U) << b.name;
  }
}
