#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "rcc/moves.hpp"
#include "rcc/rcc.hpp"
#include "test_support.hpp"

using namespace rcc;
namespace oracle = rcc::testing;

namespace {

// Crossing masks reachable by some region set, from the oracle's own walks.
std::set<oracle::Row> reachable(const DiagramData& d) {
  const auto summary = oracle::oracle_summary(d);
  std::vector<oracle::Row> rows;
  for (const auto& profile : summary.corner_profiles) {
    oracle::Row r = 0;
    for (std::size_t j = 0; j < profile.size(); ++j) {
      if (profile[j] % 2 != 0) r |= oracle::Row{1} << j;
    }
    rows.push_back(r);
  }
  std::set<oracle::Row> out;
  const std::uint64_t total = std::uint64_t{1} << rows.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    oracle::Row s = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if ((mask >> i) & 1U) s ^= rows[i];
    }
    out.insert(s);
  }
  return out;
}

CrossingSet to_set(oracle::Row mask, std::size_t c) {
  CrossingSet p;
  for (std::size_t j = 0; j < c; ++j) {
    if ((mask >> j) & 1U) p.push_back(j);
  }
  return p;
}

}  // namespace

TEST(Incidence, Fixtures) {
  const Analysis curl(fixtures::curl());
  ASSERT_EQ(curl.incidence().rows(), 3U);
  std::multiset<bool> entries;
  for (std::size_t i = 0; i < 3; ++i) entries.insert(curl.incidence().get(i, 0));
  EXPECT_EQ(entries, (std::multiset<bool>{false, true, true}));
  EXPECT_FALSE(curl.incidence().get(0, 0));  // the region with two corners

  EXPECT_EQ(incidence_matrix(fixtures::torus11()), gf2::BitMatrix(1, 1));
  EXPECT_EQ(incidence_matrix(fixtures::rp2curl()), (gf2::BitMatrix{{1}, {1}}));
}

TEST(RankFormula, Fixtures) {
  const auto curl = verify_rank_formula(fixtures::curl());
  EXPECT_EQ(curl.lhs, 1);
  EXPECT_EQ(curl.rhs, 1);
  EXPECT_TRUE(curl.equal);
  const auto torus = verify_rank_formula(fixtures::torus11());
  EXPECT_EQ(torus.lhs, 0);
  EXPECT_EQ(torus.rhs, 0);
  EXPECT_TRUE(torus.equal);
  const auto rp2 = verify_rank_formula(fixtures::rp2curl());
  EXPECT_EQ(rp2.lhs, 1);
  EXPECT_EQ(rp2.rhs, 1);
  EXPECT_TRUE(rp2.equal);
}

TEST(RankFormula, RandomDiagrams) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto rep = verify_rank_formula(random_diagram(1 + seed % 12, (seed % 3) * 0.5, 7000 + seed));
    EXPECT_TRUE(rep.equal) << "seed " << seed << ": " << rep.lhs << " vs " << rep.rhs;
  }
}

TEST(RankFormula, IncidenceRankMatchesOracle) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto d = random_diagram(1 + seed % 8, (seed % 3) * 0.5, 7500 + seed);
    EXPECT_EQ(Analysis(d).incidence_rank(), oracle::oracle_summary(d.data()).rank_incidence);
  }
}

TEST(CountClasses, Fixtures) {
  EXPECT_EQ(count_classes(fixtures::curl()), 0U);
  EXPECT_EQ(count_classes(fixtures::torus11()), 1U);
  EXPECT_EQ(count_classes(fixtures::trefoil()), 0U);
}

TEST(CountClasses, PlanarLinksHaveExponentComponentsMinusOne) {
  for (const auto& b : oracle::link_braids()) {
    const Analysis a(import_pd(oracle::braid_closure_pd(b.strands, b.word)));
    EXPECT_EQ(count_classes(a), a.num_components() - 1) << b.name;
  }
}

TEST(Admissible, Fixtures) {
  const Analysis curl(fixtures::curl());
  const auto w = admissible(curl, {0});
  ASSERT_TRUE(w.has_value());
  ASSERT_EQ(w->size(), 1U);
  EXPECT_EQ(curl.faces().regions[w->front()].corner_counts, std::vector<int>{1});
  EXPECT_FALSE(admissible(fixtures::torus11(), {0}).has_value());
  EXPECT_TRUE(admissible(fixtures::torus11(), {}).has_value());
  EXPECT_THROW((void)admissible(curl, {1}), std::out_of_range);
}

TEST(Admissible, AgreesWithEnumeration) {
  std::mt19937_64 rng(8);
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto d = random_diagram(1 + seed % 7, (seed % 3) * 0.5, 8000 + seed);
    const Analysis a(d);
    if (a.num_regions() > 14) continue;
    const auto brute = reachable(d.data());
    const std::size_t c = d.num_crossings();
    for (int trial = 0; trial < 4; ++trial) {
      const oracle::Row mask = rng() & ((oracle::Row{1} << c) - 1);
      const auto p = to_set(mask, c);
      const auto w = admissible(a, p);
      EXPECT_EQ(w.has_value(), brute.contains(mask));
      if (w) {
        EXPECT_EQ(switched_crossings(a, *w), gf2::BitVector::from_mask(c, mask));
      }
    }
  }
}

TEST(Ineffective, FixturesAndDimension) {
  const auto torus = ineffective_basis(fixtures::torus11());
  ASSERT_EQ(torus.size(), 1U);
  EXPECT_EQ(torus[0], RegionSet{0});
  EXPECT_EQ(ineffective_basis(fixtures::curl()).size(), 2U);
  EXPECT_EQ(ineffective_basis(fixtures::trefoil()).size(), 2U);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Analysis a(random_diagram(1 + seed % 12, (seed % 3) * 0.5, 9000 + seed));
    const auto basis = ineffective_basis(a);
    EXPECT_EQ(basis.size(), a.num_regions() - a.incidence_rank());
    for (const auto& s : basis) EXPECT_TRUE(switched_crossings(a, s).none());
  }
}

TEST(ApplyRcc, CurlMonogonTogglesCrossing) {
  const Analysis curl(fixtures::curl());
  for (std::size_t i = 0; i < curl.num_regions(); ++i) {
    const auto after = apply_rcc(curl, {i});
    const bool odd = curl.faces().regions[i].corner_counts[0] % 2 != 0;
    EXPECT_EQ(after.crossing(0).over_pair, odd ? 1 : 0);
  }
}

TEST(ApplyRcc, DoubleCountingAndInvolution) {
  std::mt19937_64 rng(10);
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto d = random_diagram(1 + seed % 10, (seed % 3) * 0.5, 9500 + seed);
    const Analysis a(d);
    RegionSet s;
    for (std::size_t i = 0; i < a.num_regions(); ++i) {
      if (rng() & 1U) s.push_back(i);
    }
    // Switch each crossing once per corner, literally.
    DiagramData expected = d.data();
    for (std::size_t i : s) {
      for (std::size_t j = 0; j < d.num_crossings(); ++j) {
        for (int k = 0; k < a.faces().regions[i].corner_counts[j]; ++k) expected.crossings[j].over_pair ^= 1;
      }
    }
    const auto once = apply_rcc(a, s);
    EXPECT_EQ(once.data(), expected);
    EXPECT_EQ(apply_rcc(once, s), d);

    RegionSet all(a.num_regions());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    EXPECT_EQ(apply_rcc(a, all), d);
    EXPECT_EQ(apply_rcc(a, {}), d);
  }
}

TEST(Equivalent, Fixtures) {
  const auto curl = fixtures::curl();
  const auto w = rcc_equivalent(curl, toggle_crossings(curl, gf2::BitVector({1})));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->size(), 1U);
  const auto torus = fixtures::torus11();
  EXPECT_FALSE(rcc_equivalent(torus, toggle_crossings(torus, gf2::BitVector({1}))).has_value());
  EXPECT_TRUE(rcc_equivalent(torus, torus).has_value());
  EXPECT_THROW((void)rcc_equivalent(curl, torus), ShadowMismatch);
}

TEST(Equivalent, ApplyThenCompareFindsWitness) {
  std::mt19937_64 rng(12);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Analysis a(random_diagram(1 + seed % 10, 0.5, 9900 + seed));
    RegionSet s;
    for (std::size_t i = 0; i < a.num_regions(); ++i) {
      if (rng() & 1U) s.push_back(i);
    }
    const auto other = apply_rcc(a, s);
    const auto w = rcc_equivalent(a, other);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(apply_rcc(a, *w), other);
  }
}

TEST(Checkerboard, Fixtures) {
  const Analysis trefoil(fixtures::trefoil());
  const auto colours = checkerboard(trefoil);
  ASSERT_TRUE(colours.has_value());
  RegionSet black;
  RegionSet white;
  for (std::size_t i = 0; i < colours->size(); ++i) ((*colours)[i] != 0 ? black : white).push_back(i);
  EXPECT_TRUE(switched_crossings(trefoil, black).none());
  EXPECT_TRUE(switched_crossings(trefoil, white).none());
  EXPECT_EQ(std::min(black.size(), white.size()), 2U);

  EXPECT_FALSE(checkerboard(fixtures::torus11()).has_value());
  EXPECT_TRUE(checkerboard(fixtures::curl()).has_value());
}

TEST(Checkerboard, SphericalDiagramsAreColourable) {
  for (const auto& b : oracle::knot_braids()) {
    EXPECT_TRUE(checkerboard(import_pd(oracle::braid_closure_pd(b.strands, b.word))).has_value()) << b.name;
  }
  for (const auto& b : oracle::link_braids()) {
    EXPECT_TRUE(checkerboard(import_pd(oracle::braid_closure_pd(b.strands, b.word))).has_value()) << b.name;
  }
}

TEST(Checkerboard, ColoursDifferAcrossEveryEdge) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Analysis a(random_diagram(1 + seed % 10, (seed % 3) * 0.5, 10500 + seed));
    const auto colours = checkerboard(a);
    if (!colours) continue;
    for (std::size_t e = 0; e < a.scheme().num_edges(); ++e) {
      // The two sides of e lie in regions whose colours differ.
      const auto& cov = a.cover();
      const Dart x = a.scheme().edge(e).darts[0];
      const std::size_t left = a.faces().region_of_cover_dart[cov.lift(x, 0)];
      const std::size_t right = a.faces().region_of_cover_dart[cov.lift(x, 1)];
      EXPECT_NE((*colours)[left], (*colours)[right]);
    }
  }
}
