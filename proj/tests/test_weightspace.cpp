#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "suphase/weightspace.hpp"

using namespace suphase;

namespace {

std::vector<std::string> kets(const OrderedBasis& b) {
  std::vector<std::string> out;
  for (const auto& s : b) out.push_back(s.ket());
  return out;
}

std::vector<std::string> orbit_kets(const OrderedBasis& b, const std::vector<std::size_t>& orbit) {
  std::vector<std::string> out;
  for (auto k : orbit) out.push_back(b[k].ket());
  return out;
}

}  // namespace

TEST(OccupationState, RejectsNegativeOccupation) { EXPECT_THROW(OccupationState({1, -1, 0}), std::invalid_argument); }

TEST(OccupationState, KetSeparatesMultiDigitOccupations) {
  EXPECT_EQ(OccupationState({1, 0, 2}).ket(), "|102>");
  EXPECT_EQ(OccupationState({10, 0}).ket(), "|10,0>");
}

TEST(RootLabel, RejectsDiagonal) { EXPECT_THROW(RootLabel(2, 2), std::invalid_argument); }

TEST(RootLabel, RangeCheck) {
  EXPECT_NO_THROW(RootLabel(3, 1).check_against(3));
  EXPECT_THROW(RootLabel(4, 1).check_against(3), std::invalid_argument);
}

TEST(EnumerateBasis, FundamentalSu3) {
  const auto b = enumerate_basis(3, 1);
  EXPECT_EQ(kets(b), (std::vector<std::string>{"|100>", "|010>", "|001>"}));
}

TEST(EnumerateBasis, SymmetricSquareOfSu3HasSixStates) { EXPECT_EQ(enumerate_basis(3, 2).size(), 6u); }

TEST(EnumerateBasis, FundamentalSu4) {
  EXPECT_EQ(kets(enumerate_basis(4, 1)), (std::vector<std::string>{"|1000>", "|0100>", "|0010>", "|0001>"}));
}

TEST(EnumerateBasis, RejectsBadArguments) {
  EXPECT_THROW(enumerate_basis(1, 1), std::invalid_argument);
  EXPECT_THROW(enumerate_basis(3, -1), std::invalid_argument);
}

TEST(EnumerateBasis, MatchesBruteForceAndBinomialCount) {
  for (int n = 2; n <= 5; ++n)
    for (int l = 0; l <= 8; ++l) {
      const auto b = enumerate_basis(n, l);
      const auto ref = oracle::brute_basis(n, l);
      ASSERT_EQ(b.size(), ref.size()) << "n=" << n << " lambda=" << l;
      EXPECT_EQ(b.size(), oracle::pascal(l + n - 1, n - 1));
      for (std::size_t k = 0; k < b.size(); ++k) {
        EXPECT_EQ(b[k].occupations(), ref[k]);
        EXPECT_EQ(b.index_of(b[k]), k);
      }
    }
}

TEST(EnumerateBasis, Su3DimensionIsTriangular) {
  for (int l = 0; l <= 12; ++l) EXPECT_EQ(enumerate_basis(3, l).size(), static_cast<std::size_t>((l + 1) * (l + 2) / 2));
}

TEST(WeightOf, FundamentalSu3Weights) {
  EXPECT_EQ(weight_of(OccupationState({1, 0, 0})), (WeightVector{1, 0}));
  EXPECT_EQ(weight_of(OccupationState({0, 1, 0})), (WeightVector{-1, 1}));
  EXPECT_EQ(weight_of(OccupationState({0, 0, 1})), (WeightVector{0, -1}));
}

TEST(RootWeight, MatchesWeightShiftOfLadder) {
  for (int n = 2; n <= 4; ++n) {
    const auto b = enumerate_basis(n, 3);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        const auto alpha = root_weight({i, j}, n);
        for (const auto& s : b) {
          const auto t = s.moved(i, j);
          if (!t) continue;
          auto ws = weight_of(s), wt = weight_of(*t);
          for (std::size_t k = 0; k < ws.size(); ++k) EXPECT_EQ(wt[k] - ws[k], alpha[k]);
        }
      }
  }
}

TEST(CartesianEmbedding, FundamentalWeight) {
  const auto v = cartesian_embedding({1, 0});
  EXPECT_NEAR(v[0], 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(v[1], 1.0 / std::sqrt(6.0), 1e-15);
  const auto z = cartesian_embedding({0, 0});
  EXPECT_EQ(z[0], 0.0);
  EXPECT_EQ(z[1], 0.0);
}

TEST(CartesianEmbedding, DualToSimpleRoots) {
  using namespace su3_geometry;
  EXPECT_NEAR(dot(w1, alpha1), 1.0, 1e-15);
  EXPECT_NEAR(dot(w1, alpha2), 0.0, 1e-15);
  EXPECT_NEAR(dot(w2, alpha1), 0.0, 1e-15);
  EXPECT_NEAR(dot(w2, alpha2), 1.0, 1e-15);
}

TEST(CartesianEmbedding, UndefinedOutsideSu3) { EXPECT_THROW(cartesian_embedding({1, 0, 0}), std::domain_error); }

TEST(CartesianEmbedding, FundamentalStatesFormTriangle) {
  const auto b = enumerate_basis(3, 1);
  std::vector<std::array<double, 2>> v;
  for (const auto& s : b) v.push_back(cartesian_embedding(weight_of(s)));
  // equilateral with centroid at the origin
  const auto dist = [](auto a, auto c) { return std::hypot(a[0] - c[0], a[1] - c[1]); };
  EXPECT_NEAR(dist(v[0], v[1]), dist(v[1], v[2]), 1e-14);
  EXPECT_NEAR(dist(v[0], v[1]), dist(v[0], v[2]), 1e-14);
  EXPECT_NEAR(v[0][0] + v[1][0] + v[2][0], 0.0, 1e-14);
  EXPECT_NEAR(v[0][1] + v[1][1] + v[2][1], 0.0, 1e-14);
}

TEST(Su2Strings, FundamentalSu3Root12) {
  const auto b = enumerate_basis(3, 1);
  const auto p = su2_strings(b, {1, 2});
  ASSERT_EQ(p.orbits.size(), 2u);
  EXPECT_EQ(orbit_kets(b, p.orbits[0]), (std::vector<std::string>{"|010>", "|100>"}));
  EXPECT_EQ(orbit_kets(b, p.orbits[1]), (std::vector<std::string>{"|001>"}));
}

TEST(Su2Strings, LambdaTwoLengths) {
  const auto p = su2_strings(enumerate_basis(3, 2), {1, 2});
  std::multiset<std::size_t> lengths;
  for (const auto& o : p.orbits) lengths.insert(o.size());
  EXPECT_EQ(lengths, (std::multiset<std::size_t>{3, 2, 1}));
}

TEST(Su2Strings, Su4Root31) {
  const auto b = enumerate_basis(4, 1);
  const auto p = su2_strings(b, {3, 1});
  ASSERT_EQ(p.orbits.size(), 3u);
  EXPECT_EQ(orbit_kets(b, p.orbits[0]), (std::vector<std::string>{"|1000>", "|0010>"}));
  EXPECT_EQ(orbit_kets(b, p.orbits[1]), (std::vector<std::string>{"|0100>"}));
  EXPECT_EQ(orbit_kets(b, p.orbits[2]), (std::vector<std::string>{"|0001>"}));
}

TEST(Su2Strings, PartitionInvariantsOnRandomRoots) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 5)(rng);
    const int l = std::uniform_int_distribution<int>(0, 6)(rng);
    const int i = std::uniform_int_distribution<int>(1, n)(rng);
    int j = std::uniform_int_distribution<int>(1, n - 1)(rng);
    if (j >= i) ++j;
    const auto b = enumerate_basis(n, l);
    const auto p = su2_strings(b, {i, j});
    std::vector<int> seen(b.size(), 0);
    for (const auto& o : p.orbits) {
      const auto& first = b[o.front()];
      ASSERT_EQ(static_cast<int>(o.size()), first(i) + first(j) + 1);
      for (std::size_t k = 0; k < o.size(); ++k) {
        ++seen[o[k]];
        EXPECT_EQ(b[o[k]](i), static_cast<int>(k));
        for (int m = 1; m <= n; ++m)
          if (m != i && m != j) EXPECT_EQ(b[o[k]](m), first(m));
      }
    }
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
  }
}

TEST(Su2Strings, LengthMultisetIndependentOfRootChoice) {
  const auto b = enumerate_basis(4, 4);
  std::multiset<std::size_t> ref;
  for (const auto& o : su2_strings(b, {1, 2}).orbits) ref.insert(o.size());
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      if (i == j) continue;
      std::multiset<std::size_t> got;
      for (const auto& o : su2_strings(b, {i, j}).orbits) got.insert(o.size());
      EXPECT_EQ(got, ref);
    }
}

TEST(KernelStates, EdgeCounts) {
  for (int l = 0; l <= 8; ++l) {
    EXPECT_EQ(kernel_states(enumerate_basis(3, l), {1, 2}).size(), static_cast<std::size_t>(l + 1));
    EXPECT_EQ(kernel_states(enumerate_basis(4, l), {1, 2}).size(), static_cast<std::size_t>((l + 1) * (l + 2) / 2));
  }
}

TEST(KernelStates, ExactlyStatesWithEmptySourceMode) {
  const auto b = enumerate_basis(4, 3);
  for (int j = 2; j <= 4; ++j) {
    const auto k = kernel_states(b, {1, j});
    for (std::size_t s = 0; s < b.size(); ++s) {
      const bool listed = std::find(k.begin(), k.end(), s) != k.end();
      EXPECT_EQ(listed, b[s](j) == 0);
    }
  }
}

TEST(EdgeOverlap, Su3LambdaTwo) {
  const auto b = enumerate_basis(3, 2);
  EXPECT_EQ(edge_overlap_count(b, {1, 2}, {3, 1}), (EdgeOverlap{3, 3, 1, 5}));
  const auto ka = kernel_states(b, {1, 2});
  const auto kb = kernel_states(b, {3, 1});
  std::vector<std::size_t> both;
  std::set_intersection(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(both));
  ASSERT_EQ(both.size(), 1u);
  EXPECT_EQ(b[both[0]].ket(), "|002>");
}

TEST(EdgeOverlap, TrivialIrrep) { EXPECT_EQ(edge_overlap_count(enumerate_basis(3, 0), {1, 2}, {3, 1}), (EdgeOverlap{1, 1, 1, 1})); }

TEST(EdgeOverlap, Su4Fundamental) { EXPECT_EQ(edge_overlap_count(enumerate_basis(4, 1), {1, 2}, {3, 1}), (EdgeOverlap{3, 3, 2, 4})); }

TEST(EdgeOverlap, Su3ProblematicStatesCount) {
  for (int l = 0; l <= 10; ++l) {
    const auto e = edge_overlap_count(enumerate_basis(3, l), {1, 2}, {3, 1});
    EXPECT_EQ(e.intersection, 1u);
    EXPECT_EQ(e.union_size, static_cast<std::size_t>(2 * (l + 1) - 1));
  }
}

TEST(EdgeOverlap, RejectsEqualRoots) { EXPECT_THROW(edge_overlap_count(enumerate_basis(3, 1), {1, 2}, {1, 2}), std::invalid_argument); }
