#include <gtest/gtest.h>

#include "oracles.hpp"
#include "suphase/gammareal.hpp"

using namespace suphase;

TEST(GammaSu2, LadderEntriesForJOne) {
  const auto g = gamma_su2(Spin{2});
  // positions: m = 1, 0, -1
  EXPECT_EQ(g.e_plus(0, 1), 1.0);  // (j - m) at m = 0
  EXPECT_EQ(g.e_plus.col(0).norm(), 0.0);
  EXPECT_EQ(g.e_plus(1, 2), 2.0);
  EXPECT_EQ(g.e_minus(1, 0), 2.0);  // (j + m) at m = 1
  EXPECT_EQ(g.e_minus(2, 1), 1.0);
}

TEST(GammaSu2, CommutatorOfLaddersForJOne) {
  const auto g = gamma_su2(Spin{2});
  const RealMatrix c = commutator(g.e_plus, g.e_minus);
  EXPECT_EQ(max_abs(c - 2.0 * g.h), 0.0);
  EXPECT_EQ(c.diagonal(), Eigen::Vector3d(2, 0, -2));
}

TEST(GammaSu2, ExactRelationsUpToJFifteen) {
  for (int twice = 0; twice <= 30; ++twice) {
    const auto g = gamma_su2(Spin{twice});
    EXPECT_EQ(su2_commutation_residual(g.h, g.e_plus, g.e_minus), 0.0) << "2j=" << twice;
  }
}

TEST(GammaSu2, RejectsInvalidSpin) { EXPECT_THROW(gamma_su2(Spin{-2}), std::invalid_argument); }

TEST(NonHermiticity, MatchesEntrywiseComparison) {
  for (int twice = 0; twice <= 20; ++twice) {
    const double j = twice / 2.0;
    double worst = 0.0;
    // <m+1|e+|m> = j - m against <m+1|e-^T|m> = <m|e-|m+1> = j + m + 1
    for (int k = 1; k <= twice; ++k) {
      const double m = j - k;
      worst = std::max(worst, std::abs((j - m) - (j + m + 1)));
    }
    EXPECT_EQ(nonhermiticity_witness(gamma_su2(Spin{twice})), worst) << "2j=" << twice;
  }
  EXPECT_EQ(nonhermiticity_witness(gamma_su2(Spin{0})), 0.0);
  EXPECT_EQ(nonhermiticity_witness(gamma_su2(Spin{1})), 0.0);
  EXPECT_EQ(nonhermiticity_witness(gamma_su2(Spin{2})), 1.0);
  EXPECT_EQ(nonhermiticity_witness(gamma_su2(Spin{6})), 5.0);
}

TEST(Intertwiner, SmallSpins) {
  EXPECT_LT((intertwiner(Spin{2}).diagonal - Eigen::Vector3d(1, std::sqrt(2.0), 1)).norm(), 1e-15);
  EXPECT_EQ(intertwiner(Spin{1}).diagonal, Eigen::Vector2d(1, 1));
  EXPECT_DOUBLE_EQ(intertwiner(Spin{4}).diagonal(2), std::sqrt(6.0));
}

TEST(Intertwiner, MatchesPascalAndIsSymmetric) {
  for (int twice = 0; twice <= 60; ++twice) {
    const auto k = intertwiner(Spin{twice});
    for (int p = 0; p <= twice; ++p) {
      const double ref = static_cast<double>(oracle::pascal(twice, p));
      EXPECT_NEAR(k.diagonal(p) * k.diagonal(p) / ref, 1.0, 1e-13) << twice << " " << p;
      EXPECT_NEAR(k.diagonal(p) / k.diagonal(twice - p), 1.0, 1e-14);
      EXPECT_GT(k.diagonal(p), 0.0);
    }
  }
}

TEST(Intertwiner, LargeSpinStaysFinite) {
  const auto k = intertwiner(Spin{200});
  EXPECT_TRUE(k.diagonal.allFinite());
  EXPECT_NEAR(k.diagonal(0), 1.0, 1e-12);
}

TEST(Hermitize, ConjugationGivesHermitianRep) {
  const auto g = gamma_su2(Spin{2});
  const auto k = intertwiner(Spin{2});
  const RealMatrix em = k.inverse() * g.e_minus * k.matrix();
  // |1,1> -> sqrt(2) |1,0>
  EXPECT_NEAR(em(1, 0), std::sqrt(2.0), 1e-15);
  EXPECT_EQ(hermitize_check(Spin{0}), 0.0);
  for (int twice = 0; twice <= 30; ++twice) EXPECT_LT(hermitize_check(Spin{twice}), 1e-9) << "2j=" << twice;
}

TEST(SRecursion, SmallSpinsExact) {
  EXPECT_EQ(intertwiner(Spin{2}).s_diagonal(), Eigen::Vector3d(1, 2, 1));
  EXPECT_EQ(s_recursion_check(Spin{2}), 0.0);
  EXPECT_EQ(s_recursion_check(Spin{1}), 0.0);
}

TEST(SRecursion, RelativeResidualUpToJThirty) {
  for (int twice = 0; twice <= 60; ++twice) EXPECT_LT(s_recursion_check(Spin{twice}), 1e-12) << "2j=" << twice;
}

TEST(Intertwiner, CommutesWithDiagonalProducts) {
  for (int twice = 0; twice <= 30; ++twice) EXPECT_LT(intertwiner_commutation_residual(Spin{twice}), 1e-10);
}

TEST(GammaPhasePart, EqualsCyclicShift) {
  EXPECT_EQ(max_abs(gamma_phase_part(gamma_su2(Spin{1})) - oracle::from_rows({{0, 1}, {1, 0}})), 0.0);
  for (int twice = 0; twice <= 20; ++twice)
    EXPECT_EQ(max_abs(gamma_phase_part(gamma_su2(Spin{twice})) - su2_shift_E(Spin{twice})), 0.0) << "2j=" << twice;
}

TEST(GammaPhasePart, AgreesWithHermitianPolarPart) {
  for (int twice = 1; twice <= 12; ++twice) {
    const auto s = su2_matrices(Spin{twice});
    const ComplexMatrix c = s.e_minus.cast<Complex>();
    ComplexMatrix e = partial_isometry(c, positive_factor(c));
    e(0, twice) = 1.0;  // m = -j wraps to m = j
    EXPECT_EQ(max_abs(e - gamma_phase_part(gamma_su2(Spin{twice}))), 0.0);
  }
}

TEST(Casimir, SpectraAgree) {
  for (int twice = 0; twice <= 30; ++twice) EXPECT_LT(casimir_spectrum_mismatch(Spin{twice}), 1e-9);
}

TEST(GammaSu3, FundamentalCartanAndC12) {
  const auto g = gamma_su3(1);
  EXPECT_EQ(g.h1.diagonal(), Eigen::Vector3d(1, -1, 0));
  EXPECT_EQ(g.h2.diagonal(), Eigen::Vector3d(0, 1, -1));
  // weight (-1, 1) is |010>, index 1; C12 sends it to |100> with (lambda - x + y)/3 = 1
  EXPECT_DOUBLE_EQ(g.ladders.at(RootLabel(1, 2))(0, 1), 1.0);
}

TEST(GammaSu3, RepresentationPropertyUpToLambdaFour) {
  for (int l = 0; l <= 4; ++l) EXPECT_LT(commutation_residual(gamma_su3(l).as_generator_set()), 1e-12) << l;
}

TEST(GammaSu3, LaddersShiftWeightsByTheirRoots) {
  const auto g = gamma_su3(4);
  for (const auto& [root, m] : g.ladders) {
    const auto alpha = root_weight(root, 3);
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        if (m(r, c) == 0.0) continue;
        const auto wr = weight_of(g.basis[static_cast<std::size_t>(r)]);
        const auto wc = weight_of(g.basis[static_cast<std::size_t>(c)]);
        EXPECT_EQ(wr[0] - wc[0], alpha[0]);
        EXPECT_EQ(wr[1] - wc[1], alpha[1]);
      }
  }
}

TEST(GammaSu3, SameSpectrumAsBosonRealization) {
  // similar representations: C_ij C_ji has the same spectrum in both
  for (int l = 1; l <= 4; ++l) {
    const auto g = gamma_su3(l);
    const auto boson = generator_set(enumerate_basis(3, l));
    for (const RootLabel r : {RootLabel(1, 2), RootLabel(2, 3), RootLabel(1, 3)}) {
      Eigen::EigenSolver<RealMatrix> a(RealMatrix(g.ladders.at(r) * g.ladders.at(r.reversed())));
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> b(ComplexMatrix(boson.ladder(r.i, r.j) * boson.ladder(r.j, r.i)));
      std::vector<double> va, vb;
      for (Eigen::Index k = 0; k < a.eigenvalues().size(); ++k) va.push_back(a.eigenvalues()(k).real());
      for (Eigen::Index k = 0; k < b.eigenvalues().size(); ++k) vb.push_back(b.eigenvalues()(k));
      std::sort(va.begin(), va.end());
      std::sort(vb.begin(), vb.end());
      for (std::size_t k = 0; k < va.size(); ++k) EXPECT_NEAR(va[k], vb[k], 1e-9);
    }
  }
}

TEST(GammaSu3, InteriorCoefficientsApproachOneThird) {
  // fixed window of weights around the origin: deviation times lambda stays bounded
  double previous = 1.0;
  for (int l : {6, 12, 24, 48}) {
    const double dev = gamma_su3_interior_deviation(l, 2);
    EXPECT_LE(dev * l, 2.0) << l;
    EXPECT_LT(dev, previous);
    previous = dev;
  }
}

TEST(SolveLowering, RejectsInconsistentString) {
  RealMatrix r = RealMatrix::Zero(2, 2);
  r(0, 1) = 1.0;
  RealMatrix h = RealMatrix::Zero(2, 2);
  h(0, 0) = 1.0;
  h(1, 1) = 1.0;  // trace must vanish along the string
  EXPECT_THROW(solve_lowering(r, h), std::logic_error);
}

TEST(Dft, ThreePointEigenvalues) {
  const auto sys = dft_eigensystem(su2_shift_E(Spin{2}));
  EXPECT_EQ(sys.values[0], Complex(1.0));
  EXPECT_LT(std::abs(sys.values[1] - oracle::omega(1)), 1e-15);
  EXPECT_LT(std::abs(sys.values[2] - oracle::omega(2)), 1e-15);
}

TEST(Dft, TwoPointEigenvectors) {
  const auto sys = dft_eigensystem(su2_shift_E(Spin{1}));
  const double r = 1.0 / std::sqrt(2.0);
  // column k is proportional to (1, +-1)
  for (Eigen::Index k = 0; k < 2; ++k) {
    const Complex ratio = sys.vectors(1, k) / sys.vectors(0, k);
    EXPECT_NEAR(std::abs(sys.vectors(0, k)), r, 1e-15);
    EXPECT_LT(std::abs(ratio - (k == 0 ? 1.0 : -1.0)), 1e-14);
  }
}

TEST(Dft, UnbiasedAndVerifiedAgainstSolver) {
  for (int n = 1; n <= 21; ++n) {
    const auto e = su2_shift_E(Spin{n - 1});
    const auto sys = dft_eigensystem(e);
    EXPECT_LT(max_abs((sys.vectors.cwiseAbs2().array() - 1.0 / n).matrix()), 1e-10);
    EXPECT_LT(unitarity_residual(sys.vectors), 1e-12);
    EXPECT_LT(dft_eigensystem_residual(e), 1e-10) << n;
  }
}

TEST(Dft, RejectsNonShift) { EXPECT_THROW(dft_eigensystem(identity(3)), std::invalid_argument); }
