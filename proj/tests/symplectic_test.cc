// Copyright 2026 The gaussmeasure Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gaussmeasure/symplectic.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gaussmeasure/errors.h"
#include "gaussmeasure/haar.h"
#include "test_support.h"

namespace gaussmeasure {
namespace {

using testing::max_abs_diff;

TEST(SymplecticForm, SingleModeBlock) {
    const auto omega = symplectic_form(1);
    Eigen::Matrix2d expected;
    expected << 0, 1, -1, 0;
    EXPECT_EQ(omega.n_modes, 1);
    EXPECT_EQ(omega.matrix, Eigen::MatrixXd(expected));
}

TEST(SymplecticForm, TwoModesAreDirectSumAndSquareToMinusIdentity) {
    const auto omega = symplectic_form(2).matrix;
    Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(4, 4);
    expected(0, 1) = expected(2, 3) = 1;
    expected(1, 0) = expected(3, 2) = -1;
    EXPECT_EQ(omega, expected);
    EXPECT_EQ(omega * omega, Eigen::MatrixXd(-Eigen::MatrixXd::Identity(4, 4)));
    EXPECT_EQ(omega.transpose(), Eigen::MatrixXd(-omega));
}

TEST(Tmsv, ZeroSqueezingIsVacuum) {
    EXPECT_EQ(tmsv_state(0.0).covariance(), Eigen::MatrixXd(Eigen::MatrixXd::Identity(4, 4)));
}

TEST(Tmsv, CovarianceBlocks) {
    const double r = 0.45;
    const Eigen::MatrixXd s = tmsv_state(r).covariance();
    const double c2 = std::cosh(2 * r), s2 = std::sinh(2 * r);
    EXPECT_NEAR(s(0, 0), c2, 1e-14);
    EXPECT_NEAR(s(3, 3), c2, 1e-14);
    EXPECT_NEAR(s(0, 2), -s2, 1e-14);
    EXPECT_NEAR(s(1, 3), s2, 1e-14);
    EXPECT_NEAR(s(0, 3), 0.0, 1e-14);
}

TEST(Tmsv, ReducedEigenvalueIsCoshTwoR) {
    const double r = 0.5 * std::acosh(2.0);
    const auto sp = williamson_spectrum(tmsv_state(r), Bipartition::contiguous(1, 1));
    ASSERT_EQ(sp.nu.size(), 1u);
    EXPECT_NEAR(sp.nu[0], 2.0, 1e-12);
    EXPECT_NEAR(sp.r[0], r, 1e-12);
}

TEST(Tmsv, PurityByDirectMultiplication) {
    const Eigen::MatrixXd s = tmsv_state(0.7).covariance();
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(4, 4);
    omega(0, 1) = omega(2, 3) = 1;
    omega(1, 0) = omega(3, 2) = -1;
    EXPECT_LT(max_abs_diff(s * omega * s.transpose(), omega), 1e-12);
}

TEST(Tmsv, MatchesSymplecticGeneratorOnVacuum) {
    const Eigen::MatrixXd S = tmsv_symplectic(0.8);
    EXPECT_TRUE(is_symplectic(S));
    EXPECT_LT(max_abs_diff(S * S.transpose(), tmsv_state(0.8).covariance()), 1e-12);
}

TEST(CanonicalState, ZeroSqueezingIsGlobalVacuum) {
    const std::vector<double> r{0.0, 0.0};
    const auto st = canonical_state(r, Bipartition::contiguous(2, 3));
    EXPECT_EQ(st.covariance(), Eigen::MatrixXd(Eigen::MatrixXd::Identity(10, 10)));
}

TEST(CanonicalState, OnePlusTwoIsTmsvPlusVacuum) {
    const std::vector<double> r{0.6};
    const auto st = canonical_state(r, Bipartition::contiguous(1, 2));
    const auto& s = st.covariance();
    EXPECT_LT(max_abs_diff(s.topLeftCorner(4, 4), tmsv_state(0.6).covariance()), 1e-14);
    EXPECT_EQ(Eigen::MatrixXd(s.bottomRightCorner(2, 2)), Eigen::MatrixXd(Eigen::MatrixXd::Identity(2, 2)));
    EXPECT_EQ(s.topRightCorner(4, 2).cwiseAbs().maxCoeff(), 0.0);
}

TEST(CanonicalState, RejectsWrongLength) {
    const std::vector<double> r{0.1, 0.2};
    EXPECT_THROW(canonical_state(r, Bipartition::contiguous(1, 2)), DomainError);
}

TEST(Williamson, VacuumGivesOnes) {
    const auto sp = williamson_spectrum(GaussianPureState::vacuum(5), Bipartition::contiguous(2, 3));
    ASSERT_EQ(sp.nu.size(), 2u);
    for (double v : sp.nu) EXPECT_EQ(v, 1.0);
    for (double r : sp.r) EXPECT_EQ(r, 0.0);
}

TEST(Williamson, RecoversCanonicalSqueezingSortedDescending) {
    const std::vector<double> r{0.3, 0.8};
    const auto sp = williamson_spectrum(canonical_state(r, Bipartition::contiguous(2, 2)), Bipartition::contiguous(2, 2));
    EXPECT_NEAR(sp.nu[0], std::cosh(1.6), 1e-10);
    EXPECT_NEAR(sp.nu[1], std::cosh(0.6), 1e-10);
    EXPECT_NEAR(sp.r[0], 0.8, 1e-10);
    EXPECT_NEAR(sp.r[1], 0.3, 1e-10);
}

TEST(Williamson, InvariantUnderLocalPassiveTransforms) {
    Rng rng(7);
    const auto bip = Bipartition::contiguous(2, 3);
    const std::vector<double> r{0.9, 0.2};
    const auto st = canonical_state(r, bip);
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::MatrixXd S =
            embed_local(passive_symplectic(sample_haar_unitary(2, rng)), passive_symplectic(sample_haar_unitary(3, rng)), bip);
        const auto sp = williamson_spectrum(transform(st, S), bip);
        EXPECT_NEAR(sp.nu[0], std::cosh(1.8), 1e-8);
        EXPECT_NEAR(sp.nu[1], std::cosh(0.4), 1e-8);
    }
}

TEST(Williamson, InterleavedBipartition) {
    // A = modes {1, 3}, B = modes {0, 2}: the spectrum does not care where the
    // modes sit.
    const auto bip = Bipartition::from_assignment({Subsystem::B, Subsystem::A, Subsystem::B, Subsystem::A});
    const std::vector<double> r{0.5, 0.25};
    const auto sp = williamson_spectrum(canonical_state(r, bip), bip);
    EXPECT_NEAR(sp.nu[0], std::cosh(1.0), 1e-10);
    EXPECT_NEAR(sp.nu[1], std::cosh(0.5), 1e-10);
}

TEST(Williamson, FullStateSpectrumOfPureStateIsAllOnes) {
    Rng rng(3);
    const std::vector<double> r{0.7, 0.1};
    const auto bip = Bipartition::contiguous(2, 2);
    const Eigen::MatrixXd S = embed_local(passive_symplectic(sample_haar_unitary(2, rng)),
                                          passive_symplectic(sample_haar_unitary(2, rng)), bip);
    const auto st = transform(canonical_state(r, bip), S);
    const auto nu = symplectic_eigenvalues(st.covariance());
    ASSERT_EQ(nu.size(), 4u);
    for (double v : nu) EXPECT_NEAR(v, 1.0, 1e-8);
}

TEST(Bipartition, SwapsSoThatASideIsSmaller) {
    const auto bip = Bipartition::contiguous(3, 1);
    EXPECT_EQ(bip.n_A(), 1);
    EXPECT_EQ(bip.n_B(), 3);
    EXPECT_EQ(bip.modes_A(), std::vector<int>{3});
}

TEST(GaussianPureState, RejectsMixedAndMalformedCovariances) {
    EXPECT_THROW(GaussianPureState(2.0 * Eigen::MatrixXd::Identity(2, 2)), NotPureStateError);
    Eigen::MatrixXd asym = Eigen::MatrixXd::Identity(2, 2);
    asym(0, 1) = 0.1;
    EXPECT_THROW(GaussianPureState{asym}, NotPureStateError);
    EXPECT_THROW(GaussianPureState(Eigen::MatrixXd::Identity(3, 3)), DomainError);
    // symplectic but not positive definite
    EXPECT_THROW(GaussianPureState(Eigen::MatrixXd(-Eigen::MatrixXd::Identity(2, 2))), NotPureStateError);
}

TEST(Transform, RejectsNonSymplecticMatrix) {
    EXPECT_THROW(transform(GaussianPureState::vacuum(1), 2.0 * Eigen::MatrixXd::Identity(2, 2)), DomainError);
}

TEST(SymplecticSpectrum, ClampsBoundaryNoiseAndRejectsBelowOne) {
    const auto sp = SymplecticSpectrum::from_nu({1.0 - 1e-10, 2.0});
    EXPECT_EQ(sp.nu[0], 2.0);
    EXPECT_EQ(sp.nu[1], 1.0);
    EXPECT_EQ(sp.r[1], 0.0);
    EXPECT_THROW(SymplecticSpectrum::from_nu({1.0 - 1e-6}), DomainError);
    const auto from_r = SymplecticSpectrum::from_squeezing({0.25});
    EXPECT_NEAR(from_r.nu[0], std::cosh(0.5), 1e-15);
}

TEST(ReducedSpectrum, VacuumIsPure) {
    const auto p = reduced_spectrum(1.0, 3);
    ASSERT_EQ(p.size(), 4u);
    EXPECT_EQ(p[0], 1.0);
    EXPECT_EQ(p[1], 0.0);
    EXPECT_EQ(p[3], 0.0);
}

TEST(ReducedSpectrum, NuThreeIsHalving) {
    const auto p = reduced_spectrum(3.0, 2);
    EXPECT_NEAR(p[0], 0.5, 1e-15);
    EXPECT_NEAR(p[1], 0.25, 1e-15);
    EXPECT_NEAR(p[2], 0.125, 1e-15);
}

TEST(ReducedSpectrum, AutomaticCutoffLeavesTinyTail) {
    for (double nu : {1.5, 3.0, 10.0}) {
        const auto p = reduced_spectrum(nu);
        double sum = 0.0;
        for (double v : p) sum += v;
        EXPECT_LT(1.0 - sum, 1e-12) << nu;
        EXPECT_GE(1.0 - sum, -1e-14) << nu;
    }
    EXPECT_THROW(reduced_spectrum(0.99), DomainError);
}

TEST(Entropy, ZeroForPureReducedStates) {
    EXPECT_EQ(mode_entropy(1.0), 0.0);
    EXPECT_EQ(entanglement_entropy(SymplecticSpectrum::from_nu({1.0, 1.0, 1.0})), 0.0);
}

TEST(Entropy, MatchesShannonEntropyOfGeometricSpectrum) {
    for (double nu : {1.5, 3.0, 10.0}) {
        // independent oracle: sum the series until the terms vanish
        const double q = (nu - 1.0) / (nu + 1.0);
        double p = 2.0 / (nu + 1.0), h = 0.0;
        for (int j = 0; j < 100000 && p > 0.0; ++j, p *= q) h -= p * std::log(p);
        EXPECT_NEAR(mode_entropy(nu), h, 1e-10) << nu;
    }
}

TEST(Entropy, MonotoneAndAdditive) {
    EXPECT_LT(mode_entropy(2.0), mode_entropy(5.0));
    const auto sp = SymplecticSpectrum::from_nu({2.0, 5.0});
    EXPECT_NEAR(entanglement_entropy(sp), mode_entropy(2.0) + mode_entropy(5.0), 1e-15);
    EXPECT_THROW(mode_entropy(0.5), DomainError);
}

}  // namespace
}  // namespace gaussmeasure
