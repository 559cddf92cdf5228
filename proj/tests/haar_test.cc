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

#include "gaussmeasure/haar.h"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "gaussmeasure/errors.h"
#include "gaussmeasure/invariant_measure.h"
#include "gaussmeasure/stats.h"
#include "test_support.h"

namespace gaussmeasure {
namespace {

using testing::ks_unweighted;
using testing::max_abs_diff;

TEST(HaarUnitary, IsUnitary) {
    Rng rng(1);
    for (int n : {1, 2, 3, 5}) {
        const auto U = sample_haar_unitary(n, rng);
        const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
        EXPECT_LT((U.adjoint() * U - id).cwiseAbs().maxCoeff(), 1e-12);
    }
    EXPECT_THROW(sample_haar_unitary(0, rng), DomainError);
}

TEST(HaarUnitary, SingleModePhaseIsUniform) {
    Rng rng(2);
    const int draws = 100000;
    std::complex<double> mean = 0.0;
    std::vector<double> phases;
    for (int i = 0; i < draws; ++i) {
        const auto u = sample_haar_unitary(1, rng)(0, 0);
        EXPECT_NEAR(std::abs(u), 1.0, 1e-14);
        mean += u;
        phases.push_back(std::arg(u));
    }
    mean /= draws;
    // each component has variance 1/2
    EXPECT_LT(std::abs(mean.real()), 3.0 * std::sqrt(0.5 / draws));
    EXPECT_LT(std::abs(mean.imag()), 3.0 * std::sqrt(0.5 / draws));
    EXPECT_LT(ks_unweighted(phases, [](double t) { return (t + std::numbers::pi) / (2 * std::numbers::pi); }), 0.01);
}

TEST(HaarUnitary, SecondMomentsAreOneOverN) {
    Rng rng(3);
    for (int n : {2, 4}) {
        const int draws = 100000;
        Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n), sum_sq = Eigen::MatrixXd::Zero(n, n);
        for (int i = 0; i < draws; ++i) {
            const Eigen::MatrixXd a = sample_haar_unitary(n, rng).cwiseAbs2();
            sum += a;
            sum_sq += a.cwiseProduct(a);
        }
        for (int h = 0; h < n; ++h) {
            for (int k = 0; k < n; ++k) {
                const double mean = sum(h, k) / draws;
                const double se = std::sqrt((sum_sq(h, k) / draws - mean * mean) / draws);
                EXPECT_LT(std::abs(mean - 1.0 / n), 4.0 * se) << n << ' ' << h << ' ' << k;
            }
        }
    }
}

TEST(HaarUnitary, TwoByTwoCornerWeightIsUniform) {
    Rng rng(4);
    std::vector<double> xs;
    for (int i = 0; i < 100000; ++i) xs.push_back(std::norm(sample_haar_unitary(2, rng)(0, 0)));
    EXPECT_LT(ks_unweighted(xs, [](double x) { return std::clamp(x, 0.0, 1.0); }), 0.01);
}

TEST(HaarUnitary, LeftInvariance) {
    Rng rng(5);
    Rng fixed_rng(99);
    const Eigen::MatrixXcd V = sample_haar_unitary(2, fixed_rng);
    std::vector<double> xs;
    for (int i = 0; i < 100000; ++i) {
        const Eigen::MatrixXcd W = V * sample_haar_unitary(2, rng);
        EXPECT_NEAR((W * W.adjoint()).trace().real(), 2.0, 1e-12);
        xs.push_back(std::norm(W(0, 0)));
    }
    EXPECT_LT(ks_unweighted(xs, [](double x) { return std::clamp(x, 0.0, 1.0); }), 0.02);
}

TEST(Vandermonde, AbsAndMax) {
    const std::vector<double> x{1.0, 3.0, 2.0};
    EXPECT_DOUBLE_EQ(vandermonde_abs(x), 2.0 * 1.0 * 1.0);
    EXPECT_EQ(vandermonde_abs(std::vector<double>{4.0}), 1.0);
    // n = 2: the maximum sits at the corners
    EXPECT_DOUBLE_EQ(vandermonde_max(2, 5.0), 4.0);
    // n = 3 on [1, 3]: points 1, 2, 3 give 2
    EXPECT_NEAR(vandermonde_max(3, 3.0), 2.0, 1e-12);
    EXPECT_THROW(vandermonde_max(2, 1.0), DomainError);
}

TEST(Vandermonde, AscentMaxBoundsRandomSearch) {
    Rng rng(6);
    for (int n : {4, 5}) {
        const double vmax = vandermonde_max(n, 6.0);
        std::uniform_real_distribution<double> box(1.0, 6.0);
        std::vector<double> x(n);
        double best = 0.0;
        for (int i = 0; i < 200000; ++i) {
            for (auto& v : x) v = box(rng);
            best = std::max(best, vandermonde_abs(x));
        }
        EXPECT_LE(best, vmax * (1 + 1e-12)) << n;
        EXPECT_GT(best, 0.5 * vmax) << n;
    }
}

TEST(SampleLambda, SingleModeIsUniform) {
    Rng rng(7);
    std::vector<double> xs;
    for (int i = 0; i < 100000; ++i) {
        const auto l = sample_lambda(1, 5.0, rng);
        xs.push_back(l[0]);
    }
    EXPECT_LT(ks_unweighted(xs, [](double x) { return std::clamp((x - 1.0) / 4.0, 0.0, 1.0); }), 0.01);
}

TEST(SampleLambda, StaysInBoxAndReportsAcceptance) {
    Rng rng(8);
    VandermondeSampler sampler(3, 4.0);
    for (int i = 0; i < 20000; ++i) {
        const LambdaVector l = sampler(rng);
        for (double v : l.values()) {
            EXPECT_GE(v, 1.0);
            EXPECT_LE(v, 4.0);
        }
    }
    EXPECT_GT(sampler.acceptance_rate(), 0.0);
    EXPECT_EQ(sampler.accepted(), 20000u);
    EXPECT_THROW(VandermondeSampler(2, 0.5), DomainError);
}

TEST(SampleLambda, CloseEigenvalueProbabilityMatchesQuadrature) {
    const double cutoff = 3.0, delta = 0.1;
    // brute-force midpoint oracle for P(|l1 - l2| < delta) under |l1 - l2|
    const int grid = 2000;
    const double h = (cutoff - 1.0) / grid;
    double inside = 0.0, total = 0.0;
    for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
            const double d = std::abs((i - j) * h);
            total += d;
            if (d < delta) inside += d;
        }
    }
    const double p = inside / total;

    Rng rng(9);
    const int draws = 100000;
    int hits = 0, above = 0;
    VandermondeSampler sampler(2, cutoff);
    for (int i = 0; i < draws; ++i) {
        const auto l = sampler(rng);
        if (std::abs(l[0] - l[1]) < delta) ++hits;
        if (l[0] > l[1]) ++above;
    }
    const double se = std::sqrt(p * (1 - p) / draws);
    EXPECT_LT(std::abs(static_cast<double>(hits) / draws - p), 3.0 * se);
    EXPECT_LT(std::abs(static_cast<double>(above) / draws - 0.5), 3.0 * std::sqrt(0.25 / draws));
}

TEST(SampleLambda, JointHistogramMatchesVandermondeDensity) {
    const double cutoff = 4.0;
    const int bins = 20, draws = 100000;
    Rng rng(10);
    VandermondeSampler sampler(2, cutoff);
    std::vector<double> counts(bins * bins, 0.0);
    const double w = (cutoff - 1.0) / bins;
    for (int i = 0; i < draws; ++i) {
        const auto l = sampler(rng);
        const int a = std::min(bins - 1, static_cast<int>((l[0] - 1.0) / w));
        const int b = std::min(bins - 1, static_cast<int>((l[1] - 1.0) / w));
        counts[a * bins + b] += 1.0;
    }
    // exact cell masses of |x - y| by fine midpoint sums
    std::vector<double> probs(bins * bins, 0.0);
    double total = 0.0;
    const int sub = 40;
    for (int a = 0; a < bins; ++a) {
        for (int b = 0; b < bins; ++b) {
            double m = 0.0;
            for (int i = 0; i < sub; ++i)
                for (int j = 0; j < sub; ++j) m += std::abs((a - b) * w + (i - j) * w / sub);
            probs[a * bins + b] = m;
            total += m;
        }
    }
    for (auto& p : probs) p /= total;
    const Chi2Result chi = weighted_chi2(counts, counts, probs);
    EXPECT_GT(chi.p_value, 0.01) << chi.chi2 << " / " << chi.dof;
}

TEST(SampleHomogeneous, LambdaMatchesSqueezingConvention) {
    Rng rng(11);
    const auto g = sample_homogeneous_gaussian_unitary(3, 5.0, rng);
    ASSERT_EQ(g.n_modes(), 3);
    EXPECT_GE(g.theta, 0.0);
    EXPECT_LT(g.theta, 2 * std::numbers::pi);
    for (int k = 0; k < 3; ++k) {
        EXPECT_GE(g.s[k], 0.0);
        EXPECT_NEAR(std::cosh(4.0 * g.s[k]), g.lambda()[k], 1e-12);
    }
}

TEST(SampleHomogeneous, SingleModeLambdaUniform) {
    Rng rng(12);
    VandermondeSampler sampler(1, 5.0);
    std::vector<double> xs;
    for (int i = 0; i < 50000; ++i) xs.push_back(sample_homogeneous_gaussian_unitary(sampler, rng).lambda()[0]);
    EXPECT_LT(ks_unweighted(xs, [](double x) { return std::clamp((x - 1.0) / 4.0, 0.0, 1.0); }), 0.01);
}

TEST(SampleHomogeneous, TinyCutoffGivesNearVacuum) {
    Rng rng(13);
    const auto g = sample_homogeneous_gaussian_unitary(2, 1.0 + 1e-8, rng);
    const auto st = apply_to_vacuum(euler_to_symplectic(g));
    const auto sp = williamson_spectrum(st, Bipartition::contiguous(1, 1));
    EXPECT_NEAR(sp.nu[0], 1.0, 1e-6);
}

TEST(EulerToSymplectic, IdentityParameters) {
    EulerGaussianUnitary g;
    g.U = g.U_prime = Eigen::MatrixXcd::Identity(2, 2);
    g.s = {0.0, 0.0};
    g.theta = 1.3;
    EXPECT_LT(max_abs_diff(euler_to_symplectic(g), Eigen::MatrixXd::Identity(4, 4)), 1e-15);
}

TEST(EulerToSymplectic, SingleModeSqueezedVacuum) {
    const double s = 0.3;
    EulerGaussianUnitary g;
    g.U = g.U_prime = Eigen::MatrixXcd::Identity(1, 1);
    g.s = {s};
    const auto st = apply_to_vacuum(euler_to_symplectic(g));
    Eigen::Matrix2d expected;
    expected << std::exp(-4 * s), 0, 0, std::exp(4 * s);
    EXPECT_LT(max_abs_diff(st.covariance(), expected), 1e-14);
    EXPECT_NEAR(symplectic_eigenvalues(st.covariance())[0], 1.0, 1e-12);
    // energy tr/4 = cosh(4s)/2 fixes lambda = cosh 4s
    EXPECT_NEAR(st.covariance().trace() / 4.0, 0.5 * g.lambda()[0], 1e-14);
}

TEST(EulerToSymplectic, RandomDrawsAreSymplectic) {
    Rng rng(14);
    VandermondeSampler sampler(3, 10.0);
    for (int i = 0; i < 100; ++i) {
        const Eigen::MatrixXd S = euler_to_symplectic(sample_homogeneous_gaussian_unitary(sampler, rng));
        EXPECT_LT(symplectic_defect(S), 1e-10);
    }
}

TEST(EulerToSymplectic, RejectsNonUnitary) {
    EulerGaussianUnitary g;
    g.U = 2.0 * Eigen::MatrixXcd::Identity(1, 1);
    g.U_prime = Eigen::MatrixXcd::Identity(1, 1);
    g.s = {0.1};
    EXPECT_THROW(euler_to_symplectic(g), DomainError);
}

TEST(ApplyToVacuum, IdentityAndTmsvAndErrors) {
    EXPECT_EQ(apply_to_vacuum(Eigen::MatrixXd::Identity(4, 4)).covariance(), Eigen::MatrixXd(Eigen::MatrixXd::Identity(4, 4)));
    EXPECT_LT(max_abs_diff(apply_to_vacuum(tmsv_symplectic(1.1)).covariance(), tmsv_state(1.1).covariance()), 1e-10);
    EXPECT_THROW(apply_to_vacuum(3.0 * Eigen::MatrixXd::Identity(2, 2)), DomainError);
    EXPECT_THROW(apply_to_vacuum(Eigen::MatrixXd::Identity(3, 3)), DomainError);
}

TEST(PassiveSymplectic, IsOrthogonalSymplectic) {
    Rng rng(15);
    const Eigen::MatrixXd O = passive_symplectic(sample_haar_unitary(3, rng));
    EXPECT_LT(max_abs_diff(O * O.transpose(), Eigen::MatrixXd::Identity(6, 6)), 1e-12);
    EXPECT_TRUE(is_symplectic(O));
}

TEST(LambdaVector, RejectsEntriesBelowOne) {
    EXPECT_THROW(LambdaVector({1.0, 0.9}), DomainError);
    EXPECT_NO_THROW(LambdaVector({1.0, 7.0}));
    EXPECT_THROW(squeeze_from_lambda(0.5), DomainError);
    EXPECT_NEAR(lambda_from_squeeze(squeeze_from_lambda(3.7)), 3.7, 1e-12);
}

}  // namespace
}  // namespace gaussmeasure
