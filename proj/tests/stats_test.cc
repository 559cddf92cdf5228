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

#include "gaussmeasure/stats.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gaussmeasure/errors.h"

namespace gaussmeasure {
namespace {

TEST(Ks, HandComputedStatistic) {
    const std::vector<double> xs{0.1, 0.4, 0.9};
    // steps at 1/3, 2/3, 1 against F(x) = x: largest gap is 0.4 - 1/3 or 2/3 - 0.4
    EXPECT_NEAR(ks_statistic(xs, [](double x) { return x; }), 2.0 / 3.0 - 0.4, 1e-15);
}

TEST(Ks, WeightsActLikeRepetition) {
    const std::vector<double> xs{0.2, 0.7}, w{2.0, 1.0};
    const std::vector<double> rep{0.2, 0.2, 0.7};
    auto cdf = [](double x) { return x; };
    EXPECT_NEAR(ks_statistic(xs, w, cdf), ks_statistic(rep, cdf), 1e-15);
}

TEST(Ks, UniformSampleIsSmallAndPValueReasonable) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> xs(20000);
    for (auto& x : xs) x = u(rng);
    const double d = ks_statistic(xs, [](double x) { return x; });
    EXPECT_LT(d, 0.02);
    EXPECT_GT(ks_p_value(d, xs.size()), 0.001);
    EXPECT_LT(ks_p_value(0.1, 20000), 1e-10);
}

TEST(Ks, Errors) {
    const std::vector<double> empty;
    EXPECT_THROW(ks_statistic(empty, [](double x) { return x; }), DomainError);
    const std::vector<double> xs{0.5}, w{1.0, 2.0};
    EXPECT_THROW(ks_statistic(xs, w, [](double x) { return x; }), DomainError);
}

TEST(Chi2, PValueAgainstKnownQuantiles) {
    // 95th percentile of chi^2 with 10 dof is 18.307
    EXPECT_NEAR(chi2_p_value(18.307, 10), 0.05, 1e-4);
    EXPECT_NEAR(chi2_p_value(2.0, 2), std::exp(-1.0), 1e-14);
}

TEST(Chi2, UnitWeightsReduceToPearson) {
    const std::vector<double> counts{110, 90, 100, 100};
    const std::vector<double> probs{0.25, 0.25, 0.25, 0.25};
    const Chi2Result r = weighted_chi2(counts, counts, probs, 1.0);
    // (10^2 + 10^2) / 100
    EXPECT_NEAR(r.chi2, 2.0, 1e-12);
    EXPECT_EQ(r.dof, 3);
}

TEST(Chi2, ConstantWeightScaleDropsOut) {
    const std::vector<double> counts{110, 90, 100, 100};
    std::vector<double> W, V;
    for (double c : counts) {
        W.push_back(3.0 * c);
        V.push_back(9.0 * c);
    }
    const std::vector<double> probs{0.25, 0.25, 0.25, 0.25};
    EXPECT_NEAR(weighted_chi2(W, V, probs, 1.0).chi2, 2.0, 1e-12);
}

TEST(Chi2, PoolsSparseBinsAndFlagsMassOutsideSupport) {
    const std::vector<double> counts{500, 480, 3, 2};
    const std::vector<double> probs{0.5, 0.49, 0.006, 0.004};
    const Chi2Result r = weighted_chi2(counts, counts, probs, 20.0);
    EXPECT_EQ(r.bins_used, 2);
    const std::vector<double> bad{500, 480, 20};
    const std::vector<double> bad_p{0.5, 0.5, 0.0};
    EXPECT_EQ(weighted_chi2(bad, bad, bad_p, 20.0).p_value, 0.0);
}

TEST(Chi2, WeightedHistogramOfCorrectLawIsAccepted) {
    // draw x uniform, weight by 2x: target density 2x on [0, 1]
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const int bins = 10;
    std::vector<double> W(bins, 0.0), V(bins, 0.0), p(bins);
    for (int i = 0; i < 100000; ++i) {
        const double x = u(rng), w = 2 * x;
        const int b = std::min(bins - 1, static_cast<int>(x * bins));
        W[b] += w;
        V[b] += w * w;
    }
    for (int b = 0; b < bins; ++b) p[b] = std::pow((b + 1.0) / bins, 2) - std::pow(static_cast<double>(b) / bins, 2);
    EXPECT_GT(weighted_chi2(W, V, p).p_value, 0.001);
    // and a wrong target is rejected
    std::vector<double> flat(bins, 1.0 / bins);
    EXPECT_LT(weighted_chi2(W, V, flat).p_value, 1e-10);
}

TEST(EffectiveSampleSize, Kish) {
    const std::vector<double> w{1.0, 1.0, 2.0};
    EXPECT_NEAR(effective_sample_size(w), 16.0 / 6.0, 1e-15);
}

}  // namespace
}  // namespace gaussmeasure
