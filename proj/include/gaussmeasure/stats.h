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

// Goodness-of-fit statistics for (possibly weighted) Monte Carlo samples.

#ifndef GAUSSMEASURE_STATS_H
#define GAUSSMEASURE_STATS_H

#include <functional>
#include <span>
#include <vector>

namespace gaussmeasure {

/// sup_x |F_n(x) - F(x)| for the weighted empirical CDF. Empty weights means
/// unit weights.
double ks_statistic(std::span<const double> samples, std::span<const double> weights,
                    const std::function<double(double)>& cdf);
double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf);

/// Asymptotic Kolmogorov tail probability P(sqrt(n) D > sqrt(n) d).
double ks_p_value(double statistic, double effective_n);

/// Upper tail of the chi-square distribution.
double chi2_p_value(double chi2, int dof);

struct Chi2Result {
    double chi2 = 0.0;
    int dof = 0;
    double p_value = 1.0;
    int bins_used = 0;
};

/// Chi-square test of a weighted histogram against bin probabilities:
///   X^2 = sum_i (W_i - W p_i)^2 / (W p_i r_i),  r_i = V_i / W_i,
/// where W_i is the weight sum and V_i the sum of squared weights in bin i,
/// and W the total weight. Unit weights give Pearson's statistic. Bins whose
/// expected effective count ESS * p_i falls below min_expected are pooled into
/// one bin; dof = bins - 1.
Chi2Result weighted_chi2(std::span<const double> weight_sums, std::span<const double> weight_sq_sums,
                         std::span<const double> probabilities, double min_expected = 20.0);

/// Kish effective sample size (sum w)^2 / sum w^2.
double effective_sample_size(std::span<const double> weights);

}  // namespace gaussmeasure

#endif  // GAUSSMEASURE_STATS_H
