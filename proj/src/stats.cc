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

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numeric>

#include "gaussmeasure/errors.h"

namespace gaussmeasure {

double ks_statistic(std::span<const double> samples, std::span<const double> weights,
                    const std::function<double(double)>& cdf) {
    if (samples.empty()) throw DomainError("ks_statistic: no samples");
    if (!weights.empty() && weights.size() != samples.size()) throw DomainError("ks_statistic: weight count mismatch");
    std::vector<std::size_t> order(samples.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return samples[a] < samples[b]; });
    const double total = weights.empty() ? static_cast<double>(samples.size())
                                         : std::accumulate(weights.begin(), weights.end(), 0.0);
    if (!(total > 0.0)) throw DomainError("ks_statistic: total weight must be positive");
    double below = 0.0;
    double d = 0.0;
    for (std::size_t i = 0; i < order.size();) {
        // ties share one step
        const double x = samples[order[i]];
        double step = 0.0;
        while (i < order.size() && samples[order[i]] == x) {
            step += weights.empty() ? 1.0 : weights[order[i]];
            ++i;
        }
        const double f = cdf(x);
        d = std::max({d, std::abs(f - below / total), std::abs((below + step) / total - f)});
        below += step;
    }
    return d;
}

double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf) {
    return ks_statistic(samples, {}, cdf);
}

double ks_p_value(double statistic, double effective_n) {
    const double sqrt_n = std::sqrt(effective_n);
    const double lambda = (sqrt_n + 0.12 + 0.11 / sqrt_n) * statistic;
    if (lambda < 1e-3) return 1.0;
    double sum = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += (k % 2 ? 2.0 : -2.0) * term;
        if (term < 1e-16) break;
    }
    return std::clamp(sum, 0.0, 1.0);
}

double chi2_p_value(double chi2, int dof) {
    if (dof < 1) return 1.0;
    if (!(chi2 >= 0.0)) return 0.0;
    return boost::math::gamma_q(0.5 * dof, 0.5 * chi2);
}

double effective_sample_size(std::span<const double> weights) {
    double s = 0.0, s2 = 0.0;
    for (double w : weights) {
        s += w;
        s2 += w * w;
    }
    return s2 > 0.0 ? s * s / s2 : 0.0;
}

Chi2Result weighted_chi2(std::span<const double> weight_sums, std::span<const double> weight_sq_sums,
                         std::span<const double> probabilities, double min_expected) {
    const std::size_t k = weight_sums.size();
    if (weight_sq_sums.size() != k || probabilities.size() != k) throw DomainError("weighted_chi2: size mismatch");
    const double total = std::accumulate(weight_sums.begin(), weight_sums.end(), 0.0);
    const double total_sq = std::accumulate(weight_sq_sums.begin(), weight_sq_sums.end(), 0.0);
    if (!(total > 0.0) || !(total_sq > 0.0)) throw NumericalError("weighted_chi2: empty histogram");
    const double ess = total * total / total_sq;

    std::vector<double> W, V, P;
    double pool_w = 0.0, pool_v = 0.0, pool_p = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        if (ess * probabilities[i] >= min_expected) {
            W.push_back(weight_sums[i]);
            V.push_back(weight_sq_sums[i]);
            P.push_back(probabilities[i]);
        } else {
            pool_w += weight_sums[i];
            pool_v += weight_sq_sums[i];
            pool_p += probabilities[i];
        }
    }
    if (ess * pool_p >= min_expected) {
        W.push_back(pool_w);
        V.push_back(pool_v);
        P.push_back(pool_p);
    } else if (pool_w > 0.0 && pool_p <= 0.0) {
        // weight where the target has no mass at all
        return {std::numeric_limits<double>::infinity(), static_cast<int>(W.size()), 0.0, static_cast<int>(W.size())};
    }
    if (W.size() < 2) throw NumericalError("weighted_chi2: fewer than two usable bins");

    // Pearson form: expected weight over the used bins, scaled by each bin's
    // own weight ratio sum(w^2)/sum(w). With unit weights this is Pearson's
    // statistic; dividing by the observed variance instead runs hot at
    // moderate counts.
    const double used_w = std::accumulate(W.begin(), W.end(), 0.0);
    const double used_p = std::accumulate(P.begin(), P.end(), 0.0);
    double chi2 = 0.0;
    for (std::size_t i = 0; i < W.size(); ++i) {
        const double expected = used_w * P[i] / used_p;
        const double ratio = W[i] > 0.0 ? V[i] / W[i] : total_sq / total;
        const double r = W[i] - expected;
        chi2 += r * r / (expected * ratio);
    }
    Chi2Result out;
    out.chi2 = chi2;
    out.bins_used = static_cast<int>(W.size());
    out.dof = out.bins_used - 1;
    out.p_value = chi2_p_value(chi2, out.dof);
    return out;
}

}  // namespace gaussmeasure
