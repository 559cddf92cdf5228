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

#include "gaussmeasure/sampler.h"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <exception>
#include <numeric>
#include <thread>

#include "gaussmeasure/errors.h"
#include "gaussmeasure/quadrature.h"
#include "gaussmeasure/stats.h"

namespace gaussmeasure {
namespace {

constexpr double kEnvelopeSafety = 1.1;
constexpr int kDensityGrid = 200;

Rng partition_rng(std::uint64_t seed, int partition) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(partition)};
    return Rng(seq);
}

// Largest value a single eigenvalue can take under an energy bound E on m modes.
double nu_upper(const EnergyConstraint& c, int m) { return 2.0 * (c.min_energy() + c.shell_width) - (m - 1); }

bool within_shell(double energy, double target, double eps) {
    return std::abs(energy - target) <= eps * (1.0 + 1e-9) + 1e-12;
}

struct PartitionResult {
    SampleSet samples;
    std::uint64_t proposals = 0;
};

// Weight of one subsystem's (lambda, U) draw for the conditional estimator;
// zero when no lambda in the box reaches the shell.
double conditional_side(std::span<const double> nu, double E, double eps, double cutoff, Rng& rng, double& energy) {
    const int m = static_cast<int>(nu.size());
    const double lam_eff = std::min(cutoff, 2.0 * (E + eps) - (m - 1));
    if (!(lam_eff > 1.0)) return 0.0;
    const Eigen::MatrixXcd U = sample_haar_unitary(m, rng);
    std::vector<double> q(m, 0.0);
    for (int h = 0; h < m; ++h) {
        for (int k = 0; k < m; ++k) q[h] += std::norm(U(h, k)) * nu[k];
    }
    std::uniform_real_distribution<double> box(1.0, lam_eff);
    std::vector<double> lambda(m);
    double rest = 0.0;
    for (int h = 1; h < m; ++h) {
        lambda[h] = box(rng);
        rest += lambda[h] * q[h];
    }
    const double lo = std::max(1.0, (2.0 * (E - eps) - rest) / q[0]);
    const double hi = std::min(lam_eff, (2.0 * (E + eps) - rest) / q[0]);
    if (!(hi > lo)) return 0.0;
    lambda[0] = std::uniform_real_distribution<double>(lo, hi)(rng);
    energy = mean_energy(U, LambdaVector(lambda), nu);
    if (!within_shell(energy, E, eps)) {
        throw NumericalError("conditional shell draw landed outside the shell (energy " + std::to_string(energy) +
                             ", target " + std::to_string(E) + ")");
    }
    return (hi - lo) * std::pow(lam_eff - 1.0, m - 1) * vandermonde_abs(lambda);
}

PartitionResult run_partition(const VerifyOptions& opt, std::uint64_t count, Rng rng) {
    const int m = opt.n / 2;
    const auto& c = opt.constraint;
    const double eps = c.shell_width;
    const double top = nu_upper(c, m);
    PartitionResult out;
    out.samples.dimension = m;
    auto push = [&out](std::span<const double> nu, double w, double ea, double eb) {
        out.samples.nu.insert(out.samples.nu.end(), nu.begin(), nu.end());
        out.samples.weight.push_back(w);
        out.samples.E_A.push_back(ea);
        out.samples.E_B.push_back(eb);
    };

    if (opt.self_test) {
        if (m == 1) {
            std::uniform_real_distribution<double> uni(1.0, c.min_energy());
            for (std::uint64_t i = 0; i < count; ++i) {
                const double v = uni(rng);
                push(std::span<const double>(&v, 1), 1.0, c.E_A, c.E_B);
            }
        } else {
            for (const auto& p : sample_density_2p2(c, count, rng)) push(p, 1.0, c.E_A, c.E_B);
        }
        out.proposals = count;
        return out;
    }

    std::uniform_real_distribution<double> box(1.0, top);
    std::vector<double> nu(m);
    std::optional<VandermondeSampler> lambda_sampler;
    if (opt.estimator == ShellEstimator::hit_or_miss) lambda_sampler.emplace(m, opt.cutoff);
    for (std::uint64_t i = 0; i < count; ++i) {
        for (auto& v : nu) v = box(rng);
        ++out.proposals;
        const double w_nu = std::exp(log_density_unconstrained(nu, m, m));
        if (w_nu == 0.0) continue;
        double ea = 0.0, eb = 0.0;
        if (opt.estimator == ShellEstimator::conditional) {
            const double wa = conditional_side(nu, c.E_A, eps, opt.cutoff, rng, ea);
            if (wa == 0.0) continue;
            const double wb = conditional_side(nu, c.E_B, eps, opt.cutoff, rng, eb);
            if (wb == 0.0) continue;
            push(nu, w_nu * wa * wb, ea, eb);
        } else {
            const auto ga = sample_haar_unitary(m, rng);
            ea = mean_energy(ga, (*lambda_sampler)(rng), nu);
            if (!within_shell(ea, c.E_A, eps)) continue;
            const auto gb = sample_haar_unitary(m, rng);
            eb = mean_energy(gb, (*lambda_sampler)(rng), nu);
            if (!within_shell(eb, c.E_B, eps)) continue;
            push(nu, w_nu, ea, eb);
        }
    }
    return out;
}

SampleSet run_all(const VerifyOptions& opt, std::uint64_t& proposals) {
    const int parts = std::max(1, opt.partitions);
    std::vector<PartitionResult> results(parts);
    std::vector<std::exception_ptr> errors(parts);
    auto work = [&](int p) {
        try {
            const std::uint64_t share = opt.count / parts + (static_cast<std::uint64_t>(p) < opt.count % parts ? 1 : 0);
            results[p] = run_partition(opt, share, partition_rng(opt.seed, p));
        } catch (...) {
            errors[p] = std::current_exception();
        }
    };
    if (parts == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (int p = 0; p < parts; ++p) threads.emplace_back(work, p);
        for (auto& t : threads) t.join();
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    SampleSet merged;
    merged.dimension = opt.n / 2;
    proposals = 0;
    for (auto& r : results) {
        proposals += r.proposals;
        auto append = [](std::vector<double>& to, const std::vector<double>& from) {
            to.insert(to.end(), from.begin(), from.end());
        };
        append(merged.nu, r.samples.nu);
        append(merged.weight, r.samples.weight);
        append(merged.E_A, r.samples.E_A);
        append(merged.E_B, r.samples.E_B);
    }
    return merged;
}

std::vector<double> bin_probabilities_1p1(const std::vector<double>& edges, const EnergyConstraint& c) {
    const double top = c.min_energy();
    std::vector<double> p(edges.size() - 1);
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const double overlap = std::max(0.0, std::min(edges[i + 1], top) - std::max(edges[i], 1.0));
        p[i] = overlap / (top - 1.0);
    }
    return p;
}

// The 2+2 density is a degree-6 polynomial in each variable on its triangle,
// so fixed-order Gauss-Legendre on polynomial pieces is exact.
template <class F>
double gauss_legendre(F&& f, double a, double b) {
    if (!(b > a)) return 0.0;
    return boost::math::quadrature::gauss<double, 10>::integrate(f, a, b);
}

// Mass of density_2p2 on [x0, x1] x [y0, y1]; the x range is split where the
// line nu1 + nu2 = L crosses y = y1 so each piece is polynomial.
double cell_mass_2p2(double x0, double x1, double y0, double y1, const EnergyConstraint& c, double z) {
    const double L = 2.0 * c.min_energy();
    auto inner = [&](double x) {
        const double top = std::min(y1, L - x);
        return gauss_legendre([&](double y) { return density_2p2_unnormalized(x, y, c); }, y0, top);
    };
    const double kink = std::clamp(L - y1, x0, x1);
    const double end = std::clamp(L - y0, x0, x1);
    return (gauss_legendre(inner, x0, kink) + gauss_legendre(inner, kink, end)) / z;
}

std::vector<double> bin_probabilities_2p2(const std::vector<double>& edges, const EnergyConstraint& c) {
    const double z = normalization_2p2(c);
    const std::size_t k = edges.size() - 1;
    std::vector<double> p(k * k, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) p[i * k + j] = cell_mass_2p2(edges[i], edges[i + 1], edges[j], edges[j + 1], c, z);
    }
    return p;
}

// CDF of the nu_1 marginal of the 2+2 law.
std::function<double(double)> marginal_cdf_2p2(const EnergyConstraint& c) {
    const double L = 2.0 * c.min_energy();
    const double z = normalization_2p2(c);
    return [L, z, c](double x) {
        const double hi = std::clamp(x, 1.0, L - 1.0);
        return std::clamp(cell_mass_2p2(1.0, hi, 1.0, L - 1.0, c, z), 0.0, 1.0);
    };
}

struct Histogram {
    std::vector<std::vector<double>> edges;
    std::vector<std::uint64_t> counts;
    std::vector<double> weight_sums;
    std::vector<double> weight_sq_sums;
};

Histogram fill_histogram(const SampleSet& s, int m, double top, int bins) {
    Histogram h;
    std::vector<double> edges(bins + 1);
    for (int i = 0; i <= bins; ++i) edges[i] = 1.0 + (top - 1.0) * i / bins;
    h.edges.assign(m, edges);
    std::size_t cells = 1;
    for (int a = 0; a < m; ++a) cells *= bins;
    h.counts.assign(cells, 0);
    h.weight_sums.assign(cells, 0.0);
    h.weight_sq_sums.assign(cells, 0.0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::size_t cell = 0;
        for (int a = 0; a < m; ++a) {
            const double v = s.nu[i * m + a];
            int b = static_cast<int>((v - 1.0) / (top - 1.0) * bins);
            b = std::clamp(b, 0, bins - 1);
            cell = cell * bins + b;
        }
        const double w = s.weight[i];
        ++h.counts[cell];
        h.weight_sums[cell] += w;
        h.weight_sq_sums[cell] += w * w;
    }
    return h;
}

std::optional<Comparison> compare(const SampleSet& s, const Histogram& h, int m, const EnergyConstraint& c) {
    if (m > 2 || !(c.min_energy() > 1.0)) return std::nullopt;
    Comparison cmp;
    std::vector<double> probs;
    std::vector<double> axis0(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) axis0[i] = s.nu[i * m];
    if (m == 1) {
        cmp.target = "1p1";
        const double top = c.min_energy();
        cmp.ks_statistic = ks_statistic(axis0, s.weight, [top](double x) { return std::clamp((x - 1.0) / (top - 1.0), 0.0, 1.0); });
        probs = bin_probabilities_1p1(h.edges[0], c);
    } else {
        cmp.target = "2p2";
        cmp.ks_statistic = ks_statistic(axis0, s.weight, marginal_cdf_2p2(c));
        probs = bin_probabilities_2p2(h.edges[0], c);
    }
    Chi2Result chi;
    try {
        chi = weighted_chi2(h.weight_sums, h.weight_sq_sums, probs);
    } catch (const NumericalError& e) {
        throw NumericalError(std::string(e.what()) + " (" + std::to_string(s.size()) +
                             " accepted samples, effective size " + std::to_string(effective_sample_size(s.weight)) + ")");
    }
    cmp.chi2 = chi.chi2;
    cmp.dof = chi.dof;
    cmp.p_value = chi.p_value;
    return cmp;
}

void validate(const VerifyOptions& opt) {
    if (opt.n < 2 || opt.n % 2 != 0) throw DomainError("verify: n must be even and >= 2");
    opt.constraint.validate(opt.n / 2, opt.n / 2);
    if (opt.count == 0) throw DomainError("verify: count must be positive");
    if (!(opt.cutoff > 1.0)) throw DomainError("verify: cutoff must exceed 1");
    if (opt.bins_per_axis < 2) throw DomainError("verify: need at least two bins per axis");
    if (opt.partitions < 1) throw DomainError("verify: partitions must be positive");
    if (opt.self_test && opt.n > 4) throw DomainError("verify: self-test needs a closed form (n = 2 or 4)");
    if (opt.self_test && !(opt.constraint.min_energy() > 1.0)) {
        throw DomainError("verify: self-test needs min(E_A, E_B) > 1");
    }
}

}  // namespace

std::string to_string(ShellEstimator estimator) {
    return estimator == ShellEstimator::conditional ? "conditional" : "hit-or-miss";
}

ShellEstimator shell_estimator_from_string(const std::string& name) {
    if (name == "conditional") return ShellEstimator::conditional;
    if (name == "hit-or-miss" || name == "hit_or_miss") return ShellEstimator::hit_or_miss;
    throw DomainError("unknown estimator '" + name + "' (expected conditional or hit-or-miss)");
}

std::vector<std::array<double, 2>> sample_density_2p2(const EnergyConstraint& constraint, std::uint64_t count,
                                                      Rng& rng) {
    const double L = 2.0 * constraint.min_energy();
    if (!(L > 2.0)) throw DomainError("sample_density_2p2: support is empty, need min(E_A, E_B) > 1");
    const double hi = L - 1.0;
    double peak = 0.0;
    for (int i = 0; i <= kDensityGrid; ++i) {
        for (int j = 0; j <= kDensityGrid; ++j) {
            const double x = 1.0 + (hi - 1.0) * i / kDensityGrid;
            const double y = 1.0 + (hi - 1.0) * j / kDensityGrid;
            peak = std::max(peak, density_2p2_unnormalized(x, y, constraint));
        }
    }
    const double envelope = kEnvelopeSafety * peak;
    std::uniform_real_distribution<double> box(1.0, hi);
    std::uniform_real_distribution<double> height(0.0, envelope);
    std::vector<std::array<double, 2>> out;
    out.reserve(count);
    while (out.size() < count) {
        const double x = box(rng), y = box(rng);
        const double f = density_2p2_unnormalized(x, y, constraint);
        if (f > envelope) throw EnvelopeViolation("sample_density_2p2: density exceeds envelope");
        if (height(rng) < f) out.push_back({x, y});
    }
    return out;
}

std::vector<std::vector<double>> sample_submanifold_energy(int n, double E, std::uint64_t count, Rng& rng) {
    if (n < 2 || n % 2 != 0) throw DomainError("sample_submanifold_energy: n must be even and positive");
    const int m = n / 2;
    std::vector<std::vector<double>> out;
    out.reserve(count);
    if (m == 1) {
        if (!(2.0 * E >= 1.0)) throw DomainError("sample_submanifold_energy: empty simplex, need 2E >= 1");
        out.assign(count, std::vector<double>{2.0 * E});
        return out;
    }
    const double T = 2.0 * E - m;
    if (!(T > 0.0)) throw DomainError("sample_submanifold_energy: empty simplex, need 2E > n/2");
    const double bound = std::pow(T, m * (m - 1));
    std::uniform_real_distribution<double> uni(0.0, T);
    std::uniform_real_distribution<double> height(0.0, bound);
    std::vector<double> cuts(m - 1), nu(m);
    while (out.size() < count) {
        for (auto& v : cuts) v = uni(rng);
        std::sort(cuts.begin(), cuts.end());
        double prev = 0.0;
        for (int k = 0; k < m - 1; ++k) {
            nu[k] = 1.0 + (cuts[k] - prev);
            prev = cuts[k];
        }
        nu[m - 1] = 1.0 + (T - prev);
        const double v = vandermonde_abs(nu);
        if (height(rng) < v * v) out.push_back(nu);
    }
    return out;
}

Estimate g_constraint_mc(std::span<const double> nu, double E, int n, std::uint64_t count, double shell_width,
                         double cutoff, Rng& rng) {
    const int m = static_cast<int>(nu.size());
    if (m < 1 || n != 2 * m) throw DomainError("g_constraint_mc: need n = 2 * nu.size()");
    if (!(shell_width > 0.0)) throw DomainError("g_constraint_mc: shell width must be positive");
    if (count == 0) throw DomainError("g_constraint_mc: count must be positive");
    for (double v : nu) {
        if (!(v >= 1.0)) throw DomainError("g_constraint_mc: symplectic eigenvalue below 1");
    }
    const double nu_min = *std::min_element(nu.begin(), nu.end());
    if (cutoff < 2.0 * E / nu_min) {
        throw DomainError("g_constraint_mc: shell not interior to the cutoff box, need cutoff >= " +
                          std::to_string(2.0 * E / nu_min));
    }
    VandermondeSampler lambda_sampler(m, cutoff);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        const Eigen::MatrixXcd U = sample_haar_unitary(m, rng);
        if (within_shell(mean_energy(U, lambda_sampler(rng), nu), E, shell_width)) ++hits;
    }
    const double p = static_cast<double>(hits) / static_cast<double>(count);
    Estimate est;
    est.hits = hits;
    est.samples = count;
    est.value = p / (2.0 * shell_width);
    est.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(count)) / (2.0 * shell_width);
    return est;
}

HistogramReport verify_constrained_density(const VerifyOptions& options) {
    validate(options);
    const int m = options.n / 2;
    const double top = nu_upper(options.constraint, m);
    std::uint64_t proposals = 0;
    SampleSet samples = run_all(options, proposals);
    if (samples.size() == 0) {
        throw NumericalError("verify: no accepted samples out of " + std::to_string(proposals) +
                             " proposals (shell too thin or cutoff too small)");
    }
    const Histogram h = fill_histogram(samples, m, top, options.bins_per_axis);
    const double total = std::accumulate(h.weight_sums.begin(), h.weight_sums.end(), 0.0);
    if (!(total > 0.0)) throw NumericalError("verify: accepted samples carry zero total weight");

    HistogramReport report;
    report.n = options.n;
    report.constraint = options.constraint;
    report.bin_edges = h.edges;
    report.counts = h.counts;
    double cell_volume = 1.0;
    for (int a = 0; a < m; ++a) cell_volume *= (top - 1.0) / options.bins_per_axis;
    report.normalized_density.resize(h.weight_sums.size());
    for (std::size_t i = 0; i < h.weight_sums.size(); ++i) {
        report.normalized_density[i] = h.weight_sums[i] / (total * cell_volume);
    }
    report.comparison = compare(samples, h, m, options.constraint);

    auto& md = report.metadata;
    md.seed = options.seed;
    md.sample_count = samples.size();
    md.proposals = proposals;
    md.cutoff = options.cutoff;
    md.shell_width = options.constraint.shell_width;
    md.acceptance_rate = static_cast<double>(samples.size()) / static_cast<double>(proposals);
    md.effective_sample_size = effective_sample_size(samples.weight);
    md.partitions = options.partitions;
    md.estimator = options.self_test ? "self-test" : to_string(options.estimator);
    md.self_test = options.self_test;

    if (options.halving_check && !options.self_test) {
        VerifyOptions half = options;
        half.constraint.shell_width *= 0.5;
        half.halving_check = false;
        half.keep_samples = false;
        const HistogramReport r = verify_constrained_density(half);
        report.half_shell_comparison = r.comparison;
    }
    if (options.keep_samples) report.samples = std::move(samples);
    return report;
}

HistogramReport verify_constrained_density(int n, const EnergyConstraint& constraint, std::uint64_t count,
                                           double cutoff, Rng& rng) {
    VerifyOptions opt;
    opt.n = n;
    opt.constraint = constraint;
    opt.count = count;
    opt.cutoff = cutoff;
    opt.seed = rng();
    return verify_constrained_density(opt);
}

}  // namespace gaussmeasure
