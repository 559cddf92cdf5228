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

// Monte Carlo samplers for the analytic densities and the shell-conditioning
// reconstruction of the energy-constrained eigenvalue law.

#ifndef GAUSSMEASURE_SAMPLER_H
#define GAUSSMEASURE_SAMPLER_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gaussmeasure/haar.h"
#include "gaussmeasure/invariant_measure.h"

namespace gaussmeasure {

std::vector<std::array<double, 2>> sample_density_2p2(const EnergyConstraint& constraint, std::uint64_t count,
                                                      Rng& rng);

/// Samples on the simplex {nu_j >= 1, sum nu = 2E}, m = n/2 coordinates, with
/// density prod_{h<k} (nu_h - nu_k)^2.
std::vector<std::vector<double>> sample_submanifold_energy(int n, double E, std::uint64_t count, Rng& rng);

struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t hits = 0;
    std::uint64_t samples = 0;
};

/// (1/2eps) P(|mean_energy(U, lambda, nu) - E| <= eps) with U Haar on U(m) and
/// lambda from the Vandermonde law on [1, cutoff]^m, m = n/2 = nu.size().
/// Throws DomainError unless cutoff >= 2E / min(nu).
Estimate g_constraint_mc(std::span<const double> nu, double E, int n, std::uint64_t count, double shell_width,
                         double cutoff, Rng& rng);

enum class ShellEstimator {
    /// Per subsystem, all but one lambda are drawn and the last one is drawn
    /// inside the slab that puts the energy in the shell; the slab length is
    /// carried as a weight. Same target as hit_or_miss, far fewer wasted draws.
    conditional,
    /// Literal rejection: lambda from the Vandermonde sampler, keep the sample
    /// when the energy lands in the shell.
    hit_or_miss,
};

std::string to_string(ShellEstimator estimator);
ShellEstimator shell_estimator_from_string(const std::string& name);

struct VerifyOptions {
    int n = 2;
    EnergyConstraint constraint;
    std::uint64_t count = 100000;
    double cutoff = 10.0;
    std::uint64_t seed = 0;
    int partitions = 1;
    ShellEstimator estimator = ShellEstimator::conditional;
    /// Draw nu directly from the closed-form density with unit weights. Checks
    /// the histogram and test plumbing, not the physics.
    bool self_test = false;
    int bins_per_axis = 10;
    /// Repeat with the shell halved and attach that comparison to the report.
    bool halving_check = false;
    bool keep_samples = false;
};

struct Comparison {
    std::string target;
    std::optional<double> ks_statistic;
    double chi2 = 0.0;
    int dof = 0;
    double p_value = 1.0;
};

struct ReportMetadata {
    std::uint64_t seed = 0;
    std::uint64_t sample_count = 0;
    std::uint64_t proposals = 0;
    double cutoff = 0.0;
    double shell_width = 0.0;
    double acceptance_rate = 0.0;
    double effective_sample_size = 0.0;
    int partitions = 1;
    std::string estimator;
    bool self_test = false;
};

/// Accepted samples, flattened: nu has dimension() entries per sample.
struct SampleSet {
    int dimension = 0;
    std::vector<double> nu;
    std::vector<double> weight;
    std::vector<double> E_A;
    std::vector<double> E_B;

    std::size_t size() const { return weight.size(); }
};

struct HistogramReport {
    int n = 0;
    EnergyConstraint constraint;
    /// One edge vector per axis; counts and normalized_density are row-major
    /// with the last axis fastest.
    std::vector<std::vector<double>> bin_edges;
    std::vector<std::uint64_t> counts;
    std::vector<double> normalized_density;
    std::optional<Comparison> comparison;
    std::optional<Comparison> half_shell_comparison;
    ReportMetadata metadata;
    SampleSet samples;
};

HistogramReport verify_constrained_density(const VerifyOptions& options);

/// Single-stream form: the seed for the run is drawn from rng.
HistogramReport verify_constrained_density(int n, const EnergyConstraint& constraint, std::uint64_t count,
                                           double cutoff, Rng& rng);

}  // namespace gaussmeasure

#endif  // GAUSSMEASURE_SAMPLER_H
