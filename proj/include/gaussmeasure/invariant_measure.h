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

// Closed-form densities of symplectic eigenvalues and the subsystem mean
// energies that condition them.

#ifndef GAUSSMEASURE_INVARIANT_MEASURE_H
#define GAUSSMEASURE_INVARIANT_MEASURE_H

#include <Eigen/Dense>
#include <optional>
#include <span>
#include <string>

#include "gaussmeasure/haar.h"
#include "gaussmeasure/symplectic.h"

namespace gaussmeasure {

/// Target mean energies (units hbar*omega = 1) and the Monte Carlo shell
/// half-width used when the energy delta is replaced by |E - E_target| <= eps.
struct EnergyConstraint {
    double E_A = 0.0;
    double E_B = 0.0;
    double shell_width = 0.05;

    double min_energy() const { return E_A < E_B ? E_A : E_B; }
    double max_energy() const { return E_A < E_B ? E_B : E_A; }
    /// Requires E_A >= n_A/2, E_B >= n_B/2 and shell_width > 0.
    void validate(int n_A, int n_B) const;
};

enum class DensityKind { unconstrained, constrained_1p1, constrained_2p2, submanifold, submanifold_energy };

std::string to_string(DensityKind kind);
DensityKind density_kind_from_string(const std::string& name);

struct DensitySpec {
    DensityKind kind = DensityKind::unconstrained;
    int n_A = 1;
    int n_B = 1;
    std::optional<EnergyConstraint> constraint;

    /// Dimension checks per kind (1p1 needs n_A = n_B = 1, 2p2 needs 2+2, the
    /// submanifold energy law needs n_A = n_B) and presence of a constraint.
    void validate() const;
    /// Number of symplectic eigenvalues the density takes.
    int dimension() const { return n_A; }
};

/// Density value at nu: normalized for the constrained and fixed-energy kinds,
/// exp(log density) (unnormalized) for the two unconstrained kinds.
double evaluate(const DensitySpec& spec, std::span<const double> nu);

/// log[ prod_{h>k} (nu_h^2 - nu_k^2)^2 prod_j nu_j^2 (nu_j^2 - 1)^(n_B - n_A) ];
/// -infinity on the zero set.
double log_density_unconstrained(std::span<const double> nu, int n_A, int n_B);

/// log[ prod_{h<k} (nu_h - nu_k)^2 prod_j (nu_j - 1)^(n_B - n_A) ]; -infinity on zeros.
double log_density_submanifold(std::span<const double> nu, int n_A, int n_B);

/// (1/2) sum_{h,k} |U_hk|^2 lambda_h nu_k. For a state built as
/// (S_A (+) S_B) applied to a canonical state, with S_X from Euler parameters
/// (U, s, U'), the unitary entering here is U', the factor applied first.
double mean_energy(const Eigen::MatrixXcd& U, const LambdaVector& lambda, std::span<const double> nu);

struct SubsystemEnergies {
    double A = 0.0;
    double B = 0.0;
};

/// E_X = tr(sigma_X) / 4.
SubsystemEnergies mean_energy_from_state(const GaussianPureState& state, const Bipartition& bipartition);

/// Unnormalized local factor for the 2+2 split:
/// [2E - (nu1 + nu2)]^2 / (nu1 nu2 (nu1 + nu2)), zero when 2E <= nu1 + nu2.
double g_2p2(double nu1, double nu2, double E);

/// 1/(min(E_A, E_B) - 1) on [1, min(E_A, E_B)], zero outside.
double density_1p1(double nu, const EnergyConstraint& constraint);

/// (nu1 - nu2)^2 [2E_A - s]^2 [2E_B - s]^2 with s = nu1 + nu2, on
/// {nu >= 1, s <= 2 min(E_A, E_B)}; the normalized version divides by
/// normalization_2p2, computed once per (E_A, E_B) and cached.
double density_2p2_unnormalized(double nu1, double nu2, const EnergyConstraint& constraint);
double normalization_2p2(const EnergyConstraint& constraint);
double density_2p2(double nu1, double nu2, const EnergyConstraint& constraint);

/// prod_{h<k} (nu_h - nu_k)^2 on the simplex {nu_j >= 1, sum nu = 2E}, normalized
/// with respect to d nu_1 ... d nu_{m-1} (m = n/2). For m = 1 the law is a point
/// mass at nu = 2E and the function returns its mass, 1.
double density_submanifold_energy(std::span<const double> nu, double E, int n);
double normalization_submanifold_energy(double E, int n);

}  // namespace gaussmeasure

#endif  // GAUSSMEASURE_INVARIANT_MEASURE_H
