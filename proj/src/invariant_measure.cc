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

#include "gaussmeasure/invariant_measure.h"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <vector>

#include "gaussmeasure/errors.h"
#include "gaussmeasure/quadrature.h"

namespace gaussmeasure {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kSimplexSlack = 1e-9;

// Memo of normalization constants. Computation happens under the lock, so each
// key is integrated once even with concurrent callers.
class NormalizationCache {
   public:
    template <class F>
    double get(const std::vector<double>& key, F&& compute) {
        std::lock_guard lock(mutex_);
        if (auto it = values_.find(key); it != values_.end()) return it->second;
        const double value = compute();
        values_.emplace(key, value);
        return value;
    }

   private:
    std::mutex mutex_;
    std::map<std::vector<double>, double> values_;
};

NormalizationCache& cache_2p2() {
    static NormalizationCache cache;
    return cache;
}

NormalizationCache& cache_simplex() {
    static NormalizationCache cache;
    return cache;
}

void check_nu(std::span<const double> nu, int n_A, int n_B, const char* where) {
    if (n_A < 1 || n_B < n_A) {
        throw DomainError(std::string(where) + ": need 1 <= n_A <= n_B");
    }
    if (static_cast<int>(nu.size()) != n_A) {
        throw DomainError(std::string(where) + ": expected " + std::to_string(n_A) + " eigenvalues, got " +
                          std::to_string(nu.size()));
    }
    for (double v : nu) {
        if (!(v >= 1.0)) throw DomainError(std::string(where) + ": symplectic eigenvalue below 1");
    }
}

double log_abs(double x) { return x == 0.0 ? kNegInf : std::log(std::abs(x)); }

QuadratureOptions normalization_options() {
    QuadratureOptions opts;
    opts.relative_tolerance = 1e-10;
    return opts;
}

// Integral of prod_{h<k}(nu_h - nu_k)^2 over nu_depth.. given the fixed prefix.
double simplex_integral(std::vector<double>& nu, int depth, double remaining) {
    const int m = static_cast<int>(nu.size());
    if (depth == m - 1) {
        nu[depth] = remaining;
        const double v = vandermonde_abs(nu);
        return v * v;
    }
    const int after = m - depth - 1;
    const double hi = remaining - after;
    return integrate(
        [&, depth, remaining](double x) {
            nu[depth] = x;
            return simplex_integral(nu, depth + 1, remaining - x);
        },
        1.0, hi, normalization_options());
}

}  // namespace

void EnergyConstraint::validate(int n_A, int n_B) const {
    if (!(E_A >= 0.5 * n_A) || !(E_B >= 0.5 * n_B)) {
        throw DomainError("energy constraint below the ground-state energy: need E_A >= " + std::to_string(0.5 * n_A) +
                          " and E_B >= " + std::to_string(0.5 * n_B));
    }
    if (!(shell_width > 0.0)) throw DomainError("shell width must be positive");
}

std::string to_string(DensityKind kind) {
    switch (kind) {
        case DensityKind::unconstrained: return "unconstrained";
        case DensityKind::constrained_1p1: return "1p1";
        case DensityKind::constrained_2p2: return "2p2";
        case DensityKind::submanifold: return "submanifold";
        case DensityKind::submanifold_energy: return "submanifold_energy";
    }
    return "unknown";
}

DensityKind density_kind_from_string(const std::string& name) {
    if (name == "unconstrained") return DensityKind::unconstrained;
    if (name == "1p1" || name == "constrained_1p1") return DensityKind::constrained_1p1;
    if (name == "2p2" || name == "constrained_2p2") return DensityKind::constrained_2p2;
    if (name == "submanifold") return DensityKind::submanifold;
    if (name == "submanifold_energy" || name == "submanifold-energy") return DensityKind::submanifold_energy;
    throw DomainError("unknown density kind '" + name + "'");
}

void DensitySpec::validate() const {
    if (n_A < 1 || n_B < n_A) throw DomainError("density: need 1 <= n_A <= n_B");
    switch (kind) {
        case DensityKind::constrained_1p1:
            if (n_A != 1 || n_B != 1) throw DomainError("1p1 density requires n_A = n_B = 1");
            break;
        case DensityKind::constrained_2p2:
            if (n_A != 2 || n_B != 2) throw DomainError("2p2 density requires n_A = n_B = 2");
            break;
        case DensityKind::submanifold_energy:
            if (n_A != n_B) throw DomainError("fixed-energy submanifold density requires n_A = n_B");
            break;
        default:
            break;
    }
    const bool needs_constraint = kind == DensityKind::constrained_1p1 || kind == DensityKind::constrained_2p2 ||
                                  kind == DensityKind::submanifold_energy;
    if (needs_constraint && !constraint) throw DomainError(to_string(kind) + " density requires energies");
    if (constraint) constraint->validate(n_A, n_B);
}

double evaluate(const DensitySpec& spec, std::span<const double> nu) {
    spec.validate();
    if (static_cast<int>(nu.size()) != spec.dimension()) throw DomainError("density: wrong number of eigenvalues");
    switch (spec.kind) {
        case DensityKind::unconstrained: return std::exp(log_density_unconstrained(nu, spec.n_A, spec.n_B));
        case DensityKind::submanifold: return std::exp(log_density_submanifold(nu, spec.n_A, spec.n_B));
        case DensityKind::constrained_1p1: return density_1p1(nu[0], *spec.constraint);
        case DensityKind::constrained_2p2: return density_2p2(nu[0], nu[1], *spec.constraint);
        case DensityKind::submanifold_energy:
            return density_submanifold_energy(nu, spec.constraint->E_A, spec.n_A + spec.n_B);
    }
    return 0.0;
}

double log_density_unconstrained(std::span<const double> nu, int n_A, int n_B) {
    check_nu(nu, n_A, n_B, "log_density_unconstrained");
    double acc = 0.0;
    for (std::size_t h = 0; h < nu.size(); ++h) {
        for (std::size_t k = 0; k < h; ++k) acc += 2.0 * log_abs(nu[h] * nu[h] - nu[k] * nu[k]);
        acc += 2.0 * std::log(nu[h]);
        if (n_B > n_A) acc += (n_B - n_A) * log_abs(nu[h] * nu[h] - 1.0);
    }
    return acc;
}

double log_density_submanifold(std::span<const double> nu, int n_A, int n_B) {
    check_nu(nu, n_A, n_B, "log_density_submanifold");
    double acc = 0.0;
    for (std::size_t h = 0; h < nu.size(); ++h) {
        for (std::size_t k = h + 1; k < nu.size(); ++k) acc += 2.0 * log_abs(nu[h] - nu[k]);
        if (n_B > n_A) acc += (n_B - n_A) * log_abs(nu[h] - 1.0);
    }
    return acc;
}

double mean_energy(const Eigen::MatrixXcd& U, const LambdaVector& lambda, std::span<const double> nu) {
    const auto m = static_cast<Eigen::Index>(nu.size());
    if (U.rows() != m || U.cols() != m || static_cast<Eigen::Index>(lambda.size()) != m) {
        throw DomainError("mean_energy: U, lambda and nu must have matching dimension");
    }
    double acc = 0.0;
    for (Eigen::Index h = 0; h < m; ++h) {
        double row = 0.0;
        for (Eigen::Index k = 0; k < m; ++k) row += std::norm(U(h, k)) * nu[k];
        acc += lambda[h] * row;
    }
    return 0.5 * acc;
}

SubsystemEnergies mean_energy_from_state(const GaussianPureState& state, const Bipartition& bipartition) {
    if (bipartition.n_modes() != state.n_modes()) throw DomainError("mean_energy_from_state: bipartition size mismatch");
    const auto& sigma = state.covariance();
    auto trace_over = [&sigma](const std::vector<int>& modes) {
        double t = 0.0;
        for (int k : modes) t += sigma(2 * k, 2 * k) + sigma(2 * k + 1, 2 * k + 1);
        return 0.25 * t;
    };
    return {trace_over(bipartition.modes_A()), trace_over(bipartition.modes_B())};
}

double g_2p2(double nu1, double nu2, double E) {
    if (!(nu1 >= 1.0) || !(nu2 >= 1.0)) throw DomainError("g_2p2: symplectic eigenvalue below 1");
    const double s = nu1 + nu2;
    const double gap = 2.0 * E - s;
    if (gap <= 0.0) return 0.0;
    return gap * gap / (nu1 * nu2 * s);
}

double density_1p1(double nu, const EnergyConstraint& constraint) {
    const double top = constraint.min_energy();
    if (!(top > 1.0)) throw DomainError("density_1p1: min(E_A, E_B) must exceed 1");
    if (nu < 1.0 || nu > top) return 0.0;
    return 1.0 / (top - 1.0);
}

double density_2p2_unnormalized(double nu1, double nu2, const EnergyConstraint& constraint) {
    const double s = nu1 + nu2;
    if (nu1 < 1.0 || nu2 < 1.0 || s > 2.0 * constraint.min_energy()) return 0.0;
    const double d = nu1 - nu2;
    const double a = 2.0 * constraint.E_A - s;
    const double b = 2.0 * constraint.E_B - s;
    return d * d * a * a * b * b;
}

double normalization_2p2(const EnergyConstraint& constraint) {
    const double top = 2.0 * constraint.min_energy();
    if (!(top > 2.0)) throw DomainError("density_2p2: support is empty, need min(E_A, E_B) > 1");
    return cache_2p2().get({constraint.E_A, constraint.E_B}, [&] {
        return integrate_2d([&](double x, double y) { return density_2p2_unnormalized(x, y, constraint); }, 1.0,
                            top - 1.0, [](double) { return 1.0; }, [top](double x) { return top - x; },
                            normalization_options());
    });
}

double density_2p2(double nu1, double nu2, const EnergyConstraint& constraint) {
    const double z = normalization_2p2(constraint);
    return density_2p2_unnormalized(nu1, nu2, constraint) / z;
}

double normalization_submanifold_energy(double E, int n) {
    if (n < 2 || n % 2 != 0) throw DomainError("fixed-energy density: n must be even and positive");
    const int m = n / 2;
    if (!(2.0 * E > m)) throw DomainError("fixed-energy density: empty simplex, need 2E > n/2");
    if (m == 1) return 1.0;
    return cache_simplex().get({E, static_cast<double>(m)}, [&] {
        std::vector<double> nu(m, 1.0);
        return simplex_integral(nu, 0, 2.0 * E);
    });
}

double density_submanifold_energy(std::span<const double> nu, double E, int n) {
    if (n < 2 || n % 2 != 0) throw DomainError("fixed-energy density: n must be even and positive");
    const int m = n / 2;
    if (static_cast<int>(nu.size()) != m) throw DomainError("fixed-energy density: expected n/2 eigenvalues");
    const double z = normalization_submanifold_energy(E, n);
    double sum = 0.0;
    for (double v : nu) {
        if (!(v >= 1.0)) throw DomainError("fixed-energy density: symplectic eigenvalue below 1");
        sum += v;
    }
    if (std::abs(sum - 2.0 * E) > kSimplexSlack * std::max(1.0, 2.0 * E)) {
        throw DomainError("fixed-energy density: sum of eigenvalues must equal 2E");
    }
    if (m == 1) return 1.0;
    const double v = vandermonde_abs(nu);
    return v * v / z;
}

}  // namespace gaussmeasure
