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

// Covariance-matrix representation of multimode Gaussian pure states.
//
// Conventions used throughout the library:
//   * quadratures are interleaved, R = (x_1, p_1, ..., x_n, p_n), with
//     x = (a + a^dag)/sqrt(2), p = (a - a^dag)/(i sqrt(2));
//   * covariance sigma_ij = <{R_i, R_j}>, so the vacuum is the identity and
//     the mean energy of a mode is tr(sigma_mode)/4;
//   * a Gaussian unitary acts on quadratures as R -> S R (Heisenberg picture)
//     and on covariances as sigma -> S sigma S^T.

#ifndef GAUSSMEASURE_SYMPLECTIC_H
#define GAUSSMEASURE_SYMPLECTIC_H

#include <Eigen/Dense>
#include <optional>
#include <span>
#include <vector>

namespace gaussmeasure {

enum class Subsystem { A, B };

/// Split of the modes into two disjoint subsystems. Labels are swapped on
/// construction so that n_A <= n_B always holds.
class Bipartition {
   public:
    /// Modes [0, n_A) form A and [n_A, n_A + n_B) form B (before the swap).
    static Bipartition contiguous(int n_A, int n_B);
    static Bipartition from_assignment(std::vector<Subsystem> assignment);

    int n_A() const { return static_cast<int>(modes_A_.size()); }
    int n_B() const { return static_cast<int>(modes_B_.size()); }
    int n_modes() const { return static_cast<int>(assignment_.size()); }
    const std::vector<Subsystem>& assignment() const { return assignment_; }
    /// Mode indices of each side, ascending. A-mode k pairs with B-mode k in
    /// the canonical form.
    const std::vector<int>& modes_A() const { return modes_A_; }
    const std::vector<int>& modes_B() const { return modes_B_; }

   private:
    explicit Bipartition(std::vector<Subsystem> assignment);

    std::vector<Subsystem> assignment_;
    std::vector<int> modes_A_;
    std::vector<int> modes_B_;
};

/// Zero-mean Gaussian pure state. The constructor enforces symmetry,
/// symplecticity (sigma Omega sigma^T = Omega), unit determinant and positive
/// definiteness of the covariance; violations throw NotPureStateError.
class GaussianPureState {
   public:
    explicit GaussianPureState(Eigen::MatrixXd covariance);
    GaussianPureState(Eigen::MatrixXd covariance, Eigen::VectorXd displacement);

    static GaussianPureState vacuum(int n_modes);

    int n_modes() const { return static_cast<int>(covariance_.rows() / 2); }
    const Eigen::MatrixXd& covariance() const { return covariance_; }
    const Eigen::VectorXd& displacement() const { return displacement_; }

   private:
    Eigen::MatrixXd covariance_;
    Eigen::VectorXd displacement_;
};

struct SymplecticForm {
    int n_modes = 0;
    Eigen::MatrixXd matrix;
};

/// Symplectic eigenvalues nu_k = cosh(2 r_k) of one side of a bipartition,
/// sorted descending, together with the two-mode squeezing parameters r_k.
struct SymplecticSpectrum {
    std::vector<double> nu;
    std::vector<double> r;

    /// Clamps nu in [1 - 1e-9, 1) to 1; throws DomainError below that.
    static SymplecticSpectrum from_nu(std::vector<double> nu);
    static SymplecticSpectrum from_squeezing(std::vector<double> r);
};

SymplecticForm symplectic_form(int n_modes);

/// Throws NotPureStateError describing the first violated purity invariant.
void validate_pure_covariance(const Eigen::MatrixXd& covariance);

/// max |S Omega S^T - Omega|, scaled by max(1, max|S|^2).
double symplectic_defect(const Eigen::MatrixXd& S);
bool is_symplectic(const Eigen::MatrixXd& S, double tolerance = 1e-10);

/// Heisenberg-picture matrix of exp[r (a b - a^dag b^dag)] on (x_a, p_a, x_b, p_b).
Eigen::MatrixXd tmsv_symplectic(double r);

/// Two-mode squeezed vacuum: diagonal blocks cosh(2r) I, off-diagonal blocks
/// sinh(2r) diag(-1, +1).
GaussianPureState tmsv_state(double r);

/// Product of n_A two-mode squeezed vacua (A-mode k with B-mode k) and
/// n_B - n_A vacua.
GaussianPureState canonical_state(std::span<const double> r, const Bipartition& bipartition);

/// sigma -> S sigma S^T. S must be symplectic.
GaussianPureState transform(const GaussianPureState& state, const Eigen::MatrixXd& S);

/// Direct sum S_A (+) S_B laid out according to the bipartition's mode order.
Eigen::MatrixXd embed_local(const Eigen::MatrixXd& S_A, const Eigen::MatrixXd& S_B,
                            const Bipartition& bipartition);

Eigen::MatrixXd reduced_covariance(const Eigen::MatrixXd& covariance, std::span<const int> modes);

/// Symplectic eigenvalues of an arbitrary positive-definite covariance,
/// descending, each listed once.
std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& covariance);

SymplecticSpectrum williamson_spectrum(const GaussianPureState& state, const Bipartition& bipartition);

/// Photon-number distribution of the thermal-like reduced state of a two-mode
/// squeezed vacuum, p_j = 2/(nu+1) ((nu-1)/(nu+1))^j. Without j_max the list
/// stops at the first j whose geometric tail mass falls below 1e-12.
std::vector<double> reduced_spectrum(double nu, std::optional<int> j_max = std::nullopt);

/// von Neumann entropy (nats) of one reduced mode with symplectic eigenvalue nu.
double mode_entropy(double nu);
double entanglement_entropy(const SymplecticSpectrum& spectrum);

}  // namespace gaussmeasure

#endif  // GAUSSMEASURE_SYMPLECTIC_H
