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

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "gaussmeasure/errors.h"

namespace gaussmeasure {
namespace {

constexpr double kSymmetryTolerance = 1e-12;
constexpr double kPurityTolerance = 1e-8;
constexpr double kVacuumClamp = 1e-9;
constexpr double kPairTolerance = 1e-8;
constexpr double kTailMass = 1e-12;

double max_abs(const Eigen::MatrixXd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

void require_square_even(const Eigen::MatrixXd& m, const char* what) {
    if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0) {
        throw DomainError(std::string(what) + " must be a non-empty square matrix of even size, got " +
                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

}  // namespace

Bipartition::Bipartition(std::vector<Subsystem> assignment) : assignment_(std::move(assignment)) {
    for (int k = 0; k < static_cast<int>(assignment_.size()); ++k) {
        (assignment_[k] == Subsystem::A ? modes_A_ : modes_B_).push_back(k);
    }
    if (modes_A_.size() > modes_B_.size()) {
        for (auto& side : assignment_) side = side == Subsystem::A ? Subsystem::B : Subsystem::A;
        std::swap(modes_A_, modes_B_);
    }
}

Bipartition Bipartition::contiguous(int n_A, int n_B) {
    if (n_A < 1 || n_B < 1) {
        throw DomainError("bipartition needs at least one mode per side, got n_A=" + std::to_string(n_A) +
                          " n_B=" + std::to_string(n_B));
    }
    std::vector<Subsystem> assignment(n_A, Subsystem::A);
    assignment.insert(assignment.end(), n_B, Subsystem::B);
    return Bipartition(std::move(assignment));
}

Bipartition Bipartition::from_assignment(std::vector<Subsystem> assignment) {
    const auto count_A = std::count(assignment.begin(), assignment.end(), Subsystem::A);
    if (count_A == 0 || count_A == static_cast<long>(assignment.size())) {
        throw DomainError("bipartition needs at least one mode per side");
    }
    return Bipartition(std::move(assignment));
}

GaussianPureState::GaussianPureState(Eigen::MatrixXd covariance)
    : GaussianPureState(std::move(covariance), Eigen::VectorXd()) {}

GaussianPureState::GaussianPureState(Eigen::MatrixXd covariance, Eigen::VectorXd displacement)
    : covariance_(std::move(covariance)), displacement_(std::move(displacement)) {
    validate_pure_covariance(covariance_);
    if (displacement_.size() == 0) {
        displacement_ = Eigen::VectorXd::Zero(covariance_.rows());
    } else if (displacement_.size() != covariance_.rows()) {
        throw DomainError("displacement length " + std::to_string(displacement_.size()) +
                          " does not match covariance size " + std::to_string(covariance_.rows()));
    }
}

GaussianPureState GaussianPureState::vacuum(int n_modes) {
    if (n_modes < 1) throw DomainError("n_modes must be positive");
    return GaussianPureState(Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes));
}

SymplecticSpectrum SymplecticSpectrum::from_nu(std::vector<double> nu) {
    for (auto& v : nu) {
        if (!(v >= 1.0 - kVacuumClamp)) {
            throw DomainError("symplectic eigenvalue below 1: " + std::to_string(v));
        }
        v = std::max(v, 1.0);
    }
    std::sort(nu.begin(), nu.end(), std::greater<>());
    SymplecticSpectrum out;
    out.r.reserve(nu.size());
    for (double v : nu) out.r.push_back(0.5 * std::acosh(v));
    out.nu = std::move(nu);
    return out;
}

SymplecticSpectrum SymplecticSpectrum::from_squeezing(std::vector<double> r) {
    std::vector<double> nu;
    nu.reserve(r.size());
    for (double v : r) {
        if (!(v >= 0.0)) throw DomainError("squeezing parameter must be nonnegative");
        nu.push_back(std::cosh(2.0 * v));
    }
    std::sort(r.begin(), r.end(), std::greater<>());
    std::sort(nu.begin(), nu.end(), std::greater<>());
    return {std::move(nu), std::move(r)};
}

SymplecticForm symplectic_form(int n_modes) {
    if (n_modes < 1) throw DomainError("n_modes must be positive");
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
    for (int k = 0; k < n_modes; ++k) {
        omega(2 * k, 2 * k + 1) = 1.0;
        omega(2 * k + 1, 2 * k) = -1.0;
    }
    return {n_modes, std::move(omega)};
}

double symplectic_defect(const Eigen::MatrixXd& S) {
    require_square_even(S, "symplectic matrix");
    const Eigen::MatrixXd omega = symplectic_form(static_cast<int>(S.rows() / 2)).matrix;
    const double scale = std::max(1.0, max_abs(S) * max_abs(S));
    return max_abs(S * omega * S.transpose() - omega) / scale;
}

bool is_symplectic(const Eigen::MatrixXd& S, double tolerance) { return symplectic_defect(S) <= tolerance; }

void validate_pure_covariance(const Eigen::MatrixXd& covariance) {
    if (covariance.rows() != covariance.cols() || covariance.rows() == 0 || covariance.rows() % 2 != 0) {
        throw NotPureStateError("covariance must be a non-empty square matrix of even size");
    }
    if (!covariance.allFinite()) throw NotPureStateError("covariance has non-finite entries");
    const double scale = std::max(1.0, max_abs(covariance));
    if (max_abs(covariance - covariance.transpose()) > kSymmetryTolerance * scale) {
        throw NotPureStateError("covariance is not symmetric");
    }
    const double defect = symplectic_defect(covariance);
    if (defect > kPurityTolerance) {
        throw NotPureStateError("covariance is not symplectic (state is not pure): defect " + std::to_string(defect));
    }
    Eigen::LLT<Eigen::MatrixXd> llt(covariance);
    if (llt.info() != Eigen::Success) throw NotPureStateError("covariance is not positive definite");
    const double det = covariance.determinant();
    if (std::abs(det - 1.0) > kPurityTolerance) {
        throw NotPureStateError("covariance determinant " + std::to_string(det) + " differs from 1");
    }
}

Eigen::MatrixXd tmsv_symplectic(double r) {
    if (!(r >= 0.0)) throw DomainError("squeezing parameter must be nonnegative");
    const double c = std::cosh(r);
    const double s = std::sinh(r);
    Eigen::MatrixXd S = Eigen::MatrixXd::Zero(4, 4);
    // a -> cosh(r) a - sinh(r) b^dag, b -> cosh(r) b - sinh(r) a^dag
    S(0, 0) = c; S(0, 2) = -s;
    S(1, 1) = c; S(1, 3) = s;
    S(2, 2) = c; S(2, 0) = -s;
    S(3, 3) = c; S(3, 1) = s;
    return S;
}

GaussianPureState tmsv_state(double r) {
    const double r_arr[] = {r};
    return canonical_state(r_arr, Bipartition::contiguous(1, 1));
}

GaussianPureState canonical_state(std::span<const double> r, const Bipartition& bipartition) {
    if (static_cast<int>(r.size()) != bipartition.n_A()) {
        throw DomainError("canonical_state: " + std::to_string(r.size()) + " squeezing parameters for n_A=" +
                          std::to_string(bipartition.n_A()));
    }
    const int n = bipartition.n_modes();
    Eigen::MatrixXd sigma = Eigen::MatrixXd::Identity(2 * n, 2 * n);
    for (std::size_t k = 0; k < r.size(); ++k) {
        if (!(r[k] >= 0.0)) throw DomainError("squeezing parameter must be nonnegative");
        const int a = 2 * bipartition.modes_A()[k];
        const int b = 2 * bipartition.modes_B()[k];
        const double c = std::cosh(2.0 * r[k]);
        const double s = std::sinh(2.0 * r[k]);
        sigma(a, a) = sigma(a + 1, a + 1) = c;
        sigma(b, b) = sigma(b + 1, b + 1) = c;
        sigma(a, b) = sigma(b, a) = -s;
        sigma(a + 1, b + 1) = sigma(b + 1, a + 1) = s;
    }
    return GaussianPureState(std::move(sigma));
}

GaussianPureState transform(const GaussianPureState& state, const Eigen::MatrixXd& S) {
    if (S.rows() != state.covariance().rows() || S.cols() != S.rows()) {
        throw DomainError("transform: symplectic matrix size does not match the state");
    }
    if (!is_symplectic(S, 1e-9)) throw DomainError("transform: matrix is not symplectic");
    Eigen::MatrixXd sigma = S * state.covariance() * S.transpose();
    sigma = 0.5 * (sigma + sigma.transpose()).eval();
    return GaussianPureState(std::move(sigma));
}

Eigen::MatrixXd embed_local(const Eigen::MatrixXd& S_A, const Eigen::MatrixXd& S_B,
                            const Bipartition& bipartition) {
    if (S_A.rows() != 2 * bipartition.n_A() || S_A.cols() != S_A.rows() || S_B.rows() != 2 * bipartition.n_B() ||
        S_B.cols() != S_B.rows()) {
        throw DomainError("embed_local: block sizes do not match the bipartition");
    }
    const int n = bipartition.n_modes();
    Eigen::MatrixXd S = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    auto place = [&S](const Eigen::MatrixXd& local, const std::vector<int>& modes) {
        for (std::size_t i = 0; i < modes.size(); ++i) {
            for (std::size_t j = 0; j < modes.size(); ++j) {
                S.block<2, 2>(2 * modes[i], 2 * modes[j]) = local.block<2, 2>(2 * i, 2 * j);
            }
        }
    };
    place(S_A, bipartition.modes_A());
    place(S_B, bipartition.modes_B());
    return S;
}

Eigen::MatrixXd reduced_covariance(const Eigen::MatrixXd& covariance, std::span<const int> modes) {
    const int m = static_cast<int>(modes.size());
    Eigen::MatrixXd out(2 * m, 2 * m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            out.block<2, 2>(2 * i, 2 * j) = covariance.block<2, 2>(2 * modes[i], 2 * modes[j]);
        }
    }
    return out;
}

std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& covariance) {
    require_square_even(covariance, "covariance");
    // The eigenvalues of i Omega sigma are +-nu; equivalently the symmetric
    // matrix sigma^{1/2} Omega^T sigma Omega sigma^{1/2} has each nu^2 twice.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(0.5 * (covariance + covariance.transpose()));
    if (eig.info() != Eigen::Success) throw NumericalError("eigendecomposition of covariance failed");
    if (!(eig.eigenvalues().minCoeff() > 0.0)) {
        throw DomainError("covariance is not positive definite");
    }
    const Eigen::MatrixXd root =
        eig.eigenvectors() * eig.eigenvalues().cwiseSqrt().asDiagonal() * eig.eigenvectors().transpose();
    const Eigen::MatrixXd omega = symplectic_form(static_cast<int>(covariance.rows() / 2)).matrix;
    Eigen::MatrixXd m = root * omega.transpose() * covariance * omega * root;
    m = 0.5 * (m + m.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sq(m, Eigen::EigenvaluesOnly);
    if (sq.info() != Eigen::Success) throw NumericalError("symplectic diagonalization failed");

    std::vector<double> nu_sq(sq.eigenvalues().data(), sq.eigenvalues().data() + sq.eigenvalues().size());
    std::sort(nu_sq.begin(), nu_sq.end(), std::greater<>());
    std::vector<double> nu;
    nu.reserve(nu_sq.size() / 2);
    for (std::size_t k = 0; k + 1 < nu_sq.size(); k += 2) {
        const double hi = std::sqrt(std::max(nu_sq[k], 0.0));
        const double lo = std::sqrt(std::max(nu_sq[k + 1], 0.0));
        if (hi - lo > kPairTolerance * hi) {
            throw NumericalError("unpaired symplectic eigenvalues " + std::to_string(hi) + " / " + std::to_string(lo));
        }
        nu.push_back(std::sqrt(0.5 * (nu_sq[k] + nu_sq[k + 1])));
    }
    return nu;
}

SymplecticSpectrum williamson_spectrum(const GaussianPureState& state, const Bipartition& bipartition) {
    if (bipartition.n_modes() != state.n_modes()) {
        throw DomainError("bipartition covers " + std::to_string(bipartition.n_modes()) + " modes, state has " +
                          std::to_string(state.n_modes()));
    }
    const Eigen::MatrixXd sigma_A = reduced_covariance(state.covariance(), bipartition.modes_A());
    return SymplecticSpectrum::from_nu(symplectic_eigenvalues(sigma_A));
}

std::vector<double> reduced_spectrum(double nu, std::optional<int> j_max) {
    if (!(nu >= 1.0)) throw DomainError("reduced_spectrum: nu must be >= 1");
    const double ratio = (nu - 1.0) / (nu + 1.0);
    int last = 0;
    if (j_max) {
        if (*j_max < 0) throw DomainError("reduced_spectrum: j_max must be nonnegative");
        last = *j_max;
    } else if (ratio > 0.0) {
        // smallest j with ratio^(j+1) < kTailMass
        last = std::max(0, static_cast<int>(std::ceil(std::log(kTailMass) / std::log(ratio))) - 1);
        while (std::pow(ratio, last + 1) >= kTailMass) ++last;
        while (last > 0 && std::pow(ratio, last) < kTailMass) --last;
    }
    std::vector<double> p(last + 1);
    double term = 2.0 / (nu + 1.0);
    for (int j = 0; j <= last; ++j) {
        p[j] = term;
        term *= ratio;
    }
    return p;
}

double mode_entropy(double nu) {
    if (!(nu >= 1.0)) throw DomainError("entropy: nu must be >= 1");
    const double plus = 0.5 * (nu + 1.0);
    const double minus = 0.5 * (nu - 1.0);
    const double tail = minus > 0.0 ? minus * std::log(minus) : 0.0;
    return plus * std::log(plus) - tail;
}

double entanglement_entropy(const SymplecticSpectrum& spectrum) {
    double total = 0.0;
    for (double v : spectrum.nu) total += mode_entropy(v);
    return total;
}

}  // namespace gaussmeasure
