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

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "gaussmeasure/errors.h"

namespace gaussmeasure {
namespace {

constexpr double kEnvelopeSafety = 1.1;

void check_cutoff(double cutoff) {
    if (!(cutoff > 1.0) || !std::isfinite(cutoff)) {
        throw DomainError("cutoff must be a finite number > 1, got " + std::to_string(cutoff));
    }
}

double ascent_max(int n, double cutoff) {
    // Endpoints are pinned at the box edges; interior points move one at a
    // time to the maximizer of a concave 1D function between their neighbors.
    std::vector<double> x(n);
    for (int k = 0; k < n; ++k) {
        x[k] = 1.0 + (cutoff - 1.0) * 0.5 * (1.0 - std::cos(std::numbers::pi * k / (n - 1)));
    }
    auto log_v = [&x](int k, double value) {
        double acc = 0.0;
        for (int j = 0; j < static_cast<int>(x.size()); ++j) {
            if (j != k) acc += std::log(std::abs(value - x[j]));
        }
        return acc;
    };
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int sweep = 0; sweep < 500; ++sweep) {
        double moved = 0.0;
        for (int k = 1; k < n - 1; ++k) {
            double lo = x[k - 1], hi = x[k + 1];
            double c = hi - invphi * (hi - lo), d = lo + invphi * (hi - lo);
            for (int it = 0; it < 200 && hi - lo > 1e-14 * cutoff; ++it) {
                if (log_v(k, c) > log_v(k, d)) {
                    hi = d;
                } else {
                    lo = c;
                }
                c = hi - invphi * (hi - lo);
                d = lo + invphi * (hi - lo);
            }
            const double next = 0.5 * (lo + hi);
            moved = std::max(moved, std::abs(next - x[k]));
            x[k] = next;
        }
        if (moved < 1e-13 * cutoff) break;
    }
    return vandermonde_abs(x);
}

}  // namespace

LambdaVector::LambdaVector(std::vector<double> values) : values_(std::move(values)) {
    for (double v : values_) {
        if (!(v >= 1.0)) throw DomainError("lambda entries must be >= 1, got " + std::to_string(v));
    }
}

LambdaVector EulerGaussianUnitary::lambda() const {
    std::vector<double> out;
    out.reserve(s.size());
    for (double v : s) out.push_back(lambda_from_squeeze(v));
    return LambdaVector(std::move(out));
}

double lambda_from_squeeze(double s) { return std::cosh(4.0 * s); }

double squeeze_from_lambda(double lambda) {
    if (!(lambda >= 1.0)) throw DomainError("lambda must be >= 1");
    return 0.25 * std::acosh(lambda);
}

double vandermonde_abs(std::span<const double> x) {
    double prod = 1.0;
    for (std::size_t h = 0; h < x.size(); ++h) {
        for (std::size_t k = h + 1; k < x.size(); ++k) prod *= std::abs(x[h] - x[k]);
    }
    return prod;
}

double vandermonde_max(int n, double cutoff) {
    if (n < 1) throw DomainError("n must be positive");
    check_cutoff(cutoff);
    if (n == 1) return 1.0;
    return ascent_max(n, cutoff);
}

Eigen::MatrixXcd sample_haar_unitary(int n, Rng& rng) {
    if (n < 1) throw DomainError("unitary dimension must be positive");
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXcd z(n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            z(i, j) = {re, im};
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    const auto& r = qr.matrixQR();
    // Fix the phase freedom so that R has a positive real diagonal.
    for (int j = 0; j < n; ++j) {
        const std::complex<double> d = r(j, j);
        const double mag = std::abs(d);
        q.col(j) *= mag > 0.0 ? d / mag : std::complex<double>(1.0);
    }
    return q;
}

VandermondeSampler::VandermondeSampler(int n, double cutoff)
    : n_(n), cutoff_(cutoff), envelope_(kEnvelopeSafety * vandermonde_max(n, cutoff)) {}

LambdaVector VandermondeSampler::operator()(Rng& rng) {
    std::uniform_real_distribution<double> box(1.0, cutoff_);
    std::uniform_real_distribution<double> height(0.0, envelope_);
    std::vector<double> x(n_);
    while (true) {
        for (auto& v : x) v = box(rng);
        ++proposals_;
        const double density = vandermonde_abs(x);
        if (density > envelope_) {
            throw EnvelopeViolation("Vandermonde density " + std::to_string(density) + " exceeds envelope " +
                                    std::to_string(envelope_) + " (n=" + std::to_string(n_) +
                                    ", cutoff=" + std::to_string(cutoff_) + ")");
        }
        if (height(rng) < density) {
            ++accepted_;
            return LambdaVector(x);
        }
    }
}

double VandermondeSampler::acceptance_rate() const {
    return proposals_ == 0 ? 0.0 : static_cast<double>(accepted_) / static_cast<double>(proposals_);
}

LambdaVector sample_lambda(int n, double cutoff, Rng& rng) {
    VandermondeSampler sampler(n, cutoff);
    return sampler(rng);
}

EulerGaussianUnitary sample_homogeneous_gaussian_unitary(VandermondeSampler& lambda_sampler, Rng& rng) {
    const int n = lambda_sampler.n();
    EulerGaussianUnitary g;
    g.theta = std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
    g.U = sample_haar_unitary(n, rng);
    g.U_prime = sample_haar_unitary(n, rng);
    const LambdaVector lambda = lambda_sampler(rng);
    g.s.reserve(n);
    for (double v : lambda.values()) g.s.push_back(squeeze_from_lambda(v));
    return g;
}

EulerGaussianUnitary sample_homogeneous_gaussian_unitary(int n, double cutoff, Rng& rng) {
    VandermondeSampler sampler(n, cutoff);
    return sample_homogeneous_gaussian_unitary(sampler, rng);
}

Eigen::MatrixXd passive_symplectic(const Eigen::MatrixXcd& U) {
    const Eigen::Index n = U.rows();
    if (U.cols() != n) throw DomainError("passive_symplectic: matrix must be square");
    Eigen::MatrixXd O(2 * n, 2 * n);
    for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index h = 0; h < n; ++h) {
            const double re = U(k, h).real();
            const double im = U(k, h).imag();
            O(2 * k, 2 * h) = re;
            O(2 * k, 2 * h + 1) = -im;
            O(2 * k + 1, 2 * h) = im;
            O(2 * k + 1, 2 * h + 1) = re;
        }
    }
    return O;
}

Eigen::MatrixXd squeezer_symplectic(std::span<const double> s) {
    const Eigen::Index n = static_cast<Eigen::Index>(s.size());
    Eigen::MatrixXd Z = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (Eigen::Index k = 0; k < n; ++k) {
        Z(2 * k, 2 * k) = std::exp(-2.0 * s[k]);
        Z(2 * k + 1, 2 * k + 1) = std::exp(2.0 * s[k]);
    }
    return Z;
}

Eigen::MatrixXd euler_to_symplectic(const EulerGaussianUnitary& g) {
    const int n = g.n_modes();
    if (g.U.rows() != n || g.U.cols() != n || g.U_prime.rows() != n || g.U_prime.cols() != n) {
        throw DomainError("Euler parameters have inconsistent dimensions");
    }
    for (double v : g.s) {
        if (!(v >= 0.0)) throw DomainError("squeezing parameters must be nonnegative");
    }
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
    if ((g.U.adjoint() * g.U - id).cwiseAbs().maxCoeff() > 1e-10 ||
        (g.U_prime.adjoint() * g.U_prime - id).cwiseAbs().maxCoeff() > 1e-10) {
        throw DomainError("Euler parameters: U and U' must be unitary");
    }
    return passive_symplectic(g.U) * squeezer_symplectic(g.s) * passive_symplectic(g.U_prime);
}

GaussianPureState apply_to_vacuum(const Eigen::MatrixXd& S) {
    if (S.rows() != S.cols() || S.rows() == 0 || S.rows() % 2 != 0) {
        throw DomainError("apply_to_vacuum: matrix must be square of even size");
    }
    if (!is_symplectic(S, 1e-9)) throw DomainError("apply_to_vacuum: matrix is not symplectic");
    Eigen::MatrixXd sigma = S * S.transpose();
    sigma = 0.5 * (sigma + sigma.transpose()).eval();
    return GaussianPureState(std::move(sigma));
}

}  // namespace gaussmeasure
