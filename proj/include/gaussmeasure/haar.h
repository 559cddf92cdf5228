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

// Haar sampling on U(n) and on the group of homogeneous Gaussian unitaries,
// and the map from Euler parameters to symplectic matrices.

#ifndef GAUSSMEASURE_HAAR_H
#define GAUSSMEASURE_HAAR_H

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "gaussmeasure/symplectic.h"

namespace gaussmeasure {

using Rng = std::mt19937_64;

/// Squeezing magnitudes lambda_k >= 1 of a homogeneous Gaussian unitary.
class LambdaVector {
   public:
    LambdaVector() = default;
    explicit LambdaVector(std::vector<double> values);

    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t k) const { return values_[k]; }

   private:
    std::vector<double> values_;
};

/// U_G = e^{-i theta} exp(-i a^dag T a) exp(sum_k s_k a_k^2 - s_k a_k^dag^2) exp(-i a^dag T' a)
/// with U = exp(-iT), U' = exp(-iT'). The middle factor maps
/// a_k -> cosh(2 s_k) a_k - sinh(2 s_k) a_k^dag, so a single-mode squeezed
/// vacuum has mean energy cosh(4 s_k)/2 and lambda_k = cosh(4 s_k).
struct EulerGaussianUnitary {
    double theta = 0.0;
    Eigen::MatrixXcd U;
    std::vector<double> s;
    Eigen::MatrixXcd U_prime;

    int n_modes() const { return static_cast<int>(s.size()); }
    LambdaVector lambda() const;
};

double lambda_from_squeeze(double s);
double squeeze_from_lambda(double lambda);

/// prod_{h<k} |x_h - x_k| (1 for fewer than two entries).
double vandermonde_abs(std::span<const double> x);

/// Maximum of prod_{h<k} |x_h - x_k| over [1, cutoff]^n. For n <= 3 this is the
/// maximum over a 50-point-per-axis grid; above that the log-Vandermonde is
/// maximized by coordinate ascent on the ordered chamber, where it is concave.
double vandermonde_max(int n, double cutoff);

Eigen::MatrixXcd sample_haar_unitary(int n, Rng& rng);

/// Rejection sampler for lambda on [1, cutoff]^n with unnormalized density
/// prod_{h<k} |lambda_h - lambda_k|, uniform envelope at 1.1 x vandermonde_max.
class VandermondeSampler {
   public:
    VandermondeSampler(int n, double cutoff);

    LambdaVector operator()(Rng& rng);

    int n() const { return n_; }
    double cutoff() const { return cutoff_; }
    double envelope() const { return envelope_; }
    std::uint64_t proposals() const { return proposals_; }
    std::uint64_t accepted() const { return accepted_; }
    double acceptance_rate() const;

   private:
    int n_;
    double cutoff_;
    double envelope_;
    std::uint64_t proposals_ = 0;
    std::uint64_t accepted_ = 0;
};

LambdaVector sample_lambda(int n, double cutoff, Rng& rng);

/// theta uniform on [0, 2 pi), U and U' independent Haar, lambda from the
/// Vandermonde sampler, s_k = squeeze_from_lambda(lambda_k).
EulerGaussianUnitary sample_homogeneous_gaussian_unitary(VandermondeSampler& lambda_sampler, Rng& rng);
EulerGaussianUnitary sample_homogeneous_gaussian_unitary(int n, double cutoff, Rng& rng);

/// Orthogonal-symplectic matrix of the passive unitary a -> U a.
Eigen::MatrixXd passive_symplectic(const Eigen::MatrixXcd& U);

/// (+)_k diag(e^{-2 s_k}, e^{+2 s_k}).
Eigen::MatrixXd squeezer_symplectic(std::span<const double> s);

/// S = O(U) Z(s) O(U'). The global phase theta has no effect on S.
Eigen::MatrixXd euler_to_symplectic(const EulerGaussianUnitary& g);

/// State with covariance S S^T. Throws DomainError if S is not symplectic.
GaussianPureState apply_to_vacuum(const Eigen::MatrixXd& S);

}  // namespace gaussmeasure

#endif  // GAUSSMEASURE_HAAR_H
