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

// Adaptive quadrature used for normalization constants and bin masses.

#ifndef GAUSSMEASURE_QUADRATURE_H
#define GAUSSMEASURE_QUADRATURE_H

#include <functional>

namespace gaussmeasure {

struct QuadratureOptions {
    double relative_tolerance = 1e-10;
    /// Intervals whose error estimate is below this are accepted outright.
    double absolute_floor = 1e-14;
    unsigned max_depth = 20;
};

/// Adaptive 15-point Gauss-Kronrod on [a, b]. Returns 0 for empty intervals.
double integrate(const std::function<double(double)>& f, double a, double b, const QuadratureOptions& opts = {});

/// Iterated adaptive quadrature over {x in [x0, x1], y in [y_lo(x), y_hi(x)]}.
double integrate_2d(const std::function<double(double, double)>& f, double x0, double x1,
                    const std::function<double(double)>& y_lo, const std::function<double(double)>& y_hi,
                    const QuadratureOptions& opts = {});

}  // namespace gaussmeasure

#endif  // GAUSSMEASURE_QUADRATURE_H
