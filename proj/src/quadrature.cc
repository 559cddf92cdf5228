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

#include "gaussmeasure/quadrature.h"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>

#include "gaussmeasure/errors.h"

namespace gaussmeasure {

double integrate(const std::function<double(double)>& f, double a, double b, const QuadratureOptions& opts) {
    if (!(b > a)) return 0.0;
    double error = 0.0;
    double l1 = 0.0;
    const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, a, b, opts.max_depth, opts.relative_tolerance, &error, &l1);
    if (!std::isfinite(value)) throw NumericalError("quadrature produced a non-finite value");
    if (error > std::max(opts.absolute_floor, 1e3 * opts.relative_tolerance * l1)) {
        throw NumericalError("quadrature did not converge: error estimate " + std::to_string(error));
    }
    return value;
}

double integrate_2d(const std::function<double(double, double)>& f, double x0, double x1,
                    const std::function<double(double)>& y_lo, const std::function<double(double)>& y_hi,
                    const QuadratureOptions& opts) {
    QuadratureOptions inner = opts;
    inner.relative_tolerance = opts.relative_tolerance * 0.1;
    return integrate(
        [&](double x) {
            const double lo = y_lo(x);
            const double hi = y_hi(x);
            return integrate([&](double y) { return f(x, y); }, lo, hi, inner);
        },
        x0, x1, opts);
}

}  // namespace gaussmeasure
