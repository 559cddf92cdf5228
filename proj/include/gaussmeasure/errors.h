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

#ifndef GAUSSMEASURE_ERRORS_H
#define GAUSSMEASURE_ERRORS_H

#include <stdexcept>
#include <string>

namespace gaussmeasure {

/// Argument outside the mathematical domain of an operation (nu < 1, empty
/// support, mismatched dimensions, ...).
class DomainError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A covariance matrix failed the pure-state checks (symmetry, symplecticity,
/// positive definiteness).
class NotPureStateError : public DomainError {
   public:
    using DomainError::DomainError;
};

/// Runtime numerical failure: rejection envelope exceeded, quadrature did not
/// converge, no samples accepted.
class NumericalError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class EnvelopeViolation : public NumericalError {
   public:
    using NumericalError::NumericalError;
};

/// Malformed input file (CSV / JSON).
class FormatError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace gaussmeasure

#endif  // GAUSSMEASURE_ERRORS_H
