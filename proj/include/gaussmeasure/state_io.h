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

// Covariance file formats.
//
// CSV: first line "# n_modes=<n> ordering=interleaved", then 2n rows of 2n
// comma-separated values printed with 17 significant digits. Further lines
// starting with '#' are ignored on read.
//
// JSON: {"n_modes": n, "covariance": [[...], ...], "displacement": [...]}.

#ifndef GAUSSMEASURE_STATE_IO_H
#define GAUSSMEASURE_STATE_IO_H

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "gaussmeasure/symplectic.h"

namespace gaussmeasure {

void write_state_csv(std::ostream& out, const GaussianPureState& state);
GaussianPureState read_state_csv(std::istream& in);

nlohmann::json state_to_json(const GaussianPureState& state);
GaussianPureState state_from_json(const nlohmann::json& j);

/// Dispatches on the extension (.csv or .json).
GaussianPureState load_state(const std::filesystem::path& path);
void save_state(const std::filesystem::path& path, const GaussianPureState& state);

/// "%.17g" formatting used for every numeric CSV field.
std::string format_double(double value);

}  // namespace gaussmeasure

#endif  // GAUSSMEASURE_STATE_IO_H
