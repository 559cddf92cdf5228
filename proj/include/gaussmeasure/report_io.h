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

// JSON and CSV serialization of histogram reports and raw samples.

#ifndef GAUSSMEASURE_REPORT_IO_H
#define GAUSSMEASURE_REPORT_IO_H

#include <iosfwd>
#include <json.hpp>

#include "gaussmeasure/sampler.h"

namespace gaussmeasure {

nlohmann::json comparison_to_json(const Comparison& c);
nlohmann::json report_to_json(const HistogramReport& report);
/// Inverse of report_to_json; raw samples are not part of the JSON form.
HistogramReport report_from_json(const nlohmann::json& j);

/// One row per accepted sample: nu_1..nu_m, E_A, E_B, weight.
void write_samples_csv(std::ostream& out, const SampleSet& samples);

}  // namespace gaussmeasure

#endif  // GAUSSMEASURE_REPORT_IO_H
