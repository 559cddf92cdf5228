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

// Command-line front end. Exit codes: 0 success, 2 invalid configuration or
// input, 3 numerical failure, 4 statistical verification failure (the report
// is still written).

#ifndef GAUSSMEASURE_CLI_H
#define GAUSSMEASURE_CLI_H

#include <cstdint>
#include <iosfwd>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace gaussmeasure {

enum class Command { williamson, entropy, density, sample, verify, haar_sample };
enum class OutputFormat { csv, json };

std::string to_string(Command command);
Command command_from_string(const std::string& name);

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidConfig = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitVerification = 4;

struct RunConfig {
    Command command = Command::williamson;
    int n_A = 1;
    int n_B = 1;
    std::optional<double> E_A;
    std::optional<double> E_B;
    /// Single energy for the fixed-energy submanifold law.
    std::optional<double> E;
    double cutoff = 10.0;
    double shell = 0.05;
    std::uint64_t count = 100000;
    std::uint64_t seed = 0;
    std::string output_path;
    OutputFormat format = OutputFormat::json;

    std::string input_path;
    std::vector<double> nu;
    std::string kind;
    int grid = 100;
    int bins = 10;
    std::string estimator = "conditional";
    bool self_test = false;
    bool halving_check = true;
    std::string samples_csv;
    int threads = 1;

    /// Command-specific required fields; throws DomainError naming the field.
    void validate() const;
};

/// Everything except the output paths, so that the echo embedded in an output
/// file reproduces that file when fed back through --config.
nlohmann::json config_to_json(const RunConfig& config);
/// Overlays the keys present in j onto config.
void apply_config_json(RunConfig& config, const nlohmann::json& j);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (flags > environment > --config file > defaults) and runs.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gaussmeasure

#endif  // GAUSSMEASURE_CLI_H
