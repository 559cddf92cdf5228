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

#include "gaussmeasure/state_io.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "gaussmeasure/errors.h"

namespace gaussmeasure {

std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void write_state_csv(std::ostream& out, const GaussianPureState& state) {
    const auto& sigma = state.covariance();
    out << "# n_modes=" << state.n_modes() << " ordering=interleaved\n";
    for (Eigen::Index i = 0; i < sigma.rows(); ++i) {
        for (Eigen::Index j = 0; j < sigma.cols(); ++j) {
            if (j) out << ',';
            out << format_double(sigma(i, j));
        }
        out << '\n';
    }
}

GaussianPureState read_state_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError("empty covariance CSV");
    int n_modes = 0;
    {
        const auto pos = line.find("n_modes=");
        if (line.rfind('#', 0) != 0 || pos == std::string::npos) {
            throw FormatError("covariance CSV must start with '# n_modes=<n> ordering=interleaved'");
        }
        n_modes = std::atoi(line.c_str() + pos + 8);
        if (line.find("ordering=interleaved") == std::string::npos) {
            throw FormatError("only ordering=interleaved is supported");
        }
    }
    if (n_modes < 1) throw FormatError("n_modes must be positive");
    const int dim = 2 * n_modes;
    Eigen::MatrixXd sigma(dim, dim);
    int row = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (row >= dim) throw FormatError("covariance CSV has more than " + std::to_string(dim) + " rows");
        std::stringstream ss(line);
        std::string cell;
        int col = 0;
        while (std::getline(ss, cell, ',')) {
            if (col >= dim) throw FormatError("row " + std::to_string(row) + " has too many columns");
            try {
                sigma(row, col++) = std::stod(cell);
            } catch (const std::exception&) {
                throw FormatError("bad number '" + cell + "' in row " + std::to_string(row));
            }
        }
        if (col != dim) throw FormatError("row " + std::to_string(row) + " has " + std::to_string(col) + " columns");
        ++row;
    }
    if (row != dim) throw FormatError("covariance CSV has " + std::to_string(row) + " rows, expected " + std::to_string(dim));
    return GaussianPureState(std::move(sigma));
}

nlohmann::json state_to_json(const GaussianPureState& state) {
    const auto& sigma = state.covariance();
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < sigma.rows(); ++i) {
        std::vector<double> row(sigma.cols());
        for (Eigen::Index j = 0; j < sigma.cols(); ++j) row[j] = sigma(i, j);
        rows.push_back(row);
    }
    const auto& d = state.displacement();
    return {{"n_modes", state.n_modes()},
            {"covariance", rows},
            {"displacement", std::vector<double>(d.data(), d.data() + d.size())}};
}

GaussianPureState state_from_json(const nlohmann::json& j) {
    try {
        const int n_modes = j.at("n_modes").get<int>();
        const auto rows = j.at("covariance").get<std::vector<std::vector<double>>>();
        const int dim = 2 * n_modes;
        if (n_modes < 1 || static_cast<int>(rows.size()) != dim) {
            throw FormatError("covariance must have 2*n_modes rows");
        }
        Eigen::MatrixXd sigma(dim, dim);
        for (int i = 0; i < dim; ++i) {
            if (static_cast<int>(rows[i].size()) != dim) throw FormatError("covariance row " + std::to_string(i) + " has wrong length");
            for (int k = 0; k < dim; ++k) sigma(i, k) = rows[i][k];
        }
        Eigen::VectorXd displacement = Eigen::VectorXd::Zero(dim);
        if (j.contains("displacement")) {
            const auto d = j.at("displacement").get<std::vector<double>>();
            if (static_cast<int>(d.size()) != dim) throw FormatError("displacement must have 2*n_modes entries");
            for (int k = 0; k < dim; ++k) displacement(k) = d[k];
        }
        return GaussianPureState(std::move(sigma), std::move(displacement));
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("state JSON: ") + e.what());
    }
}

GaussianPureState load_state(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    if (path.extension() == ".json") {
        try {
            return state_from_json(nlohmann::json::parse(in));
        } catch (const nlohmann::json::parse_error& e) {
            throw FormatError(path.string() + ": " + e.what());
        }
    }
    return read_state_csv(in);
}

void save_state(const std::filesystem::path& path, const GaussianPureState& state) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path.string());
    if (path.extension() == ".json") {
        out << state_to_json(state).dump(2) << '\n';
    } else {
        write_state_csv(out, state);
    }
}

}  // namespace gaussmeasure
