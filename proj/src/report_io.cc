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

#include "gaussmeasure/report_io.h"

#include <limits>
#include <ostream>

#include "gaussmeasure/errors.h"
#include "gaussmeasure/state_io.h"

namespace gaussmeasure {

nlohmann::json comparison_to_json(const Comparison& c) {
    nlohmann::json j = {{"target", c.target}, {"chi2", c.chi2}, {"dof", c.dof}, {"p_value", c.p_value}};
    j["ks_statistic"] = c.ks_statistic ? nlohmann::json(*c.ks_statistic) : nlohmann::json(nullptr);
    return j;
}

namespace {

Comparison comparison_from_json(const nlohmann::json& j) {
    Comparison c;
    c.target = j.at("target").get<std::string>();
    // non-finite statistics serialize as null
    c.chi2 = j.at("chi2").is_null() ? std::numeric_limits<double>::infinity() : j.at("chi2").get<double>();
    c.dof = j.at("dof").get<int>();
    c.p_value = j.at("p_value").get<double>();
    if (!j.at("ks_statistic").is_null()) c.ks_statistic = j.at("ks_statistic").get<double>();
    return c;
}

}  // namespace

nlohmann::json report_to_json(const HistogramReport& r) {
    const auto& md = r.metadata;
    nlohmann::json j;
    j["n"] = r.n;
    j["constraint"] = {{"E_A", r.constraint.E_A}, {"E_B", r.constraint.E_B}, {"shell", r.constraint.shell_width}};
    j["bin_edges"] = r.bin_edges;
    j["counts"] = r.counts;
    j["normalized_density"] = r.normalized_density;
    j["comparison"] = r.comparison ? comparison_to_json(*r.comparison) : nlohmann::json(nullptr);
    if (r.half_shell_comparison) j["half_shell_comparison"] = comparison_to_json(*r.half_shell_comparison);
    j["metadata"] = {{"seed", md.seed},
                     {"sample_count", md.sample_count},
                     {"proposals", md.proposals},
                     {"cutoff", md.cutoff},
                     {"shell", md.shell_width},
                     {"acceptance_rate", md.acceptance_rate},
                     {"effective_sample_size", md.effective_sample_size},
                     {"partitions", md.partitions},
                     {"estimator", md.estimator},
                     {"self_test", md.self_test}};
    return j;
}

HistogramReport report_from_json(const nlohmann::json& j) {
    try {
        HistogramReport r;
        r.n = j.at("n").get<int>();
        const auto& c = j.at("constraint");
        r.constraint = {c.at("E_A").get<double>(), c.at("E_B").get<double>(), c.at("shell").get<double>()};
        r.bin_edges = j.at("bin_edges").get<std::vector<std::vector<double>>>();
        r.counts = j.at("counts").get<std::vector<std::uint64_t>>();
        r.normalized_density = j.at("normalized_density").get<std::vector<double>>();
        if (!j.at("comparison").is_null()) r.comparison = comparison_from_json(j.at("comparison"));
        if (j.contains("half_shell_comparison")) r.half_shell_comparison = comparison_from_json(j["half_shell_comparison"]);
        const auto& md = j.at("metadata");
        r.metadata.seed = md.at("seed").get<std::uint64_t>();
        r.metadata.sample_count = md.at("sample_count").get<std::uint64_t>();
        r.metadata.proposals = md.at("proposals").get<std::uint64_t>();
        r.metadata.cutoff = md.at("cutoff").get<double>();
        r.metadata.shell_width = md.at("shell").get<double>();
        r.metadata.acceptance_rate = md.at("acceptance_rate").get<double>();
        r.metadata.effective_sample_size = md.at("effective_sample_size").get<double>();
        r.metadata.partitions = md.at("partitions").get<int>();
        r.metadata.estimator = md.at("estimator").get<std::string>();
        r.metadata.self_test = md.at("self_test").get<bool>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("histogram report JSON: ") + e.what());
    }
}

void write_samples_csv(std::ostream& out, const SampleSet& s) {
    const int m = s.dimension;
    for (int a = 0; a < m; ++a) out << "nu_" << (a + 1) << ',';
    out << "E_A,E_B,weight\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (int a = 0; a < m; ++a) out << format_double(s.nu[i * m + a]) << ',';
        out << format_double(s.E_A[i]) << ',' << format_double(s.E_B[i]) << ',' << format_double(s.weight[i]) << '\n';
    }
}

}  // namespace gaussmeasure
