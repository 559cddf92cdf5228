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

#include "gaussmeasure/cli.h"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "gaussmeasure/errors.h"
#include "gaussmeasure/haar.h"
#include "gaussmeasure/invariant_measure.h"
#include "gaussmeasure/report_io.h"
#include "gaussmeasure/sampler.h"
#include "gaussmeasure/state_io.h"
#include "gaussmeasure/symplectic.h"

namespace gaussmeasure {
namespace {

using nlohmann::json;

// Thresholds used by `verify` to decide the exit status.
constexpr double kKsThreshold = 0.03;
constexpr double kPValueThreshold = 0.01;

class ConfigError : public DomainError {
   public:
    using DomainError::DomainError;
};

void require(bool ok, const std::string& field, const std::string& why) {
    if (!ok) throw ConfigError(field + ": " + why);
}

std::string format_name(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

OutputFormat format_from_string(const std::string& s) {
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    throw ConfigError("format: expected csv or json, got '" + s + "'");
}

json metadata(const RunConfig& c) {
    return {{"tool", "gaussmeasure"}, {"version", GAUSSMEASURE_VERSION}, {"seed", c.seed}, {"config", config_to_json(c)}};
}

std::string csv_header(const RunConfig& c) {
    return std::string("# gaussmeasure ") + GAUSSMEASURE_VERSION + "\n# config=" + config_to_json(c).dump() + "\n";
}

void emit(const RunConfig& c, const std::string& content, std::ostream& out) {
    if (c.output_path.empty()) {
        out << content;
        return;
    }
    std::ofstream file(c.output_path);
    if (!file) throw FormatError("cannot write " + c.output_path);
    file << content;
}

std::string join_row(std::initializer_list<double> values) {
    std::string s;
    for (double v : values) {
        if (!s.empty()) s += ',';
        s += format_double(v);
    }
    return s;
}

EnergyConstraint constraint_of(const RunConfig& c) {
    return {*c.E_A, *c.E_B, c.shell};
}

// --- williamson / entropy -------------------------------------------------

SymplecticSpectrum spectrum_from_input(const RunConfig& c) {
    const GaussianPureState state = load_state(c.input_path);
    require(state.n_modes() == c.n_A + c.n_B, "nA/nB",
            "state has " + std::to_string(state.n_modes()) + " modes, bipartition has " + std::to_string(c.n_A + c.n_B));
    return williamson_spectrum(state, Bipartition::contiguous(c.n_A, c.n_B));
}

std::string run_williamson(const RunConfig& c) {
    const SymplecticSpectrum sp = spectrum_from_input(c);
    if (c.format == OutputFormat::json) {
        json j = {{"metadata", metadata(c)}, {"nu", sp.nu}, {"r", sp.r}, {"entropy", entanglement_entropy(sp)}};
        return j.dump(2) + "\n";
    }
    std::string s = csv_header(c) + "k,nu,r\n";
    for (std::size_t k = 0; k < sp.nu.size(); ++k) {
        s += std::to_string(k + 1) + ',' + join_row({sp.nu[k], sp.r[k]}) + '\n';
    }
    return s;
}

std::string run_entropy(const RunConfig& c) {
    const SymplecticSpectrum sp = c.input_path.empty() ? SymplecticSpectrum::from_nu(c.nu) : spectrum_from_input(c);
    std::vector<double> per_mode;
    for (double v : sp.nu) per_mode.push_back(mode_entropy(v));
    const double total = entanglement_entropy(sp);
    if (c.format == OutputFormat::json) {
        json j = {{"metadata", metadata(c)}, {"nu", sp.nu}, {"mode_entropy", per_mode}, {"entropy", total}};
        return j.dump(2) + "\n";
    }
    std::string s = csv_header(c) + "nu,mode_entropy\n";
    for (std::size_t k = 0; k < sp.nu.size(); ++k) s += join_row({sp.nu[k], per_mode[k]}) + '\n';
    s += "# entropy=" + format_double(total) + "\n";
    return s;
}

// --- density ----------------------------------------------------------------

DensitySpec density_spec(const RunConfig& c) {
    DensitySpec spec;
    spec.kind = density_kind_from_string(c.kind);
    spec.n_A = c.n_A;
    spec.n_B = c.n_B;
    if (spec.kind == DensityKind::submanifold_energy) {
        require(c.E.has_value() || c.E_A.has_value(), "E", "required for the fixed-energy law");
        const double E = c.E ? *c.E : *c.E_A;
        spec.constraint = EnergyConstraint{E, E, c.shell};
    } else if (c.E_A && c.E_B) {
        spec.constraint = constraint_of(c);
    }
    spec.validate();
    return spec;
}

std::string run_density(const RunConfig& c) {
    const DensitySpec spec = density_spec(c);
    const int dim = spec.dimension();
    std::vector<std::vector<double>> points;
    std::vector<double> values;
    auto axis = [&](double lo, double hi) {
        std::vector<double> xs(c.grid);
        for (int i = 0; i < c.grid; ++i) xs[i] = lo + (hi - lo) * i / (c.grid - 1);
        return xs;
    };
    switch (spec.kind) {
        case DensityKind::constrained_1p1:
            for (double x : axis(1.0, spec.constraint->min_energy())) points.push_back({x});
            break;
        case DensityKind::constrained_2p2: {
            const auto xs = axis(1.0, 2.0 * spec.constraint->min_energy() - 1.0);
            for (double x : xs)
                for (double y : xs) points.push_back({x, y});
            break;
        }
        case DensityKind::submanifold_energy: {
            const double two_e = 2.0 * spec.constraint->E_A;
            require(dim <= 2, "nA", "grid output supports at most two eigenvalues");
            if (dim == 1) {
                points.push_back({two_e});
            } else {
                for (double x : axis(1.0, two_e - 1.0)) points.push_back({x, two_e - x});
            }
            break;
        }
        default: {
            require(dim <= 2, "nA", "grid output supports at most two eigenvalues");
            const auto xs = axis(1.0, c.cutoff);
            if (dim == 1) {
                for (double x : xs) points.push_back({x});
            } else {
                for (double x : xs)
                    for (double y : xs) points.push_back({x, y});
            }
        }
    }
    for (const auto& p : points) values.push_back(evaluate(spec, p));
    if (c.format == OutputFormat::json) {
        json j = {{"metadata", metadata(c)}, {"kind", to_string(spec.kind)}, {"points", points}, {"density", values}};
        return j.dump(2) + "\n";
    }
    std::string s = csv_header(c);
    for (std::size_t a = 0; a < points.front().size(); ++a) s += "nu_" + std::to_string(a + 1) + ',';
    s += "density\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (double v : points[i]) s += format_double(v) + ',';
        s += format_double(values[i]) + '\n';
    }
    return s;
}

// --- sample -----------------------------------------------------------------

std::string run_sample(const RunConfig& c) {
    Rng rng(c.seed);
    std::vector<std::vector<double>> samples;
    const DensityKind kind = density_kind_from_string(c.kind);
    if (kind == DensityKind::constrained_2p2) {
        require(c.E_A && c.E_B, "EA/EB", "required for the 2p2 law");
        for (const auto& p : sample_density_2p2(constraint_of(c), c.count, rng)) samples.push_back({p[0], p[1]});
    } else if (kind == DensityKind::submanifold_energy) {
        require(c.E.has_value(), "E", "required for the fixed-energy law");
        samples = sample_submanifold_energy(c.n_A + c.n_B, *c.E, c.count, rng);
    } else {
        throw ConfigError("kind: sample supports 2p2 and submanifold_energy");
    }
    if (c.format == OutputFormat::json) {
        json j = {{"metadata", metadata(c)}, {"kind", to_string(kind)}, {"samples", samples}};
        return j.dump(2) + "\n";
    }
    std::string s = csv_header(c);
    for (std::size_t a = 0; a < samples.front().size(); ++a) s += (a ? ",nu_" : "nu_") + std::to_string(a + 1);
    s += '\n';
    for (const auto& row : samples) {
        for (std::size_t a = 0; a < row.size(); ++a) s += (a ? "," : "") + format_double(row[a]);
        s += '\n';
    }
    return s;
}

// --- haar-sample --------------------------------------------------------------

std::string run_haar_sample(const RunConfig& c) {
    Rng rng(c.seed);
    const int n = c.n_A;
    VandermondeSampler sampler(n, c.cutoff);
    std::vector<EulerGaussianUnitary> draws;
    draws.reserve(c.count);
    for (std::uint64_t i = 0; i < c.count; ++i) draws.push_back(sample_homogeneous_gaussian_unitary(sampler, rng));
    auto flatten = [](const Eigen::MatrixXcd& U, bool imag) {
        std::vector<double> v;
        for (Eigen::Index h = 0; h < U.rows(); ++h)
            for (Eigen::Index k = 0; k < U.cols(); ++k) v.push_back(imag ? U(h, k).imag() : U(h, k).real());
        return v;
    };
    if (c.format == OutputFormat::json) {
        json rows = json::array();
        for (const auto& g : draws) {
            rows.push_back({{"theta", g.theta},
                            {"s", g.s},
                            {"lambda", g.lambda().values()},
                            {"U_re", flatten(g.U, false)},
                            {"U_im", flatten(g.U, true)},
                            {"U_prime_re", flatten(g.U_prime, false)},
                            {"U_prime_im", flatten(g.U_prime, true)}});
        }
        json j = {{"metadata", metadata(c)}, {"acceptance_rate", sampler.acceptance_rate()}, {"draws", rows}};
        return j.dump(2) + "\n";
    }
    std::string s = csv_header(c) + "# acceptance_rate=" + format_double(sampler.acceptance_rate()) + "\ntheta";
    for (int k = 1; k <= n; ++k) s += ",lambda_" + std::to_string(k);
    for (const char* name : {"U", "Up"}) {
        for (int h = 1; h <= n; ++h)
            for (int k = 1; k <= n; ++k) {
                const std::string idx = std::to_string(h) + std::to_string(k);
                s += std::string(",") + name + "_re_" + idx + "," + name + "_im_" + idx;
            }
    }
    s += '\n';
    for (const auto& g : draws) {
        s += format_double(g.theta);
        for (double v : g.lambda().values()) s += ',' + format_double(v);
        for (const auto* U : {&g.U, &g.U_prime}) {
            for (Eigen::Index h = 0; h < n; ++h)
                for (Eigen::Index k = 0; k < n; ++k)
                    s += ',' + format_double((*U)(h, k).real()) + ',' + format_double((*U)(h, k).imag());
        }
        s += '\n';
    }
    return s;
}

// --- verify -----------------------------------------------------------------

bool comparison_passes(const Comparison& cmp, int m) {
    if (m == 1) return cmp.ks_statistic && *cmp.ks_statistic < kKsThreshold;
    return cmp.p_value > kPValueThreshold;
}

int run_verify(const RunConfig& c, std::ostream& out) {
    VerifyOptions opt;
    opt.n = c.n_A + c.n_B;
    opt.constraint = constraint_of(c);
    opt.count = c.count;
    opt.cutoff = c.cutoff;
    opt.seed = c.seed;
    opt.partitions = c.threads;
    opt.estimator = shell_estimator_from_string(c.estimator);
    opt.self_test = c.self_test;
    opt.bins_per_axis = c.bins;
    opt.halving_check = c.halving_check;
    opt.keep_samples = !c.samples_csv.empty();
    const HistogramReport report = verify_constrained_density(opt);
    const int m = opt.n / 2;
    const bool passed = !report.comparison || comparison_passes(*report.comparison, m);

    if (!c.samples_csv.empty()) {
        std::ofstream file(c.samples_csv);
        if (!file) throw FormatError("cannot write " + c.samples_csv);
        file << csv_header(c);
        write_samples_csv(file, report.samples);
    }
    if (c.format == OutputFormat::json) {
        json j = report_to_json(report);
        j["metadata"].update(metadata(c));
        j["passed"] = passed;
        emit(c, j.dump(2) + "\n", out);
    } else {
        std::string s = csv_header(c);
        if (report.comparison) s += "# comparison=" + comparison_to_json(*report.comparison).dump() + "\n";
        if (report.half_shell_comparison) {
            s += "# half_shell_comparison=" + comparison_to_json(*report.half_shell_comparison).dump() + "\n";
        }
        s += "# passed=" + std::string(passed ? "true" : "false") + "\n";
        for (int a = 1; a <= m; ++a) s += "nu" + std::to_string(a) + "_lo,nu" + std::to_string(a) + "_hi,";
        s += "count,density\n";
        const std::size_t bins = report.bin_edges.front().size() - 1;
        for (std::size_t cell = 0; cell < report.counts.size(); ++cell) {
            std::vector<std::size_t> idx(m);
            std::size_t rest = cell;
            for (int a = m - 1; a >= 0; --a) {
                idx[a] = rest % bins;
                rest /= bins;
            }
            for (int a = 0; a < m; ++a) {
                s += format_double(report.bin_edges[a][idx[a]]) + ',' + format_double(report.bin_edges[a][idx[a] + 1]) + ',';
            }
            s += std::to_string(report.counts[cell]) + ',' + format_double(report.normalized_density[cell]) + '\n';
        }
        emit(c, s, out);
    }
    return passed ? kExitOk : kExitVerification;
}

void write_error(std::ostream& err, int code, const std::string& type, const std::string& message) {
    err << json{{"error", {{"code", code}, {"type", type}, {"message", message}}}}.dump() << '\n';
}

json load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw ConfigError(std::string("config: ") + e.what());
        }
        if (j.contains("metadata") && j["metadata"].contains("config")) return j["metadata"]["config"];
        return j;
    }
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.rfind("# config=", 0) == 0) {
            try {
                return json::parse(line.substr(9));
            } catch (const json::parse_error& e) {
                throw ConfigError(std::string("config: ") + e.what());
            }
        }
    }
    throw ConfigError("config: " + path + " is neither a JSON config nor an output file with an embedded config");
}

}  // namespace

std::string to_string(Command command) {
    switch (command) {
        case Command::williamson: return "williamson";
        case Command::entropy: return "entropy";
        case Command::density: return "density";
        case Command::sample: return "sample";
        case Command::verify: return "verify";
        case Command::haar_sample: return "haar-sample";
    }
    return "unknown";
}

Command command_from_string(const std::string& name) {
    for (Command c : {Command::williamson, Command::entropy, Command::density, Command::sample, Command::verify,
                      Command::haar_sample}) {
        if (to_string(c) == name) return c;
    }
    throw ConfigError("command: unknown command '" + name + "'");
}

void RunConfig::validate() const {
    require(n_A >= 1 && n_B >= 1, "nA/nB", "must be positive");
    require(count >= 1, "count", "must be positive");
    require(cutoff > 1.0, "cutoff", "must exceed 1");
    require(shell > 0.0, "shell", "must be positive");
    require(threads >= 1, "threads", "must be positive");
    switch (command) {
        case Command::williamson:
            require(!input_path.empty(), "input", "required");
            break;
        case Command::entropy:
            require(!input_path.empty() || !nu.empty(), "input/nu", "one of them is required");
            break;
        case Command::density:
            require(!kind.empty(), "kind", "required");
            require(grid >= 2, "grid", "need at least 2 points per axis");
            break;
        case Command::sample:
            require(!kind.empty(), "kind", "required");
            break;
        case Command::verify:
            require(n_A == n_B, "n", "verify needs an even total with equal halves");
            require(E_A.has_value(), "EA", "required");
            require(E_B.has_value(), "EB", "required");
            require(bins >= 2, "bins", "need at least 2 bins per axis");
            shell_estimator_from_string(estimator);
            break;
        case Command::haar_sample:
            break;
    }
}

json config_to_json(const RunConfig& c) {
    json j = {{"command", to_string(c.command)},
              {"n_A", c.n_A},
              {"n_B", c.n_B},
              {"cutoff", c.cutoff},
              {"shell", c.shell},
              {"count", c.count},
              {"seed", c.seed},
              {"format", format_name(c.format)},
              {"grid", c.grid},
              {"bins", c.bins},
              {"estimator", c.estimator},
              {"self_test", c.self_test},
              {"halving_check", c.halving_check},
              {"threads", c.threads}};
    if (c.E_A) j["E_A"] = *c.E_A;
    if (c.E_B) j["E_B"] = *c.E_B;
    if (c.E) j["E"] = *c.E;
    if (!c.input_path.empty()) j["input"] = c.input_path;
    if (!c.nu.empty()) j["nu"] = c.nu;
    if (!c.kind.empty()) j["kind"] = c.kind;
    return j;
}

void apply_config_json(RunConfig& c, const json& j) {
    try {
        if (j.contains("command")) c.command = command_from_string(j["command"].get<std::string>());
        if (j.contains("n_A")) c.n_A = j["n_A"].get<int>();
        if (j.contains("n_B")) c.n_B = j["n_B"].get<int>();
        if (j.contains("E_A")) c.E_A = j["E_A"].get<double>();
        if (j.contains("E_B")) c.E_B = j["E_B"].get<double>();
        if (j.contains("E")) c.E = j["E"].get<double>();
        if (j.contains("cutoff")) c.cutoff = j["cutoff"].get<double>();
        if (j.contains("shell")) c.shell = j["shell"].get<double>();
        if (j.contains("count")) c.count = j["count"].get<std::uint64_t>();
        if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("format")) c.format = format_from_string(j["format"].get<std::string>());
        if (j.contains("output")) c.output_path = j["output"].get<std::string>();
        if (j.contains("input")) c.input_path = j["input"].get<std::string>();
        if (j.contains("nu")) c.nu = j["nu"].get<std::vector<double>>();
        if (j.contains("kind")) c.kind = j["kind"].get<std::string>();
        if (j.contains("grid")) c.grid = j["grid"].get<int>();
        if (j.contains("bins")) c.bins = j["bins"].get<int>();
        if (j.contains("estimator")) c.estimator = j["estimator"].get<std::string>();
        if (j.contains("self_test")) c.self_test = j["self_test"].get<bool>();
        if (j.contains("halving_check")) c.halving_check = j["halving_check"].get<bool>();
        if (j.contains("samples_csv")) c.samples_csv = j["samples_csv"].get<std::string>();
        if (j.contains("threads")) c.threads = j["threads"].get<int>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        config.validate();
        switch (config.command) {
            case Command::williamson: emit(config, run_williamson(config), out); break;
            case Command::entropy: emit(config, run_entropy(config), out); break;
            case Command::density: emit(config, run_density(config), out); break;
            case Command::sample: emit(config, run_sample(config), out); break;
            case Command::haar_sample: emit(config, run_haar_sample(config), out); break;
            case Command::verify: return run_verify(config, out);
        }
        return kExitOk;
    } catch (const DomainError& e) {
        write_error(err, kExitInvalidConfig, "invalid_config", e.what());
        return kExitInvalidConfig;
    } catch (const FormatError& e) {
        write_error(err, kExitInvalidConfig, "invalid_input", e.what());
        return kExitInvalidConfig;
    } catch (const NumericalError& e) {
        write_error(err, kExitNumerical, "numerical_failure", e.what());
        return kExitNumerical;
    }
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariant-measure tools for bipartite Gaussian pure states", "gaussmeasure"};
    app.fallthrough();
    app.require_subcommand(0, 1);
    app.set_version_flag("--version", GAUSSMEASURE_VERSION);

    RunConfig f;  // flag values; only explicitly given ones are applied
    std::string config_path, format, kind, estimator;
    int n_total = 0;
    double E_A = 0, E_B = 0, E = 0;
    bool self_test = false, no_halving = false;

    std::vector<std::pair<std::string, CLI::Option*>> opts;
    auto add = [&](const std::string& name, auto& target, const std::string& help) {
        CLI::Option* o = app.add_option(name, target, help);
        opts.emplace_back(name, o);
        return o;
    };
    add("--config", config_path, "JSON config or a previous output file");
    add("--input", f.input_path, "covariance file (.csv or .json)");
    add("--nA", f.n_A, "modes in subsystem A");
    add("--nB", f.n_B, "modes in subsystem B");
    add("-n,--n", n_total, "total modes, split evenly (verify)");
    add("--EA", E_A, "mean energy of A");
    add("--EB", E_B, "mean energy of B");
    add("--E", E, "energy for the fixed-energy submanifold law");
    add("--nu", f.nu, "symplectic eigenvalues (entropy)")->delimiter(',');
    add("--kind", kind, "density kind: 1p1, 2p2, unconstrained, submanifold, submanifold_energy");
    add("--grid", f.grid, "grid points per axis (density)");
    add("--bins", f.bins, "histogram bins per axis (verify)");
    add("--count", f.count, "samples or proposals");
    add("--seed", f.seed, "64-bit seed");
    add("--cutoff", f.cutoff, "squeezing cutoff Lambda");
    add("--shell", f.shell, "energy shell half-width");
    add("--output", f.output_path, "output path (stdout when omitted)");
    add("--format", format, "csv or json");
    add("--estimator", estimator, "conditional or hit-or-miss (verify)");
    add("--samples-csv", f.samples_csv, "write accepted samples here (verify)");
    add("--threads", f.threads, "independent sampling streams (verify)");
    CLI::Option* self_test_flag = app.add_flag("--self-test", self_test, "draw from the closed form (verify)");
    CLI::Option* no_halving_flag = app.add_flag("--no-halving-check", no_halving, "skip the half-shell rerun (verify)");

    const std::pair<Command, const char*> subcommands[] = {
        {Command::williamson, "symplectic eigenvalues of a covariance file"},
        {Command::entropy, "entanglement entropy from eigenvalues or a covariance file"},
        {Command::density, "evaluate a density on a grid"},
        {Command::sample, "draw samples from a density"},
        {Command::verify, "shell-conditioned reconstruction checked against the closed form"},
        {Command::haar_sample, "draw Haar unitaries"},
    };
    for (const auto& [c, help] : subcommands) app.add_subcommand(to_string(c), help);

    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        write_error(err, kExitInvalidConfig, "invalid_arguments", e.what());
        return kExitInvalidConfig;
    }

    RunConfig config;
    bool seed_given = false;
    bool command_given = false;
    try {
        if (!config_path.empty()) {
            const json j = load_config_file(config_path);
            apply_config_json(config, j);
            seed_given = j.contains("seed");
            command_given = j.contains("command");
        }
        if (const char* s = std::getenv("GAUSSMEASURE_SEED")) {
            try {
                config.seed = std::stoull(s);
            } catch (const std::exception&) {
                throw ConfigError("GAUSSMEASURE_SEED: not an unsigned integer");
            }
            seed_given = true;
        }
        if (const char* t = std::getenv("GAUSSMEASURE_THREADS")) {
            try {
                config.threads = std::stoi(t);
            } catch (const std::exception&) {
                throw ConfigError("GAUSSMEASURE_THREADS: not an integer");
            }
        }
        auto given = [&](const std::string& name) {
            for (const auto& [n, o] : opts) {
                if (n == name) return o->count() > 0;
            }
            return false;
        };
        if (given("--input")) config.input_path = f.input_path;
        if (given("--nA")) config.n_A = f.n_A;
        if (given("--nB")) config.n_B = f.n_B;
        if (given("-n,--n")) {
            require(n_total >= 2 && n_total % 2 == 0, "n", "must be even and >= 2");
            config.n_A = config.n_B = n_total / 2;
        }
        if (given("--EA")) config.E_A = E_A;
        if (given("--EB")) config.E_B = E_B;
        if (given("--E")) config.E = E;
        if (given("--nu")) config.nu = f.nu;
        if (given("--kind")) config.kind = kind;
        if (given("--grid")) config.grid = f.grid;
        if (given("--bins")) config.bins = f.bins;
        if (given("--count")) config.count = f.count;
        if (given("--seed")) {
            config.seed = f.seed;
            seed_given = true;
        }
        if (given("--cutoff")) config.cutoff = f.cutoff;
        if (given("--shell")) config.shell = f.shell;
        if (given("--output")) config.output_path = f.output_path;
        if (given("--format")) config.format = format_from_string(format);
        if (given("--estimator")) config.estimator = estimator;
        if (given("--samples-csv")) config.samples_csv = f.samples_csv;
        if (given("--threads")) config.threads = f.threads;
        if (self_test_flag->count() > 0) config.self_test = true;
        if (no_halving_flag->count() > 0) config.halving_check = false;

        const auto subs = app.get_subcommands();
        if (!subs.empty()) {
            config.command = command_from_string(subs.front()->get_name());
            command_given = true;
        }
        require(command_given, "command", "give a subcommand or a config with one");
        if (!seed_given) config.seed = (static_cast<std::uint64_t>(std::random_device{}()) << 32) ^ std::random_device{}();
    } catch (const DomainError& e) {
        write_error(err, kExitInvalidConfig, "invalid_config", e.what());
        return kExitInvalidConfig;
    }
    return run(config, out, err);
}

}  // namespace gaussmeasure
