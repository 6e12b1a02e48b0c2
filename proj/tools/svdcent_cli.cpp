#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "svdcent/baselines.hpp"
#include "svdcent/centrality.hpp"
#include "svdcent/errors.hpp"
#include "svdcent/experiments.hpp"
#include "svdcent/graph.hpp"
#include "svdcent/io.hpp"
#include "svdcent/spectral.hpp"

namespace {

enum class Mode { centrality, hypergraph, equivalence, grid, oracle_check };

enum class InputSyntax { edgelist, hyperedgelist };

// Residual above the theorem tolerance is reported with its own exit code so
// scripts can tell "identity violated" from "run failed".
constexpr int k_oracle_failure_exit = 10;

int log_level() {
    const char* value = std::getenv("SVDCENT_LOG");
    if (value == nullptr) {
        return 0;
    }
    const std::string text(value);
    if (text == "debug") {
        return 2;
    }
    if (text == "info") {
        return 1;
    }
    return 0;
}

void log_line(int level, const std::string& message) {
    if (log_level() >= level) {
        std::cerr << "[svdcent] " << message << '\n';
    }
}

bool starts_with(const std::string& text, const std::string& prefix) {
    return text.rfind(prefix, 0) == 0;
}

int parse_int_field(const std::string& value, const std::string& spec) {
    try {
        std::size_t used = 0;
        const int parsed = std::stoi(value, &used);
        if (used != value.size()) {
            throw std::invalid_argument(value);
        }
        return parsed;
    } catch (const std::exception&) {
        throw svdcent::io_error("builtin input '" + spec + "': '" + value +
                                "' is not an integer");
    }
}

double parse_real_field(const std::string& value, const std::string& spec) {
    try {
        std::size_t used = 0;
        const double parsed = std::stod(value, &used);
        if (used != value.size()) {
            throw std::invalid_argument(value);
        }
        return parsed;
    } catch (const std::exception&) {
        throw svdcent::io_error("builtin input '" + spec + "': '" + value + "' is not a number");
    }
}

// Named generator inputs: "karate", "grid", "path:N", "cycle:N",
// "er:N:P:SEED". Anything else is treated as a file path.
std::optional<svdcent::DirectedGraph> builtin_graph(const std::string& spec) {
    if (spec == "karate") {
        return svdcent::load_karate();
    }
    if (spec == "grid") {
        return svdcent::generate_grid_motif();
    }
    if (starts_with(spec, "path:")) {
        return svdcent::generate_path(parse_int_field(spec.substr(5), spec));
    }
    if (starts_with(spec, "cycle:")) {
        return svdcent::generate_cycle(parse_int_field(spec.substr(6), spec));
    }
    if (starts_with(spec, "er:")) {
        const std::string rest = spec.substr(3);
        const auto first = rest.find(':');
        const auto second = first == std::string::npos ? std::string::npos
                                                       : rest.find(':', first + 1);
        if (first == std::string::npos || second == std::string::npos) {
            throw svdcent::io_error("builtin input '" + spec + "': expected er:N:P:SEED");
        }
        const int n = parse_int_field(rest.substr(0, first), spec);
        const double p = parse_real_field(rest.substr(first + 1, second - first - 1), spec);
        const int seed = parse_int_field(rest.substr(second + 1), spec);
        if (seed < 0) {
            throw svdcent::io_error("builtin input '" + spec + "': seed must be nonnegative");
        }
        return svdcent::generate_er(n, p, static_cast<std::uint32_t>(seed));
    }
    return std::nullopt;
}

svdcent::DirectedGraph load_graph(const std::string& input) {
    if (auto builtin = builtin_graph(input)) {
        log_line(1, "built-in graph '" + input + "': n=" + std::to_string(builtin->vertex_count()) +
                        " m=" + std::to_string(builtin->edge_count()));
        return std::move(*builtin);
    }
    svdcent::DirectedGraph g = svdcent::parse_edgelist(input);
    log_line(1, "parsed '" + input + "': n=" + std::to_string(g.vertex_count()) +
                    " m=" + std::to_string(g.edge_count()));
    return g;
}

void emit(const std::string& payload, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << payload;
        return;
    }
    svdcent::write_file(output_path, payload);
    log_line(1, "wrote " + std::to_string(payload.size()) + " bytes to " + output_path);
}

struct Options {
    std::string input;
    Mode mode = Mode::centrality;
    std::optional<InputSyntax> format;
    double lambda = 0.99;
    double tau = 1e-8;
    std::optional<double> alpha;
    std::optional<int> rank_k;
    svdcent::RegularizationMode reg_mode = svdcent::RegularizationMode::matrix_level;
    std::string output;
    svdcent::OutputFormat output_format = svdcent::OutputFormat::json;
};

int run(const Options& opt) {
    svdcent::RegularizationConfig cfg;
    cfg.mode = opt.reg_mode;
    cfg.lambda = opt.lambda;
    cfg.tau = opt.tau;
    cfg.validate();
    const std::optional<Eigen::Index> rank_k =
        opt.rank_k ? std::optional<Eigen::Index>(*opt.rank_k) : std::nullopt;

    switch (opt.mode) {
    case Mode::centrality: {
        const svdcent::DirectedGraph g = load_graph(opt.input);
        const svdcent::CentralityReport report =
            svdcent::compute_report(g, cfg, opt.alpha, rank_k);
        emit(svdcent::export_report(report, g, opt.output_format), opt.output);
        return 0;
    }
    case Mode::hypergraph: {
        const svdcent::Hypergraph h = svdcent::parse_hyperedgelist(opt.input);
        log_line(1, "parsed '" + opt.input + "': n=" + std::to_string(h.vertex_count()) +
                        " hyperedges=" + std::to_string(h.hyperedge_count()));
        const svdcent::CentralityReport report =
            svdcent::hypergraph_centralities(h, cfg, rank_k);
        emit(svdcent::export_report(report, h, opt.output_format), opt.output);
        return 0;
    }
    case Mode::equivalence: {
        const svdcent::DirectedGraph g = load_graph(opt.input);
        const svdcent::ExperimentResult result = svdcent::run_equivalence(g, cfg);
        emit(svdcent::export_experiment(result, opt.output_format), opt.output);
        return 0;
    }
    case Mode::grid: {
        const svdcent::ExperimentResult result = svdcent::run_grid_experiment(*opt.alpha);
        emit(svdcent::export_experiment(result, opt.output_format), opt.output);
        return 0;
    }
    case Mode::oracle_check: {
        const svdcent::DirectedGraph g = load_graph(opt.input);
        const svdcent::IncidenceMatrix b = svdcent::build_incidence(g);
        const svdcent::SpectralDecomposition d = svdcent::compact_svd(b);
        const Eigen::VectorXd residual = svdcent::check_resistance_sum_identity(d);
        const double worst = residual.size() > 0 ? residual.maxCoeff() : 0.0;
        const double tolerance = 1e-8 * static_cast<double>(g.vertex_count());
        const bool pass = worst <= tolerance;

        nlohmann::ordered_json doc;
        doc["type"] = "oracle_check";
        doc["n"] = g.vertex_count();
        doc["m"] = g.edge_count();
        doc["max_residual"] = worst;
        doc["tolerance"] = tolerance;
        doc["pass"] = pass;
        doc["residuals"] = std::vector<double>(residual.data(), residual.data() + residual.size());
        emit(doc.dump(2) + "\n", opt.output);
        return pass ? 0 : k_oracle_failure_exit;
    }
    }
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SVD incidence centrality toolkit"};
    Options opt;

    const std::map<std::string, Mode> mode_names{
        {"centrality", Mode::centrality}, {"hypergraph", Mode::hypergraph},
        {"equivalence", Mode::equivalence}, {"grid", Mode::grid},
        {"oracle-check", Mode::oracle_check}};
    const std::map<std::string, InputSyntax> format_names{
        {"edgelist", InputSyntax::edgelist}, {"hyperedgelist", InputSyntax::hyperedgelist}};
    const std::map<std::string, svdcent::RegularizationMode> reg_names{
        {"matrix", svdcent::RegularizationMode::matrix_level},
        {"tikhonov", svdcent::RegularizationMode::tikhonov},
        {"none", svdcent::RegularizationMode::none}};
    const std::map<std::string, svdcent::OutputFormat> output_names{
        {"json", svdcent::OutputFormat::json}, {"csv", svdcent::OutputFormat::csv},
        {"dot", svdcent::OutputFormat::dot}};

    app.add_option("--input", opt.input,
                   "Input file, or a built-in: karate, grid, path:N, cycle:N, er:N:P:SEED");
    app.add_option("--mode", opt.mode, "Pipeline to run")
        ->transform(CLI::CheckedTransformer(mode_names, CLI::ignore_case))
        ->default_str("centrality");
    std::optional<InputSyntax> format_flag;
    app.add_option("--format", format_flag, "Input syntax")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
    app.add_option("--lambda", opt.lambda, "Matrix-level blend weight in [0, 1]")
        ->capture_default_str();
    app.add_option("--tau", opt.tau, "Tikhonov / score-normalization shift")
        ->capture_default_str();
    std::optional<double> alpha_flag;
    app.add_option("--alpha", alpha_flag,
                   "Vertex/edge blend in [0, 1]; required for hub and authority output");
    std::optional<int> rank_flag;
    app.add_option("--rank-k", rank_flag, "Truncate the decomposition to k singular triplets");
    app.add_option("--reg-mode", opt.reg_mode, "Regularization mode")
        ->transform(CLI::CheckedTransformer(reg_names, CLI::ignore_case))
        ->default_str("matrix");
    app.add_option("--output", opt.output, "Output file (stdout when omitted)");
    app.add_option("--output-format", opt.output_format, "Serialization format")
        ->transform(CLI::CheckedTransformer(output_names, CLI::ignore_case))
        ->default_str("json");

    try {
        app.parse(argc, argv);

        opt.alpha = alpha_flag;
        opt.rank_k = rank_flag;
        opt.format = format_flag;

        const bool needs_input = opt.mode != Mode::grid;
        if (needs_input && opt.input.empty()) {
            throw CLI::ValidationError("--input is required for this mode");
        }
        if (opt.mode == Mode::grid && !opt.alpha) {
            throw CLI::ValidationError("--mode grid requires --alpha");
        }
        if (opt.format) {
            const bool wants_hyper = opt.mode == Mode::hypergraph;
            const bool got_hyper = *opt.format == InputSyntax::hyperedgelist;
            if (wants_hyper != got_hyper) {
                throw CLI::ValidationError("--format does not match --mode (hypergraph mode "
                                           "reads hyperedgelist, all others read edgelist)");
            }
        }
        if (opt.rank_k && *opt.rank_k < 1) {
            throw CLI::ValidationError("--rank-k must be at least 1");
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        return run(opt);
    } catch (const svdcent::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << '\n';
        return 1;
    }
}
