#include "svdcent/experiments.hpp"

#include <array>
#include <cmath>
#include <random>
#include <set>
#include <utility>

#include "svdcent/baselines.hpp"
#include "svdcent/errors.hpp"

namespace svdcent {

namespace {

std::vector<double> to_std(const Eigen::VectorXd& v) {
    return std::vector<double>(v.data(), v.data() + v.size());
}

Eigen::Index argmax(const Eigen::VectorXd& v) {
    Eigen::Index where = 0;
    v.maxCoeff(&where);
    return where;
}

double coefficient_of_variation(const Eigen::VectorXd& v) {
    if (v.size() == 0) {
        throw experiment_error("coefficient of variation is undefined on an empty vector");
    }
    const double mean = v.mean();
    if (mean == 0.0) {
        throw experiment_error("coefficient of variation is undefined at zero mean");
    }
    const double variance = (v.array() - mean).square().sum() / static_cast<double>(v.size());
    return std::sqrt(variance) / mean;
}

// The comparison panel considers only elements that carry mass: zero scores
// are excluded before the coefficient of variation is taken.
Eigen::VectorXd nonzero_entries(const Eigen::VectorXd& v) {
    std::vector<double> kept;
    kept.reserve(static_cast<std::size_t>(v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v(i) != 0.0) {
            kept.push_back(v(i));
        }
    }
    return Eigen::Map<const Eigen::VectorXd>(kept.data(), static_cast<Eigen::Index>(kept.size()));
}

} // namespace

DirectedGraph generate_path(int n) {
    if (n < 1) {
        throw experiment_error("generate_path requires n >= 1, got " + std::to_string(n));
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 0; i + 1 < n; ++i) {
        edges.push_back({i, i + 1});
    }
    return DirectedGraph(n, std::move(edges));
}

DirectedGraph generate_cycle(int n) {
    if (n < 3) {
        throw experiment_error("generate_cycle requires n >= 3, got " + std::to_string(n));
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n});
    }
    return DirectedGraph(n, std::move(edges));
}

DirectedGraph generate_er(int n, double p, std::uint32_t seed) {
    if (n < 0) {
        throw experiment_error("generate_er requires n >= 0, got " + std::to_string(n));
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw experiment_error("generate_er requires p in [0, 1], got " + std::to_string(p));
    }
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (uniform(rng) < p) {
                edges.push_back({i, j});
            }
        }
    }
    return DirectedGraph(n, std::move(edges));
}

DirectedGraph load_karate() {
    static constexpr std::array<std::array<int, 2>, 78> k_edges = {{
        {0, 1},   {0, 2},   {0, 3},   {0, 4},   {0, 5},   {0, 6},   {0, 7},   {0, 8},
        {0, 10},  {0, 11},  {0, 12},  {0, 13},  {0, 17},  {0, 19},  {0, 21},  {0, 31},
        {1, 2},   {1, 3},   {1, 7},   {1, 13},  {1, 17},  {1, 19},  {1, 21},  {1, 30},
        {2, 3},   {2, 7},   {2, 8},   {2, 9},   {2, 13},  {2, 27},  {2, 28},  {2, 32},
        {3, 7},   {3, 12},  {3, 13},  {4, 6},   {4, 10},  {5, 6},   {5, 10},  {5, 16},
        {6, 16},  {8, 30},  {8, 32},  {8, 33},  {9, 33},  {13, 33}, {14, 32}, {14, 33},
        {15, 32}, {15, 33}, {18, 32}, {18, 33}, {19, 33}, {20, 32}, {20, 33}, {22, 32},
        {22, 33}, {23, 25}, {23, 27}, {23, 29}, {23, 32}, {23, 33}, {24, 25}, {24, 27},
        {24, 31}, {25, 31}, {26, 29}, {26, 33}, {27, 33}, {28, 31}, {28, 33}, {29, 32},
        {29, 33}, {30, 32}, {30, 33}, {31, 32}, {31, 33}, {32, 33},
    }};
    std::vector<Edge> edges;
    edges.reserve(k_edges.size());
    for (const auto& pair : k_edges) {
        edges.push_back({pair[0], pair[1]});
    }
    return DirectedGraph(34, std::move(edges));
}

DirectedGraph generate_grid_motif() {
    constexpr int side = 4;
    constexpr int n = side * side;
    const auto index = [](int row, int col) { return side * row + col; };

    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;
    const auto add = [&](int tail, int head) {
        if (tail != head && seen.emplace(tail, head).second) {
            edges.push_back({tail, head});
        }
    };

    for (int row = 0; row < side; ++row) {
        for (int col = 0; col < side; ++col) {
            if (col + 1 < side) {
                add(index(row, col), index(row, col + 1));
                add(index(row, col + 1), index(row, col));
            }
            if (row + 1 < side) {
                add(index(row, col), index(row + 1, col));
                add(index(row + 1, col), index(row, col));
            }
        }
    }

    const int broadcaster = index(2, 2);
    const int receiver = index(2, 3);
    for (int v = 0; v < n; ++v) {
        add(broadcaster, v);
    }
    for (int v = 0; v < n; ++v) {
        add(v, receiver);
    }
    return DirectedGraph(n, std::move(edges));
}

ExperimentResult run_equivalence(const DirectedGraph& g, const RegularizationConfig& cfg,
                                 const std::string& name) {
    if (connected_components(g).count != 1) {
        throw experiment_error("run_equivalence requires a connected graph");
    }
    const CentralityReport report = compute_report(g, cfg);
    const Eigen::VectorXd cfc = current_flow_closeness(g);

    ExperimentResult result;
    result.name = name;
    result.params = cfg;
    result.tables["s_v"] = to_std(report.s_v);
    result.tables["cfc"] = to_std(cfc);
    result.metrics["degenerate"] = 0.0;
    try {
        result.metrics["pearson_rho"] = pearson(report.s_v, cfc);
    } catch (const baseline_error&) {
        // Constant score vectors (vertex-transitive graphs in the tau -> 0
        // limit) make the correlation undefined; the run is still valid.
        result.metrics["degenerate"] = 1.0;
    }
    return result;
}

ExperimentResult run_grid_experiment(double alpha) {
    const DirectedGraph g = generate_grid_motif();
    const RegularizationConfig cfg;
    const CentralityReport report = compute_report(g, cfg, alpha);

    const std::vector<double> node_b = betweenness(g, BetweennessTarget::nodes, true);
    const std::vector<double> edge_b = betweenness(g, BetweennessTarget::edges, true);
    const Eigen::VectorXd node_b_vec =
        Eigen::Map<const Eigen::VectorXd>(node_b.data(), static_cast<Eigen::Index>(node_b.size()));

    ExperimentResult result;
    result.name = "grid";
    result.params = cfg;
    result.alpha = alpha;

    const Eigen::Index top_edge = argmax(report.s_e);
    result.metrics["hub_argmax"] = static_cast<double>(argmax(report.s_hub));
    result.metrics["auth_argmax"] = static_cast<double>(argmax(report.s_auth));
    result.metrics["sv_argmax"] = static_cast<double>(argmax(report.s_v));
    result.metrics["se_argmax"] = static_cast<double>(top_edge);
    result.metrics["se_top_tail"] = static_cast<double>(g.edges()[static_cast<std::size_t>(top_edge)].tail);
    result.metrics["se_top_head"] = static_cast<double>(g.edges()[static_cast<std::size_t>(top_edge)].head);
    result.metrics["cov_betweenness"] = coefficient_of_variation(nonzero_entries(node_b_vec));
    result.metrics["cov_hub"] = coefficient_of_variation(report.s_hub);

    result.tables["c_v"] = to_std(report.c_v);
    result.tables["c_e"] = to_std(report.c_e);
    result.tables["s_v"] = to_std(report.s_v);
    result.tables["s_e"] = to_std(report.s_e);
    result.tables["s_hub"] = to_std(report.s_hub);
    result.tables["s_auth"] = to_std(report.s_auth);
    result.tables["betweenness_nodes"] = node_b;
    result.tables["betweenness_edges"] = edge_b;
    return result;
}

} // namespace svdcent
