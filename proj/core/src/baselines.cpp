#include "svdcent/baselines.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>

#include "svdcent/errors.hpp"

namespace svdcent {

namespace {

// A projection residual this large on a unit-scale indicator vector can only
// come from kernel mass, i.e. the two endpoints live in different components.
constexpr double k_component_residual = 1e-6;

void require_vertex_index(const SpectralDecomposition& d, int i, const char* role) {
    if (i < 0 || i >= d.U.rows()) {
        throw baseline_error("effective_resistance: " + std::string(role) + " index " +
                             std::to_string(i) + " outside [0, " + std::to_string(d.U.rows()) +
                             ")");
    }
}

} // namespace

double effective_resistance(const SpectralDecomposition& d, int i, int j) {
    require_vertex_index(d, i, "first");
    require_vertex_index(d, j, "second");
    if (i == j) {
        return 0.0;
    }
    const Eigen::VectorXd diff = d.U.row(i) - d.U.row(j);
    // e_i - e_j has squared norm 2; whatever the row difference fails to
    // capture lies outside the column span of U.
    const double residual = 2.0 - diff.squaredNorm();
    if (residual > k_component_residual) {
        return std::numeric_limits<double>::infinity();
    }
    return (diff.array().square() / d.sigma.array().square()).sum();
}

ResistanceMatrix resistance_matrix(const SpectralDecomposition& d) {
    const Eigen::Index n = d.U.rows();
    ResistanceMatrix r = ResistanceMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double value = effective_resistance(d, static_cast<int>(i), static_cast<int>(j));
            r(i, j) = value;
            r(j, i) = value;
        }
    }
    return r;
}

Eigen::VectorXd check_resistance_sum_identity(const SpectralDecomposition& d) {
    const Eigen::Index n = d.U.rows();
    if (d.sigma.size() < n - 1) {
        throw baseline_error("resistance-sum identity needs a connected graph: rank " +
                             std::to_string(d.sigma.size()) + " < " + std::to_string(n - 1));
    }
    const Eigen::VectorXd inv_w = d.sigma.array().square().inverse();
    const Eigen::VectorXd c_v = d.U.array().square().matrix() * inv_w;
    const double trace = inv_w.sum();
    const ResistanceMatrix r = resistance_matrix(d);
    Eigen::VectorXd residual(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        residual(i) = std::abs(r.row(i).sum() - (static_cast<double>(n) * c_v(i) + trace));
    }
    return residual;
}

Eigen::MatrixXd psd_pseudoinverse(const Eigen::MatrixXd& matrix) {
    if (matrix.rows() != matrix.cols()) {
        throw baseline_error("psd_pseudoinverse expects a square matrix, got " +
                             std::to_string(matrix.rows()) + "x" + std::to_string(matrix.cols()));
    }
    if (!matrix.allFinite()) {
        throw baseline_error("psd_pseudoinverse: matrix contains non-finite entries");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix);
    if (solver.info() != Eigen::Success) {
        throw baseline_error("psd_pseudoinverse: eigendecomposition failed to converge");
    }
    const Eigen::VectorXd& w = solver.eigenvalues();
    const Eigen::MatrixXd& q = solver.eigenvectors();
    const double w_max = w.size() > 0 ? w.maxCoeff() : 0.0;
    Eigen::MatrixXd pinv = Eigen::MatrixXd::Zero(matrix.rows(), matrix.cols());
    if (w_max <= 0.0) {
        return pinv;
    }
    const double cutoff =
        std::numeric_limits<double>::epsilon() * w_max * static_cast<double>(matrix.rows());
    for (Eigen::Index k = 0; k < w.size(); ++k) {
        if (w(k) > cutoff) {
            pinv.noalias() += (q.col(k) * q.col(k).transpose()) / w(k);
        }
    }
    return pinv;
}

Eigen::MatrixXd combinatorial_laplacian(const DirectedGraph& g) {
    const Eigen::Index n = g.vertex_count();
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
    for (const Edge& e : g.edges()) {
        l(e.tail, e.tail) += 1.0;
        l(e.head, e.head) += 1.0;
        l(e.tail, e.head) -= 1.0;
        l(e.head, e.tail) -= 1.0;
    }
    return l;
}

Eigen::VectorXd current_flow_closeness(const DirectedGraph& g) {
    const Eigen::Index n = g.vertex_count();
    if (n < 2) {
        throw baseline_error("current_flow_closeness needs at least 2 vertices, got " +
                             std::to_string(n));
    }
    if (connected_components(g).count != 1) {
        throw baseline_error("current_flow_closeness is undefined on a disconnected graph");
    }
    const Eigen::MatrixXd pinv = psd_pseudoinverse(combinatorial_laplacian(g));
    Eigen::VectorXd cfc(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double total = 0.0;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (j == i) {
                continue;
            }
            total += pinv(i, i) + pinv(j, j) - 2.0 * pinv(i, j);
        }
        cfc(i) = static_cast<double>(n - 1) / total;
    }
    return cfc;
}

const char* const betweenness_convention =
    "shortest-path betweenness, Brandes accumulation: every shortest path counted, "
    "fractional credit on ties, path endpoints excluded from vertex scores; parallel "
    "edges collapsed for path counting and sharing their arc's credit equally; vertex "
    "scores scaled by 1/((n-1)(n-2)) directed and 2/((n-1)(n-2)) undirected, edge "
    "scores by 1/(n(n-1)) directed and 2/(n(n-1)) undirected";

std::vector<double> betweenness(const DirectedGraph& g, BetweennessTarget target,
                                bool respect_direction) {
    const int n = static_cast<int>(g.vertex_count());
    const auto& edges = g.edges();
    const std::size_t m = edges.size();

    // Distinct arcs of the traversal graph; parallel originals are recorded so
    // the arc's accumulated credit can be split among them afterwards.
    std::map<std::pair<int, int>, int> arc_index;
    std::vector<std::vector<int>> arc_originals;
    std::vector<std::vector<std::pair<int, int>>> adjacency(static_cast<std::size_t>(n));
    auto register_arc = [&](int from, int to, int original) {
        const auto key = std::make_pair(from, to);
        auto found = arc_index.find(key);
        if (found == arc_index.end()) {
            found = arc_index.emplace(key, static_cast<int>(arc_originals.size())).first;
            arc_originals.emplace_back();
            adjacency[static_cast<std::size_t>(from)].emplace_back(to, found->second);
        }
        arc_originals[static_cast<std::size_t>(found->second)].push_back(original);
    };
    for (std::size_t e = 0; e < m; ++e) {
        register_arc(edges[e].tail, edges[e].head, static_cast<int>(e));
        if (!respect_direction) {
            register_arc(edges[e].head, edges[e].tail, static_cast<int>(e));
        }
    }

    std::vector<double> node_score(static_cast<std::size_t>(n), 0.0);
    std::vector<double> arc_score(arc_originals.size(), 0.0);

    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<double> sigma(static_cast<std::size_t>(n));
    std::vector<double> delta(static_cast<std::size_t>(n));
    std::vector<std::vector<std::pair<int, int>>> pred(static_cast<std::size_t>(n));

    for (int s = 0; s < n; ++s) {
        order.clear();
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto& p : pred) {
            p.clear();
        }
        dist[static_cast<std::size_t>(s)] = 0;
        sigma[static_cast<std::size_t>(s)] = 1.0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            order.push_back(v);
            for (const auto& [w, arc] : adjacency[static_cast<std::size_t>(v)]) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    queue.push_back(w);
                }
                if (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(v)] + 1) {
                    sigma[static_cast<std::size_t>(w)] += sigma[static_cast<std::size_t>(v)];
                    pred[static_cast<std::size_t>(w)].emplace_back(v, arc);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const int w = *it;
            const double coefficient = (1.0 + delta[static_cast<std::size_t>(w)]) /
                                       sigma[static_cast<std::size_t>(w)];
            for (const auto& [v, arc] : pred[static_cast<std::size_t>(w)]) {
                const double credit = sigma[static_cast<std::size_t>(v)] * coefficient;
                arc_score[static_cast<std::size_t>(arc)] += credit;
                delta[static_cast<std::size_t>(v)] += credit;
            }
            if (w != s) {
                node_score[static_cast<std::size_t>(w)] += delta[static_cast<std::size_t>(w)];
            }
        }
    }

    // A symmetrized run visits every unordered pair from both ends; halving
    // restores the once-per-pair undirected count.
    const double pair_factor = respect_direction ? 1.0 : 0.5;

    if (target == BetweennessTarget::nodes) {
        const double scale = static_cast<double>(n - 1) * static_cast<double>(n - 2) * pair_factor;
        if (scale > 0.0) {
            for (double& value : node_score) {
                value *= pair_factor / scale;
            }
        }
        return node_score;
    }

    std::vector<double> edge_score(m, 0.0);
    for (std::size_t a = 0; a < arc_originals.size(); ++a) {
        const double share = arc_score[a] / static_cast<double>(arc_originals[a].size());
        for (int original : arc_originals[a]) {
            edge_score[static_cast<std::size_t>(original)] += share;
        }
    }
    const double scale = static_cast<double>(n) * static_cast<double>(n - 1) * pair_factor;
    if (scale > 0.0) {
        for (double& value : edge_score) {
            value *= pair_factor / scale;
        }
    }
    return edge_score;
}

double pearson(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    if (x.size() != y.size()) {
        throw baseline_error("pearson: length mismatch " + std::to_string(x.size()) + " vs " +
                             std::to_string(y.size()));
    }
    if (x.size() < 2) {
        throw baseline_error("pearson needs at least two samples, got " +
                             std::to_string(x.size()));
    }
    const Eigen::ArrayXd xc = x.array() - x.mean();
    const Eigen::ArrayXd yc = y.array() - y.mean();
    const double sx = std::sqrt(xc.square().sum());
    const double sy = std::sqrt(yc.square().sum());
    if (sx == 0.0 || sy == 0.0) {
        throw baseline_error("pearson is undefined for a constant vector");
    }
    return (xc * yc).sum() / (sx * sy);
}

} // namespace svdcent
