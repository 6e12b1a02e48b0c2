#include "svdcent/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace svdcent {

Eigen::VectorXd vertex_centrality(const SpectralDecomposition& d,
                                  const RegularizationConfig& cfg) {
    return pseudoinverse_diagonal(d, PseudoinverseSide::vertex, cfg);
}

Eigen::VectorXd edge_centrality(const SpectralDecomposition& d,
                                const RegularizationConfig& cfg) {
    return pseudoinverse_diagonal(d, PseudoinverseSide::edge, cfg);
}

Eigen::VectorXd normalize_scores(const Eigen::VectorXd& centralities, double tau) {
    if (!(tau > 0.0)) {
        throw centrality_error("normalize_scores requires tau > 0, got " +
                               std::to_string(tau));
    }
    if (centralities.size() == 0) {
        return Eigen::VectorXd();
    }
    for (Eigen::Index i = 0; i < centralities.size(); ++i) {
        if (!(centralities(i) >= 0.0)) {
            throw centrality_error("normalize_scores requires nonnegative centralities; entry " +
                                   std::to_string(i) + " is " + std::to_string(centralities(i)));
        }
    }
    Eigen::VectorXd scores = (centralities.array() + tau).inverse();
    const double peak = scores.maxCoeff();
    scores /= peak;
    return scores;
}

namespace {

// Divides by the maximum entry only when it is positive; an all-zero blend
// (possible when alpha = 0 and a vertex touches no edges) is left as is.
void max_normalize(Eigen::VectorXd& v) {
    if (v.size() == 0) {
        return;
    }
    const double peak = v.maxCoeff();
    if (peak > 0.0) {
        v /= peak;
    }
}

} // namespace

std::pair<Eigen::VectorXd, Eigen::VectorXd> hub_authority(const DirectedGraph& g,
                                                          const Eigen::VectorXd& s_v,
                                                          const Eigen::VectorXd& s_e,
                                                          double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw centrality_error("hub_authority requires alpha in [0, 1], got " +
                               std::to_string(alpha));
    }
    if (s_v.size() != g.vertex_count()) {
        throw centrality_error("hub_authority: vertex score length " +
                               std::to_string(s_v.size()) + " does not match vertex count " +
                               std::to_string(g.vertex_count()));
    }
    if (s_e.size() != g.edge_count()) {
        throw centrality_error("hub_authority: edge score length " +
                               std::to_string(s_e.size()) + " does not match edge count " +
                               std::to_string(g.edge_count()));
    }

    const Eigen::Index n = g.vertex_count();
    Eigen::VectorXd out_mass = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd in_mass = Eigen::VectorXd::Zero(n);
    const auto& edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        out_mass(edges[e].tail) += s_e(static_cast<Eigen::Index>(e));
        in_mass(edges[e].head) += s_e(static_cast<Eigen::Index>(e));
    }

    Eigen::VectorXd hub = alpha * s_v + (1.0 - alpha) * out_mass;
    Eigen::VectorXd authority = alpha * s_v + (1.0 - alpha) * in_mass;
    max_normalize(hub);
    max_normalize(authority);
    return {std::move(hub), std::move(authority)};
}

CentralityReport compute_report(const DirectedGraph& g,
                                const RegularizationConfig& cfg,
                                std::optional<double> alpha,
                                std::optional<Eigen::Index> rank_k) {
    cfg.validate();
    CentralityReport report;
    report.params = cfg;
    report.truncation_k = rank_k;

    if (g.edge_count() == 0) {
        report.c_v = Eigen::VectorXd::Zero(g.vertex_count());
        report.c_e = Eigen::VectorXd();
        report.s_v = normalize_scores(report.c_v, cfg.tau);
        report.s_e = Eigen::VectorXd();
        if (alpha) {
            report.alpha = *alpha;
            auto [hub, authority] = hub_authority(g, report.s_v, report.s_e, *alpha);
            report.s_hub = std::move(hub);
            report.s_auth = std::move(authority);
        }
        return report;
    }

    const IncidenceMatrix b = build_incidence(g);
    const SpectralDecomposition d = decompose(b, cfg, rank_k);
    report.c_v = vertex_centrality(d, cfg);
    report.c_e = edge_centrality(d, cfg);
    report.s_v = normalize_scores(report.c_v, cfg.tau);
    report.s_e = normalize_scores(report.c_e, cfg.tau);
    if (alpha) {
        report.alpha = *alpha;
        auto [hub, authority] = hub_authority(g, report.s_v, report.s_e, *alpha);
        report.s_hub = std::move(hub);
        report.s_auth = std::move(authority);
    }
    return report;
}

CentralityReport hypergraph_centralities(const Hypergraph& h,
                                         const RegularizationConfig& cfg,
                                         std::optional<Eigen::Index> rank_k) {
    cfg.validate();
    CentralityReport report;
    report.params = cfg;
    report.truncation_k = rank_k;

    if (h.hyperedge_count() == 0) {
        report.c_v = Eigen::VectorXd::Zero(h.vertex_count());
        report.c_e = Eigen::VectorXd();
        report.s_v = normalize_scores(report.c_v, cfg.tau);
        report.s_e = Eigen::VectorXd();
        return report;
    }

    const IncidenceMatrix b = build_hypergraph_incidence(h);
    const SpectralDecomposition d = decompose(b, cfg, rank_k);
    report.c_v = vertex_centrality(d, cfg);
    report.c_e = edge_centrality(d, cfg);
    report.s_v = normalize_scores(report.c_v, cfg.tau);
    report.s_e = normalize_scores(report.c_e, cfg.tau);
    return report;
}

} // namespace svdcent
