#pragma once

#include <optional>
#include <utility>

#include <Eigen/Dense>

#include "svdcent/graph.hpp"
#include "svdcent/spectral.hpp"

namespace svdcent {

/// Everything one run of the pipeline produces. Raw centralities c_v and c_e
/// are resistance-like (smaller = more central); normalized scores s_v, s_e
/// invert them into (0,1] with 1 at the most central element. Hub/authority
/// vectors are empty unless an alpha blend was requested (or the input had no
/// orientation, as for hypergraphs).
struct CentralityReport {
    Eigen::VectorXd c_v;
    Eigen::VectorXd c_e;
    Eigen::VectorXd s_v;
    Eigen::VectorXd s_e;
    Eigen::VectorXd s_hub;
    Eigen::VectorXd s_auth;
    RegularizationConfig params;
    std::optional<double> alpha;
    std::optional<Eigen::Index> truncation_k;
};

/// C_v(i) = sum_k u_{k,i}^2 / w_k, the vertex diagonal of the pseudoinverse
/// Laplacian under cfg's weighting. A zero entry means the vertex is
/// isolated (its coordinate lies in the kernel of L0).
Eigen::VectorXd vertex_centrality(const SpectralDecomposition& d, const RegularizationConfig& cfg);

/// C_e(e) = sum_k v_{k,e}^2 / w_k, the edge diagonal of the pseudoinverse
/// edge Laplacian.
Eigen::VectorXd edge_centrality(const SpectralDecomposition& d, const RegularizationConfig& cfg);

/// S(i) = (1/(c(i)+tau)) / max_l (1/(c(l)+tau)): inverts resistance-like
/// values into scores in (0,1] where the argmin of c scores exactly 1.
/// Requires non-negative c and tau > 0; empty input yields empty output.
Eigen::VectorXd normalize_scores(const Eigen::VectorXd& c, double tau);

/// Orientation-aware blend on normalized scores:
///   s_hub  = alpha*s_v + (1-alpha)*I_out*s_e
///   s_auth = alpha*s_v + (1-alpha)*I_in *s_e
/// where I_out/I_in aggregate s_e over a vertex's outgoing/incoming edges.
/// Each result is divided by its maximum. alpha must lie in [0,1].
std::pair<Eigen::VectorXd, Eigen::VectorXd> hub_authority(const DirectedGraph& g,
                                                          const Eigen::VectorXd& s_v,
                                                          const Eigen::VectorXd& s_e,
                                                          double alpha);

/// Full pipeline for a directed graph: incidence, decomposition under cfg
/// (truncated to k when given), raw centralities, normalized scores, and the
/// hub/authority blend when alpha is given.
CentralityReport compute_report(const DirectedGraph& g, const RegularizationConfig& cfg,
                                std::optional<double> alpha = std::nullopt,
                                std::optional<Eigen::Index> k = std::nullopt);

/// Identical spectral pipeline over the binary incidence matrix. Hub and
/// authority scores are omitted: binary columns carry no orientation.
/// An empty hypergraph yields an empty report.
CentralityReport hypergraph_centralities(const Hypergraph& h, const RegularizationConfig& cfg,
                                         std::optional<Eigen::Index> k = std::nullopt);

} // namespace svdcent
