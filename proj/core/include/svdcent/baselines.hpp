#pragma once

#include <vector>

#include <Eigen/Dense>

#include "svdcent/graph.hpp"
#include "svdcent/spectral.hpp"

namespace svdcent {

/// n x n symmetric matrix of pairwise effective resistances; zero diagonal,
/// +infinity across components.
using ResistanceMatrix = Eigen::MatrixXd;

/// R_ij = sum_k (u_{k,i} - u_{k,j})^2 / sigma_k^2, the quadratic form of the
/// pseudoinverse Laplacian. Expects an unregularized decomposition. Returns 0
/// for i == j and +infinity when i and j sit in different components (the
/// difference indicator then has mass outside the column span of U).
double effective_resistance(const SpectralDecomposition& d, int i, int j);

/// All-pairs effective resistance via the same spectral path.
ResistanceMatrix resistance_matrix(const SpectralDecomposition& d);

/// Executes the resistance-sum identity
///   sum_j R_ij = n * C_v(i) + trace(L0+)
/// and returns the per-vertex absolute residual, which is zero in exact
/// arithmetic on a connected graph. Throws baseline_error when the
/// decomposition belongs to a disconnected graph (rank < n-1), where the
/// identity's hypothesis fails.
Eigen::VectorXd check_resistance_sum_identity(const SpectralDecomposition& d);

/// Moore-Penrose pseudoinverse of a symmetric positive-semidefinite matrix by
/// dense eigendecomposition. Deliberately shares no code with the SVD path:
/// this is the independent reference the spectral results are audited
/// against. The rank cutoff applies on the eigenvalue scale
/// (w > eps * w_max * n); a square-rooted numerical zero would pass a
/// singular-value-scale threshold and poison every resistance.
Eigen::MatrixXd psd_pseudoinverse(const Eigen::MatrixXd& matrix);

/// Combinatorial Laplacian of the underlying undirected multigraph.
Eigen::MatrixXd combinatorial_laplacian(const DirectedGraph& g);

/// Current-flow closeness CFC(i) = (n-1) / sum_{j != i} R_ij, with R computed
/// from the dense reference pseudoinverse (not the SVD path). Direction is
/// ignored. Throws baseline_error on a disconnected graph or n < 2.
Eigen::VectorXd current_flow_closeness(const DirectedGraph& g);

enum class BetweennessTarget { nodes, edges };

/// Human-readable summary of the betweenness conventions below; embedded in
/// exported metadata because figure-level comparisons depend on them.
extern const char* const betweenness_convention;

/// Shortest-path betweenness with Brandes accumulation: all shortest paths
/// enumerated, fractional credit on ties, endpoints excluded. Parallel edges
/// are collapsed for path counting and share their arc's credit equally.
/// With respect_direction = false the graph is symmetrized first.
/// Normalization: nodes by (n-1)(n-2) directed / (n-1)(n-2)/2 undirected;
/// edges by n(n-1) directed / n(n-1)/2 undirected.
std::vector<double> betweenness(const DirectedGraph& g, BetweennessTarget target,
                                bool respect_direction);

/// Sample Pearson correlation. Throws baseline_error on length mismatch,
/// fewer than two entries, or a constant vector (undefined correlation).
double pearson(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

} // namespace svdcent
