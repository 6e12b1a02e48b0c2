#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "svdcent/centrality.hpp"
#include "svdcent/graph.hpp"
#include "svdcent/spectral.hpp"

namespace svdcent {

/// Outcome of one experiment run. Everything needed to re-run it is recorded:
/// the config, the blend, and the seed (when randomness was involved), so a
/// result is reproducible from its own metadata.
struct ExperimentResult {
    std::string name;
    std::map<std::string, double> metrics;
    std::map<std::string, std::vector<double>> tables;
    RegularizationConfig params;
    std::optional<double> alpha;
    std::optional<std::uint32_t> seed;
};

/// Path graph P_n: vertices 0..n-1, edges i -> i+1.
DirectedGraph generate_path(int n);

/// Cycle graph C_n (n >= 3): edges i -> (i+1) mod n.
DirectedGraph generate_cycle(int n);

/// Undirected Erdos-Renyi G(n,p) oriented lower index -> higher index.
/// One uniform draw from mt19937(seed) per lexicographic pair i < j, edge
/// kept iff the draw is below p. Throws experiment_error unless p is in
/// [0,1] and n >= 0.
DirectedGraph generate_er(int n, double p, std::uint32_t seed);

/// The karate-club friendship graph: 34 vertices, 78 edges, embedded
/// statically and oriented lower index -> higher index.
DirectedGraph load_karate();

/// 4x4 directed lattice (16 nodes, row-major index 4*row+col, both
/// directions between lattice neighbors) with a planted broadcaster and
/// receiver: node (2,2) gains edges to all other nodes and node (2,3) gains
/// edges from all other nodes; duplicates of existing edges are skipped.
DirectedGraph generate_grid_motif();

/// Correlates the spectral score s_v computed under cfg against the
/// current-flow-closeness baseline. metrics: "pearson_rho" and "degenerate"
/// (normally 0; set to 1 with rho omitted when either vector is constant,
/// as on vertex-transitive graphs). tables: "s_v", "cfc".
ExperimentResult run_equivalence(const DirectedGraph& g, const RegularizationConfig& cfg,
                                 const std::string& name = "equivalence");

/// Full centrality report on the grid motif under the default config plus
/// betweenness baselines. metrics: argmaxes of s_hub/s_auth/s_v/s_e, the top
/// edge's endpoints, and coefficients of variation for the comparison
/// panels. tables: all score vectors and node/edge betweenness.
ExperimentResult run_grid_experiment(double alpha);

} // namespace svdcent
