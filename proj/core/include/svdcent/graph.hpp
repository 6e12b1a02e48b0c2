#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "svdcent/errors.hpp"

namespace svdcent {

/// One oriented edge: the unit of directionality the whole toolkit is built
/// on. An edge leaves its tail and enters its head.
struct Edge {
    int tail = 0;
    int head = 0;

    friend bool operator==(const Edge& a, const Edge& b) {
        return a.tail == b.tail && a.head == b.head;
    }
};

/// Directed multigraph with a fixed vertex count and a stable edge order.
/// Edge order defines incidence-matrix column order, so it is part of the
/// contract, not an implementation detail. Parallel edges are allowed;
/// self-loops are rejected because they would produce an all-zero incidence
/// column.
class DirectedGraph {
public:
    DirectedGraph() = default;

    /// Throws graph_error if an endpoint is out of [0, vertex_count), if an
    /// edge is a self-loop, or if labels are given but their count does not
    /// match vertex_count.
    DirectedGraph(int vertex_count, std::vector<Edge> edges,
                  std::vector<std::string> labels = {});

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Empty when the graph was built from plain indices.
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    bool has_labels() const noexcept { return !labels_.empty(); }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
};

/// Hypergraph as a vertex count plus hyperedges in a stable order. Each
/// hyperedge is stored sorted with duplicate members removed; duplicate
/// hyperedges (identical member sets) are kept as distinct columns.
class Hypergraph {
public:
    Hypergraph() = default;

    /// Throws graph_error on an out-of-range member or an empty hyperedge.
    Hypergraph(int vertex_count, std::vector<std::vector<int>> hyperedges,
               std::vector<std::string> labels = {});

    int vertex_count() const noexcept { return n_; }
    int hyperedge_count() const noexcept { return static_cast<int>(hyperedges_.size()); }
    const std::vector<std::vector<int>>& hyperedges() const noexcept { return hyperedges_; }

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    bool has_labels() const noexcept { return !labels_.empty(); }

private:
    int n_ = 0;
    std::vector<std::vector<int>> hyperedges_;
    std::vector<std::string> labels_;
};

/// Rectangular incidence matrix of a graph or hypergraph. Oriented columns
/// hold exactly one -1 (tail) and one +1 (head); binary columns hold ones on
/// the member vertices. Storage is dense below a nonzero-count threshold and
/// sparse above it; both expose the same values.
class IncidenceMatrix {
public:
    enum class Kind { oriented, binary };

    /// Nonzero count at or below which builders choose dense storage.
    static constexpr std::size_t default_dense_threshold = 10000;

    IncidenceMatrix() = default;
    IncidenceMatrix(Kind kind, Eigen::MatrixXd dense, std::vector<int> column_map);
    IncidenceMatrix(Kind kind, Eigen::SparseMatrix<double> sparse, std::vector<int> column_map);

    Kind kind() const noexcept { return kind_; }
    Eigen::Index rows() const noexcept { return rows_; }
    Eigen::Index cols() const noexcept { return cols_; }
    std::size_t nonzeros() const noexcept { return nonzeros_; }
    bool is_dense() const noexcept { return std::holds_alternative<Eigen::MatrixXd>(storage_); }

    /// Column index -> id of the originating edge/hyperedge.
    const std::vector<int>& column_map() const noexcept { return column_map_; }

    /// Materializes a dense copy when stored sparse.
    Eigen::MatrixXd dense() const;

    /// Valid only for sparse storage; use dense() otherwise.
    const Eigen::SparseMatrix<double>& sparse() const;

private:
    Kind kind_ = Kind::oriented;
    Eigen::Index rows_ = 0;
    Eigen::Index cols_ = 0;
    std::size_t nonzeros_ = 0;
    std::vector<int> column_map_;
    std::variant<Eigen::MatrixXd, Eigen::SparseMatrix<double>> storage_;
};

/// Builds the oriented incidence matrix: column j has -1 at edges[j].tail and
/// +1 at edges[j].head. Column order follows edge order.
IncidenceMatrix build_incidence(const DirectedGraph& g,
                                std::size_t dense_threshold = IncidenceMatrix::default_dense_threshold);

/// Builds the binary incidence matrix: entry (i, h) is 1 iff vertex i belongs
/// to hyperedge h.
IncidenceMatrix build_hypergraph_incidence(const Hypergraph& h,
                                           std::size_t dense_threshold = IncidenceMatrix::default_dense_threshold);

/// Returns a copy of b with the selected columns multiplied by -1, i.e.
/// B' = B * D for a diagonal sign matrix D. Throws graph_error for a binary
/// matrix (orientation is undefined) or an out-of-range column index.
IncidenceMatrix flip_orientations(const IncidenceMatrix& b, const std::vector<int>& columns);

/// Weak-connectivity partition: edge direction is ignored.
struct ComponentPartition {
    std::vector<int> component_of; // vertex -> component id, ids dense from 0
    int count = 0;
};

ComponentPartition connected_components(const DirectedGraph& g);

/// First Betti number (independent cycle count): m - n + c.
int cycle_rank(const DirectedGraph& g);

} // namespace svdcent
