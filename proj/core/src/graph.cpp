#include "svdcent/graph.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace svdcent {

DirectedGraph::DirectedGraph(int vertex_count, std::vector<Edge> edges,
                             std::vector<std::string> labels)
    : n_(vertex_count), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (n_ < 0)
        throw graph_error("vertex count must be non-negative, got " + std::to_string(n_));
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
        throw graph_error("label count " + std::to_string(labels_.size()) +
                          " does not match vertex count " + std::to_string(n_));
    for (std::size_t j = 0; j < edges_.size(); ++j) {
        const Edge& e = edges_[j];
        if (e.tail < 0 || e.tail >= n_ || e.head < 0 || e.head >= n_)
            throw graph_error("edge " + std::to_string(j) + " endpoint out of range: (" +
                              std::to_string(e.tail) + ", " + std::to_string(e.head) + ")");
        if (e.tail == e.head)
            throw graph_error("edge " + std::to_string(j) + " is a self-loop on vertex " +
                              std::to_string(e.tail) +
                              "; self-loops have an all-zero incidence column and are rejected");
    }
}

Hypergraph::Hypergraph(int vertex_count, std::vector<std::vector<int>> hyperedges,
                       std::vector<std::string> labels)
    : n_(vertex_count), hyperedges_(std::move(hyperedges)), labels_(std::move(labels)) {
    if (n_ < 0)
        throw graph_error("vertex count must be non-negative, got " + std::to_string(n_));
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
        throw graph_error("label count " + std::to_string(labels_.size()) +
                          " does not match vertex count " + std::to_string(n_));
    for (std::size_t h = 0; h < hyperedges_.size(); ++h) {
        auto& members = hyperedges_[h];
        if (members.empty())
            throw graph_error("hyperedge " + std::to_string(h) + " is empty");
        for (int v : members)
            if (v < 0 || v >= n_)
                throw graph_error("hyperedge " + std::to_string(h) + " member out of range: " +
                                  std::to_string(v));
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
    }
}

IncidenceMatrix::IncidenceMatrix(Kind kind, Eigen::MatrixXd dense, std::vector<int> column_map)
    : kind_(kind), rows_(dense.rows()), cols_(dense.cols()), column_map_(std::move(column_map)) {
    nonzeros_ = static_cast<std::size_t>((dense.array() != 0.0).count());
    storage_ = std::move(dense);
}

IncidenceMatrix::IncidenceMatrix(Kind kind, Eigen::SparseMatrix<double> sparse,
                                 std::vector<int> column_map)
    : kind_(kind), rows_(sparse.rows()), cols_(sparse.cols()), column_map_(std::move(column_map)) {
    sparse.makeCompressed();
    nonzeros_ = static_cast<std::size_t>(sparse.nonZeros());
    storage_ = std::move(sparse);
}

Eigen::MatrixXd IncidenceMatrix::dense() const {
    if (is_dense())
        return std::get<Eigen::MatrixXd>(storage_);
    return Eigen::MatrixXd(std::get<Eigen::SparseMatrix<double>>(storage_));
}

const Eigen::SparseMatrix<double>& IncidenceMatrix::sparse() const {
    if (is_dense())
        throw graph_error("incidence matrix is stored dense; use dense()");
    return std::get<Eigen::SparseMatrix<double>>(storage_);
}

namespace {

std::vector<int> identity_column_map(int m) {
    std::vector<int> map(static_cast<std::size_t>(m));
    std::iota(map.begin(), map.end(), 0);
    return map;
}

} // namespace

IncidenceMatrix build_incidence(const DirectedGraph& g, std::size_t dense_threshold) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const std::size_t nnz = static_cast<std::size_t>(m) * 2;
    if (nnz <= dense_threshold) {
        Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, m);
        for (int j = 0; j < m; ++j) {
            b(g.edges()[j].tail, j) = -1.0;
            b(g.edges()[j].head, j) = 1.0;
        }
        return IncidenceMatrix(IncidenceMatrix::Kind::oriented, std::move(b),
                               identity_column_map(m));
    }
    Eigen::SparseMatrix<double> b(n, m);
    std::vector<Eigen::Triplet<double>> triplets;
    triplets.reserve(nnz);
    for (int j = 0; j < m; ++j) {
        triplets.emplace_back(g.edges()[j].tail, j, -1.0);
        triplets.emplace_back(g.edges()[j].head, j, 1.0);
    }
    b.setFromTriplets(triplets.begin(), triplets.end());
    return IncidenceMatrix(IncidenceMatrix::Kind::oriented, std::move(b), identity_column_map(m));
}

IncidenceMatrix build_hypergraph_incidence(const Hypergraph& h, std::size_t dense_threshold) {
    const int n = h.vertex_count();
    const int m = h.hyperedge_count();
    std::size_t nnz = 0;
    for (const auto& members : h.hyperedges())
        nnz += members.size();
    if (nnz <= dense_threshold) {
        Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, m);
        for (int j = 0; j < m; ++j)
            for (int v : h.hyperedges()[j])
                b(v, j) = 1.0;
        return IncidenceMatrix(IncidenceMatrix::Kind::binary, std::move(b),
                               identity_column_map(m));
    }
    Eigen::SparseMatrix<double> b(n, m);
    std::vector<Eigen::Triplet<double>> triplets;
    triplets.reserve(nnz);
    for (int j = 0; j < m; ++j)
        for (int v : h.hyperedges()[j])
            triplets.emplace_back(v, j, 1.0);
    b.setFromTriplets(triplets.begin(), triplets.end());
    return IncidenceMatrix(IncidenceMatrix::Kind::binary, std::move(b), identity_column_map(m));
}

IncidenceMatrix flip_orientations(const IncidenceMatrix& b, const std::vector<int>& columns) {
    if (b.kind() != IncidenceMatrix::Kind::oriented)
        throw graph_error("orientation flips are undefined for a binary incidence matrix");
    for (int c : columns)
        if (c < 0 || c >= b.cols())
            throw graph_error("flip column out of range: " + std::to_string(c));
    if (b.is_dense()) {
        Eigen::MatrixXd flipped = b.dense();
        for (int c : columns)
            flipped.col(c) *= -1.0;
        return IncidenceMatrix(b.kind(), std::move(flipped), b.column_map());
    }
    Eigen::SparseMatrix<double> flipped = b.sparse();
    std::vector<char> flip(static_cast<std::size_t>(b.cols()), 0);
    for (int c : columns)
        flip[static_cast<std::size_t>(c)] = 1;
    for (int c = 0; c < flipped.outerSize(); ++c)
        if (flip[static_cast<std::size_t>(c)])
            for (Eigen::SparseMatrix<double>::InnerIterator it(flipped, c); it; ++it)
                it.valueRef() *= -1.0;
    return IncidenceMatrix(b.kind(), std::move(flipped), b.column_map());
}

ComponentPartition connected_components(const DirectedGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(n));
    for (const Edge& e : g.edges()) {
        adjacency[static_cast<std::size_t>(e.tail)].push_back(e.head);
        adjacency[static_cast<std::size_t>(e.head)].push_back(e.tail);
    }
    ComponentPartition partition;
    partition.component_of.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (partition.component_of[static_cast<std::size_t>(start)] >= 0)
            continue;
        const int id = partition.count++;
        stack.push_back(start);
        partition.component_of[static_cast<std::size_t>(start)] = id;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v : adjacency[static_cast<std::size_t>(u)]) {
                if (partition.component_of[static_cast<std::size_t>(v)] < 0) {
                    partition.component_of[static_cast<std::size_t>(v)] = id;
                    stack.push_back(v);
                }
            }
        }
    }
    return partition;
}

int cycle_rank(const DirectedGraph& g) {
    return g.edge_count() - g.vertex_count() + connected_components(g).count;
}

} // namespace svdcent
