#include <algorithm>
#include <random>
#include <vector>

#include <doctest.h>

#include "svdcent/baselines.hpp"
#include "svdcent/centrality.hpp"
#include "svdcent/graph.hpp"
#include "svdcent/spectral.hpp"
#include "test_support.hpp"

using namespace svdcent;

namespace {

std::vector<int> random_column_subset(std::mt19937& rng, Eigen::Index m) {
    std::vector<int> columns;
    std::uniform_int_distribution<int> coin(0, 1);
    for (Eigen::Index e = 0; e < m; ++e) {
        if (coin(rng) == 1) {
            columns.push_back(static_cast<int>(e));
        }
    }
    return columns;
}

} // namespace

TEST_SUITE_BEGIN("properties");

TEST_CASE("rank counts non-kernel directions, nullity counts independent cycles") {
    std::mt19937 rng(2026);
    for (int trial = 0; trial < 50; ++trial) {
        const DirectedGraph g = test::random_graph(rng, 2, 25);
        const SpectralDecomposition d = compact_svd(build_incidence(g));
        const int n = static_cast<int>(g.vertex_count());
        const int m = static_cast<int>(g.edge_count());
        const int c = connected_components(g).count;
        CHECK(d.numerical_rank == n - c);
        CHECK(m - static_cast<int>(d.numerical_rank) == m - n + c);
        CHECK(cycle_rank(g) == m - n + c);
    }
}

TEST_CASE("orientation flips never move the spectrum or the centralities") {
    std::mt19937 rng(7011);
    const RegularizationConfig cfg;
    for (int trial = 0; trial < 5; ++trial) {
        const DirectedGraph g = test::random_connected_graph(rng, 4, 18);
        const IncidenceMatrix b = build_incidence(g);
        const SpectralDecomposition base = decompose(b, cfg);
        const Eigen::VectorXd base_cv = pseudoinverse_diagonal(base, PseudoinverseSide::vertex, cfg);
        const Eigen::VectorXd base_ce = pseudoinverse_diagonal(base, PseudoinverseSide::edge, cfg);
        for (int subset = 0; subset < 5; ++subset) {
            const IncidenceMatrix flipped =
                flip_orientations(b, random_column_subset(rng, b.cols()));
            const SpectralDecomposition d = decompose(flipped, cfg);
            CHECK(test::max_abs_diff(d.sigma, base.sigma) <= 1e-10);
            CHECK(test::max_abs_diff(pseudoinverse_diagonal(d, PseudoinverseSide::vertex, cfg),
                                     base_cv) <= 1e-10);
            CHECK(test::max_abs_diff(pseudoinverse_diagonal(d, PseudoinverseSide::edge, cfg),
                                     base_ce) <= 1e-10);
        }
    }
}

TEST_CASE("singular triples satisfy the defining equations") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 10; ++trial) {
        const DirectedGraph g = test::random_connected_graph(rng, 3, 20);
        const IncidenceMatrix b = build_incidence(g);
        const Eigen::MatrixXd dense = b.dense();
        const SpectralDecomposition d = compact_svd(b);
        REQUIRE(d.sigma.size() > 0);
        const double sigma_max = d.sigma(0);
        for (Eigen::Index k = 0; k < d.sigma.size(); ++k) {
            CHECK((dense * d.V.col(k) - d.sigma(k) * d.U.col(k)).norm() <= 1e-8 * sigma_max);
            CHECK((dense.transpose() * d.U.col(k) - d.sigma(k) * d.V.col(k)).norm() <=
                  1e-8 * sigma_max);
        }
        const Eigen::MatrixXd laplacian = dense * dense.transpose();
        const Eigen::MatrixXd rebuilt =
            d.U * d.sigma.array().square().matrix().asDiagonal() * d.U.transpose();
        CHECK((laplacian - rebuilt).norm() <= 1e-10 * std::max(1.0, laplacian.norm()));
    }
}

TEST_CASE("singular factors are orthonormal") {
    std::mt19937 rng(555);
    for (int trial = 0; trial < 10; ++trial) {
        const DirectedGraph g = test::random_graph(rng, 2, 25);
        const SpectralDecomposition d = compact_svd(build_incidence(g));
        const Eigen::Index r = d.sigma.size();
        if (r == 0) {
            continue;
        }
        const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(r, r);
        CHECK((d.U.transpose() * d.U - identity).cwiseAbs().maxCoeff() <= 1e-12);
        CHECK((d.V.transpose() * d.V - identity).cwiseAbs().maxCoeff() <= 1e-12);
        for (Eigen::Index k = 1; k < r; ++k) {
            CHECK(d.sigma(k) <= d.sigma(k - 1));
        }
        CHECK(d.sigma(r - 1) > 0.0);
    }
}

TEST_CASE("centralities are strictly positive off the kernel") {
    std::mt19937 rng(9001);
    const RegularizationConfig cfg;
    for (int trial = 0; trial < 10; ++trial) {
        const DirectedGraph g = test::random_connected_graph(rng, 2, 20);
        const CentralityReport report = compute_report(g, cfg);
        CHECK(report.c_v.minCoeff() > 0.0);
        CHECK(report.c_e.minCoeff() > 0.0);
        CHECK(report.s_v.maxCoeff() == 1.0);
        CHECK(report.s_e.maxCoeff() == 1.0);
        CHECK(report.s_v.minCoeff() > 0.0);
    }
}

TEST_CASE("truncation keeps the energy ledger balanced") {
    std::mt19937 rng(1312);
    for (int trial = 0; trial < 10; ++trial) {
        const DirectedGraph g = test::random_connected_graph(rng, 5, 25);
        const IncidenceMatrix b = build_incidence(g);
        const SpectralDecomposition full = compact_svd(b);
        const Eigen::Index r = full.sigma.size();
        const Eigen::Index k = std::max<Eigen::Index>(1, r / 2);
        const SpectralDecomposition truncated = truncated_svd(b, k);
        REQUIRE(truncated.sigma.size() == k);
        CHECK(truncated.truncated_to == k);
        CHECK(test::max_abs_diff(truncated.sigma, full.sigma.head(k)) <= 1e-12);
        const double total_energy = b.dense().squaredNorm();
        const double kept_energy = truncated.sigma.squaredNorm();
        const double tail = truncated.frobenius_tail;
        CHECK(std::abs(kept_energy + tail * tail - total_energy) <= 1e-9 * total_energy);
    }
}

TEST_CASE("normalized scores invert the raw ordering") {
    std::mt19937 rng(31337);
    std::uniform_real_distribution<double> raw(0.0, 5.0);
    for (int trial = 0; trial < 20; ++trial) {
        Eigen::VectorXd c(12);
        for (Eigen::Index i = 0; i < c.size(); ++i) {
            c(i) = raw(rng);
        }
        const Eigen::VectorXd s = normalize_scores(c, 1e-8);
        CHECK(s.maxCoeff() == 1.0);
        CHECK(s.minCoeff() > 0.0);
        for (Eigen::Index i = 0; i < c.size(); ++i) {
            for (Eigen::Index j = 0; j < c.size(); ++j) {
                if (c(i) < c(j)) {
                    CHECK(s(i) > s(j));
                }
            }
        }
    }
}

TEST_CASE("resistance-sum identity holds across random connected graphs") {
    std::mt19937 rng(64);
    for (int trial = 0; trial < 10; ++trial) {
        const DirectedGraph g = test::random_connected_graph(rng, 3, 30);
        const SpectralDecomposition d = compact_svd(build_incidence(g));
        const Eigen::VectorXd residual = check_resistance_sum_identity(d);
        CHECK(residual.maxCoeff() <= 1e-8 * static_cast<double>(g.vertex_count()));
    }
}

TEST_CASE("effective resistance is a metric on connected graphs") {
    std::mt19937 rng(27182);
    for (int trial = 0; trial < 5; ++trial) {
        const DirectedGraph g = test::random_connected_graph(rng, 3, 12);
        const ResistanceMatrix r = resistance_matrix(compact_svd(build_incidence(g)));
        const int n = static_cast<int>(g.vertex_count());
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                for (int k = 0; k < n; ++k) {
                    CHECK(r(i, k) <= r(i, j) + r(j, k) + 1e-12);
                }
            }
        }
    }
}

TEST_SUITE_END();
