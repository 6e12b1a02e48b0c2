#include <cmath>

#include <doctest.h>

#include "svdcent/baselines.hpp"
#include "svdcent/centrality.hpp"
#include "svdcent/errors.hpp"
#include "svdcent/experiments.hpp"
#include "test_support.hpp"

using namespace svdcent;

namespace {

const RegularizationConfig k_none{RegularizationMode::none, 0.99, 1e-8};

} // namespace

TEST_SUITE_BEGIN("centrality");

TEST_CASE("single edge yields the textbook values") {
    const CentralityReport report = compute_report(DirectedGraph(2, {{0, 1}}), k_none);
    CHECK(report.c_v(0) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(report.c_v(1) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(report.c_e(0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(report.s_v(0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report.s_v(1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report.s_e(0) == 1.0);
}

TEST_CASE("centralities are the pseudoinverse Laplacian diagonals") {
    for (const DirectedGraph& g : {generate_path(4), generate_cycle(5), load_karate()}) {
        const IncidenceMatrix b = build_incidence(g);
        const SpectralDecomposition d = compact_svd(b);
        const Eigen::VectorXd c_v = vertex_centrality(d, k_none);
        const Eigen::VectorXd c_e = edge_centrality(d, k_none);

        const Eigen::MatrixXd dense = b.dense();
        const Eigen::MatrixXd l0_pinv = psd_pseudoinverse(dense * dense.transpose());
        const Eigen::MatrixXd l1_pinv = psd_pseudoinverse(dense.transpose() * dense);
        CHECK(test::max_abs_diff(c_v, l0_pinv.diagonal()) <= 1e-10);
        CHECK(test::max_abs_diff(c_e, l1_pinv.diagonal()) <= 1e-10);
    }
}

TEST_CASE("normalize_scores inverts resistance into scores") {
    Eigen::VectorXd equal(2);
    equal << 0.25, 0.25;
    const Eigen::VectorXd s_equal = normalize_scores(equal, 1e-8);
    CHECK(s_equal(0) == 1.0);
    CHECK(s_equal(1) == 1.0);

    Eigen::VectorXd skewed(2);
    skewed << 1.0, 3.0;
    const Eigen::VectorXd s_skewed = normalize_scores(skewed, 1e-12);
    CHECK(s_skewed(0) == 1.0);
    CHECK(s_skewed(1) == doctest::Approx(1.0 / 3.0).epsilon(1e-9));

    CHECK(normalize_scores(Eigen::VectorXd(), 1e-8).size() == 0);

    Eigen::VectorXd negative(1);
    negative << -0.5;
    CHECK_THROWS_AS(normalize_scores(negative, 1e-8), centrality_error);
    CHECK_THROWS_AS(normalize_scores(equal, 0.0), centrality_error);
    CHECK_THROWS_AS(normalize_scores(equal, -1e-8), centrality_error);
}

TEST_CASE("normalized scores stay in (0,1] and reverse the raw order") {
    const CentralityReport report = compute_report(load_karate(), RegularizationConfig{});
    CHECK(report.s_v.maxCoeff() == 1.0);
    CHECK(report.s_v.minCoeff() > 0.0);
    for (Eigen::Index i = 0; i < report.c_v.size(); ++i) {
        for (Eigen::Index j = 0; j < report.c_v.size(); ++j) {
            if (report.c_v(i) < report.c_v(j)) {
                // Raw values separated by only a few ulps may round to the
                // same score, so the reversal is non-strict.
                CHECK(report.s_v(i) >= report.s_v(j));
            }
        }
    }
}

TEST_CASE("hub and authority blend normalized scores") {
    const DirectedGraph g = generate_grid_motif();
    const CentralityReport report = compute_report(g, RegularizationConfig{});

    SUBCASE("alpha 0 is pure edge aggregation") {
        const auto [hub, auth] = hub_authority(g, report.s_v, report.s_e, 0.0);
        Eigen::Index hub_argmax = 0;
        Eigen::Index auth_argmax = 0;
        hub.maxCoeff(&hub_argmax);
        auth.maxCoeff(&auth_argmax);
        CHECK(hub_argmax == 10);
        CHECK(auth_argmax == 11);
        CHECK(hub.maxCoeff() == 1.0);
        CHECK(auth.maxCoeff() == 1.0);
    }
    SUBCASE("alpha 1 reduces to the vertex score") {
        const auto [hub, auth] = hub_authority(g, report.s_v, report.s_e, 1.0);
        CHECK(test::max_abs_diff(hub, report.s_v) <= 1e-15);
        CHECK(test::max_abs_diff(auth, report.s_v) <= 1e-15);
    }
    SUBCASE("invalid inputs are rejected") {
        CHECK_THROWS_AS(hub_authority(g, report.s_v, report.s_e, -0.1), centrality_error);
        CHECK_THROWS_AS(hub_authority(g, report.s_v, report.s_e, 1.1), centrality_error);
        CHECK_THROWS_AS(hub_authority(g, report.s_v.head(3), report.s_e, 0.5),
                        centrality_error);
        CHECK_THROWS_AS(hub_authority(g, report.s_v, report.s_e.head(3), 0.5),
                        centrality_error);
    }
}

TEST_CASE("compute_report records its parameters") {
    RegularizationConfig cfg;
    cfg.lambda = 0.9;
    const CentralityReport report = compute_report(load_karate(), cfg, 0.25, 5);
    CHECK(report.c_v.size() == 34);
    CHECK(report.c_e.size() == 78);
    CHECK(report.s_hub.size() == 34);
    CHECK(report.s_auth.size() == 34);
    CHECK(report.params.lambda == 0.9);
    CHECK(report.alpha == 0.25);
    CHECK(report.truncation_k == 5);
}

TEST_CASE("edgeless graphs degrade gracefully") {
    const CentralityReport report = compute_report(DirectedGraph(3, {}), RegularizationConfig{}, 0.5);
    CHECK(report.c_v == Eigen::VectorXd::Zero(3));
    CHECK(report.s_v == Eigen::VectorXd::Ones(3));
    CHECK(report.c_e.size() == 0);
    CHECK(report.s_hub.size() == 3);
    CHECK(report.s_hub.maxCoeff() == 1.0);
}

TEST_CASE("hypergraph pipeline matches brute-force pseudoinverses") {
    SUBCASE("two overlapping hyperedges") {
        const Hypergraph h(3, {{0, 1}, {0, 2}});
        const CentralityReport report = hypergraph_centralities(h, k_none);
        CHECK(report.c_v(0) == doctest::Approx(2.0 / 9.0).epsilon(1e-12));
        CHECK(report.c_v(1) == doctest::Approx(5.0 / 9.0).epsilon(1e-12));
        CHECK(report.c_v(2) == doctest::Approx(5.0 / 9.0).epsilon(1e-12));
        CHECK(report.c_e(0) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
        CHECK(report.c_e(1) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
        CHECK(report.s_hub.size() == 0);
        CHECK(report.s_auth.size() == 0);
    }
    SUBCASE("single binary column") {
        const Hypergraph h(2, {{0, 1}});
        const CentralityReport report = hypergraph_centralities(h, k_none);
        CHECK(report.c_v(0) == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(report.c_v(1) == doctest::Approx(0.25).epsilon(1e-12));
    }
    SUBCASE("duplicate hyperedges tie exactly") {
        const Hypergraph h(4, {{0, 1, 2}, {1, 3}, {0, 1, 2}});
        const CentralityReport report = hypergraph_centralities(h, k_none);
        CHECK(std::abs(report.c_e(0) - report.c_e(2)) <= 1e-10);
        CHECK(std::abs(report.s_e(0) - report.s_e(2)) <= 1e-10);
    }
    SUBCASE("empty hypergraph") {
        const CentralityReport report = hypergraph_centralities(Hypergraph(), k_none);
        CHECK(report.c_v.size() == 0);
        CHECK(report.c_e.size() == 0);
    }
}

TEST_SUITE_END();
