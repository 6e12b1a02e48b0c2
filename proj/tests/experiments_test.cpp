#include <cmath>
#include <map>
#include <string>
#include <vector>

#include <doctest.h>

#include "svdcent/baselines.hpp"
#include "svdcent/errors.hpp"
#include "svdcent/experiments.hpp"
#include "test_support.hpp"

using namespace svdcent;

namespace {

int out_degree(const DirectedGraph& g, int v) {
    int count = 0;
    for (const Edge& e : g.edges()) {
        if (e.tail == v) {
            ++count;
        }
    }
    return count;
}

int in_degree(const DirectedGraph& g, int v) {
    int count = 0;
    for (const Edge& e : g.edges()) {
        if (e.head == v) {
            ++count;
        }
    }
    return count;
}

} // namespace

TEST_SUITE_BEGIN("experiments");

TEST_CASE("deterministic generators produce the expected shapes") {
    const DirectedGraph path = generate_path(8);
    CHECK(path.vertex_count() == 8);
    CHECK(path.edge_count() == 7);
    CHECK(connected_components(path).count == 1);
    CHECK(path.edges().front().tail == 0);
    CHECK(path.edges().back().head == 7);

    const DirectedGraph cycle = generate_cycle(5);
    CHECK(cycle.vertex_count() == 5);
    CHECK(cycle.edge_count() == 5);
    CHECK(cycle_rank(cycle) == 1);

    CHECK_THROWS_AS(generate_path(0), experiment_error);
    CHECK_THROWS_AS(generate_cycle(2), experiment_error);
}

TEST_CASE("Erdos-Renyi sampler is seeded and honors the density bounds") {
    const DirectedGraph a = generate_er(12, 0.3, 42);
    const DirectedGraph b = generate_er(12, 0.3, 42);
    REQUIRE(a.edge_count() == b.edge_count());
    for (std::size_t e = 0; e < a.edges().size(); ++e) {
        CHECK(a.edges()[e].tail == b.edges()[e].tail);
        CHECK(a.edges()[e].head == b.edges()[e].head);
    }
    CHECK(generate_er(12, 0.3, 43).edge_count() != 0);

    CHECK(generate_er(10, 0.0, 7).edge_count() == 0);
    const DirectedGraph complete = generate_er(10, 1.0, 7);
    CHECK(complete.edge_count() == 45);
    for (const Edge& e : complete.edges()) {
        CHECK(e.tail < e.head);
    }
    CHECK_THROWS_AS(generate_er(5, 1.5, 0), experiment_error);
    CHECK_THROWS_AS(generate_er(-1, 0.5, 0), experiment_error);
}

TEST_CASE("karate club graph matches the published size") {
    const DirectedGraph g = load_karate();
    CHECK(g.vertex_count() == 34);
    CHECK(g.edge_count() == 78);
    CHECK(connected_components(g).count == 1);
    for (const Edge& e : g.edges()) {
        CHECK(e.tail < e.head);
    }
}

TEST_CASE("grid motif wires a 4x4 lattice plus broadcaster and receiver") {
    const DirectedGraph g = generate_grid_motif();
    CHECK(g.vertex_count() == 16);
    CHECK(g.edge_count() == 71);
    CHECK(connected_components(g).count == 1);

    // Vertex 10 is cell (2,2), vertex 11 is cell (2,3) in row-major order.
    // The lattice contributes both directions of every adjacent pair; the
    // overlay adds 10 -> everyone and everyone -> 11 exactly once.
    CHECK(out_degree(g, 10) == 15);
    CHECK(in_degree(g, 11) == 15);

    int antiparallel = 0;
    for (const Edge& e : g.edges()) {
        for (const Edge& f : g.edges()) {
            if (e.tail == f.head && e.head == f.tail) {
                ++antiparallel;
                break;
            }
        }
    }
    // All 24 lattice pairs are bidirectional; the overlay arcs mostly pair up
    // with lattice or overlay arcs going the other way.
    CHECK(antiparallel >= 48);
}

TEST_CASE("equivalence experiment correlates spectral scores with current flow") {
    const RegularizationConfig cfg;
    SUBCASE("path graph") {
        const ExperimentResult result = run_equivalence(generate_path(8), cfg, "p8");
        REQUIRE(result.metrics.count("pearson_rho") == 1);
        CHECK(result.metrics.at("pearson_rho") ==
              doctest::Approx(0.99749901691758369).epsilon(1e-9));
        CHECK(result.metrics.at("degenerate") == 0.0);
        REQUIRE(result.tables.count("s_v") == 1);
        REQUIRE(result.tables.count("cfc") == 1);
        CHECK(result.tables.at("s_v").size() == 8);
        CHECK(result.name == "p8");
    }
    SUBCASE("paths of several lengths stay strongly correlated") {
        for (int n = 4; n <= 12; ++n) {
            const ExperimentResult result = run_equivalence(generate_path(n), cfg, "p");
            CHECK(result.metrics.at("pearson_rho") >= 0.95);
        }
    }
    SUBCASE("disconnected input is rejected") {
        CHECK_THROWS_AS(run_equivalence(DirectedGraph(4, {{0, 1}, {2, 3}}), cfg, "x"),
                        experiment_error);
    }
    SUBCASE("vertex-transitive graphs are flagged degenerate") {
        RegularizationConfig none;
        none.mode = RegularizationMode::none;
        const ExperimentResult result = run_equivalence(generate_cycle(4), none, "c4");
        CHECK(result.metrics.at("degenerate") == 1.0);
        CHECK(result.metrics.count("pearson_rho") == 0);
    }
}

TEST_CASE("grid experiment reports the planted argmax structure") {
    const ExperimentResult result = run_grid_experiment(0.0);
    CHECK(result.metrics.at("hub_argmax") == 10.0);
    CHECK(result.metrics.at("auth_argmax") == 11.0);
    CHECK(result.metrics.at("se_top_tail") == 10.0);
    CHECK(result.metrics.at("se_top_head") == 11.0);
    CHECK(result.metrics.at("cov_betweenness") ==
          doctest::Approx(1.4831231105453317).epsilon(1e-12));
    CHECK(result.metrics.at("cov_hub") > 0.0);
    REQUIRE(result.tables.count("betweenness_nodes") == 1);
    CHECK(result.tables.at("betweenness_nodes").size() == 16);
    CHECK(result.tables.at("s_hub").size() == 16);
    CHECK(result.tables.at("s_e").size() == 71);
    CHECK(result.alpha == 0.0);
    CHECK(result.name == "grid");
}

TEST_CASE("experiment results are bit-identical across reruns") {
    const ExperimentResult a = run_grid_experiment(0.25);
    const ExperimentResult b = run_grid_experiment(0.25);
    CHECK(a.metrics == b.metrics);
    CHECK(a.tables == b.tables);

    const RegularizationConfig cfg;
    const ExperimentResult e1 = run_equivalence(load_karate(), cfg, "karate");
    const ExperimentResult e2 = run_equivalence(load_karate(), cfg, "karate");
    CHECK(e1.metrics == e2.metrics);
    CHECK(e1.tables == e2.tables);
}

TEST_SUITE_END();
