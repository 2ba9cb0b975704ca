#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "superedge/connectivity.hpp"
#include "superedge/enumerate.hpp"

using namespace superedge;

namespace {

Graph path(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, es);
}

Graph cycle(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph(n, es);
}

Graph complete(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph(n, es);
}

Graph star(int leaves) {
    std::vector<Edge> es;
    for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return Graph(leaves + 1, es);
}

const Graph kPetersen(10, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4}, {3, 8},
                           {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}});

Graph random_connected(int n, std::mt19937& rng, double p = 0.4) {
    std::bernoulli_distribution coin(p);
    for (;;) {
        std::vector<Edge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) es.emplace_back(u, v);
        Graph g(n, es);
        if (is_connected(g)) return g;
    }
}

bool witness_disconnects(const Graph& g, const CutWitness& w) {
    std::vector<Edge> kept;
    for (const Edge& e : g.edges()) {
        const bool crossing =
            (((w.side >> e.u) & 1) != ((w.side >> e.v) & 1));
        if (!crossing) kept.push_back(e);
    }
    return !is_connected(Graph(g.order(), kept));
}

}  // namespace

TEST_CASE("max flow on simple shapes") {
    Graph c4 = cycle(4);
    CHECK(max_flow_min_cut(c4, 0, 2).value == 2);
    Graph k5 = complete(5);
    for (int t = 1; t < 5; ++t) CHECK(max_flow_min_cut(k5, 0, t).value == 4);
    Graph split(5, {{0, 1}, {2, 3}, {3, 4}});
    auto r = max_flow_min_cut(split, 0, 3);
    CHECK(r.value == 0);
    CHECK(r.witness.side == to_vertex_set({0, 1}));
    CHECK(r.witness.boundary.empty());
    CHECK_THROWS_AS(max_flow_min_cut(c4, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(max_flow_min_cut(c4, 0, 4), std::invalid_argument);
}

TEST_CASE("edge connectivity on known graphs") {
    for (int n = 3; n <= 8; ++n) CHECK(edge_connectivity(cycle(n)).lambda == 2);
    auto p4 = edge_connectivity(path(4));
    CHECK(p4.lambda == 1);
    CHECK(p4.witness.side == to_vertex_set({0}));
    REQUIRE(p4.witness.boundary.size() == 1);
    CHECK(p4.witness.boundary[0] == Edge(0, 1));
    CHECK(p4.witness.trivial);
    CHECK(edge_connectivity(kPetersen).lambda == 3);
    for (int n = 2; n <= 7; ++n) CHECK(edge_connectivity(complete(n)).lambda == n - 1);
    Graph disco(4, {{0, 1}, {2, 3}});
    auto d = edge_connectivity(disco);
    CHECK(d.lambda == 0);
    CHECK(d.witness.side == to_vertex_set({0, 1}));
    CHECK_THROWS_AS(edge_connectivity(Graph(1)), std::invalid_argument);
}

TEST_CASE("edge connectivity witness picks the lex-least side") {
    // Two triangles joined by a bridge: lambda = 1, bridge cut, the side
    // holding vertex 0 is lexicographically smallest.
    Graph g(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    auto r = edge_connectivity(g);
    CHECK(r.lambda == 1);
    CHECK(r.witness.side == to_vertex_set({0, 1, 2}));
    REQUIRE(r.witness.boundary.size() == 1);
    CHECK(r.witness.boundary[0] == Edge(2, 3));
    CHECK_FALSE(r.witness.trivial);
}

TEST_CASE("vertex connectivity on known graphs") {
    for (int n = 2; n <= 7; ++n) CHECK(vertex_connectivity(complete(n)) == n - 1);
    Graph grid = cartesian_product(path(2), path(3));
    CHECK(vertex_connectivity(grid) == 2);
    CHECK(vertex_connectivity(star(3)) == 1);
    CHECK(vertex_connectivity(kPetersen) == 3);
    CHECK(vertex_connectivity(cycle(5)) == 2);
    CHECK(vertex_connectivity(Graph(3, {{0, 1}})) == 0);
    CHECK_THROWS_AS(vertex_connectivity(Graph(1)), std::invalid_argument);
}

TEST_CASE("restricted edge connectivity on known graphs") {
    auto c6 = restricted_edge_connectivity(cycle(6));
    REQUIRE(c6.has_value());
    CHECK(c6->value == 2);
    CHECK_FALSE(c6->witness.trivial);

    auto k4 = restricted_edge_connectivity(complete(4));
    REQUIRE(k4.has_value());
    CHECK(k4->value == 4);

    CHECK_FALSE(restricted_edge_connectivity(star(4)).has_value());
    CHECK_FALSE(restricted_edge_connectivity(star(3)).has_value());
    CHECK_FALSE(restricted_edge_connectivity(complete(3)).has_value());
    CHECK_FALSE(restricted_edge_connectivity(complete(2)).has_value());

    auto p4 = restricted_edge_connectivity(path(4));
    REQUIRE(p4.has_value());
    CHECK(p4->value == 1);
    CHECK(p4->witness.side == to_vertex_set({0, 1}));

    CHECK_THROWS_AS(restricted_edge_connectivity(Graph(3, {{0, 1}})), std::invalid_argument);
}

TEST_CASE("restricted witness side is canonical under ties") {
    auto c4 = restricted_edge_connectivity(cycle(4));
    REQUIRE(c4.has_value());
    CHECK(c4->value == 2);
    CHECK(c4->witness.side == to_vertex_set({0, 1}));
    CHECK(c4->witness.boundary == std::vector<Edge>{Edge(0, 3), Edge(1, 2)});
}

TEST_CASE("super-edge-connectedness verdicts") {
    CHECK(is_super_edge_connected(complete(2)).super);
    for (int n = 3; n <= 7; ++n) CHECK(is_super_edge_connected(complete(n)).super);

    auto c4 = is_super_edge_connected(cycle(4));
    CHECK_FALSE(c4.super);
    REQUIRE(c4.witness.has_value());
    CHECK(std::popcount(c4.witness->side) == 2);
    CHECK(c4.witness->size == 2);
    CHECK_FALSE(c4.witness->trivial);

    Graph grid = cartesian_product(path(2), path(3));
    auto gv = is_super_edge_connected(grid);
    CHECK_FALSE(gv.super);
    REQUIRE(gv.witness.has_value());
    CHECK_FALSE(gv.witness->trivial);
    CHECK(gv.witness->size == 2);

    Graph paw(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    CHECK(is_super_edge_connected(paw).super);

    Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
    auto bv = is_super_edge_connected(bowtie);
    CHECK_FALSE(bv.super);
    REQUIRE(bv.witness.has_value());
    CHECK(bv.witness->size == 2);

    CHECK_THROWS_AS(is_super_edge_connected(Graph(2)), std::invalid_argument);
}

TEST_CASE("report covers tiny-graph conventions and disconnection") {
    auto k1 = connectivity_report(Graph(1));
    CHECK(k1.super);
    CHECK(k1.maximally_edge_connected);
    CHECK(k1.lambda == 0);
    CHECK_FALSE(k1.witness.has_value());
    REQUIRE(k1.notes.size() == 1);

    auto k2 = connectivity_report(complete(2));
    CHECK(k2.super);
    CHECK(k2.lambda == 1);
    CHECK(k2.kappa == 1);
    CHECK_FALSE(k2.lambda_restricted.has_value());
    REQUIRE(k2.notes.size() == 1);

    auto disco = connectivity_report(Graph(3, {{1, 2}}));
    CHECK_FALSE(disco.super);
    CHECK(disco.lambda == 0);
    CHECK(disco.kappa == 0);
    CHECK_FALSE(disco.connected);
    REQUIRE(disco.witness.has_value());
    CHECK(disco.witness->boundary.empty());

    auto c5 = connectivity_report(cycle(5));
    CHECK(c5.notes.empty());
    CHECK(c5.kappa == 2);
    CHECK(c5.lambda == 2);
    CHECK(c5.delta == 2);
    REQUIRE(c5.lambda_restricted.has_value());
    CHECK(*c5.lambda_restricted == 2);
    CHECK_FALSE(c5.super);
}

TEST_CASE("oracle scan on known graphs") {
    auto c5 = oracle_cut_scan(cycle(5));
    CHECK(c5.lambda == 2);
    CHECK_FALSE(c5.super);

    auto k3 = oracle_cut_scan(complete(3));
    CHECK(k3.lambda == 2);
    CHECK(k3.super);
    CHECK_FALSE(k3.lambda_restricted.has_value());

    Graph prism = cartesian_product(complete(3), complete(2));
    auto pr = oracle_cut_scan(prism);
    CHECK(pr.lambda == 3);
    CHECK_FALSE(pr.super);

    auto pet = oracle_cut_scan(kPetersen);
    CHECK(pet.lambda == 3);
    CHECK(pet.super);

    CHECK_THROWS_AS(oracle_cut_scan(Graph(21)), std::invalid_argument);
}

TEST_CASE("flow route matches the oracle on all small classes") {
    for (int n = 2; n <= 6; ++n) {
        EnumSpec spec;
        spec.n = n;
        spec.mode = EnumMode::isomorphism_reduced;
        spec.connected_only = true;
        for (const Graph& g : enumerate_classes(spec)) {
            const auto oracle = oracle_cut_scan(g);
            const auto report = connectivity_report(g);
            INFO("n=" << n << " edges=" << g.edge_count());
            CHECK(report.lambda == oracle.lambda);
            CHECK(report.super == oracle.super);
            CHECK(report.lambda_restricted == oracle.lambda_restricted);
        }
    }
}

TEST_CASE("flow route matches the oracle on random graphs") {
    std::mt19937 rng(987654);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        Graph g = random_connected(n, rng, 0.3 + 0.4 * (rng() % 2));
        const auto oracle = oracle_cut_scan(g);
        const auto report = connectivity_report(g);
        CHECK(report.lambda == oracle.lambda);
        CHECK(report.super == oracle.super);
        CHECK(report.lambda_restricted == oracle.lambda_restricted);
        // Whitney chain and witness validity along the way
        CHECK(report.kappa <= report.lambda);
        CHECK(report.lambda <= report.delta);
        if (report.lambda_restricted) CHECK(*report.lambda_restricted >= report.lambda);
        REQUIRE(report.witness.has_value());
        CHECK(witness_disconnects(g, *report.witness));
        CHECK(report.witness->size == static_cast<int>(report.witness->boundary.size()));
        if (!report.super && report.lambda == report.delta) {
            CHECK_FALSE(report.witness->trivial);
            CHECK(report.witness->size == report.lambda);
        }
    }
}
