#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "superedge/patterns.hpp"

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

std::vector<int> sorted_degrees(const Graph& g) {
    auto d = degree_profile(g).degrees;
    std::sort(d.begin(), d.end(), std::greater<int>());
    return d;
}

bool embedding_valid(const Graph& host, const Pattern& p, const Embedding& emb) {
    const int k = p.graph.order();
    if (static_cast<int>(emb.map.size()) != k) return false;
    std::set<int> images(emb.map.begin(), emb.map.end());
    if (static_cast<int>(images.size()) != k) return false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (p.graph.adjacent(i, j) != host.adjacent(emb.map[i], emb.map[j])) return false;
    return true;
}

PairSpec atlas_pair(const std::string& a, const std::string& b) {
    return make_pair_spec({atlas_pattern(a), atlas_pattern(b)});
}

}  // namespace

TEST_CASE("atlas holds exactly the eleven built-ins with the right shapes") {
    const auto& atlas = pattern_atlas();
    REQUIRE(atlas.size() == 11);
    for (const auto& p : atlas) {
        CHECK(is_connected(p.graph));
        CHECK(p.graph.order() >= 3);
        CHECK(p.graph.order() <= 7);
        CHECK_FALSE(p.structure.empty());
    }
    CHECK(sorted_degrees(atlas_pattern("Z1").graph) == std::vector<int>{3, 2, 2, 1});
    CHECK(atlas_pattern("H0").graph.order() == 5);
    CHECK(atlas_pattern("H0").graph.edge_count() == 6);
    CHECK(degree_profile(atlas_pattern("H0").graph).Delta == 4);
    CHECK(sorted_degrees(atlas_pattern("T112").graph) == std::vector<int>{3, 2, 1, 1, 1});
    CHECK(sorted_degrees(atlas_pattern("Z2").graph) == std::vector<int>{3, 2, 2, 2, 1});
    CHECK(sorted_degrees(atlas_pattern("T113").graph) == std::vector<int>{3, 2, 2, 1, 1, 1});
    for (int k : {3, 4, 5, 6})
        CHECK(atlas_pattern("P" + std::to_string(k)).graph.edge_count() == k - 1);
    CHECK(degree_profile(atlas_pattern("K13").graph).Delta == 3);
    CHECK(degree_profile(atlas_pattern("K14").graph).Delta == 4);
    CHECK_THROWS_AS(atlas_pattern("Q7"), std::invalid_argument);
}

TEST_CASE("custom patterns must be connected") {
    CHECK_THROWS_AS(custom_pattern("bad", Graph(3, {{0, 1}})), std::invalid_argument);
    CHECK_NOTHROW(custom_pattern("tri", complete(3)));
}

TEST_CASE("pair spec validation") {
    CHECK_THROWS_AS(make_pair_spec({}), std::invalid_argument);
    CHECK_THROWS_AS(make_pair_spec({atlas_pattern("Z1"), atlas_pattern("Z1")}),
                    std::invalid_argument);
    auto single = make_pair_spec({atlas_pattern("P3")});
    CHECK(single.label == "{P3}");
    auto pair = atlas_pair("H0", "P4");
    CHECK(pair.label == "{H0,P4}");
}

TEST_CASE("matcher finds and misses per the atlas geometry") {
    CHECK_FALSE(contains_induced(cycle(5), atlas_pattern("Z1")).has_value());

    const Pattern& z1 = atlas_pattern("Z1");
    auto self = contains_induced(z1.graph, z1);
    REQUIRE(self.has_value());
    CHECK(self->map == std::vector<int>{0, 1, 2, 3});

    Graph grid = cartesian_product(path(2), path(3));
    CHECK_FALSE(contains_induced(grid, atlas_pattern("T112")).has_value());

    Graph prism = cartesian_product(complete(3), complete(2));
    auto hit = contains_induced(prism, atlas_pattern("Z1"));
    REQUIRE(hit.has_value());
    CHECK(embedding_valid(prism, atlas_pattern("Z1"), *hit));

    // pattern larger than host is a miss, not an error
    CHECK_FALSE(contains_induced(complete(3), atlas_pattern("P4")).has_value());
}

TEST_CASE("freeness per pattern sets") {
    CHECK(is_free(cycle(4), atlas_pair("H0", "P4")));
    CHECK_FALSE(is_free(path(5), atlas_pair("H0", "P4")));
    for (int n = 1; n <= 7; ++n)
        CHECK(is_free(complete(n), make_pair_spec({atlas_pattern("P3")})));
    CHECK_FALSE(is_free(path(3), make_pair_spec({atlas_pattern("P3")})));
}

TEST_CASE("induced-subgraph relation between patterns") {
    CHECK(induced_subgraph_of(atlas_pattern("P3"), atlas_pattern("P4")));
    CHECK_FALSE(induced_subgraph_of(atlas_pattern("K13"), atlas_pattern("H0")));
    CHECK_FALSE(induced_subgraph_of(atlas_pattern("T112"), atlas_pattern("K14")));
    CHECK(induced_subgraph_of(atlas_pattern("P3"), atlas_pattern("K13")));
    CHECK(induced_subgraph_of(atlas_pattern("Z1"), atlas_pattern("H0")));
}

TEST_CASE("pair precedence relation") {
    CHECK(pair_precedes(atlas_pair("H0", "P4"), atlas_pair("H0", "P5")));
    CHECK_FALSE(pair_precedes(atlas_pair("Z1", "T112"), atlas_pair("Z1", "K14")));
    const auto x = atlas_pair("Z1", "P5");
    CHECK(pair_precedes(x, x));
    // single-pattern set P3 precedes anything whose members contain P3
    CHECK(pair_precedes(make_pair_spec({atlas_pattern("P3")}), atlas_pair("P4", "K13")));
}

TEST_CASE("subset oracle on known cases") {
    CHECK_FALSE(oracle_contains_induced(complete(4), atlas_pattern("Z1")));
    CHECK_FALSE(oracle_contains_induced(atlas_pattern("H0").graph, atlas_pattern("P4")));
    CHECK(oracle_contains_induced(path(5), atlas_pattern("P4")));
    CHECK_THROWS_AS(oracle_contains_induced(Graph(13), atlas_pattern("P3")), std::invalid_argument);
}

TEST_CASE("matcher agrees with the subset oracle on all small classes") {
    for (int n = 1; n <= 6; ++n) {
        EnumSpec spec;
        spec.n = n;
        spec.mode = EnumMode::isomorphism_reduced;
        spec.connected_only = true;
        for (const Graph& g : enumerate_classes(spec))
            for (const Pattern& p : pattern_atlas()) {
                const auto emb = contains_induced(g, p);
                INFO("host n=" << n << " edges=" << g.edge_count() << " pattern " << p.name);
                CHECK(emb.has_value() == oracle_contains_induced(g, p));
                if (emb) CHECK(embedding_valid(g, p, *emb));
            }
    }
}

TEST_CASE("matcher agrees with the subset oracle on random hosts") {
    std::mt19937 rng(246810);
    std::bernoulli_distribution coin(0.4);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 9);
        std::vector<Edge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) es.emplace_back(u, v);
        Graph g(n, es);
        for (const Pattern& p : pattern_atlas()) {
            const auto emb = contains_induced(g, p);
            CHECK(emb.has_value() == oracle_contains_induced(g, p));
            if (emb) CHECK(embedding_valid(g, p, *emb));
        }
    }
}

TEST_CASE("freeness is hereditary under induced subgraphs") {
    std::mt19937 rng(1357);
    std::bernoulli_distribution coin(0.45);
    const auto spec = atlas_pair("Z1", "T112");
    int free_seen = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 5);
        std::vector<Edge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) es.emplace_back(u, v);
        Graph g(n, es);
        if (!is_free(g, spec)) continue;
        ++free_seen;
        for (int sub_trial = 0; sub_trial < 8; ++sub_trial) {
            VertexSet subset = (rng() & full_vertex_set(n));
            if (subset == 0) subset = 1;
            CHECK(is_free(induced_subgraph(g, subset), spec));
        }
    }
    CHECK(free_seen > 10);
}

TEST_CASE("precedence implies freeness containment on small graphs") {
    const auto h1 = atlas_pair("H0", "P4");
    const auto h2 = atlas_pair("H0", "P5");
    REQUIRE(pair_precedes(h1, h2));
    for (int n = 1; n <= 6; ++n) {
        EnumSpec spec;
        spec.n = n;
        spec.mode = EnumMode::isomorphism_reduced;
        spec.connected_only = true;
        for (const Graph& g : enumerate_classes(spec))
            if (is_free(g, h1)) CHECK(is_free(g, h2));
    }
}
