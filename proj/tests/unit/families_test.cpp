#include <catch2/catch_amalgamated.hpp>

#include "superedge/families.hpp"
#include "superedge/patterns.hpp"

using namespace superedge;

namespace {

Graph make(Family f, int size) { return make_family(FamilySpec{f, size}); }

}  // namespace

TEST_CASE("family constructors produce the named shapes") {
    Graph c4 = make(Family::cycle, 4);
    CHECK(encode_graph6(c4) == "Cl");
    CHECK(is_cycle_graph(c4));

    Graph prism3 = make(Family::prism_family, 3);
    CHECK(prism3.order() == 6);
    CHECK(prism3.edge_count() == 9);
    for (int v = 0; v < 6; ++v) CHECK(prism3.degree(v) == 3);
    CHECK(isomorphic(prism3, cartesian_product(make(Family::complete, 3), make(Family::complete, 2))));

    Graph glued4 = make(Family::two_cliques_shared_vertex, 4);
    CHECK(glued4.order() == 7);
    CHECK(glued4.edge_count() == 12);
    CHECK(vertex_connectivity(glued4) == 1);
    CHECK(glued4.degree(0) == 6);

    Graph bridge3 = make(Family::two_cliques_bridge, 3);
    CHECK(bridge3.order() == 6);
    CHECK(bridge3.edge_count() == 7);
    CHECK(edge_connectivity(bridge3).lambda == 1);

    Graph kmm = make(Family::complete_bipartite, 3);
    CHECK(kmm.order() == 6);
    CHECK(kmm.edge_count() == 9);
    CHECK_FALSE(oracle_contains_induced(kmm, custom_pattern("tri", make(Family::complete, 3))));

    Graph grid = make(Family::grid_2x3, 0);
    CHECK(grid.order() == 6);
    CHECK(grid.edge_count() == 7);
    CHECK(isomorphic(grid, cartesian_product(make(Family::path, 2), make(Family::path, 3))));

    CHECK(make(Family::path, 1).order() == 1);
    CHECK(make(Family::star, 4).order() == 5);
    CHECK(degree_profile(make(Family::star, 4)).Delta == 4);
    CHECK(is_complete(make(Family::complete, 5)));

    // prism at m=2 degenerates to the 4-cycle
    CHECK(isomorphic(make(Family::prism_family, 2), c4));
}

TEST_CASE("family size validation") {
    CHECK_THROWS_AS(make(Family::cycle, 2), std::invalid_argument);
    CHECK_THROWS_AS(make(Family::path, 0), std::invalid_argument);
    CHECK_THROWS_AS(make(Family::path, 65), std::invalid_argument);
    CHECK_THROWS_AS(make(Family::star, 0), std::invalid_argument);
    CHECK_THROWS_AS(make(Family::prism_family, 1), std::invalid_argument);
    CHECK_THROWS_AS(make(Family::two_cliques_shared_vertex, 1), std::invalid_argument);
    CHECK_THROWS_AS(make(Family::two_cliques_bridge, 1), std::invalid_argument);
    CHECK_THROWS_AS(make(Family::complete_bipartite, 33), std::invalid_argument);
    CHECK_THROWS_AS(make(Family::grid_2x3, 3), std::invalid_argument);
}

TEST_CASE("family token parsing") {
    auto spec = parse_family_token("cycle:7");
    CHECK(spec.family == Family::cycle);
    CHECK(spec.size == 7);
    CHECK(family_token(spec) == "cycle:7");

    CHECK(parse_family_token("grid_2x3").family == Family::grid_2x3);
    CHECK(parse_family_token("two_cliques_bridge:5").size == 5);
    CHECK(parse_family_token("prism:4").family == Family::prism_family);

    CHECK_THROWS_AS(parse_family_token("hypercube:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_token("cycle"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_token("cycle:"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_token("cycle:x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_token("cycle:7x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_token("grid_2x3:1"), std::invalid_argument);
}

TEST_CASE("exception membership mode i") {
    CHECK(is_exception(make(Family::cycle, 4), ExceptionMode::mode_i));
    CHECK_FALSE(is_exception(make(Family::cycle, 5), ExceptionMode::mode_i));
    CHECK_FALSE(is_exception(make(Family::path, 4), ExceptionMode::mode_i));
    CHECK_FALSE(is_exception(make(Family::complete, 4), ExceptionMode::mode_i));
    CHECK_FALSE(is_exception(make(Family::cycle, 4), ExceptionMode::none));
    CHECK_THROWS_AS(is_exception(Graph(3), ExceptionMode::mode_i), std::invalid_argument);
}

TEST_CASE("exception membership mode ii") {
    for (int n = 4; n <= 12; ++n) {
        CHECK(is_exception(make(Family::path, n), ExceptionMode::mode_ii));
        CHECK(is_exception(make(Family::cycle, n), ExceptionMode::mode_ii));
    }
    CHECK(is_exception(make(Family::grid_2x3, 0), ExceptionMode::mode_ii));
    CHECK_FALSE(is_exception(make(Family::path, 3), ExceptionMode::mode_ii));
    CHECK_FALSE(is_exception(make(Family::cycle, 3), ExceptionMode::mode_ii));
    CHECK_FALSE(is_exception(make(Family::prism_family, 3), ExceptionMode::mode_ii));
    CHECK_FALSE(is_exception(make(Family::complete, 2), ExceptionMode::mode_ii));
    // a 6-cycle plus an opposite-vertex chord is the grid itself
    Graph long_chord(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 3}});
    CHECK(is_exception(long_chord, ExceptionMode::mode_ii));
    // a short chord makes a triangle, which the bipartite grid lacks
    Graph short_chord(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 2}});
    CHECK_FALSE(is_exception(short_chord, ExceptionMode::mode_ii));
}

TEST_CASE("mode ii exceptions among small classes are exactly paths, cycles, grid") {
    const std::vector<std::size_t> expected{0, 0, 0, 2, 2, 3, 2};  // n = 1..7
    for (int n = 1; n <= 7; ++n) {
        EnumSpec spec;
        spec.n = n;
        spec.mode = EnumMode::isomorphism_reduced;
        spec.connected_only = true;
        std::size_t count = 0;
        for (const Graph& g : enumerate_classes(spec))
            if (is_exception(g, ExceptionMode::mode_ii)) ++count;
        INFO("n = " << n);
        CHECK(count == expected[static_cast<std::size_t>(n - 1)]);
    }
}

TEST_CASE("default registry instances are all verified non-super") {
    const RegistryReport report = registry_verify_all();
    CHECK(report.violations == 0);
    CHECK(report.checks.size() == 9 + 9 + 5 + 4 + 5 + 1);
    for (const auto& check : report.checks) {
        INFO(family_token(check.spec));
        CHECK(check.ok);
        CHECK_FALSE(check.super);
        CHECK_FALSE(check.witness.trivial);
        CHECK(check.witness.size == check.lambda);
    }
}

TEST_CASE("single-family registry verification and the violation path") {
    const RegistryReport paths = registry_verify(Family::path, 4, 12);
    CHECK(paths.violations == 0);
    CHECK(paths.checks.size() == 9);
    for (const auto& check : paths.checks) {
        CHECK(check.lambda == 1);
        CHECK(check.delta == 1);
    }
    const RegistryReport prisms = registry_verify(Family::prism_family, 2, 6);
    for (const auto& check : prisms.checks) {
        CHECK(check.lambda == check.delta);
        CHECK(check.witness.size == check.lambda);
    }
    // complete graphs are super, so registering them must fail loudly
    CHECK_THROWS_AS(registry_verify(Family::complete, 3, 5), std::runtime_error);
}

TEST_CASE("glued cliques satisfy the documented structural constraints") {
    for (int m = 4; m <= 6; ++m) {
        Graph g = make(Family::two_cliques_shared_vertex, m);
        CHECK(contains_induced(g, custom_pattern("K4", make(Family::complete, 4))).has_value());
        CHECK(contains_induced(g, atlas_pattern("H0")).has_value());
        CHECK(contains_induced(g, atlas_pattern("P3")).has_value());
        CHECK_FALSE(contains_induced(g, atlas_pattern("P4")).has_value());
    }
}
