#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superedge/connectivity.hpp"
#include "superedge/enumerate.hpp"
#include "superedge/graph.hpp"
#include "superedge/graph6.hpp"

namespace superedge {

enum class Family {
    path,
    cycle,
    complete,
    star,
    complete_bipartite,
    prism_family,
    grid_2x3,
    two_cliques_shared_vertex,
    two_cliques_bridge,
};

struct FamilySpec {
    Family family = Family::path;
    int size = 0;  // the m or n parameter; 0 for the fixed grid
};

inline std::string family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
        case Family::star: return "star";
        case Family::complete_bipartite: return "complete_bipartite";
        case Family::prism_family: return "prism";
        case Family::grid_2x3: return "grid_2x3";
        case Family::two_cliques_shared_vertex: return "two_cliques_shared_vertex";
        case Family::two_cliques_bridge: return "two_cliques_bridge";
    }
    return "?";
}

inline std::string family_token(const FamilySpec& spec) {
    if (spec.family == Family::grid_2x3) return family_name(spec.family);
    return family_name(spec.family) + ":" + std::to_string(spec.size);
}

namespace detail {

inline void require_size(bool ok, const FamilySpec& spec, const std::string& range) {
    if (!ok)
        throw std::invalid_argument("family " + family_name(spec.family) + " needs size " + range +
                                    " (got " + std::to_string(spec.size) + ")");
}

inline Graph clique_on(std::vector<Edge>& edges, int base, int m) {
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) edges.emplace_back(base + u, base + v);
    return Graph(1);
}

}  // namespace detail

/// Builds the named instance. Sizes are the natural parameter: vertex
/// count for path/cycle/complete, leaves for star, half-side for
/// complete_bipartite (K_{m,m}), clique order m for the prism K_m x K_2
/// and the two glued-clique shapes.
inline Graph make_family(const FamilySpec& spec) {
    const int s = spec.size;
    std::vector<Edge> es;
    switch (spec.family) {
        case Family::path: {
            detail::require_size(s >= 1 && s <= kMaxVertices, spec, "1..64");
            for (int i = 0; i + 1 < s; ++i) es.emplace_back(i, i + 1);
            return Graph(s, es);
        }
        case Family::cycle: {
            detail::require_size(s >= 3 && s <= kMaxVertices, spec, "3..64");
            for (int i = 0; i < s; ++i) es.emplace_back(i, (i + 1) % s);
            return Graph(s, es);
        }
        case Family::complete: {
            detail::require_size(s >= 1 && s <= kMaxVertices, spec, "1..64");
            detail::clique_on(es, 0, s);
            return Graph(s, es);
        }
        case Family::star: {
            detail::require_size(s >= 1 && s + 1 <= kMaxVertices, spec, "1..63");
            for (int i = 1; i <= s; ++i) es.emplace_back(0, i);
            return Graph(s + 1, es);
        }
        case Family::complete_bipartite: {
            detail::require_size(s >= 1 && 2 * s <= kMaxVertices, spec, "1..32");
            for (int u = 0; u < s; ++u)
                for (int v = 0; v < s; ++v) es.emplace_back(u, s + v);
            return Graph(2 * s, es);
        }
        case Family::prism_family: {
            detail::require_size(s >= 2 && 2 * s <= kMaxVertices, spec, "2..32");
            detail::clique_on(es, 0, s);
            detail::clique_on(es, s, s);
            for (int i = 0; i < s; ++i) es.emplace_back(i, s + i);
            return Graph(2 * s, es);
        }
        case Family::grid_2x3: {
            detail::require_size(s == 0, spec, "none (fixed instance)");
            FamilySpec p2{Family::path, 2}, p3{Family::path, 3};
            return cartesian_product(make_family(p2), make_family(p3));
        }
        case Family::two_cliques_shared_vertex: {
            detail::require_size(s >= 2 && 2 * s - 1 <= kMaxVertices, spec, "2..32");
            // vertex 0 shared; cliques {0..s-1} and {0, s..2s-2}
            detail::clique_on(es, 0, s);
            for (int u = s; u < 2 * s - 1; ++u) {
                es.emplace_back(0, u);
                for (int v = u + 1; v < 2 * s - 1; ++v) es.emplace_back(u, v);
            }
            return Graph(2 * s - 1, es);
        }
        case Family::two_cliques_bridge: {
            detail::require_size(s >= 2 && 2 * s <= kMaxVertices, spec, "2..32");
            detail::clique_on(es, 0, s);
            detail::clique_on(es, s, s);
            es.emplace_back(0, s);
            return Graph(2 * s, es);
        }
    }
    throw std::invalid_argument("unknown family");
}

/// "family:size" tokens; the fixed grid takes no size.
inline FamilySpec parse_family_token(std::string_view token) {
    const auto colon = token.find(':');
    const std::string_view name = token.substr(0, colon);
    FamilySpec spec;
    if (name == "path") spec.family = Family::path;
    else if (name == "cycle") spec.family = Family::cycle;
    else if (name == "complete") spec.family = Family::complete;
    else if (name == "star") spec.family = Family::star;
    else if (name == "complete_bipartite") spec.family = Family::complete_bipartite;
    else if (name == "prism") spec.family = Family::prism_family;
    else if (name == "grid_2x3") spec.family = Family::grid_2x3;
    else if (name == "two_cliques_shared_vertex") spec.family = Family::two_cliques_shared_vertex;
    else if (name == "two_cliques_bridge") spec.family = Family::two_cliques_bridge;
    else throw std::invalid_argument("unknown family token: " + std::string(token));
    if (spec.family == Family::grid_2x3) {
        if (colon != std::string_view::npos)
            throw std::invalid_argument("grid_2x3 takes no size parameter");
        return spec;
    }
    if (colon == std::string_view::npos || colon + 1 == token.size())
        throw std::invalid_argument("family token needs a size: " + std::string(token));
    const std::string digits(token.substr(colon + 1));
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(digits, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad family size in token: " + std::string(token));
    }
    if (used != digits.size())
        throw std::invalid_argument("bad family size in token: " + std::string(token));
    spec.size = value;
    return spec;
}

/// Exception sets attached to the two sufficiency branches.
enum class ExceptionMode { none, mode_i, mode_ii };

inline bool is_path_graph(const Graph& g) {
    if (!is_connected(g)) return false;
    if (g.order() == 1) return true;
    int ones = 0;
    for (int v = 0; v < g.order(); ++v) {
        const int d = g.degree(v);
        if (d == 1) ++ones;
        else if (d != 2) return false;
    }
    return ones == 2;
}

inline bool is_cycle_graph(const Graph& g) {
    if (!is_connected(g)) return false;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

/// mode_i excepts C4 only; mode_ii excepts the 2x3 grid plus every path
/// and cycle on at least 4 vertices.
inline bool is_exception(const Graph& g, ExceptionMode mode) {
    if (!is_connected(g)) throw std::invalid_argument("exception test needs a connected graph");
    switch (mode) {
        case ExceptionMode::none: return false;
        case ExceptionMode::mode_i: return g.order() == 4 && is_cycle_graph(g);
        case ExceptionMode::mode_ii: {
            if (g.order() >= 4 && (is_path_graph(g) || is_cycle_graph(g))) return true;
            if (g.order() != 6 || g.edge_count() != 7) return false;
            static const CanonicalCode grid_code =
                canonical_code(make_family(FamilySpec{Family::grid_2x3, 0}));
            return canonical_code(g) == grid_code;
        }
    }
    return false;
}

/// Families registered as stand-ins for known non-super classes, each
/// mechanically re-verified by registry_verify.
inline std::vector<FamilySpec> default_registry() {
    std::vector<FamilySpec> regs;
    for (int n = 4; n <= 12; ++n) regs.push_back({Family::path, n});
    for (int n = 4; n <= 12; ++n) regs.push_back({Family::cycle, n});
    for (int m = 2; m <= 6; ++m) regs.push_back({Family::prism_family, m});
    for (int m = 3; m <= 6; ++m) regs.push_back({Family::two_cliques_shared_vertex, m});
    for (int m = 2; m <= 6; ++m) regs.push_back({Family::two_cliques_bridge, m});
    regs.push_back({Family::grid_2x3, 0});
    return regs;
}

struct RegistryCheck {
    FamilySpec spec;
    std::string graph6;
    int n = 0;
    int delta = 0;
    int lambda = 0;
    bool super = true;
    CutWitness witness;
    bool ok = false;  // non-super with a non-trivial minimum-size witness
};

struct RegistryReport {
    std::vector<RegistryCheck> checks;
    std::uint64_t violations = 0;
};

inline RegistryCheck registry_check(const FamilySpec& spec) {
    const Graph g = make_family(spec);
    const ConnectivityReport rep = connectivity_report(g);
    RegistryCheck check;
    check.spec = spec;
    check.graph6 = encode_graph6(g);
    check.n = rep.n;
    check.delta = rep.delta;
    check.lambda = rep.lambda;
    check.super = rep.super;
    if (rep.witness) check.witness = *rep.witness;
    check.ok = !rep.super && rep.witness.has_value() && !rep.witness->trivial &&
               rep.witness->size == rep.lambda;
    return check;
}

/// Verifies every size of one family; throws on the first instance that
/// turns out super (the family then has no place in the registry).
inline RegistryReport registry_verify(Family family, int size_lo, int size_hi) {
    RegistryReport report;
    for (int s = size_lo; s <= size_hi; ++s) {
        RegistryCheck check = registry_check(FamilySpec{family, s});
        if (!check.ok) {
            ++report.violations;
            report.checks.push_back(std::move(check));
            throw std::runtime_error("registry violation: " + family_token(FamilySpec{family, s}) +
                                     (report.checks.back().super ? " is super-edge-connected"
                                                                 : " lacks a non-trivial witness"));
        }
        report.checks.push_back(std::move(check));
    }
    return report;
}

/// Full default registry; collects instead of throwing so reports can
/// show every violation at once.
inline RegistryReport registry_verify_all() {
    RegistryReport report;
    for (const FamilySpec& spec : default_registry()) {
        RegistryCheck check = registry_check(spec);
        if (!check.ok) ++report.violations;
        report.checks.push_back(std::move(check));
    }
    return report;
}

}  // namespace superedge
