#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superedge/enumerate.hpp"
#include "superedge/graph.hpp"

namespace superedge {

/// A named connected forbidden subgraph. structure documents the shape in
/// words so atlas entries are self-describing.
struct Pattern {
    std::string name;
    Graph graph{1};
    std::string structure;
};

inline Pattern custom_pattern(std::string name, Graph g, std::string structure = "custom") {
    if (!is_connected(g)) throw std::invalid_argument("pattern must be connected: " + name);
    return Pattern{std::move(name), std::move(g), std::move(structure)};
}

/// The eleven built-in patterns.
inline const std::vector<Pattern>& pattern_atlas() {
    static const std::vector<Pattern> atlas = [] {
        std::vector<Pattern> a;
        auto path_pattern = [](int n) {
            std::vector<Edge> es;
            for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
            return Graph(n, es);
        };
        auto star_pattern = [](int leaves) {
            std::vector<Edge> es;
            for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
            return Graph(leaves + 1, es);
        };
        a.push_back({"P3", path_pattern(3), "path on 3 vertices"});
        a.push_back({"P4", path_pattern(4), "path on 4 vertices"});
        a.push_back({"P5", path_pattern(5), "path on 5 vertices"});
        a.push_back({"P6", path_pattern(6), "path on 6 vertices"});
        a.push_back({"K13", star_pattern(3), "star with 3 leaves (claw)"});
        a.push_back({"K14", star_pattern(4), "star with 4 leaves"});
        a.push_back({"Z1", Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}),
                     "triangle with a pendant edge (paw)"});
        a.push_back({"Z2", Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 4}}),
                     "triangle with a pendant path of length 2"});
        a.push_back({"H0", Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}),
                     "two triangles sharing one vertex (hourglass)"});
        a.push_back({"T112", Graph(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}),
                     "center with two leaves and a pendant path of length 2 (chair)"});
        a.push_back({"T113", Graph(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}}),
                     "center with two leaves and a pendant path of length 3"});
        return a;
    }();
    return atlas;
}

inline const Pattern& atlas_pattern(std::string_view name) {
    for (const Pattern& p : pattern_atlas())
        if (p.name == name) return p;
    throw std::invalid_argument("unknown pattern: " + std::string(name));
}

/// One or two pairwise non-isomorphic patterns.
struct PairSpec {
    std::string label;
    std::vector<Pattern> members;
};

inline PairSpec make_pair_spec(std::vector<Pattern> members, std::string label = "") {
    if (members.empty() || members.size() > 2)
        throw std::invalid_argument("a pattern set holds one or two patterns");
    if (members.size() == 2 && members[0].graph.order() <= kMaxCanonOrder &&
        members[1].graph.order() <= kMaxCanonOrder &&
        isomorphic(members[0].graph, members[1].graph))
        throw std::invalid_argument("pattern pair members must be non-isomorphic");
    if (label.empty()) {
        label = "{" + members[0].name;
        if (members.size() == 2) label += "," + members[1].name;
        label += "}";
    }
    return PairSpec{std::move(label), std::move(members)};
}

/// Injective pattern-vertex to host-vertex assignment preserving adjacency
/// and non-adjacency.
struct Embedding {
    std::vector<int> map;
};

namespace detail {

struct MatchOrder {
    int order[kMaxVertices];  // search position -> pattern vertex
    int n = 0;
};

inline MatchOrder pattern_order(const Graph& p) {
    MatchOrder mo;
    mo.n = p.order();
    for (int i = 0; i < mo.n; ++i) mo.order[i] = i;
    std::stable_sort(mo.order, mo.order + mo.n,
                     [&](int a, int b) { return p.degree(a) > p.degree(b); });
    return mo;
}

inline bool match_rec(const Graph& host, const Graph& pat, const MatchOrder& mo, int depth,
                      VertexSet used, int* image) {
    if (depth == mo.n) return true;
    const int pv = mo.order[depth];
    const int pdeg = pat.degree(pv);
    VertexSet cand = host.vertex_mask() & ~used;
    for (int d = 0; d < depth && cand != 0; ++d) {
        const int qv = mo.order[d];
        const VertexSet nb = host.neighbors(image[qv]);
        cand &= pat.adjacent(pv, qv) ? nb : ~nb;
    }
    while (cand != 0) {
        const int hv = std::countr_zero(cand);
        cand &= cand - 1;
        if (host.degree(hv) < pdeg) continue;
        image[pv] = hv;
        if (match_rec(host, pat, mo, depth + 1, used | (VertexSet{1} << hv), image)) return true;
    }
    return false;
}

}  // namespace detail

/// First induced embedding in deterministic order (pattern vertices by
/// descending degree, host candidates ascending), or none.
inline std::optional<Embedding> contains_induced(const Graph& host, const Pattern& p) {
    const int k = p.graph.order();
    if (k > host.order()) return std::nullopt;
    const detail::MatchOrder mo = detail::pattern_order(p.graph);
    int image[kMaxVertices];
    if (!detail::match_rec(host, p.graph, mo, 0, 0, image)) return std::nullopt;
    Embedding emb;
    emb.map.assign(image, image + k);
    return emb;
}

inline bool is_free(const Graph& host, const PairSpec& spec) {
    for (const Pattern& p : spec.members)
        if (contains_induced(host, p)) return false;
    return true;
}

inline bool induced_subgraph_of(const Pattern& p, const Pattern& q) {
    return contains_induced(q.graph, p).has_value();
}

/// H1 precedes H2 when every member of H2 induces some member of H1.
inline bool pair_precedes(const PairSpec& h1, const PairSpec& h2) {
    for (const Pattern& h2m : h2.members) {
        bool covered = false;
        for (const Pattern& h1m : h1.members)
            if (induced_subgraph_of(h1m, h2m)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

/// Ground truth by subset enumeration plus permutation isomorphism test.
inline bool oracle_contains_induced(const Graph& host, const Pattern& p) {
    const int n = host.order();
    if (n > 12) throw std::invalid_argument("induced-subgraph oracle is bounded by n <= 12");
    const int k = p.graph.order();
    if (k > n) return false;
    std::vector<int> pat_degs(static_cast<size_t>(k));
    for (int v = 0; v < k; ++v) pat_degs[static_cast<size_t>(v)] = p.graph.degree(v);
    std::vector<int> sorted_pat_degs = pat_degs;
    std::sort(sorted_pat_degs.begin(), sorted_pat_degs.end());

    const VertexSet limit = VertexSet{1} << n;
    for (VertexSet subset = 0; subset < limit; ++subset) {
        if (std::popcount(subset) != k) continue;
        const Graph sub = induced_subgraph(host, subset);
        if (sub.edge_count() != p.graph.edge_count()) continue;
        std::vector<int> degs(static_cast<size_t>(k));
        for (int v = 0; v < k; ++v) degs[static_cast<size_t>(v)] = sub.degree(v);
        std::sort(degs.begin(), degs.end());
        if (degs != sorted_pat_degs) continue;

        std::vector<int> perm(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) perm[static_cast<size_t>(i)] = i;
        do {
            bool match = true;
            for (int i = 0; i < k && match; ++i)
                for (int j = i + 1; j < k; ++j)
                    if (sub.adjacent(i, j) !=
                        p.graph.adjacent(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)])) {
                        match = false;
                        break;
                    }
            if (match) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return false;
}

}  // namespace superedge
