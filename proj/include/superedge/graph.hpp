#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace superedge {

/// Hard cap on the dense representation: one 64-bit adjacency row per vertex.
inline constexpr int kMaxVertices = 64;

/// Subset of vertices as a bitmask (vertex v <-> bit v).
using VertexSet = std::uint64_t;

inline VertexSet full_vertex_set(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

/// Unordered vertex pair, normalized so that u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1, immutable once built.
///
/// Adjacency is a symmetric bit matrix with one machine word per row,
/// which keeps subset scans and neighborhood intersections branch-free.
class Graph {
public:
    /// Edgeless graph on n vertices.
    explicit Graph(int n) : n_(check_order(n)), m_(0), rows_(static_cast<size_t>(n), 0) {}

    /// Builds from an unordered edge list. Exact duplicate pairs collapse;
    /// self-loops and out-of-range endpoints are rejected.
    Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
        for (const Edge& e : edges) add_edge_checked(e.u, e.v);
    }

    Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
        for (auto [a, b] : edges) add_edge_checked(a, b);
    }

    int order() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1; }

    /// Neighborhood of v as a bitmask.
    VertexSet neighbors(int v) const { return rows_[static_cast<size_t>(v)]; }

    int degree(int v) const { return std::popcount(rows_[static_cast<size_t>(v)]); }

    VertexSet vertex_mask() const { return full_vertex_set(n_); }

    /// Edges as normalized pairs in ascending (u,v) order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(static_cast<size_t>(m_));
        for (int u = 0; u < n_; ++u) {
            VertexSet higher = u + 1 >= 64 ? 0 : rows_[u] & ~((VertexSet{1} << (u + 1)) - 1);
            while (higher != 0) {
                int v = std::countr_zero(higher);
                higher &= higher - 1;
                out.emplace_back(u, v);
            }
        }
        return out;
    }

    /// Reuses this object's storage for a new adjacency (single-owner step in
    /// hot enumeration loops; rows must already be symmetric and loop-free).
    void assign_rows(int n, const std::uint64_t* rows) {
        check_order(n);
        n_ = n;
        rows_.assign(rows, rows + n);
        m_ = 0;
        for (int v = 0; v < n; ++v) m_ += std::popcount(rows_[v]);
        m_ /= 2;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    static int check_order(int n) {
        if (n < 1 || n > kMaxVertices)
            throw std::invalid_argument("graph order must be in [1, " +
                                        std::to_string(kMaxVertices) + "], got " + std::to_string(n));
        return n;
    }

    void add_edge_checked(int u, int v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") in graph of order " + std::to_string(n_));
        if (u == v)
            throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(u));
        if (adjacent(u, v)) return;  // exact duplicate collapses
        rows_[u] |= VertexSet{1} << v;
        rows_[v] |= VertexSet{1} << u;
        ++m_;
    }

    int n_;
    int m_;
    std::vector<std::uint64_t> rows_;
};

/// Per-vertex degrees with the extremes.
struct DegreeProfile {
    std::vector<int> degrees;
    int delta = 0;  // minimum degree
    int Delta = 0;  // maximum degree
};

inline DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.degrees.reserve(static_cast<size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) p.degrees.push_back(g.degree(v));
    auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
    p.delta = *lo;
    p.Delta = *hi;
    return p;
}

inline std::vector<int> to_vertex_list(VertexSet s) {
    std::vector<int> out;
    while (s != 0) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

inline VertexSet to_vertex_set(const std::vector<int>& vs, int n = kMaxVertices) {
    VertexSet s = 0;
    for (int v : vs) {
        if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range: " + std::to_string(v));
        s |= VertexSet{1} << v;
    }
    return s;
}

/// Subgraph induced by the vertex subset, relabeled by ascending original index.
inline Graph induced_subgraph(const Graph& g, VertexSet subset) {
    if (subset == 0) throw std::invalid_argument("induced subgraph of empty vertex set");
    if ((subset & ~g.vertex_mask()) != 0)
        throw std::invalid_argument("induced subgraph: vertex out of range");
    const std::vector<int> verts = to_vertex_list(subset);
    const int k = static_cast<int>(verts.size());
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(verts[i], verts[j])) edges.emplace_back(i, j);
    return Graph(k, edges);
}

inline Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    return induced_subgraph(g, to_vertex_set(verts, g.order()));
}

/// Vertices reachable from `start` (bit-parallel BFS over adjacency rows).
inline VertexSet reachable_set(const Graph& g, int start) {
    VertexSet seen = VertexSet{1} << start;
    VertexSet frontier = seen;
    while (frontier != 0) {
        VertexSet next = 0;
        VertexSet f = frontier;
        while (f != 0) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= g.neighbors(v);
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

inline bool is_connected(const Graph& g) {
    return reachable_set(g, 0) == g.vertex_mask();
}

/// Connected components as sorted vertex lists, ordered by smallest member.
inline std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    VertexSet remaining = g.vertex_mask();
    while (remaining != 0) {
        int v = std::countr_zero(remaining);
        VertexSet comp = reachable_set(g, v);
        comps.push_back(to_vertex_list(comp));
        remaining &= ~comp;
    }
    return comps;
}

/// Shortest-path edge count, or nullopt when u and v are in different components.
inline std::optional<int> distance(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
        throw std::invalid_argument("distance: vertex out of range");
    if (u == v) return 0;
    VertexSet seen = VertexSet{1} << u;
    VertexSet frontier = seen;
    int dist = 0;
    while (frontier != 0) {
        ++dist;
        VertexSet next = 0;
        VertexSet f = frontier;
        while (f != 0) {
            int w = std::countr_zero(f);
            f &= f - 1;
            next |= g.neighbors(w);
        }
        next &= ~seen;
        if ((next >> v) & 1) return dist;
        seen |= next;
        frontier = next;
    }
    return std::nullopt;
}

/// Cartesian product: (x1,y1)~(x2,y2) iff x1=x2 and y1~y2, or y1=y2 and x1~x2.
/// Vertex (x,y) maps to index x*order(g2)+y.
inline Graph cartesian_product(const Graph& g1, const Graph& g2) {
    const int n1 = g1.order(), n2 = g2.order();
    if (n1 > kMaxVertices / n2)
        throw std::invalid_argument("cartesian product exceeds the vertex bound");
    std::vector<Edge> edges;
    for (int x = 0; x < n1; ++x)
        for (int y = 0; y < n2; ++y) {
            for (int y2 = y + 1; y2 < n2; ++y2)
                if (g2.adjacent(y, y2)) edges.emplace_back(x * n2 + y, x * n2 + y2);
            for (int x2 = x + 1; x2 < n1; ++x2)
                if (g1.adjacent(x, x2)) edges.emplace_back(x * n2 + y, x2 * n2 + y);
        }
    return Graph(n1 * n2, edges);
}

inline bool is_complete(const Graph& g) {
    return g.edge_count() == g.order() * (g.order() - 1) / 2;
}

}  // namespace superedge
