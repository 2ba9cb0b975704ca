#pragma once

#include <algorithm>
#include <climits>
#include <optional>
#include <string>
#include <vector>

#include "superedge/graph.hpp"

namespace superedge {

/// One side of an edge cut plus the crossing edges.
struct CutWitness {
    VertexSet side = 0;
    std::vector<Edge> boundary;
    int size = 0;
    bool trivial = false;
};

inline CutWitness make_cut_witness(const Graph& g, VertexSet side) {
    const int n = g.order();
    if (side == 0 || side == full_vertex_set(n) || (side & ~g.vertex_mask()) != 0)
        throw std::invalid_argument("cut witness side must be a proper nonempty vertex subset");
    CutWitness w;
    w.side = side;
    for (const Edge& e : g.edges()) {
        const bool in_u = (side >> e.u) & 1, in_v = (side >> e.v) & 1;
        if (in_u != in_v) w.boundary.push_back(e);
    }
    w.size = static_cast<int>(w.boundary.size());
    const int k = std::popcount(side);
    w.trivial = (k == 1 || k == n - 1);
    return w;
}

/// Sorted-vertex-list lexicographic order on sides; total and label-stable.
inline bool side_lex_less(VertexSet a, VertexSet b) {
    while (a != 0 && b != 0) {
        const int va = std::countr_zero(a), vb = std::countr_zero(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

/// The lex-smaller of a side and its complement names the cut canonically.
inline VertexSet canonical_side(VertexSet side, int n) {
    const VertexSet other = full_vertex_set(n) & ~side;
    return side_lex_less(other, side) ? other : side;
}

namespace detail {

constexpr int kInfCap = INT_MAX / 2;

/// Dinic on explicit arcs; arc i and i^1 are mutual reverses.
class Dinic {
public:
    void reset(int num_nodes) {
        n_ = num_nodes;
        head_.assign(static_cast<size_t>(num_nodes), -1);
        to_.clear();
        cap_.clear();
        nxt_.clear();
        level_.assign(static_cast<size_t>(num_nodes), -1);
        it_.assign(static_cast<size_t>(num_nodes), -1);
    }

    void add_pair(int u, int v, int cap_uv, int cap_vu) {
        push_arc(u, v, cap_uv);
        push_arc(v, u, cap_vu);
    }

    /// Max flow from s to t, giving up once the value exceeds abort_above
    /// (the return is then only a lower bound). Pass kInfCap for exact.
    int max_flow(int s, int t, int abort_above) {
        int flow = 0;
        while (bfs(s, t)) {
            std::copy(head_.begin(), head_.end(), it_.begin());
            for (;;) {
                const int budget = abort_above + 1 - flow;
                if (budget <= 0) return flow;
                const int pushed = dfs(s, t, budget);
                if (pushed == 0) break;
                flow += pushed;
            }
            if (flow > abort_above) return flow;
        }
        return flow;
    }

    /// Valid after a non-aborted max_flow: nodes the final BFS reached.
    bool on_source_side(int v) const { return level_[static_cast<size_t>(v)] >= 0; }

private:
    void push_arc(int u, int v, int c) {
        to_.push_back(v);
        cap_.push_back(c);
        nxt_.push_back(head_[static_cast<size_t>(u)]);
        head_[static_cast<size_t>(u)] = static_cast<int>(to_.size()) - 1;
    }

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        level_[static_cast<size_t>(s)] = 0;
        queue_.clear();
        queue_.push_back(s);
        for (size_t qi = 0; qi < queue_.size(); ++qi) {
            const int u = queue_[qi];
            for (int a = head_[static_cast<size_t>(u)]; a != -1; a = nxt_[static_cast<size_t>(a)]) {
                const int v = to_[static_cast<size_t>(a)];
                if (cap_[static_cast<size_t>(a)] > 0 && level_[static_cast<size_t>(v)] < 0) {
                    level_[static_cast<size_t>(v)] = level_[static_cast<size_t>(u)] + 1;
                    queue_.push_back(v);
                }
            }
        }
        return level_[static_cast<size_t>(t)] >= 0;
    }

    int dfs(int u, int t, int limit) {
        if (u == t || limit == 0) return limit;
        for (int& a = it_[static_cast<size_t>(u)]; a != -1; a = nxt_[static_cast<size_t>(a)]) {
            const int v = to_[static_cast<size_t>(a)];
            if (cap_[static_cast<size_t>(a)] <= 0 ||
                level_[static_cast<size_t>(v)] != level_[static_cast<size_t>(u)] + 1)
                continue;
            const int pushed = dfs(v, t, std::min(limit, cap_[static_cast<size_t>(a)]));
            if (pushed > 0) {
                cap_[static_cast<size_t>(a)] -= pushed;
                cap_[static_cast<size_t>(a ^ 1)] += pushed;
                return pushed;
            }
        }
        return 0;
    }

    int n_ = 0;
    std::vector<int> head_, to_, cap_, nxt_, level_, it_;
    std::vector<int> queue_;
};

inline void load_unit_edges(Dinic& d, const Graph& g, int extra_nodes = 0) {
    d.reset(g.order() + extra_nodes);
    for (const Edge& e : g.edges()) d.add_pair(e.u, e.v, 1, 1);
}

}  // namespace detail

/// Maximum number of edge-disjoint s-t paths and the matching minimum cut;
/// the witness side is the set of vertices still reachable from s.
struct FlowResult {
    int value = 0;
    CutWitness witness;
};

inline FlowResult max_flow_min_cut(const Graph& g, int s, int t) {
    const int n = g.order();
    if (s < 0 || s >= n || t < 0 || t >= n) throw std::invalid_argument("flow endpoint out of range");
    if (s == t) throw std::invalid_argument("flow endpoints must differ");
    detail::Dinic d;
    detail::load_unit_edges(d, g);
    FlowResult r;
    r.value = d.max_flow(s, t, detail::kInfCap);
    VertexSet side = 0;
    for (int v = 0; v < n; ++v)
        if (d.on_source_side(v)) side |= VertexSet{1} << v;
    r.witness = make_cut_witness(g, side);
    return r;
}

/// lambda(G) with a deterministic witness: flows from root 0 to every other
/// vertex; among minimum candidates the lex-smallest side wins.
struct EdgeConnectivityResult {
    int lambda = 0;
    CutWitness witness;
};

inline EdgeConnectivityResult edge_connectivity(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw std::invalid_argument("edge connectivity needs n >= 2");
    detail::Dinic d;
    int best = detail::kInfCap;
    VertexSet best_side = 0;
    for (int t = 1; t < n; ++t) {
        detail::load_unit_edges(d, g);
        const int value = d.max_flow(0, t, best);
        if (value > best) continue;
        VertexSet side = 0;
        for (int v = 0; v < n; ++v)
            if (d.on_source_side(v)) side |= VertexSet{1} << v;
        if (value < best || side_lex_less(side, best_side)) {
            best = value;
            best_side = side;
        }
    }
    return EdgeConnectivityResult{best, make_cut_witness(g, best_side)};
}

/// kappa(G): vertex-capacity flows over non-adjacent pairs, with the
/// complete-graph convention kappa(K_n) = n-1.
inline int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw std::invalid_argument("vertex connectivity needs n >= 2");
    if (is_complete(g)) return n - 1;
    detail::Dinic d;
    int best = detail::kInfCap;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            // split w into in-node w and out-node w+n
            d.reset(2 * n);
            for (int w = 0; w < n; ++w)
                d.add_pair(w, w + n, (w == u || w == v) ? detail::kInfCap : 1, 0);
            for (const Edge& e : g.edges()) {
                d.add_pair(e.u + n, e.v, detail::kInfCap, 0);
                d.add_pair(e.v + n, e.u, detail::kInfCap, 0);
            }
            best = std::min(best, d.max_flow(u + n, v, best));
            if (best == 0) return 0;
        }
    return best;
}

/// lambda'(G): smallest edge cut leaving no isolated vertex, as the minimum
/// over vertex-disjoint edge pairs of the cut separating the contracted
/// endpoints. Undefined when no two vertex-disjoint edges exist.
struct RestrictedCut {
    int value = 0;
    CutWitness witness;
};

inline std::optional<RestrictedCut> restricted_edge_connectivity(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw std::invalid_argument("restricted edge connectivity needs n >= 2");
    if (!is_connected(g)) throw std::invalid_argument("restricted edge connectivity needs a connected graph");
    const std::vector<Edge> edges = g.edges();
    const int m = static_cast<int>(edges.size());
    detail::Dinic d;
    const int s = n, t = n + 1;
    int best = detail::kInfCap;
    VertexSet best_side = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const Edge &e = edges[static_cast<size_t>(i)], &f = edges[static_cast<size_t>(j)];
            if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
            detail::load_unit_edges(d, g, 2);
            d.add_pair(s, e.u, detail::kInfCap, 0);
            d.add_pair(s, e.v, detail::kInfCap, 0);
            d.add_pair(f.u, t, detail::kInfCap, 0);
            d.add_pair(f.v, t, detail::kInfCap, 0);
            const int value = d.max_flow(s, t, best);
            if (value > best) continue;
            VertexSet side = 0;
            for (int v = 0; v < n; ++v)
                if (d.on_source_side(v)) side |= VertexSet{1} << v;
            side = canonical_side(side, n);
            if (value < best || best_side == 0 || side_lex_less(side, best_side)) {
                best = value;
                best_side = side;
            }
        }
    if (best == detail::kInfCap) return std::nullopt;
    return RestrictedCut{best, make_cut_witness(g, best_side)};
}

/// Full classification; the building block behind is_super_edge_connected
/// and the report surfaces.
struct ConnectivityReport {
    int n = 0;
    int m = 0;
    int delta = 0;
    int kappa = 0;
    int lambda = 0;
    std::optional<int> lambda_restricted;
    bool connected = false;
    bool maximally_edge_connected = false;
    bool super = false;
    std::optional<CutWitness> witness;
    std::vector<std::string> notes;
};

inline ConnectivityReport connectivity_report(const Graph& g) {
    ConnectivityReport r;
    r.n = g.order();
    r.m = g.edge_count();
    r.delta = degree_profile(g).delta;
    r.connected = is_connected(g);
    if (r.n == 1) {
        r.kappa = 0;
        r.lambda = 0;
        r.maximally_edge_connected = true;
        r.super = true;
        r.notes.push_back("order-1 convention: no edge-cut exists; super by convention");
        return r;
    }
    if (!r.connected) {
        r.kappa = 0;
        r.lambda = 0;
        r.maximally_edge_connected = (r.delta == 0);
        r.super = false;
        r.witness = make_cut_witness(g, reachable_set(g, 0));
        r.notes.push_back("disconnected input: lambda = 0, super reported false");
        return r;
    }
    r.kappa = vertex_connectivity(g);
    const EdgeConnectivityResult ec = edge_connectivity(g);
    r.lambda = ec.lambda;
    r.maximally_edge_connected = (r.lambda == r.delta);
    if (r.n == 2) {
        r.super = true;
        r.witness = ec.witness;
        r.notes.push_back("order-2 convention: the only cut isolates a vertex; super by convention");
        return r;
    }
    const auto restricted = restricted_edge_connectivity(g);
    if (restricted) r.lambda_restricted = restricted->value;
    if (r.lambda < r.delta) {
        r.super = false;
        r.witness = ec.witness;  // trivial cuts have size >= delta > lambda
    } else if (!restricted) {
        r.super = true;
        r.witness = ec.witness;
    } else if (restricted->value > r.lambda) {
        r.super = true;
        r.witness = ec.witness;
    } else {
        r.super = false;
        r.witness = restricted->witness;
    }
    return r;
}

/// Decision per the minimum-cut definition; witness only for refusals.
struct SuperVerdict {
    bool super = false;
    std::optional<CutWitness> witness;
};

inline SuperVerdict is_super_edge_connected(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("super-edge-connectedness needs a connected graph");
    const ConnectivityReport r = connectivity_report(g);
    if (r.super) return SuperVerdict{true, std::nullopt};
    return SuperVerdict{false, r.witness};
}

inline bool is_maximally_edge_connected(const Graph& g) {
    if (g.order() == 1) return true;
    return edge_connectivity(g).lambda == degree_profile(g).delta;
}

/// Brute-force profile over all vertex subsets up to complementation; the
/// independent route the flow results are checked against.
struct OracleCutProfile {
    int lambda = 0;
    bool super = false;
    std::uint64_t num_min_cuts = 0;
    VertexSet min_side = 0;
    std::optional<int> lambda_restricted;
    std::optional<VertexSet> restricted_side;
};

inline OracleCutProfile oracle_cut_scan(const Graph& g) {
    const int n = g.order();
    if (n > 20) throw std::invalid_argument("oracle cut scan is bounded by n <= 20");
    OracleCutProfile p;
    if (n == 1) {
        p.super = true;
        return p;
    }
    int best = INT_MAX;
    int best_restricted = INT_MAX;
    bool all_min_trivial = true;
    const VertexSet all = full_vertex_set(n);
    for (VertexSet side = 1; side != all; side += 2) {  // bit 0 fixed: one side per partition
        int boundary = 0;
        VertexSet rest = all & ~side;
        bool isolated_free = true;
        for (VertexSet s = side; s != 0; s &= s - 1) {
            const int v = std::countr_zero(s);
            const VertexSet nb = g.neighbors(v);
            boundary += std::popcount(nb & rest);
            if ((nb & side) == 0) isolated_free = false;
        }
        if (isolated_free)
            for (VertexSet s = rest; s != 0; s &= s - 1) {
                const int v = std::countr_zero(s);
                if ((g.neighbors(v) & rest) == 0) {
                    isolated_free = false;
                    break;
                }
            }
        const int k = std::popcount(side);
        const bool trivial = (k == 1 || k == n - 1);
        if (boundary < best) {
            best = boundary;
            p.num_min_cuts = 1;
            p.min_side = side;
            all_min_trivial = trivial;
        } else if (boundary == best) {
            ++p.num_min_cuts;
            if (side_lex_less(side, p.min_side)) p.min_side = side;
            all_min_trivial = all_min_trivial && trivial;
        }
        if (isolated_free && boundary < best_restricted) {
            best_restricted = boundary;
            p.restricted_side = side;
        } else if (isolated_free && boundary == best_restricted &&
                   side_lex_less(side, *p.restricted_side)) {
            p.restricted_side = side;
        }
    }
    p.lambda = best;
    p.super = all_min_trivial;
    if (best_restricted != INT_MAX) p.lambda_restricted = best_restricted;
    return p;
}

}  // namespace superedge
