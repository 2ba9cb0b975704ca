#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "superedge/graph.hpp"
#include "superedge/graph6.hpp"

namespace superedge {

constexpr int kMaxLabeledOrder = 8;   // 2^28 masks at the top
constexpr int kMaxClassOrder = 7;    // labeled enumeration + canonical dedupe
constexpr int kMaxCanonOrder = 10;   // backtracking minimizer bound

enum class EnumMode { labeled_exhaustive, isomorphism_reduced };

struct EnumSpec {
    int n = 1;
    EnumMode mode = EnumMode::labeled_exhaustive;
    int min_degree = 0;
    bool connected_only = false;
};

inline int pair_count(int n) { return n * (n - 1) / 2; }

inline std::uint64_t labeled_mask_count(int n) {
    return std::uint64_t{1} << pair_count(n);
}

namespace detail {

/// Pair k of the mask is the k-th upper-triangle slot in column-major
/// order, matching the graph6 bit layout.
struct PairTable {
    std::array<std::uint8_t, 28> u{};
    std::array<std::uint8_t, 28> v{};
    explicit PairTable(int n) {
        int k = 0;
        for (int col = 1; col < n; ++col)
            for (int row = 0; row < col; ++row) {
                u[k] = static_cast<std::uint8_t>(row);
                v[k] = static_cast<std::uint8_t>(col);
                ++k;
            }
    }
};

inline void mask_to_rows(std::uint64_t mask, const PairTable& pairs, std::uint64_t* rows, int n) {
    std::fill(rows, rows + n, 0);
    while (mask != 0) {
        const int k = std::countr_zero(mask);
        mask &= mask - 1;
        rows[pairs.u[k]] |= std::uint64_t{1} << pairs.v[k];
        rows[pairs.v[k]] |= std::uint64_t{1} << pairs.u[k];
    }
}

inline bool rows_connected(const std::uint64_t* rows, int n) {
    const std::uint64_t all = full_vertex_set(n);
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier != 0) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f != 0) {
            next |= rows[std::countr_zero(f)];
            f &= f - 1;
        }
        frontier = next & ~seen;
        seen |= next;
        if (seen == all) return true;
    }
    return seen == all;
}

inline bool rows_min_degree_ok(const std::uint64_t* rows, int n, int floor_deg) {
    if (floor_deg <= 0) return true;
    for (int v = 0; v < n; ++v)
        if (std::popcount(rows[v]) < floor_deg) return false;
    return true;
}

}  // namespace detail

/// Visits every labeled simple graph with mask in [begin, end), ascending.
/// The Graph reference is a reused buffer; copy it to keep it.
template <class Visitor>
void enumerate_labeled_range(const EnumSpec& spec, std::uint64_t begin, std::uint64_t end,
                             Visitor&& visit) {
    if (spec.n < 1 || spec.n > kMaxLabeledOrder)
        throw std::invalid_argument(
            "labeled enumeration is bounded by n <= " + std::to_string(kMaxLabeledOrder) +
            "; feed larger graphs from a graph6 file instead (got n = " + std::to_string(spec.n) +
            ")");
    const int n = spec.n;
    const detail::PairTable pairs(n);
    std::uint64_t rows[kMaxVertices];
    Graph g(n);
    for (std::uint64_t mask = begin; mask < end; ++mask) {
        detail::mask_to_rows(mask, pairs, rows, n);
        if (!detail::rows_min_degree_ok(rows, n, spec.min_degree)) continue;
        if (spec.connected_only && !detail::rows_connected(rows, n)) continue;
        g.assign_rows(n, rows);
        visit(static_cast<const Graph&>(g));
    }
}

template <class Visitor>
void enumerate_labeled(const EnumSpec& spec, Visitor&& visit) {
    if (spec.n < 1 || spec.n > kMaxLabeledOrder)
        throw std::invalid_argument(
            "labeled enumeration is bounded by n <= " + std::to_string(kMaxLabeledOrder) +
            "; feed larger graphs from a graph6 file instead (got n = " + std::to_string(spec.n) +
            ")");
    enumerate_labeled_range(spec, 0, labeled_mask_count(spec.n), visit);
}

/// Total-order key; equal keys exactly for isomorphic graphs (n <= 10).
struct CanonicalCode {
    int n = 0;
    std::uint64_t bits = 0;  // upper-triangle bit string, MSB first
    auto operator<=>(const CanonicalCode&) const = default;
};

namespace detail {

/// State for the minimizer: vertices grouped by refinement class.
struct CanonScratch {
    std::uint32_t rows[kMaxCanonOrder];
    int order[kMaxCanonOrder];
    int class_begin[kMaxCanonOrder];  // span of the class containing each slot
    int class_end[kMaxCanonOrder];
    int n = 0;
    int total_bits = 0;
    std::uint64_t best = 0;
    bool have_best = false;
};

/// Iterated neighbor-count refinement from the trivial partition. Class
/// order is fixed by sorting the (old class, count vector) keys, so the
/// resulting ordered partition is the same for every labeling.
inline void refine_partition(CanonScratch& s) {
    const int n = s.n;
    int class_of[kMaxCanonOrder];
    std::uint32_t cmask[kMaxCanonOrder];
    for (int i = 0; i < n; ++i) {
        s.order[i] = i;
        class_of[i] = 0;
    }
    int num_classes = 1;
    cmask[0] = static_cast<std::uint32_t>((1u << n) - 1);
    while (num_classes < n) {
        std::uint64_t key[kMaxCanonOrder];
        for (int v = 0; v < n; ++v) {
            std::uint64_t k = static_cast<std::uint64_t>(class_of[v]) << 40;
            for (int c = 0; c < num_classes; ++c)
                k |= static_cast<std::uint64_t>(std::popcount(s.rows[v] & cmask[c])) << (4 * c);
            key[v] = k;
        }
        for (int i = 1; i < n; ++i) {  // insertion sort on key
            const int v = s.order[i];
            int j = i;
            while (j > 0 && key[s.order[j - 1]] > key[v]) {
                s.order[j] = s.order[j - 1];
                --j;
            }
            s.order[j] = v;
        }
        int nc = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && key[s.order[i]] != key[s.order[i - 1]]) ++nc;
            class_of[s.order[i]] = nc;
        }
        ++nc;
        if (nc == num_classes) break;
        num_classes = nc;
        std::fill(cmask, cmask + nc, 0);
        for (int v = 0; v < n; ++v) cmask[class_of[v]] |= 1u << v;
    }
    // span [class_begin[p], class_end[p]) of the class containing slot p
    int end = n;
    for (int i = n - 1; i >= 0; --i) {
        s.class_end[i] = end;
        if (i > 0 && class_of[s.order[i - 1]] != class_of[s.order[i]]) end = i;
    }
    int begin = 0;
    for (int i = 0; i < n; ++i) {
        if (i > 0 && class_of[s.order[i - 1]] != class_of[s.order[i]]) begin = i;
        s.class_begin[i] = begin;
    }
}

/// Backtracking minimization of the relabeled bit string over orderings
/// that keep each vertex inside its refinement class.
///
/// placed[] is the chosen vertex per slot; at slot p all earlier columns
/// are fixed, so the partial code extends by exactly p bits. Branches are
/// cut when the partial exceeds the best prefix, and twin vertices
/// (identical neighborhoods off the pair) are tried only once per slot.
inline void minimize_rec(CanonScratch& s, int pos, std::uint64_t partial, bool strictly_less,
                         std::uint32_t used, int* placed) {
    const int n = s.n;
    if (pos == n) {
        if (!s.have_best || partial < s.best) {
            s.best = partial;
            s.have_best = true;
        }
        return;
    }
    const int begin = s.class_begin[pos], end = s.class_end[pos];
    std::uint32_t tried[kMaxCanonOrder];
    int num_tried = 0;
    for (int slot = begin; slot < end; ++slot) {
        const int v = s.order[slot];
        const std::uint32_t vbit = 1u << v;
        if (used & vbit) continue;
        bool twin_skip = false;
        for (int t = 0; t < num_tried; ++t) {
            const std::uint32_t wbit = tried[t];
            const std::uint32_t off = ~(vbit | wbit);
            const int w = std::countr_zero(wbit);
            if ((s.rows[v] & off) == (s.rows[w] & off)) {
                twin_skip = true;
                break;
            }
        }
        if (twin_skip) continue;
        tried[num_tried++] = vbit;

        std::uint64_t col = 0;
        for (int i = 0; i < pos; ++i) col = (col << 1) | ((s.rows[v] >> placed[i]) & 1u);
        const std::uint64_t next_partial = (partial << pos) | col;
        bool next_less = strictly_less;
        if (!next_less && s.have_best) {
            const int len = pos * (pos + 1) / 2;
            const std::uint64_t best_prefix = s.best >> (s.total_bits - len);
            if (next_partial > best_prefix) continue;
            if (next_partial < best_prefix) next_less = true;
        }
        placed[pos] = v;
        minimize_rec(s, pos + 1, next_partial, next_less, used | vbit, placed);
    }
}

inline std::uint64_t canonical_bits(const Graph& g) {
    const int n = g.order();
    CanonScratch s;
    s.n = n;
    s.total_bits = pair_count(n);
    for (int v = 0; v < n; ++v) s.rows[v] = static_cast<std::uint32_t>(g.neighbors(v));
    if (n == 1) return 0;
    refine_partition(s);
    int placed[kMaxCanonOrder];
    minimize_rec(s, 0, 0, false, 0, placed);
    return s.best;
}

}  // namespace detail

inline CanonicalCode canonical_code(const Graph& g) {
    if (g.order() > kMaxCanonOrder)
        throw std::invalid_argument("canonical code is bounded by n <= " +
                                    std::to_string(kMaxCanonOrder));
    return CanonicalCode{g.order(), detail::canonical_bits(g)};
}

/// The canonically relabeled graph itself; encode_graph6 of it is a
/// string form of the code.
inline Graph canonical_representative(const Graph& g) {
    const CanonicalCode code = canonical_code(g);
    const int n = code.n;
    Graph out(n);
    if (n == 1) return out;
    std::uint64_t rows[kMaxCanonOrder] = {};
    const int total = pair_count(n);
    int k = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++k)
            if ((code.bits >> (total - 1 - k)) & 1) {
                rows[row] |= std::uint64_t{1} << col;
                rows[col] |= std::uint64_t{1} << row;
            }
    out.assign_rows(n, rows);
    return out;
}

inline std::string canonical_code_string(const Graph& g) {
    return encode_graph6(canonical_representative(g));
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_code(a) == canonical_code(b);
}

/// One canonical representative per isomorphism class, in first-seen
/// ascending-mask order of the underlying labeled enumeration.
inline std::vector<Graph> enumerate_classes(const EnumSpec& spec) {
    if (spec.n < 1 || spec.n > kMaxClassOrder)
        throw std::invalid_argument(
            "class enumeration is bounded by n <= " + std::to_string(kMaxClassOrder) +
            "; feed an isomorph-free graph6 file instead (got n = " + std::to_string(spec.n) + ")");
    std::vector<Graph> out;
    std::unordered_set<std::uint64_t> seen;
    EnumSpec ls = spec;
    ls.mode = EnumMode::labeled_exhaustive;
    enumerate_labeled(ls, [&](const Graph& g) {
        const std::uint64_t bits = detail::canonical_bits(g);
        if (seen.insert(bits).second) out.push_back(canonical_representative(g));
    });
    return out;
}

}  // namespace superedge
