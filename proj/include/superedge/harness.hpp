#pragma once

#include <atomic>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "superedge/connectivity.hpp"
#include "superedge/enumerate.hpp"
#include "superedge/families.hpp"
#include "superedge/graph6.hpp"
#include "superedge/patterns.hpp"

namespace superedge {

enum class Conclusion { super_edge_connected, maximally_edge_connected, kappa_equals_lambda };

inline std::string conclusion_name(Conclusion c) {
    switch (c) {
        case Conclusion::super_edge_connected: return "super-edge-connected";
        case Conclusion::maximally_edge_connected: return "maximally-edge-connected";
        case Conclusion::kappa_equals_lambda: return "kappa-equals-lambda";
    }
    return "?";
}

/// Hypothesis (pair-freeness over connected graphs, minus exceptions)
/// entailing one connectivity conclusion.
struct TheoremSpec {
    std::string name;
    PairSpec pair;
    ExceptionMode exceptions = ExceptionMode::none;
    Conclusion conclusion = Conclusion::super_edge_connected;
};

/// Expands a theorem token into its scan specs. Multi-pair tokens yield
/// one spec per pair. The 1.4 token covers a {H1,P5} branch only when a
/// custom H1 pattern is supplied.
inline std::vector<TheoremSpec> theorem_specs(std::string_view token,
                                              const std::optional<Pattern>& h1 = std::nullopt) {
    auto pair1 = [](const char* a) { return make_pair_spec({atlas_pattern(a)}); };
    auto pair2 = [](const char* a, const char* b) {
        return make_pair_spec({atlas_pattern(a), atlas_pattern(b)});
    };
    std::vector<TheoremSpec> specs;
    if (token == "2.1") {
        specs.push_back({"2.1", pair1("P3"), ExceptionMode::none, Conclusion::super_edge_connected});
    } else if (token == "2.2i") {
        specs.push_back(
            {"2.2i", pair2("H0", "P4"), ExceptionMode::mode_i, Conclusion::super_edge_connected});
    } else if (token == "2.2ii") {
        specs.push_back(
            {"2.2ii", pair2("Z1", "T112"), ExceptionMode::mode_ii, Conclusion::super_edge_connected});
    } else if (token == "1.1") {
        specs.push_back({"1.1", pair1("P3"), ExceptionMode::none, Conclusion::kappa_equals_lambda});
    } else if (token == "1.2") {
        for (auto [a, b] : {std::pair{"Z1", "P5"}, std::pair{"Z1", "K14"}, std::pair{"Z1", "T112"},
                            std::pair{"H0", "P4"}, std::pair{"H0", "K13"}}) {
            PairSpec p = pair2(a, b);
            specs.push_back(
                {"1.2:" + p.label, std::move(p), ExceptionMode::none, Conclusion::kappa_equals_lambda});
        }
    } else if (token == "1.3") {
        specs.push_back(
            {"1.3", pair1("P4"), ExceptionMode::none, Conclusion::maximally_edge_connected});
    } else if (token == "1.4") {
        if (h1) {
            PairSpec p = make_pair_spec({*h1, atlas_pattern("P5")});
            specs.push_back({"1.4:" + p.label, std::move(p), ExceptionMode::none,
                             Conclusion::maximally_edge_connected});
        }
        for (auto [a, b] : {std::pair{"Z2", "P6"}, std::pair{"Z2", "T113"}}) {
            PairSpec p = pair2(a, b);
            specs.push_back({"1.4:" + p.label, std::move(p), ExceptionMode::none,
                             Conclusion::maximally_edge_connected});
        }
    } else {
        throw std::invalid_argument("unknown theorem token: " + std::string(token) +
                                    " (expected 2.1, 2.2i, 2.2ii, 1.1, 1.2, 1.3, 1.4)");
    }
    return specs;
}

namespace detail {

/// Members small-first so the cheaper pattern rejects hosts sooner.
inline bool hypothesis_free(const Graph& g, const PairSpec& pair) {
    if (pair.members.size() == 2 &&
        pair.members[1].graph.order() < pair.members[0].graph.order()) {
        return !contains_induced(g, pair.members[1]) && !contains_induced(g, pair.members[0]);
    }
    for (const Pattern& p : pair.members)
        if (contains_induced(g, p)) return false;
    return true;
}

/// Value of lambda without witness bookkeeping; flows abort as soon as
/// they cannot lower the running minimum.
inline int lambda_value(const Graph& g) {
    const int n = g.order();
    Dinic d;
    int best = kInfCap;
    for (int t = 1; t < n && best > 0; ++t) {
        load_unit_edges(d, g);
        const int value = d.max_flow(0, t, best - 1);
        if (value < best) best = value;
    }
    return best;
}

inline int kappa_value(const Graph& g) {
    if (is_complete(g)) return g.order() - 1;
    const int n = g.order();
    Dinic d;
    int best = kInfCap;
    for (int u = 0; u < n && best > 0; ++u)
        for (int v = u + 1; v < n && best > 0; ++v) {
            if (g.adjacent(u, v)) continue;
            d.reset(2 * n);
            for (int w = 0; w < n; ++w)
                d.add_pair(w, w + n, (w == u || w == v) ? kInfCap : 1, 0);
            for (const Edge& e : g.edges()) {
                d.add_pair(e.u + n, e.v, kInfCap, 0);
                d.add_pair(e.v + n, e.u, kInfCap, 0);
            }
            const int value = d.max_flow(u + n, v, best - 1);
            if (value < best) best = value;
        }
    return best;
}

/// Decision-only super check: after lambda = delta is established, any
/// vertex-disjoint edge pair whose separating cut is no bigger than
/// lambda refutes super-ness; flows abort above lambda.
inline bool super_value(const Graph& g, int lambda, int delta) {
    const int n = g.order();
    if (n <= 2) return true;
    if (lambda < delta) return false;
    const std::vector<Edge> edges = g.edges();
    const int m = static_cast<int>(edges.size());
    Dinic d;
    const int s = n, t = n + 1;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const Edge &e = edges[static_cast<size_t>(i)], &f = edges[static_cast<size_t>(j)];
            if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
            load_unit_edges(d, g, 2);
            d.add_pair(s, e.u, kInfCap, 0);
            d.add_pair(s, e.v, kInfCap, 0);
            d.add_pair(f.u, t, kInfCap, 0);
            d.add_pair(f.v, t, kInfCap, 0);
            if (d.max_flow(s, t, lambda) <= lambda) return false;
        }
    return true;
}

inline bool conclusion_value(const Graph& g, Conclusion conclusion) {
    if (g.order() == 1) return true;
    switch (conclusion) {
        case Conclusion::super_edge_connected: {
            const int delta = degree_profile(g).delta;
            return super_value(g, lambda_value(g), delta);
        }
        case Conclusion::maximally_edge_connected:
            return lambda_value(g) == degree_profile(g).delta;
        case Conclusion::kappa_equals_lambda:
            return kappa_value(g) == lambda_value(g);
    }
    return false;
}

}  // namespace detail

/// Outcome of one graph against one theorem spec. conclusion_holds stays
/// empty when the scan short-circuited (hypothesis failed or exception).
struct Verdict {
    std::string graph6;
    bool hypothesis_holds = false;
    bool exception = false;
    std::optional<bool> conclusion_holds;
    bool violation = false;
    std::optional<CutWitness> witness;
};

inline Verdict classify(const Graph& g, const TheoremSpec& spec, bool evaluate_all = false) {
    Verdict v;
    v.graph6 = encode_graph6(g);
    v.hypothesis_holds = detail::hypothesis_free(g, spec.pair);
    v.exception = is_exception(g, spec.exceptions);
    const bool need_conclusion = evaluate_all || (v.hypothesis_holds && !v.exception);
    if (need_conclusion) {
        if (spec.conclusion == Conclusion::kappa_equals_lambda) {
            v.conclusion_holds = detail::conclusion_value(g, spec.conclusion);
        } else {
            const ConnectivityReport rep = connectivity_report(g);
            const bool holds = (spec.conclusion == Conclusion::super_edge_connected)
                                   ? rep.super
                                   : rep.maximally_edge_connected;
            v.conclusion_holds = holds;
            if (!holds) v.witness = rep.witness;
        }
    }
    v.violation = v.hypothesis_holds && !v.exception && v.conclusion_holds && !*v.conclusion_holds;
    return v;
}

/// Labeled-exhaustive source: connected graphs for every order in
/// [n_min, n_max]. Order 8 is the opt-in extended scan.
struct EnumSource {
    int n_min = 1;
    int n_max = 7;
    bool extended = false;
};

struct ParallelOptions {
    int jobs = 1;
    std::function<void(const std::string&)> progress;  // diagnostics only
};

struct OrderCount {
    int n = 0;
    std::uint64_t scanned = 0;
    std::uint64_t hypothesis_satisfying = 0;
    std::uint64_t exceptions = 0;
    std::uint64_t violations = 0;
};

struct ScanReport {
    std::string theorem;
    std::string conclusion;
    std::string source;
    std::uint64_t scanned = 0;  // connected graphs examined
    std::uint64_t skipped_disconnected = 0;
    std::uint64_t hypothesis_satisfying = 0;
    std::uint64_t exceptions = 0;
    std::uint64_t violations = 0;
    std::vector<std::string> violating;  // graph6 records, scan order
    std::vector<OrderCount> per_order;   // present for enumeration sources
    bool ok() const { return violations == 0; }
};

namespace detail {

struct ChunkPartial {
    std::uint64_t scanned = 0, hyp = 0, exc = 0, viol = 0;
    std::vector<std::string> violating;
};

inline void scan_graph(const Graph& g, const TheoremSpec& spec, ChunkPartial& part) {
    ++part.scanned;
    if (!hypothesis_free(g, spec.pair)) return;
    ++part.hyp;
    if (is_exception(g, spec.exceptions)) {
        ++part.exc;
        return;
    }
    if (!conclusion_value(g, spec.conclusion)) {
        ++part.viol;
        part.violating.push_back(encode_graph6(g));
    }
}

inline OrderCount scan_order_parallel(int n, const TheoremSpec& spec, const ParallelOptions& par,
                                      std::vector<std::string>& violating_out) {
    constexpr std::uint64_t kChunkMasks = std::uint64_t{1} << 14;
    const std::uint64_t total = labeled_mask_count(n);
    const std::uint64_t num_chunks = (total + kChunkMasks - 1) / kChunkMasks;
    std::vector<ChunkPartial> partials(static_cast<size_t>(num_chunks));
    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<std::uint64_t> done_chunks{0};
    std::mutex progress_mutex;

    auto worker = [&]() {
        const PairTable pairs(n);
        std::uint64_t rows[kMaxVertices];
        Graph g(n);
        for (;;) {
            const std::uint64_t c = next_chunk.fetch_add(1);
            if (c >= num_chunks) break;
            ChunkPartial& part = partials[static_cast<size_t>(c)];
            const std::uint64_t lo = c * kChunkMasks;
            const std::uint64_t hi = std::min(total, lo + kChunkMasks);
            for (std::uint64_t mask = lo; mask < hi; ++mask) {
                mask_to_rows(mask, pairs, rows, n);
                if (!rows_connected(rows, n)) continue;
                g.assign_rows(n, rows);
                scan_graph(g, spec, part);
            }
            const std::uint64_t done = done_chunks.fetch_add(1) + 1;
            if (par.progress && num_chunks >= 64 && done % 256 == 0) {
                std::lock_guard<std::mutex> lock(progress_mutex);
                par.progress("n=" + std::to_string(n) + ": " + std::to_string(done) + "/" +
                             std::to_string(num_chunks) + " chunks");
            }
        }
    };

    const int jobs = std::max(1, par.jobs);
    if (jobs == 1 || num_chunks == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        const int spawn = static_cast<int>(std::min<std::uint64_t>(jobs, num_chunks));
        threads.reserve(static_cast<size_t>(spawn));
        for (int i = 0; i < spawn; ++i) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }

    OrderCount oc;
    oc.n = n;
    for (auto& part : partials) {  // chunk order keeps reports byte-stable
        oc.scanned += part.scanned;
        oc.hypothesis_satisfying += part.hyp;
        oc.exceptions += part.exc;
        oc.violations += part.viol;
        for (auto& rec : part.violating) violating_out.push_back(std::move(rec));
    }
    return oc;
}

}  // namespace detail

inline ScanReport verify_sufficiency(const TheoremSpec& spec, const EnumSource& source,
                                     const ParallelOptions& par = {}) {
    if (source.n_min < 1 || source.n_max < source.n_min)
        throw std::invalid_argument("bad enumeration range");
    if (source.n_max > kMaxLabeledOrder)
        throw std::invalid_argument("enumeration source is bounded by n <= " +
                                    std::to_string(kMaxLabeledOrder) +
                                    "; verify larger graphs from a graph6 file");
    if (source.n_max >= 8 && !source.extended)
        throw std::invalid_argument(
            "the full n=8 labeled scan (2^28 masks) is opt-in; enable extended mode");
    ScanReport report;
    report.theorem = spec.name;
    report.conclusion = conclusion_name(spec.conclusion);
    report.source = "labeled-connected n=" + std::to_string(source.n_min) + ".." +
                    std::to_string(source.n_max);
    for (int n = source.n_min; n <= source.n_max; ++n) {
        const OrderCount oc = detail::scan_order_parallel(n, spec, par, report.violating);
        report.scanned += oc.scanned;
        report.hypothesis_satisfying += oc.hypothesis_satisfying;
        report.exceptions += oc.exceptions;
        report.violations += oc.violations;
        report.per_order.push_back(oc);
    }
    return report;
}

/// Stream variant: graph6 records, disconnected inputs counted and
/// skipped, decode failures surface with their record index.
inline ScanReport verify_sufficiency_stream(const TheoremSpec& spec, std::istream& in,
                                            const std::string& source_label = "stream") {
    ScanReport report;
    report.theorem = spec.name;
    report.conclusion = conclusion_name(spec.conclusion);
    report.source = source_label;
    Graph6Reader reader(in);
    detail::ChunkPartial part;
    while (auto rec = reader.next()) {
        if (!is_connected(rec->graph)) {
            ++report.skipped_disconnected;
            continue;
        }
        detail::scan_graph(rec->graph, spec, part);
    }
    report.scanned = part.scanned;
    report.hypothesis_satisfying = part.hyp;
    report.exceptions = part.exc;
    report.violations = part.viol;
    report.violating = std::move(part.violating);
    return report;
}

/// Search space for counterexamples: enumeration up to n_max, then the
/// registered families. Exception graphs are skipped by default so a find
/// is never an excused graph; callers may widen the net.
struct SearchBudget {
    int n_max = 7;
    bool extended = false;
    bool skip_mode_i = true;
    bool skip_mode_ii = true;
    std::vector<FamilySpec> families = default_registry();
};

struct SearchResult {
    std::optional<Graph> found;
    std::string found_in;  // "enumeration" or a family token
    std::uint64_t examined = 0;
};

inline SearchResult search_counterexample(const PairSpec& pair, const SearchBudget& budget = {}) {
    if (budget.n_max >= 8 && !budget.extended)
        throw std::invalid_argument(
            "the full n=8 labeled scan (2^28 masks) is opt-in; enable extended mode");
    SearchResult result;
    auto qualifies = [&](const Graph& g) {
        ++result.examined;
        if (!detail::hypothesis_free(g, pair)) return false;
        if (budget.skip_mode_i && is_exception(g, ExceptionMode::mode_i)) return false;
        if (budget.skip_mode_ii && is_exception(g, ExceptionMode::mode_ii)) return false;
        const int delta = degree_profile(g).delta;
        return !detail::super_value(g, detail::lambda_value(g), delta);
    };
    for (int n = 1; n <= budget.n_max && !result.found; ++n) {
        EnumSpec spec;
        spec.n = n;
        spec.connected_only = true;
        enumerate_labeled(spec, [&](const Graph& g) {
            if (!result.found && qualifies(g)) {
                result.found = g;
                result.found_in = "enumeration";
            }
        });
    }
    for (const FamilySpec& fam : budget.families) {
        if (result.found) break;
        const Graph g = make_family(fam);
        if (qualifies(g)) {
            result.found = g;
            result.found_in = family_token(fam);
        }
    }
    return result;
}

/// The expected answer to "does pair-freeness imply super (modulo
/// exceptions)?": the pair must sit at-or-below one of the two base
/// pairs in the precedence order.
inline bool precedence_gate(const PairSpec& pair) {
    for (const Pattern& member : pair.members)
        if (induced_subgraph_of(member, atlas_pattern("P3")))
            throw std::invalid_argument("pattern " + member.name +
                                        " induces into P3; the single-subgraph rule covers it and "
                                        "the pair gate does not apply");
    static const PairSpec base_i = make_pair_spec({atlas_pattern("H0"), atlas_pattern("P4")});
    static const PairSpec base_ii = make_pair_spec({atlas_pattern("Z1"), atlas_pattern("T112")});
    return pair_precedes(pair, base_i) || pair_precedes(pair, base_ii);
}

enum class CrossOutcome { agree, inconclusive_budget, refuted };

inline std::string cross_outcome_name(CrossOutcome o) {
    switch (o) {
        case CrossOutcome::agree: return "agree";
        case CrossOutcome::inconclusive_budget: return "inconclusive (budget)";
        case CrossOutcome::refuted: return "refuted";
    }
    return "?";
}

struct ConsistencyReport {
    std::string pair_label;
    bool gate = false;
    CrossOutcome outcome = CrossOutcome::refuted;
    std::optional<ScanReport> sufficiency;  // gate true
    std::optional<SearchResult> search;     // gate false
    std::string detail;
};

/// Compares the gate's prediction with scan evidence. A failed search is
/// never treated as refutation, only as out of budget.
inline ConsistencyReport cross_validate(const PairSpec& pair, int n_max,
                                        const ParallelOptions& par = {},
                                        const std::optional<SearchBudget>& budget = std::nullopt) {
    ConsistencyReport report;
    report.pair_label = pair.label;
    report.gate = precedence_gate(pair);
    if (report.gate) {
        static const PairSpec base_i = make_pair_spec({atlas_pattern("H0"), atlas_pattern("P4")});
        const ExceptionMode mode =
            pair_precedes(pair, base_i) ? ExceptionMode::mode_i : ExceptionMode::mode_ii;
        TheoremSpec spec{"sufficiency:" + pair.label, pair, mode,
                         Conclusion::super_edge_connected};
        EnumSource source;
        source.n_max = n_max;
        source.extended = n_max >= 8;
        report.sufficiency = verify_sufficiency(spec, source, par);
        if (report.sufficiency->violations == 0) {
            report.outcome = CrossOutcome::agree;
            report.detail = "0 violations in " + std::to_string(report.sufficiency->scanned) +
                            " connected graphs";
        } else {
            report.outcome = CrossOutcome::refuted;
            report.detail = std::to_string(report.sufficiency->violations) + " violations";
        }
        return report;
    }
    SearchBudget b = budget.value_or(SearchBudget{});
    if (!budget) b.n_max = std::min(n_max, 7);
    report.search = search_counterexample(pair, b);
    if (report.search->found) {
        report.outcome = CrossOutcome::agree;
        report.detail = "counterexample " + encode_graph6(*report.search->found) + " found in " +
                        report.search->found_in;
    } else {
        report.outcome = CrossOutcome::inconclusive_budget;
        report.detail = "no counterexample within budget; not evidence of sufficiency";
    }
    return report;
}

}  // namespace superedge
