#pragma once

#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "superedge/connectivity.hpp"
#include "superedge/families.hpp"
#include "superedge/harness.hpp"

namespace superedge {

inline constexpr int kSchemaVersion = 1;

using json = nlohmann::ordered_json;

inline json json_edge(const Edge& e) { return json::array({e.u, e.v}); }

inline json json_witness(const CutWitness& w) {
    json j;
    j["side"] = to_vertex_list(w.side);
    json boundary = json::array();
    for (const Edge& e : w.boundary) boundary.push_back(json_edge(e));
    j["boundary"] = std::move(boundary);
    j["size"] = w.size;
    j["trivial"] = w.trivial;
    return j;
}

inline json json_connectivity(const ConnectivityReport& r) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = r.n;
    j["m"] = r.m;
    j["delta"] = r.delta;
    j["kappa"] = r.kappa;
    j["lambda"] = r.lambda;
    j["lambda_restricted"] = r.lambda_restricted ? json(*r.lambda_restricted) : json(nullptr);
    j["connected"] = r.connected;
    j["maximally_edge_connected"] = r.maximally_edge_connected;
    j["super"] = r.super;
    j["witness"] = r.witness ? json_witness(*r.witness) : json(nullptr);
    j["notes"] = r.notes;
    return j;
}

inline json json_scan(const ScanReport& r) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["theorem"] = r.theorem;
    j["conclusion"] = r.conclusion;
    j["source"] = r.source;
    j["scanned"] = r.scanned;
    j["skipped_disconnected"] = r.skipped_disconnected;
    j["hypothesis_satisfying"] = r.hypothesis_satisfying;
    j["exceptions"] = r.exceptions;
    j["violations"] = r.violations;
    j["violating"] = r.violating;
    if (!r.per_order.empty()) {
        json per = json::array();
        for (const OrderCount& oc : r.per_order) {
            json row;
            row["n"] = oc.n;
            row["scanned"] = oc.scanned;
            row["hypothesis_satisfying"] = oc.hypothesis_satisfying;
            row["exceptions"] = oc.exceptions;
            row["violations"] = oc.violations;
            per.push_back(std::move(row));
        }
        j["per_order"] = std::move(per);
    }
    j["ok"] = r.ok();
    return j;
}

inline json json_registry(const RegistryReport& r) {
    json j;
    j["schema_version"] = kSchemaVersion;
    json checks = json::array();
    for (const RegistryCheck& c : r.checks) {
        json row;
        row["family"] = family_token(c.spec);
        row["graph6"] = c.graph6;
        row["n"] = c.n;
        row["delta"] = c.delta;
        row["lambda"] = c.lambda;
        row["super"] = c.super;
        row["witness"] = c.super ? json(nullptr) : json_witness(c.witness);
        row["ok"] = c.ok;
        checks.push_back(std::move(row));
    }
    j["checks"] = std::move(checks);
    j["violations"] = r.violations;
    j["ok"] = r.violations == 0;
    return j;
}

inline json json_search(const SearchResult& r) {
    json j;
    j["found"] = r.found ? json(encode_graph6(*r.found)) : json(nullptr);
    j["found_in"] = r.found ? json(r.found_in) : json(nullptr);
    j["examined"] = r.examined;
    return j;
}

inline json json_consistency(const ConsistencyReport& r) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["pair"] = r.pair_label;
    j["gate"] = r.gate;
    j["outcome"] = cross_outcome_name(r.outcome);
    j["detail"] = r.detail;
    j["sufficiency"] = r.sufficiency ? json_scan(*r.sufficiency) : json(nullptr);
    j["search"] = r.search ? json_search(*r.search) : json(nullptr);
    return j;
}

inline json json_verdict(const Verdict& v) {
    json j;
    j["graph6"] = v.graph6;
    j["hypothesis_holds"] = v.hypothesis_holds;
    j["exception"] = v.exception;
    j["conclusion_holds"] = v.conclusion_holds ? json(*v.conclusion_holds) : json(nullptr);
    j["violation"] = v.violation;
    j["witness"] = v.witness ? json_witness(*v.witness) : json(nullptr);
    return j;
}

inline std::string format_vertex_set(VertexSet side) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int v : to_vertex_list(side)) {
        if (!first) out << ',';
        out << v;
        first = false;
    }
    out << '}';
    return out.str();
}

inline std::string format_boundary(const std::vector<Edge>& boundary) {
    std::ostringstream out;
    bool first = true;
    for (const Edge& e : boundary) {
        if (!first) out << ' ';
        out << '(' << e.u << ',' << e.v << ')';
        first = false;
    }
    return out.str();
}

inline std::string text_witness(const CutWitness& w) {
    std::ostringstream out;
    out << "size " << w.size << (w.trivial ? ", trivial" : ", non-trivial") << ", side "
        << format_vertex_set(w.side) << ", edges " << format_boundary(w.boundary);
    return out.str();
}

inline std::string text_connectivity(const ConnectivityReport& r, const std::string& graph6) {
    std::ostringstream out;
    out << "graph " << graph6 << "  n=" << r.n << " m=" << r.m << "\n";
    out << "  delta=" << r.delta << " kappa=" << r.kappa << " lambda=" << r.lambda
        << " lambda'=";
    if (r.lambda_restricted)
        out << *r.lambda_restricted;
    else
        out << "undefined";
    out << "\n";
    out << "  connected:                " << (r.connected ? "yes" : "no") << "\n";
    out << "  maximally edge-connected: " << (r.maximally_edge_connected ? "yes" : "no") << "\n";
    out << "  super edge-connected:     " << (r.super ? "yes" : "no") << "\n";
    if (r.witness) out << "  witness cut: " << text_witness(*r.witness) << "\n";
    for (const std::string& note : r.notes) out << "  note: " << note << "\n";
    return out.str();
}

inline std::string text_scan(const ScanReport& r) {
    std::ostringstream out;
    out << "theorem " << r.theorem << " (" << r.conclusion << "): "
        << (r.ok() ? "PASS" : "FAIL") << "\n";
    out << "  source: " << r.source << "\n";
    out << "  scanned=" << r.scanned << " hypothesis=" << r.hypothesis_satisfying
        << " exceptions=" << r.exceptions << " violations=" << r.violations;
    if (r.skipped_disconnected != 0)
        out << " skipped_disconnected=" << r.skipped_disconnected;
    out << "\n";
    for (const OrderCount& oc : r.per_order)
        out << "  n=" << oc.n << ": scanned=" << oc.scanned
            << " hypothesis=" << oc.hypothesis_satisfying << " exceptions=" << oc.exceptions
            << " violations=" << oc.violations << "\n";
    for (const std::string& rec : r.violating) out << "  violating: " << rec << "\n";
    return out.str();
}

inline std::string text_registry(const RegistryReport& r) {
    std::ostringstream out;
    for (const RegistryCheck& c : r.checks) {
        out << (c.ok ? "ok   " : "FAIL ") << family_token(c.spec) << "  graph6=" << c.graph6
            << " n=" << c.n << " delta=" << c.delta << " lambda=" << c.lambda
            << " super=" << (c.super ? "yes" : "no");
        if (!c.super) out << "  witness: " << text_witness(c.witness);
        out << "\n";
    }
    out << "families checked=" << r.checks.size() << " violations=" << r.violations << " "
        << (r.violations == 0 ? "PASS" : "FAIL") << "\n";
    return out.str();
}

inline std::string text_consistency(const ConsistencyReport& r) {
    std::ostringstream out;
    out << "pair " << r.pair_label << ": gate=" << (r.gate ? "true" : "false") << " outcome="
        << cross_outcome_name(r.outcome) << "\n";
    out << "  " << r.detail << "\n";
    if (r.sufficiency) out << text_scan(*r.sufficiency);
    return out.str();
}

inline void write_graph6_lines(std::ostream& out, const std::vector<std::string>& records) {
    for (const std::string& rec : records) out << rec << "\n";
}

}  // namespace superedge
