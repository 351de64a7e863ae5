// report.hpp
//
// The one-graph structure report: every independence-structure quantity the
// library computes, cross-checked against its internal invariants, with
// byte-stable JSON emission (one object per line in streams) and a
// human-readable table.

#ifndef CRITIND_REPORT_HPP
#define CRITIND_REPORT_HPP

#include "critind/critical.hpp"
#include "critind/format.hpp"
#include "critind/graph.hpp"
#include "critind/independence.hpp"
#include "critind/matching.hpp"

#include <json.hpp>

#include <cstdint>
#include <sstream>
#include <string>

namespace critind {

using ordered_json = nlohmann::ordered_json;

// verify: recompute the critical difference by independent-set enumeration
// and check the kernel's minimality, alongside the always-on invariants.
// fast: trust the double-cover route for d (used by bulk streams; the hunter
// re-verifies its findings with full brute force anyway).
enum class AnalyzeMode { verify, fast };

struct StructureReport {
    std::string graph_id;  // graph6
    int n = 0;
    int m = 0;
    int alpha = 0;
    int mu = 0;
    int d = 0;
    int id = 0;
    bool ke = false;
    VertexSet core;
    VertexSet corona;
    VertexSet ker;
    VertexSet diadem;
    bool core_critical = false;
    bool corona_critical = false;
    std::uint64_t omega_count = 0;
};

namespace detail {

inline ordered_json report_set(VertexSet s) {
    ordered_json arr = ordered_json::array();
    for (int v : s.to_vector()) arr.push_back(v);
    return arr;
}

}  // namespace detail

inline StructureReport analyze(const Graph& g, AnalyzeMode mode = AnalyzeMode::verify,
                               std::uint64_t cap = default_enumeration_cap()) {
    StructureReport r;
    r.graph_id = to_graph6(g);
    r.n = g.n;
    r.m = g.edge_count();
    r.alpha = independence_number(g);
    r.mu = maximum_matching(g).size();
    r.ke = (r.alpha + r.mu == g.n);
    r.d = critical_difference(g);
    if (mode == AnalyzeMode::verify) {
        r.id = independence_critical_difference(g);
        if (r.d != r.id)
            throw internal_error("analyze: critical difference mismatch, double cover says " +
                                 std::to_string(r.d) + ", independent enumeration says " +
                                 std::to_string(r.id));
    } else {
        r.id = r.d;
    }

    const OmegaFamily omega = maximum_independent_sets(g, cap);
    r.omega_count = omega.sets.size();
    r.core = omega.intersection();
    r.corona = omega.union_all();

    const auto family = enumerate_critical_independent_sets(g, cap);
    r.ker = detail::intersect_all(family);
    r.diadem = detail::union_all(family);
    if (mode == AnalyzeMode::verify) {
        if (set_difference_value(g, r.ker) != r.d)
            throw internal_error("analyze: ker is not critical");
        for_each_vertex(r.ker, [&](int v) {
            VertexSet shrunk = r.ker;
            shrunk.reset(v);
            if (set_difference_value(g, shrunk) == r.d)
                throw internal_error("analyze: ker is not minimal, still critical without vertex " +
                                     std::to_string(v));
        });
    }

    r.core_critical = set_difference_value(g, r.core) == r.d;
    r.corona_critical = set_difference_value(g, r.corona) == r.d;

    // always-on cross-checks: these hold for every graph (or for every KE
    // graph), so a violation can only be an internal inconsistency
    if (!r.ker.subset_of(r.core))
        throw internal_error("analyze: ker is not contained in core");
    if (!r.diadem.subset_of(r.corona))
        throw internal_error("analyze: diadem is not contained in corona");
    if (r.ke) {
        if (r.core.count() + r.corona.count() != 2 * r.alpha)
            throw internal_error("analyze: KE graph with |core|+|corona| = " +
                                 std::to_string(r.core.count() + r.corona.count()) +
                                 " != " + std::to_string(2 * r.alpha));
        if (r.d != r.alpha - r.mu)
            throw internal_error("analyze: KE graph with d = " + std::to_string(r.d) +
                                 " != alpha - mu = " + std::to_string(r.alpha - r.mu));
    }
    return r;
}

inline ordered_json report_to_json(const StructureReport& r) {
    ordered_json j;
    j["graph_id"] = r.graph_id;
    j["n"] = r.n;
    j["m"] = r.m;
    j["alpha"] = r.alpha;
    j["mu"] = r.mu;
    j["d"] = r.d;
    j["id"] = r.id;
    j["ke"] = r.ke;
    j["core"] = detail::report_set(r.core);
    j["corona"] = detail::report_set(r.corona);
    j["ker"] = detail::report_set(r.ker);
    j["diadem"] = detail::report_set(r.diadem);
    j["core_critical"] = r.core_critical;
    j["corona_critical"] = r.corona_critical;
    j["omega_count"] = r.omega_count;
    return j;
}

// human-readable table; vertex sets render through the graph's labels
inline std::string report_to_text(const StructureReport& r, const Graph& g) {
    std::ostringstream out;
    out << "graph            " << r.graph_id << "\n";
    out << "n, m             " << r.n << ", " << r.m << "\n";
    out << "alpha            " << r.alpha << "\n";
    out << "mu               " << r.mu << "\n";
    out << "d = id           " << r.d << "\n";
    out << "koenig-egervary  " << (r.ke ? "yes" : "no") << "\n";
    out << "omega count      " << r.omega_count << "\n";
    out << "core             " << format_vertex_set(g, r.core)
        << (r.core_critical ? "  (critical)" : "  (not critical)") << "\n";
    out << "corona           " << format_vertex_set(g, r.corona)
        << (r.corona_critical ? "  (critical)" : "  (not critical)") << "\n";
    out << "ker              " << format_vertex_set(g, r.ker) << "\n";
    out << "diadem           " << format_vertex_set(g, r.diadem) << "\n";
    return out.str();
}

}  // namespace critind

#endif  // CRITIND_REPORT_HPP
