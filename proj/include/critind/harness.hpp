// harness.hpp
//
// Graph streams (exhaustive labeled graphs, seeded G(n,p), graph6 / edge-list
// files), the claim-suite runner, and the conjecture hunter.  Streams are
// deterministic: exhaustive sources walk edge-pattern codes in ascending
// order (bit k of the code is the k-th pair in the shared column order),
// random sources consume one SplitMix64 sequence, and files are read line by
// line — so identical stream specs reproduce byte-identical reports.
//
// The hunter never trusts the fast pipeline alone: every candidate
// counterexample is recomputed from scratch by full-subset-enumeration
// oracles, and any disagreement between the two paths is raised as an
// internal error rather than reported as a finding.

#ifndef CRITIND_HARNESS_HPP
#define CRITIND_HARNESS_HPP

#include "critind/claims.hpp"
#include "critind/format.hpp"
#include "critind/generate.hpp"
#include "critind/graph.hpp"
#include "critind/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace critind {

// ------------------------------------------------------------- streams --

struct StreamSpec {
    enum class Source { exhaustive, random, file };

    Source source = Source::exhaustive;
    int n = 0;                             // exhaustive / random
    double p = 0.0;                        // random
    std::uint64_t count = 0;               // random
    std::uint64_t seed = 0;                // random (always explicit)
    std::string path;                      // file
    std::string file_format = "graph6";    // "graph6" | "edgelist"
    bool allow_n8 = false;                 // opt-in past the default exhaustive ceiling
    bool connected_only = false;
    std::optional<int> min_edges;
    std::optional<int> max_edges;

    static StreamSpec exhaustive(int n, bool allow_n8 = false) {
        StreamSpec s;
        s.source = Source::exhaustive;
        s.n = n;
        s.allow_n8 = allow_n8;
        return s;
    }
    static StreamSpec random(int n, double p, std::uint64_t count, std::uint64_t seed) {
        StreamSpec s;
        s.source = Source::random;
        s.n = n;
        s.p = p;
        s.count = count;
        s.seed = seed;
        return s;
    }
    static StreamSpec from_file(std::string path, std::string format = "graph6") {
        StreamSpec s;
        s.source = Source::file;
        s.path = std::move(path);
        s.file_format = std::move(format);
        return s;
    }

    ordered_json to_json() const {
        ordered_json j;
        switch (source) {
            case Source::exhaustive:
                j["source"] = "exhaustive";
                j["n"] = n;
                break;
            case Source::random:
                j["source"] = "random";
                j["n"] = n;
                j["p"] = p;
                j["count"] = count;
                j["seed"] = seed;
                break;
            case Source::file:
                j["source"] = "file";
                j["path"] = path;
                j["format"] = file_format;
                break;
        }
        if (connected_only) j["connected_only"] = true;
        if (min_edges) j["min_edges"] = *min_edges;
        if (max_edges) j["max_edges"] = *max_edges;
        return j;
    }
};

namespace detail {

inline void validate_stream(const StreamSpec& spec) {
    switch (spec.source) {
        case StreamSpec::Source::exhaustive: {
            if (spec.n < 0) throw std::invalid_argument("exhaustive stream needs n >= 0");
            const int ceiling = spec.allow_n8 ? 8 : 7;
            if (spec.n > ceiling)
                throw std::invalid_argument(
                    "exhaustive stream supports n <= 7 (n = 8 only by explicit opt-in); got n = " +
                    std::to_string(spec.n));
            break;
        }
        case StreamSpec::Source::random:
            if (spec.n < 0 || spec.n > kMaxVertices)
                throw std::invalid_argument("random stream needs 0 <= n <= " +
                                            std::to_string(kMaxVertices));
            if (spec.p < 0.0 || spec.p > 1.0)
                throw std::invalid_argument("edge probability must be in [0,1]");
            break;
        case StreamSpec::Source::file:
            if (spec.path.empty()) throw std::invalid_argument("file stream needs a path");
            if (spec.file_format != "graph6" && spec.file_format != "edgelist")
                throw std::invalid_argument("file stream format must be graph6 or edgelist, got '" +
                                            spec.file_format + "'");
            break;
    }
    if (spec.min_edges && spec.max_edges && *spec.min_edges > *spec.max_edges)
        throw std::invalid_argument("min_edges exceeds max_edges");
}

inline bool passes_filters(const StreamSpec& spec, const Graph& g) {
    if (spec.connected_only && !is_connected(g)) return false;
    const int m = g.edge_count();
    if (spec.min_edges && m < *spec.min_edges) return false;
    if (spec.max_edges && m > *spec.max_edges) return false;
    return true;
}

}  // namespace detail

// Streams every graph of the spec, in its deterministic order, to f.
// f returns true to keep streaming, false to stop early.
template <typename F>
inline void for_each_graph(const StreamSpec& spec, F&& f) {
    detail::validate_stream(spec);
    switch (spec.source) {
        case StreamSpec::Source::exhaustive: {
            std::vector<std::pair<int, int>> pairs;
            for_each_pair(spec.n, [&](int u, int v) { pairs.emplace_back(u, v); });
            const std::uint64_t limit = std::uint64_t{1} << pairs.size();
            for (std::uint64_t code = 0; code < limit; ++code) {
                Graph g;
                g.n = spec.n;
                g.adj.assign(static_cast<std::size_t>(spec.n), 0);
                for (std::size_t k = 0; k < pairs.size(); ++k)
                    if ((code >> k) & 1u) {
                        auto [u, v] = pairs[k];
                        g.adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
                        g.adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
                    }
                if (!detail::passes_filters(spec, g)) continue;
                if (!f(g)) return;
            }
            return;
        }
        case StreamSpec::Source::random: {
            SplitMix64 rng{spec.seed};
            for (std::uint64_t i = 0; i < spec.count; ++i) {
                const Graph g = random_graph(spec.n, spec.p, rng);
                if (!detail::passes_filters(spec, g)) continue;
                if (!f(g)) return;
            }
            return;
        }
        case StreamSpec::Source::file: {
            std::ifstream in(spec.path);
            if (!in) throw std::runtime_error("cannot open stream file: " + spec.path);
            if (spec.file_format == "edgelist") {
                std::stringstream buf;
                buf << in.rdbuf();
                const Graph g = parse_edge_list(buf.str());
                if (detail::passes_filters(spec, g)) f(g);
                return;
            }
            std::string line;
            std::size_t line_no = 0;
            while (std::getline(in, line)) {
                ++line_no;
                if (!line.empty() && line.back() == '\r') line.pop_back();
                if (line.empty()) continue;
                Graph g;
                try {
                    g = parse_graph6(line);
                } catch (const std::exception& e) {
                    throw std::runtime_error(spec.path + ":" + std::to_string(line_no) + ": " +
                                             e.what());
                }
                if (!detail::passes_filters(spec, g)) continue;
                if (!f(g)) return;
            }
            return;
        }
    }
}

// --------------------------------------------------------------- suite --

struct ClaimTally {
    std::uint64_t holds = 0;
    std::uint64_t fails = 0;
    std::uint64_t not_applicable = 0;
};

struct SuiteReport {
    ordered_json stream;
    std::vector<std::string> claims;                        // evaluation order
    std::vector<std::pair<std::string, ClaimTally>> tallies;  // same order
    std::uint64_t graphs = 0;
    bool aborted = false;                    // stopped on first failed claim
    std::optional<ClaimOutcome> first_failure;

    bool ok() const { return !first_failure.has_value(); }

    ordered_json summary_json() const {
        ordered_json j;
        j["summary"] = "suite";
        j["stream"] = stream;
        j["graphs"] = graphs;
        ordered_json per_claim;
        for (const auto& [id, tally] : tallies) {
            per_claim[id] = ordered_json{{"holds", tally.holds},
                                         {"fails", tally.fails},
                                         {"not-applicable", tally.not_applicable}};
        }
        j["claims"] = std::move(per_claim);
        j["aborted"] = aborted;
        if (first_failure) {
            j["failure"] = ordered_json{{"claim_id", first_failure->claim_id},
                                        {"graph_id", first_failure->graph_id},
                                        {"witness", first_failure->witness}};
        } else {
            j["failure"] = nullptr;
        }
        return j;
    }

    std::string to_text() const {
        std::ostringstream out;
        out << "suite over " << stream.dump() << "\n";
        out << "graphs processed: " << graphs << "\n";
        out << "claim                 holds      fails  not-applicable\n";
        for (const auto& [id, tally] : tallies) {
            out << id;
            for (std::size_t i = id.size(); i < 20; ++i) out << ' ';
            std::string h = std::to_string(tally.holds);
            std::string f = std::to_string(tally.fails);
            std::string na = std::to_string(tally.not_applicable);
            for (std::size_t i = h.size(); i < 7; ++i) out << ' ';
            out << h;
            for (std::size_t i = f.size(); i < 11; ++i) out << ' ';
            out << f;
            for (std::size_t i = na.size(); i < 16; ++i) out << ' ';
            out << na << "\n";
        }
        if (first_failure) {
            out << "FAILED: claim " << first_failure->claim_id << " on graph "
                << first_failure->graph_id << " (implementation bug; witness below)\n";
            out << first_failure->witness.dump(2) << "\n";
        } else {
            out << "all claims hold\n";
        }
        return out.str();
    }
};

// StructureReport straight from an already-built claim context (the suite
// computes the context anyway; d = id there is covered by the oracle tests)
inline StructureReport report_from_context(const AnalysisContext& ctx) {
    StructureReport r;
    r.graph_id = ctx.graph_id;
    r.n = ctx.g.n;
    r.m = ctx.g.edge_count();
    r.alpha = ctx.alpha;
    r.mu = ctx.mu;
    r.d = ctx.d;
    r.id = ctx.d;
    r.ke = ctx.ke;
    r.core = ctx.core_set;
    r.corona = ctx.corona_set;
    r.ker = ctx.ker_set;
    r.diadem = ctx.diadem_set;
    r.core_critical = ctx.critical(ctx.core_set);
    r.corona_critical = ctx.critical(ctx.corona_set);
    r.omega_count = ctx.omega.sets.size();
    return r;
}

namespace detail {

inline void check_claim_selection(const std::vector<std::string>& claims) {
    const auto& ids = claim_ids();
    for (const std::string& id : claims)
        if (std::find(ids.begin(), ids.end(), id) == ids.end())
            throw std::invalid_argument("unknown claim id: " + id);
}

// per-graph suite step; returns false once a claim failed (abort signal)
inline bool suite_step(SuiteReport& rep, const Graph& g, const std::vector<std::string>& claims,
                       const std::function<void(const StructureReport&)>& sink) {
    const AnalysisContext ctx = make_context(g);
    ++rep.graphs;
    for (std::size_t i = 0; i < claims.size(); ++i) {
        const ClaimOutcome out = evaluate_claim(ctx, claims[i]);
        switch (out.status) {
            case ClaimStatus::holds: ++rep.tallies[i].second.holds; break;
            case ClaimStatus::fails: ++rep.tallies[i].second.fails; break;
            case ClaimStatus::not_applicable: ++rep.tallies[i].second.not_applicable; break;
        }
        if (out.status == ClaimStatus::fails) {
            rep.first_failure = out;
            rep.aborted = true;
            return false;
        }
    }
    if (sink) sink(report_from_context(ctx));
    return true;
}

}  // namespace detail

// Runs the selected claims over the stream.  Every claim in the table is a
// proved statement, so the first `fails` outcome aborts the run with its
// witness persisted (the remaining graphs cannot add information: the
// implementation is already known to be wrong).  `sink`, when given,
// receives one StructureReport per processed graph.
inline SuiteReport run_suite(const StreamSpec& spec, const std::vector<std::string>& claims,
                             const std::function<void(const StructureReport&)>& sink = {}) {
    detail::check_claim_selection(claims);
    SuiteReport rep;
    rep.stream = spec.to_json();
    rep.claims = claims;
    for (const std::string& id : claims) rep.tallies.emplace_back(id, ClaimTally{});
    for_each_graph(spec, [&](const Graph& g) { return detail::suite_step(rep, g, claims, sink); });
    return rep;
}

// Same runner over an explicit graph list (e.g. the bundled fixtures).
inline SuiteReport run_suite_on_graphs(const std::vector<Graph>& graphs,
                                       const std::vector<std::string>& claims,
                                       const std::function<void(const StructureReport&)>& sink = {},
                                       const std::string& stream_label = "explicit") {
    detail::check_claim_selection(claims);
    SuiteReport rep;
    rep.stream = ordered_json{{"source", stream_label}, {"graphs", graphs.size()}};
    rep.claims = claims;
    for (const std::string& id : claims) rep.tallies.emplace_back(id, ClaimTally{});
    for (const Graph& g : graphs)
        if (!detail::suite_step(rep, g, claims, sink)) break;
    return rep;
}

// ---------------------------------------------------------------- hunt --

// Full-subset-enumeration recomputation of everything the hunter relies on.
// Deliberately naive — independent of the branch-and-bound enumerators, the
// double-cover matching route, and the blossom algorithm it double-checks.
struct OracleProfile {
    int alpha = 0;
    int mu = 0;
    int d = 0;
    bool ke = false;
    std::vector<VertexSet> omega;
    std::vector<VertexSet> critical_independent;
    VertexSet core, corona, ker, diadem;
};

namespace detail {

inline OracleProfile brute_profile(const Graph& g) {
    if (g.n > 20) throw std::invalid_argument("brute_profile supports n <= 20");
    OracleProfile p;
    const std::uint64_t limit = std::uint64_t{1} << g.n;
    std::uint64_t ker_acc = full_mask(g.n);
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        std::uint64_t nbr = 0;
        for (int v = 0; v < g.n; ++v)
            if ((mask >> v) & 1u) nbr |= g.adj[static_cast<std::size_t>(v)];
        const int diff = std::popcount(mask) - std::popcount(nbr);
        const bool indep = (nbr & mask) == 0;
        if (diff > p.d) p.d = diff;  // d(∅) = 0 starts the maximum
        if (indep && std::popcount(mask) > p.alpha) p.alpha = std::popcount(mask);
    }
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        std::uint64_t nbr = 0;
        for (int v = 0; v < g.n; ++v)
            if ((mask >> v) & 1u) nbr |= g.adj[static_cast<std::size_t>(v)];
        const bool indep = (nbr & mask) == 0;
        if (!indep) continue;
        if (std::popcount(mask) == p.alpha) p.omega.push_back(VertexSet{mask});
        if (std::popcount(mask) - std::popcount(nbr) == p.d) {
            p.critical_independent.push_back(VertexSet{mask});
            ker_acc &= mask;
            p.diadem = VertexSet{p.diadem.bits | mask};
        }
    }
    p.ker = VertexSet{ker_acc};
    std::uint64_t core_acc = full_mask(g.n), corona_acc = 0;
    for (VertexSet s : p.omega) {
        core_acc &= s.bits;
        corona_acc |= s.bits;
    }
    p.core = VertexSet{core_acc};
    p.corona = VertexSet{corona_acc};
    p.mu = brute_force_mu(g, g.edge_count());
    p.ke = (p.alpha + p.mu == g.n);
    return p;
}

}  // namespace detail

struct Counterexample {
    std::string graph_id;
    ordered_json details;
};

struct HuntReport {
    ordered_json stream;
    std::string conjecture;
    std::vector<Counterexample> counterexamples;
    std::uint64_t graphs = 0;

    ordered_json summary_json() const {
        ordered_json j;
        j["summary"] = "hunt";
        j["conjecture"] = conjecture;
        j["stream"] = stream;
        j["graphs"] = graphs;
        j["counterexamples"] = counterexamples.size();
        return j;
    }

    std::string to_text() const {
        std::ostringstream out;
        out << "hunt for " << conjecture << " over " << stream.dump() << "\n";
        out << "graphs processed: " << graphs << "\n";
        if (counterexamples.empty()) {
            out << "no counterexamples\n";
        } else {
            out << counterexamples.size() << " counterexample(s), oracle re-verified:\n";
            for (const Counterexample& c : counterexamples)
                out << "  " << c.graph_id << "  " << c.details.dump() << "\n";
        }
        return out.str();
    }
};

namespace detail {

// fast-pipeline values for one hunt candidate check
struct HuntProfile {
    int alpha = 0;
    int mu = 0;
    bool ke = false;
    VertexSet ker, diadem, corona;
};

inline HuntProfile hunt_profile(const Graph& g, bool need_corona_ke) {
    HuntProfile h;
    h.alpha = independence_number(g);
    const auto family = enumerate_critical_independent_sets(g);
    h.ker = intersect_all(family);
    h.diadem = union_all(family);
    if (need_corona_ke) {
        h.mu = maximum_matching(g).size();
        h.ke = (h.alpha + h.mu == g.n);
        h.corona = corona(g);
    }
    return h;
}

// the hunter's trust boundary: candidate found by the fast path must be
// reproduced, value by value, by the full-subset oracle
inline void cross_check(const Graph& g, const HuntProfile& fast, const OracleProfile& oracle,
                        bool checked_corona_ke) {
    const std::string id = to_graph6(g);
    if (fast.alpha != oracle.alpha)
        throw internal_error("hunt cross-check failed on " + id + ": alpha " +
                             std::to_string(fast.alpha) + " vs oracle " +
                             std::to_string(oracle.alpha));
    if (fast.ker != oracle.ker || fast.diadem != oracle.diadem)
        throw internal_error("hunt cross-check failed on " + id + ": ker/diadem mismatch");
    if (checked_corona_ke) {
        if (fast.mu != oracle.mu)
            throw internal_error("hunt cross-check failed on " + id + ": mu " +
                                 std::to_string(fast.mu) + " vs oracle " +
                                 std::to_string(oracle.mu));
        if (fast.ke != oracle.ke || fast.corona != oracle.corona)
            throw internal_error("hunt cross-check failed on " + id + ": ke/corona mismatch");
    }
}

}  // namespace detail

// Scans the stream for violations of the named conjecture.
//   ker-diadem:        |ker(G)| + |diadem(G)| ≤ 2α(G) for every graph
//   diadem-corona-ke:  diadem(G) = corona(G) implies G is König–Egerváry
// Candidates from the fast pipeline are re-verified with detail::brute_profile
// before being reported; a fast/oracle disagreement is an internal error.
inline HuntReport hunt(const StreamSpec& spec, const std::string& conjecture) {
    if (conjecture != "ker-diadem" && conjecture != "diadem-corona-ke")
        throw std::invalid_argument("unknown conjecture: " + conjecture +
                                    " (expected ker-diadem or diadem-corona-ke)");
    const bool corona_ke = conjecture == "diadem-corona-ke";
    HuntReport rep;
    rep.stream = spec.to_json();
    rep.conjecture = conjecture;
    for_each_graph(spec, [&](const Graph& g) {
        ++rep.graphs;
        const detail::HuntProfile fast = detail::hunt_profile(g, corona_ke);
        bool candidate;
        if (corona_ke)
            candidate = (fast.diadem == fast.corona) && !fast.ke;
        else
            candidate = fast.ker.count() + fast.diadem.count() > 2 * fast.alpha;
        if (!candidate) return true;

        const OracleProfile oracle = detail::brute_profile(g);
        detail::cross_check(g, fast, oracle, corona_ke);

        Counterexample c;
        c.graph_id = to_graph6(g);
        if (corona_ke) {
            if (oracle.diadem != oracle.corona || oracle.ke)
                throw internal_error("hunt: fast path produced a false candidate on " + c.graph_id);
            c.details = ordered_json{{"conjecture", conjecture},
                                     {"n", g.n},
                                     {"m", g.edge_count()},
                                     {"alpha", oracle.alpha},
                                     {"mu", oracle.mu},
                                     {"alpha_plus_mu", oracle.alpha + oracle.mu},
                                     {"diadem", detail::json_set(oracle.diadem)},
                                     {"corona", detail::json_set(oracle.corona)},
                                     {"ke", oracle.ke}};
        } else {
            if (oracle.ker.count() + oracle.diadem.count() <= 2 * oracle.alpha)
                throw internal_error("hunt: fast path produced a false candidate on " + c.graph_id);
            c.details = ordered_json{{"conjecture", conjecture},
                                     {"n", g.n},
                                     {"m", g.edge_count()},
                                     {"alpha", oracle.alpha},
                                     {"ker", detail::json_set(oracle.ker)},
                                     {"diadem", detail::json_set(oracle.diadem)},
                                     {"ker_size", oracle.ker.count()},
                                     {"diadem_size", oracle.diadem.count()},
                                     {"two_alpha", 2 * oracle.alpha}};
        }
        rep.counterexamples.push_back(std::move(c));
        return true;
    });
    return rep;
}

}  // namespace critind

#endif  // CRITIND_HARNESS_HPP
