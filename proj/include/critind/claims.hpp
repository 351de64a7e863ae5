// claims.hpp
//
// The claim table: every structural statement the library is built around,
// as an executable predicate over (Graph, optional family of maximum
// independent sets).  Each predicate returns a structured outcome with a
// witness carrying every quantity needed to re-verify the verdict by hand.
//
// All table entries are proved statements, so `fails` on any of them means
// the implementation (or a fixture transcription) is wrong, never the
// mathematics; the witness then records an implementation-bug severity and
// the suite runner aborts on it.
//
// Claims quantifying over families Λ ⊆ Ω(G) are evaluated over all nonempty
// subsets when |Ω(G)| ≤ 12, otherwise over all singletons, all pairs, and
// Λ = Ω(G).  Equivalence claims evaluate every side of the equivalence
// independently and compare the truth values.

#ifndef CRITIND_CLAIMS_HPP
#define CRITIND_CLAIMS_HPP

#include "critind/critical.hpp"
#include "critind/format.hpp"
#include "critind/graph.hpp"
#include "critind/independence.hpp"
#include "critind/matching.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace critind {

using ordered_json = nlohmann::ordered_json;

enum class ClaimStatus { holds, fails, not_applicable };

inline const char* to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::holds: return "holds";
        case ClaimStatus::fails: return "fails";
        case ClaimStatus::not_applicable: return "not-applicable";
    }
    return "unknown";
}

struct ClaimOutcome {
    std::string claim_id;
    ClaimStatus status = ClaimStatus::holds;
    ordered_json witness;   // complete counterexample data when status == fails
    std::string graph_id;   // graph6
};

// table order is the canonical claim order everywhere (reports, CLI, tallies)
inline const std::vector<std::string>& claim_ids() {
    static const std::vector<std::string> ids = {
        "berge",          "match-lemma",   "crit-extends",        "ns-matching",
        "ke-diff",        "ke-char",       "lattice",             "ker-core",
        "ker-min",        "diadem-crit",   "ke-core-corona-crit", "union-diff",
        "ker-empty-prop", "union-crit-impl", "corona-crit-impl",  "ke-cardinality",
        "ke-iff-union",   "ke-iff-pair",   "ke-iff-aug",          "ke-diadem",
        "ke-iff-corona",  "corona-lb",
    };
    return ids;
}

// A sampled family Λ ⊆ Ω(G), carried as indices into OmegaFamily::sets plus
// the precomputed quantities every Λ-claim consumes.
struct LambdaFamily {
    std::vector<int> members;       // ascending indices into omega.sets
    VertexSet inter;                // ⋂Λ
    VertexSet uni;                  // ⋃Λ
    int max_member_difference = 0;  // max over S ∈ Λ of |S| − |N(S)|
};

// Everything the claim predicates share for one graph, computed once.
struct AnalysisContext {
    Graph g;
    std::string graph_id;
    int alpha = 0;
    int mu = 0;
    int d = 0;
    bool ke = false;
    OmegaFamily omega;
    VertexSet core_set;
    VertexSet corona_set;
    std::vector<VertexSet> critical_independent;  // complete, ascending
    VertexSet ker_set;
    VertexSet diadem_set;
    std::vector<VertexSet> maximal_independent;   // complete, ascending
    std::optional<DifferenceTable> table;         // present when n <= 16
    std::vector<LambdaFamily> lambdas;            // sampling policy families

    VertexSet nbr(VertexSet x) const {
        return table ? table->neighborhood(x) : neighborhood(g, x);
    }
    int difference(VertexSet x) const {
        return table ? table->difference(x) : set_difference_value(g, x);
    }
    bool critical(VertexSet x) const { return difference(x) == d; }
};

namespace detail {

inline LambdaFamily make_lambda(const OmegaFamily& omega, const Graph& g,
                                const std::vector<int>& members) {
    LambdaFamily fam;
    fam.members = members;
    std::uint64_t inter = ~std::uint64_t{0};
    std::uint64_t uni = 0;
    fam.max_member_difference = std::numeric_limits<int>::min();
    for (int i : members) {
        const VertexSet s = omega.sets[static_cast<std::size_t>(i)];
        inter &= s.bits;
        uni |= s.bits;
        fam.max_member_difference =
            std::max(fam.max_member_difference, set_difference_value(g, s));
    }
    fam.inter = VertexSet{inter & full_mask(g.n)};
    fam.uni = VertexSet{uni};
    return fam;
}

// Sampling policy: exhaustive nonempty Λ ⊆ Ω when |Ω| ≤ 12 (≤ 4095
// families), otherwise all singletons, all pairs, and Λ = Ω.
inline std::vector<LambdaFamily> sample_lambda_families(const OmegaFamily& omega,
                                                        const Graph& g) {
    std::vector<LambdaFamily> out;
    const int k = static_cast<int>(omega.sets.size());
    if (k == 0) return out;
    if (k <= 12) {
        const std::uint32_t limit = std::uint32_t{1} << k;
        out.reserve(limit - 1);
        for (std::uint32_t mask = 1; mask < limit; ++mask) {
            std::vector<int> members;
            for (int i = 0; i < k; ++i)
                if ((mask >> i) & 1u) members.push_back(i);
            out.push_back(make_lambda(omega, g, members));
        }
        return out;
    }
    for (int i = 0; i < k; ++i) out.push_back(make_lambda(omega, g, {i}));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) out.push_back(make_lambda(omega, g, {i, j}));
    std::vector<int> all(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) all[static_cast<std::size_t>(i)] = i;
    out.push_back(make_lambda(omega, g, all));
    return out;
}

}  // namespace detail

inline AnalysisContext make_context(const Graph& g,
                                    std::uint64_t cap = default_enumeration_cap()) {
    AnalysisContext ctx;
    ctx.g = g;
    ctx.graph_id = to_graph6(g);
    ctx.alpha = independence_number(g);
    ctx.mu = maximum_matching(g).size();
    ctx.d = critical_difference(g);
    ctx.ke = (ctx.alpha + ctx.mu == g.n);
    ctx.omega = maximum_independent_sets(g, cap);
    ctx.core_set = ctx.omega.intersection();
    ctx.corona_set = ctx.omega.union_all();
    ctx.critical_independent = enumerate_critical_independent_sets(g, cap);
    ctx.ker_set = detail::intersect_all(ctx.critical_independent);
    if (ctx.critical_independent.empty())
        throw internal_error("critical-independent family cannot be empty");
    ctx.diadem_set = detail::union_all(ctx.critical_independent);
    ctx.maximal_independent = maximal_independent_sets(g, cap);
    if (g.n <= DifferenceTable::kMaxN) ctx.table.emplace(g);
    ctx.lambdas = detail::sample_lambda_families(ctx.omega, g);
    return ctx;
}

namespace detail {

inline ordered_json json_set(VertexSet s) {
    ordered_json arr = ordered_json::array();
    for (int v : s.to_vector()) arr.push_back(v);
    return arr;
}

inline ordered_json json_sets(const std::vector<VertexSet>& sets) {
    ordered_json arr = ordered_json::array();
    for (VertexSet s : sets) arr.push_back(json_set(s));
    return arr;
}

inline ordered_json json_matching(const Matching& m) {
    ordered_json arr = ordered_json::array();
    for (auto [u, v] : m.edges) arr.push_back(ordered_json::array({u, v}));
    return arr;
}

inline ordered_json json_lambda(const AnalysisContext& ctx, const LambdaFamily& fam) {
    ordered_json obj;
    obj["members"] = ordered_json::array();
    for (int i : fam.members)
        obj["members"].push_back(json_set(ctx.omega.sets[static_cast<std::size_t>(i)]));
    obj["intersection"] = json_set(fam.inter);
    obj["union"] = json_set(fam.uni);
    return obj;
}

inline ClaimOutcome outcome(const AnalysisContext& ctx, std::string claim_id,
                            ClaimStatus status, ordered_json witness) {
    if (status == ClaimStatus::fails) witness["severity"] = "implementation-bug";
    return ClaimOutcome{std::move(claim_id), status, std::move(witness), ctx.graph_id};
}

// does a matching saturate every source vertex (bipartite Kuhn between the
// two disjoint sets, using only graph edges running between them)?
inline bool saturates(const Graph& g, VertexSet sources, VertexSet targets) {
    if (sources.empty()) return true;
    if ((sources & targets) != VertexSet{})
        throw internal_error("matching query on overlapping sides");
    return bipartite_maximum_matching(g, sources, targets).size() == sources.count();
}

// ---------------------------------------------------------------- claims --

// berge: an independent set X is maximum iff every independent set disjoint
// from X can be matched into X.
//
// Reduction (both proved sound, cross-checked against the naive quantifier
// in the tests): (1) a non-maximal X always satisfies the biconditional
// trivially — some vertex v outside X has no neighbour in X, so S = {v} is
// unmatchable while |X| < α; a constant spot check per maximal X covers this
// branch.  (2) For maximal X, the independent sets disjoint from X are the
// independent sets of G[V − X], matchability restricts to subsets, and
// unmatchability lifts to supersets, so quantifying S over the maximal
// independent sets of G[V − X] is complete in both directions.
inline ClaimOutcome claim_berge(const AnalysisContext& ctx) {
    const Graph& g = ctx.g;
    for (VertexSet x : ctx.maximal_independent) {
        const bool lhs = x.count() == ctx.alpha;
        // trivial branch: drop the lowest vertex; the dropped vertex itself is
        // an unmatchable disjoint singleton, and the shrunk set is not maximum
        if (!x.empty()) {
            const int v = x.lowest();
            VertexSet shrunk = x;
            shrunk.reset(v);
            const bool shrunk_lhs = shrunk.count() == ctx.alpha;
            const bool singleton_matchable = neighborhood(g, VertexSet::of({v})).intersects(shrunk);
            if (shrunk_lhs || singleton_matchable)
                return outcome(ctx, "berge", ClaimStatus::fails,
                               {{"x", json_set(shrunk)},
                                {"unmatchable_s", json_set(VertexSet::of({v}))},
                                {"is_maximum", shrunk_lhs},
                                {"singleton_matchable", singleton_matchable}});
        }
        bool rhs = true;
        VertexSet bad_s;
        const auto induced = induced_subgraph(g, VertexSet::all(g.n) - x);
        for (VertexSet t : maximal_independent_sets(induced.graph)) {
            VertexSet s;
            for (int v : t.to_vector()) s.set(induced.vertex_of[static_cast<std::size_t>(v)]);
            if (!saturates(g, s, x)) {
                rhs = false;
                bad_s = s;
                break;
            }
        }
        if (lhs != rhs)
            return outcome(ctx, "berge", ClaimStatus::fails,
                           {{"x", json_set(x)},
                            {"x_size", x.count()},
                            {"alpha", ctx.alpha},
                            {"is_maximum", lhs},
                            {"all_disjoint_independent_matchable", rhs},
                            {"unmatchable_s", json_set(bad_s)}});
    }
    return outcome(ctx, "berge", ClaimStatus::holds,
                   {{"maximal_sets_checked", ctx.maximal_independent.size()},
                    {"alpha", ctx.alpha}});
}

// match-lemma: for independent A and nonempty Λ ⊆ Ω there is a matching from
// A − ⋂Λ into ⋃Λ − A.  Checking maximal independent A is complete (a
// matching for a superset restricts to any subset), and the predicate
// depends on Λ only through (⋂Λ, ⋃Λ), so duplicate pairs are skipped.
inline ClaimOutcome claim_match_lemma(const AnalysisContext& ctx,
                                      const std::vector<LambdaFamily>& families) {
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    std::size_t pairs = 0;
    for (const LambdaFamily& fam : families) {
        if (!seen.insert({fam.inter.bits, fam.uni.bits}).second) continue;
        ++pairs;
        for (VertexSet a : ctx.maximal_independent) {
            const VertexSet sources = a - fam.inter;
            const VertexSet targets = fam.uni - a;
            if (!saturates(ctx.g, sources, targets))
                return outcome(ctx, "match-lemma", ClaimStatus::fails,
                               {{"lambda", json_lambda(ctx, fam)},
                                {"a", json_set(a)},
                                {"sources", json_set(sources)},
                                {"targets", json_set(targets)}});
        }
    }
    return outcome(ctx, "match-lemma", ClaimStatus::holds,
                   {{"families_checked", families.size()},
                    {"distinct_intersection_union_pairs", pairs},
                    {"maximal_sets_checked", ctx.maximal_independent.size()}});
}

// crit-extends: each critical independent set is included in a maximum
// independent set.
inline ClaimOutcome claim_crit_extends(const AnalysisContext& ctx) {
    for (VertexSet c : ctx.critical_independent) {
        bool extended = false;
        for (VertexSet s : ctx.omega.sets)
            if (c.subset_of(s)) {
                extended = true;
                break;
            }
        if (!extended)
            return outcome(ctx, "crit-extends", ClaimStatus::fails,
                           {{"critical_independent_set", json_set(c)},
                            {"difference", ctx.difference(c)},
                            {"d", ctx.d},
                            {"omega", json_sets(ctx.omega.sets)}});
    }
    return outcome(ctx, "crit-extends", ClaimStatus::holds,
                   {{"critical_independent_count", ctx.critical_independent.size()}});
}

// ns-matching: there is a matching from N(S) into S for every critical
// independent set S.
inline ClaimOutcome claim_ns_matching(const AnalysisContext& ctx) {
    for (VertexSet s : ctx.critical_independent) {
        const VertexSet ns = ctx.nbr(s);
        if (!saturates(ctx.g, ns, s))
            return outcome(ctx, "ns-matching", ClaimStatus::fails,
                           {{"s", json_set(s)},
                            {"neighborhood", json_set(ns)},
                            {"max_matching", json_matching(bipartite_maximum_matching(ctx.g, ns, s))}});
    }
    return outcome(ctx, "ns-matching", ClaimStatus::holds,
                   {{"critical_independent_count", ctx.critical_independent.size()}});
}

// ke-diff: d(G) = α(G) − μ(G) for König–Egerváry graphs.
inline ClaimOutcome claim_ke_diff(const AnalysisContext& ctx) {
    if (!ctx.ke)
        return outcome(ctx, "ke-diff", ClaimStatus::not_applicable,
                       {{"reason", "graph is not Koenig-Egervary"},
                        {"alpha", ctx.alpha},
                        {"mu", ctx.mu},
                        {"n", ctx.g.n}});
    if (ctx.d != ctx.alpha - ctx.mu)
        return outcome(ctx, "ke-diff", ClaimStatus::fails,
                       {{"d", ctx.d}, {"alpha", ctx.alpha}, {"mu", ctx.mu}});
    return outcome(ctx, "ke-diff", ClaimStatus::holds,
                   {{"d", ctx.d}, {"alpha", ctx.alpha}, {"mu", ctx.mu}});
}

// ke-char: KE ⇔ some maximum independent set is critical ⇔ every maximum
// independent set is critical.  All three sides evaluated independently.
inline ClaimOutcome claim_ke_char(const AnalysisContext& ctx) {
    bool exists = false;
    bool forall = true;
    VertexSet critical_example, non_critical_example;
    for (VertexSet s : ctx.omega.sets) {
        if (ctx.critical(s)) {
            if (!exists) critical_example = s;
            exists = true;
        } else {
            if (forall) non_critical_example = s;
            forall = false;
        }
    }
    ordered_json w{{"ke", ctx.ke},
                   {"exists_critical_maximum", exists},
                   {"all_maximum_critical", forall},
                   {"omega_count", ctx.omega.sets.size()}};
    if (exists) w["critical_example"] = json_set(critical_example);
    if (!forall) w["non_critical_example"] = json_set(non_critical_example);
    const bool ok = (ctx.ke == exists) && (exists == forall);
    return outcome(ctx, "ke-char", ok ? ClaimStatus::holds : ClaimStatus::fails, std::move(w));
}

// lattice: if A and B are critical sets then A ∪ B and A ∩ B are critical.
// The full critical family is enumerated from the difference table (n ≤ 16);
// when it is large, a deterministic stride sample of 64 sets bounds the pair
// count.  Larger graphs fall back to the critical independent family.
inline ClaimOutcome claim_lattice(const AnalysisContext& ctx) {
    std::vector<VertexSet> family;
    std::string family_kind;
    if (ctx.table) {
        family_kind = "all-critical-sets";
        const std::uint64_t limit = std::uint64_t{1} << ctx.g.n;
        for (std::uint64_t mask = 0; mask < limit; ++mask)
            if (ctx.table->difference(VertexSet{mask}) == ctx.d) family.push_back(VertexSet{mask});
    } else {
        family_kind = "critical-independent-sets";
        family = ctx.critical_independent;
    }
    const std::size_t full_size = family.size();
    constexpr std::size_t kSample = 64;
    if (family.size() > kSample) {
        std::vector<VertexSet> sampled;
        sampled.reserve(kSample);
        for (std::size_t i = 0; i < kSample; ++i)
            sampled.push_back(family[i * family.size() / kSample]);
        family = std::move(sampled);
        family_kind += "-stride-sampled";
    }
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            const VertexSet a = family[i], b = family[j];
            const VertexSet u = a | b, x = a & b;
            if (!ctx.critical(u) || !ctx.critical(x))
                return outcome(ctx, "lattice", ClaimStatus::fails,
                               {{"a", json_set(a)},
                                {"b", json_set(b)},
                                {"d_union", ctx.difference(u)},
                                {"d_intersection", ctx.difference(x)},
                                {"d", ctx.d}});
        }
    return outcome(ctx, "lattice", ClaimStatus::holds,
                   {{"family", family_kind},
                    {"family_size", full_size},
                    {"pairs_checked", family.size() * (family.size() - 1) / 2}});
}

// ker-core: ker(G) ⊆ core(G).
inline ClaimOutcome claim_ker_core(const AnalysisContext& ctx) {
    if (!ctx.ker_set.subset_of(ctx.core_set))
        return outcome(ctx, "ker-core", ClaimStatus::fails,
                       {{"ker", json_set(ctx.ker_set)},
                        {"core", json_set(ctx.core_set)},
                        {"stray", json_set(ctx.ker_set - ctx.core_set)}});
    return outcome(ctx, "ker-core", ClaimStatus::holds,
                   {{"ker", json_set(ctx.ker_set)}, {"core", json_set(ctx.core_set)}});
}

// ker-min: ker(G) is the unique minimal independent critical set — it is
// itself independent and critical, and lies inside every critical
// independent set (which rules out any other minimal one).
inline ClaimOutcome claim_ker_min(const AnalysisContext& ctx) {
    const bool independent = is_independent(ctx.g, ctx.ker_set);
    const bool critical = ctx.critical(ctx.ker_set);
    VertexSet not_containing;
    bool contained_in_all = true;
    for (VertexSet c : ctx.critical_independent)
        if (!ctx.ker_set.subset_of(c)) {
            contained_in_all = false;
            not_containing = c;
            break;
        }
    if (!independent || !critical || !contained_in_all) {
        ordered_json w{{"ker", json_set(ctx.ker_set)},
                       {"independent", independent},
                       {"critical", critical},
                       {"d_ker", ctx.difference(ctx.ker_set)},
                       {"d", ctx.d},
                       {"contained_in_all", contained_in_all}};
        if (!contained_in_all) w["critical_independent_not_containing_ker"] = json_set(not_containing);
        return outcome(ctx, "ker-min", ClaimStatus::fails, std::move(w));
    }
    return outcome(ctx, "ker-min", ClaimStatus::holds,
                   {{"ker", json_set(ctx.ker_set)},
                    {"critical_independent_count", ctx.critical_independent.size()}});
}

// diadem-crit: diadem(G) is a critical set.
inline ClaimOutcome claim_diadem_crit(const AnalysisContext& ctx) {
    if (!ctx.critical(ctx.diadem_set))
        return outcome(ctx, "diadem-crit", ClaimStatus::fails,
                       {{"diadem", json_set(ctx.diadem_set)},
                        {"d_diadem", ctx.difference(ctx.diadem_set)},
                        {"d", ctx.d}});
    return outcome(ctx, "diadem-crit", ClaimStatus::holds,
                   {{"diadem", json_set(ctx.diadem_set)}, {"d", ctx.d}});
}

// ke-core-corona-crit: for KE graphs core(G) and corona(G) are critical, and
// corona(G) is the union of the maximum-cardinality critical independent
// sets.
inline ClaimOutcome claim_ke_core_corona_crit(const AnalysisContext& ctx) {
    if (!ctx.ke)
        return outcome(ctx, "ke-core-corona-crit", ClaimStatus::not_applicable,
                       {{"reason", "graph is not Koenig-Egervary"}});
    int max_size = 0;
    for (VertexSet c : ctx.critical_independent) max_size = std::max(max_size, c.count());
    VertexSet union_max;
    for (VertexSet c : ctx.critical_independent)
        if (c.count() == max_size) union_max = union_max | c;
    const bool core_ok = ctx.critical(ctx.core_set);
    const bool corona_ok = ctx.critical(ctx.corona_set);
    const bool union_ok = union_max == ctx.corona_set;
    if (!core_ok || !corona_ok || !union_ok)
        return outcome(ctx, "ke-core-corona-crit", ClaimStatus::fails,
                       {{"core", json_set(ctx.core_set)},
                        {"corona", json_set(ctx.corona_set)},
                        {"d_core", ctx.difference(ctx.core_set)},
                        {"d_corona", ctx.difference(ctx.corona_set)},
                        {"d", ctx.d},
                        {"union_of_maximum_critical_independent", json_set(union_max)}});
    return outcome(ctx, "ke-core-corona-crit", ClaimStatus::holds,
                   {{"d_core", ctx.difference(ctx.core_set)},
                    {"d_corona", ctx.difference(ctx.corona_set)},
                    {"maximum_critical_independent_size", max_size}});
}

// union-diff: d(⋃Λ) = |⋂Λ| + |⋃Λ| − |V| ≥ max over S ∈ Λ of d(S).
inline ClaimOutcome claim_union_diff(const AnalysisContext& ctx,
                                     const std::vector<LambdaFamily>& families) {
    for (const LambdaFamily& fam : families) {
        const int lhs = ctx.difference(fam.uni);
        const int rhs = fam.inter.count() + fam.uni.count() - ctx.g.n;
        if (lhs != rhs || lhs < fam.max_member_difference)
            return outcome(ctx, "union-diff", ClaimStatus::fails,
                           {{"lambda", json_lambda(ctx, fam)},
                            {"d_union", lhs},
                            {"intersection_size", fam.inter.count()},
                            {"union_size", fam.uni.count()},
                            {"n", ctx.g.n},
                            {"max_member_difference", fam.max_member_difference}});
    }
    return outcome(ctx, "union-diff", ClaimStatus::holds,
                   {{"families_checked", families.size()}});
}

// ker-empty-prop: when ker(G) = ∅, every critical independent set A with
// Λ = {S ∈ Ω : A ∩ S = ∅} nonempty satisfies |⋂Λ| ≥ |A|.  Graphs with
// ker(G) ≠ ∅ report not-applicable (the hypothesis never fires); an A whose
// Λ is empty is skipped, the intersection being undefined for it.
inline ClaimOutcome claim_ker_empty_prop(const AnalysisContext& ctx) {
    if (!ctx.ker_set.empty())
        return outcome(ctx, "ker-empty-prop", ClaimStatus::not_applicable,
                       {{"reason", "ker is nonempty"}, {"ker", json_set(ctx.ker_set)}});
    std::size_t checked = 0, skipped = 0;
    for (VertexSet a : ctx.critical_independent) {
        std::uint64_t inter = full_mask(ctx.g.n);
        bool any = false;
        for (VertexSet s : ctx.omega.sets)
            if (!a.intersects(s)) {
                any = true;
                inter &= s.bits;
            }
        if (!any) {
            ++skipped;
            continue;
        }
        ++checked;
        if (std::popcount(inter) < a.count())
            return outcome(ctx, "ker-empty-prop", ClaimStatus::fails,
                           {{"a", json_set(a)},
                            {"lambda_intersection", json_set(VertexSet{inter})},
                            {"intersection_size", std::popcount(inter)},
                            {"a_size", a.count()}});
    }
    return outcome(ctx, "ker-empty-prop", ClaimStatus::holds,
                   {{"sets_checked", checked}, {"sets_with_empty_family", skipped}});
}

// union-crit-impl: (i) if ⋃Λ is critical then |N(⋂Λ)| + |⋃Λ| = |V| and ⋂Λ is
// critical; (ii) if ⋂Λ is critical then |N(⋂Λ)| + |⋃Λ| ≤ |V| and
// d(⋂Λ) ≥ 2α − |V|.  Not applicable when neither hypothesis fires on any
// sampled family.
inline ClaimOutcome claim_union_crit_impl(const AnalysisContext& ctx,
                                          const std::vector<LambdaFamily>& families) {
    std::size_t fired_union = 0, fired_inter = 0;
    for (const LambdaFamily& fam : families) {
        const VertexSet n_inter = ctx.nbr(fam.inter);
        if (ctx.critical(fam.uni)) {
            ++fired_union;
            if (n_inter.count() + fam.uni.count() != ctx.g.n || !ctx.critical(fam.inter))
                return outcome(ctx, "union-crit-impl", ClaimStatus::fails,
                               {{"part", "union-critical"},
                                {"lambda", json_lambda(ctx, fam)},
                                {"neighborhood_of_intersection", json_set(n_inter)},
                                {"union_size", fam.uni.count()},
                                {"n", ctx.g.n},
                                {"d_intersection", ctx.difference(fam.inter)},
                                {"d", ctx.d}});
        }
        if (ctx.critical(fam.inter)) {
            ++fired_inter;
            if (n_inter.count() + fam.uni.count() > ctx.g.n ||
                ctx.difference(fam.inter) < 2 * ctx.alpha - ctx.g.n)
                return outcome(ctx, "union-crit-impl", ClaimStatus::fails,
                               {{"part", "intersection-critical"},
                                {"lambda", json_lambda(ctx, fam)},
                                {"neighborhood_of_intersection", json_set(n_inter)},
                                {"union_size", fam.uni.count()},
                                {"n", ctx.g.n},
                                {"d_intersection", ctx.difference(fam.inter)},
                                {"two_alpha_minus_n", 2 * ctx.alpha - ctx.g.n}});
        }
    }
    if (fired_union + fired_inter == 0)
        return outcome(ctx, "union-crit-impl", ClaimStatus::not_applicable,
                       {{"reason", "no sampled family has a critical union or intersection"},
                        {"families_checked", families.size()}});
    return outcome(ctx, "union-crit-impl", ClaimStatus::holds,
                   {{"families_checked", families.size()},
                    {"union_hypothesis_fired", fired_union},
                    {"intersection_hypothesis_fired", fired_inter}});
}

// corona-crit-impl: if corona(G) is critical then |corona| + |N(core)| = |V|
// and core(G) is critical.
inline ClaimOutcome claim_corona_crit_impl(const AnalysisContext& ctx) {
    if (!ctx.critical(ctx.corona_set))
        return outcome(ctx, "corona-crit-impl", ClaimStatus::not_applicable,
                       {{"reason", "corona is not critical"},
                        {"d_corona", ctx.difference(ctx.corona_set)},
                        {"d", ctx.d}});
    const VertexSet n_core = ctx.nbr(ctx.core_set);
    const bool size_ok = ctx.corona_set.count() + n_core.count() == ctx.g.n;
    const bool core_ok = ctx.critical(ctx.core_set);
    if (!size_ok || !core_ok)
        return outcome(ctx, "corona-crit-impl", ClaimStatus::fails,
                       {{"corona", json_set(ctx.corona_set)},
                        {"neighborhood_of_core", json_set(n_core)},
                        {"n", ctx.g.n},
                        {"d_core", ctx.difference(ctx.core_set)},
                        {"d", ctx.d}});
    return outcome(ctx, "corona-crit-impl", ClaimStatus::holds,
                   {{"corona_size", ctx.corona_set.count()},
                    {"neighborhood_of_core_size", n_core.count()},
                    {"d_core", ctx.difference(ctx.core_set)}});
}

// ke-cardinality: for KE graphs |⋂Λ| + |⋃Λ| = 2α for every nonempty Λ ⊆ Ω —
// in particular |core| + |corona| = 2α.
inline ClaimOutcome claim_ke_cardinality(const AnalysisContext& ctx,
                                         const std::vector<LambdaFamily>& families) {
    if (!ctx.ke)
        return outcome(ctx, "ke-cardinality", ClaimStatus::not_applicable,
                       {{"reason", "graph is not Koenig-Egervary"}});
    for (const LambdaFamily& fam : families)
        if (fam.inter.count() + fam.uni.count() != 2 * ctx.alpha)
            return outcome(ctx, "ke-cardinality", ClaimStatus::fails,
                           {{"lambda", json_lambda(ctx, fam)},
                            {"intersection_size", fam.inter.count()},
                            {"union_size", fam.uni.count()},
                            {"two_alpha", 2 * ctx.alpha}});
    const int core_corona = ctx.core_set.count() + ctx.corona_set.count();
    if (core_corona != 2 * ctx.alpha)
        return outcome(ctx, "ke-cardinality", ClaimStatus::fails,
                       {{"core", json_set(ctx.core_set)},
                        {"corona", json_set(ctx.corona_set)},
                        {"core_plus_corona", core_corona},
                        {"two_alpha", 2 * ctx.alpha}});
    return outcome(ctx, "ke-cardinality", ClaimStatus::holds,
                   {{"families_checked", families.size()},
                    {"core_plus_corona", core_corona}});
}

// ke-iff-union: for each nonempty Λ ⊆ Ω, G is KE iff ⋃Λ is critical and
// |⋂Λ| + |⋃Λ| = 2α.  The biconditional is evaluated per family, which
// covers both directions; one-set families alone already decide the
// backward direction (their cardinality clause is automatic), and they are
// always sampled.
inline ClaimOutcome claim_ke_iff_union(const AnalysisContext& ctx,
                                       const std::vector<LambdaFamily>& families) {
    for (const LambdaFamily& fam : families) {
        const bool union_critical = ctx.critical(fam.uni);
        const bool sum_ok = fam.inter.count() + fam.uni.count() == 2 * ctx.alpha;
        if ((union_critical && sum_ok) != ctx.ke)
            return outcome(ctx, "ke-iff-union", ClaimStatus::fails,
                           {{"lambda", json_lambda(ctx, fam)},
                            {"ke", ctx.ke},
                            {"union_critical", union_critical},
                            {"d_union", ctx.difference(fam.uni)},
                            {"d", ctx.d},
                            {"intersection_size", fam.inter.count()},
                            {"union_size", fam.uni.count()},
                            {"two_alpha", 2 * ctx.alpha}});
    }
    return outcome(ctx, "ke-iff-union", ClaimStatus::holds,
                   {{"families_checked", families.size()}, {"ke", ctx.ke}});
}

// ke-iff-pair: KE ⇔ S1 ∪ S2 critical for every S1, S2 ∈ Ω ⇔ for some pair.
// All unordered pairs (equal members allowed) are evaluated; the three sides
// are computed independently and compared.
inline ClaimOutcome claim_ke_iff_pair(const AnalysisContext& ctx) {
    bool forall = true, exists = false;
    VertexSet bad_s1, bad_s2, good_s1, good_s2;
    for (std::size_t i = 0; i < ctx.omega.sets.size(); ++i)
        for (std::size_t j = i; j < ctx.omega.sets.size(); ++j) {
            const VertexSet u = ctx.omega.sets[i] | ctx.omega.sets[j];
            if (ctx.critical(u)) {
                if (!exists) {
                    good_s1 = ctx.omega.sets[i];
                    good_s2 = ctx.omega.sets[j];
                }
                exists = true;
            } else {
                if (forall) {
                    bad_s1 = ctx.omega.sets[i];
                    bad_s2 = ctx.omega.sets[j];
                }
                forall = false;
            }
        }
    ordered_json w{{"ke", ctx.ke},
                   {"all_pairs_critical", forall},
                   {"some_pair_critical", exists},
                   {"omega_count", ctx.omega.sets.size()}};
    if (exists) {
        w["critical_pair"] = ordered_json::array({json_set(good_s1), json_set(good_s2)});
    }
    if (!forall) {
        w["non_critical_pair"] = ordered_json::array({json_set(bad_s1), json_set(bad_s2)});
        w["d_non_critical_union"] = ctx.difference(bad_s1 | bad_s2);
    }
    const bool ok = (ctx.ke == forall) && (forall == exists);
    return outcome(ctx, "ke-iff-pair", ok ? ClaimStatus::holds : ClaimStatus::fails, std::move(w));
}

// ke-iff-aug: KE ⇔ for every S ∈ Ω some independent A makes S ∪ A critical
// ⇔ for some S and A.  Since S ∪ A = S ∪ (A − S), the search runs over
// independent subsets A of G[V − S] (the empty A covers the A ⊆ S case).
inline ClaimOutcome claim_ke_iff_aug(const AnalysisContext& ctx) {
    bool forall = true, exists = false;
    VertexSet bad_s, good_s, good_a;
    for (VertexSet s : ctx.omega.sets) {
        bool found = false;
        VertexSet found_a;
        for_each_independent_subset(ctx.g, VertexSet::all(ctx.g.n) - s, [&](VertexSet a) {
            if (!found && ctx.critical(s | a)) {
                found = true;
                found_a = a;
            }
        });
        if (found) {
            if (!exists) {
                good_s = s;
                good_a = found_a;
            }
            exists = true;
        } else {
            if (forall) bad_s = s;
            forall = false;
        }
    }
    ordered_json w{{"ke", ctx.ke},
                   {"every_maximum_set_augmentable", forall},
                   {"some_maximum_set_augmentable", exists}};
    if (exists) {
        w["s"] = json_set(good_s);
        w["a"] = json_set(good_a);
        w["d_union"] = ctx.difference(good_s | good_a);
    }
    if (!forall) w["non_augmentable_s"] = json_set(bad_s);
    const bool ok = (ctx.ke == forall) && (forall == exists);
    return outcome(ctx, "ke-iff-aug", ok ? ClaimStatus::holds : ClaimStatus::fails, std::move(w));
}

// ke-diadem: diadem(G) ⊆ corona(G) for every graph; for KE graphs
// diadem(G) = corona(G) and |ker(G)| + |diadem(G)| ≤ 2α(G).
inline ClaimOutcome claim_ke_diadem(const AnalysisContext& ctx) {
    ordered_json w{{"ke", ctx.ke},
                   {"diadem", json_set(ctx.diadem_set)},
                   {"corona", json_set(ctx.corona_set)}};
    if (!ctx.diadem_set.subset_of(ctx.corona_set)) {
        w["stray"] = json_set(ctx.diadem_set - ctx.corona_set);
        return outcome(ctx, "ke-diadem", ClaimStatus::fails, std::move(w));
    }
    if (ctx.ke) {
        const int sum = ctx.ker_set.count() + ctx.diadem_set.count();
        w["ker"] = json_set(ctx.ker_set);
        w["ker_plus_diadem"] = sum;
        w["two_alpha"] = 2 * ctx.alpha;
        if (ctx.diadem_set != ctx.corona_set || sum > 2 * ctx.alpha)
            return outcome(ctx, "ke-diadem", ClaimStatus::fails, std::move(w));
    }
    return outcome(ctx, "ke-diadem", ClaimStatus::holds, std::move(w));
}

// ke-iff-corona: KE ⇔ (diadem = corona and |core| + |corona| = 2α)
// ⇔ (corona critical and |core| + |corona| = 2α).
inline ClaimOutcome claim_ke_iff_corona(const AnalysisContext& ctx) {
    const int sum = ctx.core_set.count() + ctx.corona_set.count();
    const bool b_diadem = ctx.diadem_set == ctx.corona_set && sum == 2 * ctx.alpha;
    const bool b_corona = ctx.critical(ctx.corona_set) && sum == 2 * ctx.alpha;
    ordered_json w{{"ke", ctx.ke},
                   {"diadem_equals_corona", ctx.diadem_set == ctx.corona_set},
                   {"corona_critical", ctx.critical(ctx.corona_set)},
                   {"core_plus_corona", sum},
                   {"two_alpha", 2 * ctx.alpha}};
    const bool ok = (ctx.ke == b_diadem) && (b_diadem == b_corona);
    return outcome(ctx, "ke-iff-corona", ok ? ClaimStatus::holds : ClaimStatus::fails,
                   std::move(w));
}

// corona-lb: 2α(G) ≤ |core(G)| + |corona(G)| for every graph.
inline ClaimOutcome claim_corona_lb(const AnalysisContext& ctx) {
    const int sum = ctx.core_set.count() + ctx.corona_set.count();
    if (2 * ctx.alpha > sum)
        return outcome(ctx, "corona-lb", ClaimStatus::fails,
                       {{"core", json_set(ctx.core_set)},
                        {"corona", json_set(ctx.corona_set)},
                        {"core_plus_corona", sum},
                        {"two_alpha", 2 * ctx.alpha}});
    return outcome(ctx, "corona-lb", ClaimStatus::holds,
                   {{"core_plus_corona", sum}, {"two_alpha", 2 * ctx.alpha}});
}

}  // namespace detail

// Evaluate one claim.  `lambda`, when given, replaces the sampled families
// for the claims that quantify over Λ ⊆ Ω (match-lemma, union-diff,
// ke-cardinality, ke-iff-union, union-crit-impl); it must be a nonempty
// subfamily of Ω(G).  Claims that do not quantify over Λ ignore it.
inline ClaimOutcome evaluate_claim(const AnalysisContext& ctx, const std::string& claim_id,
                                   const std::optional<std::vector<VertexSet>>& lambda = std::nullopt) {
    const bool lambda_claim = claim_id == "match-lemma" || claim_id == "union-diff" ||
                              claim_id == "ke-cardinality" || claim_id == "ke-iff-union" ||
                              claim_id == "union-crit-impl";
    std::vector<LambdaFamily> user_families;
    const std::vector<LambdaFamily>* families = &ctx.lambdas;
    if (lambda && lambda_claim) {
        if (lambda->empty())
            throw std::invalid_argument("claim '" + claim_id + "' requires a nonempty family");
        std::vector<int> members;
        for (VertexSet s : *lambda) {
            const auto it = std::lower_bound(ctx.omega.sets.begin(), ctx.omega.sets.end(), s);
            if (it == ctx.omega.sets.end() || *it != s)
                throw std::invalid_argument("family member is not a maximum independent set");
            members.push_back(static_cast<int>(it - ctx.omega.sets.begin()));
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        user_families.push_back(detail::make_lambda(ctx.omega, ctx.g, members));
        families = &user_families;
    }

    if (claim_id == "berge") return detail::claim_berge(ctx);
    if (claim_id == "match-lemma") return detail::claim_match_lemma(ctx, *families);
    if (claim_id == "crit-extends") return detail::claim_crit_extends(ctx);
    if (claim_id == "ns-matching") return detail::claim_ns_matching(ctx);
    if (claim_id == "ke-diff") return detail::claim_ke_diff(ctx);
    if (claim_id == "ke-char") return detail::claim_ke_char(ctx);
    if (claim_id == "lattice") return detail::claim_lattice(ctx);
    if (claim_id == "ker-core") return detail::claim_ker_core(ctx);
    if (claim_id == "ker-min") return detail::claim_ker_min(ctx);
    if (claim_id == "diadem-crit") return detail::claim_diadem_crit(ctx);
    if (claim_id == "ke-core-corona-crit") return detail::claim_ke_core_corona_crit(ctx);
    if (claim_id == "union-diff") return detail::claim_union_diff(ctx, *families);
    if (claim_id == "ker-empty-prop") return detail::claim_ker_empty_prop(ctx);
    if (claim_id == "union-crit-impl") return detail::claim_union_crit_impl(ctx, *families);
    if (claim_id == "corona-crit-impl") return detail::claim_corona_crit_impl(ctx);
    if (claim_id == "ke-cardinality") return detail::claim_ke_cardinality(ctx, *families);
    if (claim_id == "ke-iff-union") return detail::claim_ke_iff_union(ctx, *families);
    if (claim_id == "ke-iff-pair") return detail::claim_ke_iff_pair(ctx);
    if (claim_id == "ke-iff-aug") return detail::claim_ke_iff_aug(ctx);
    if (claim_id == "ke-diadem") return detail::claim_ke_diadem(ctx);
    if (claim_id == "ke-iff-corona") return detail::claim_ke_iff_corona(ctx);
    if (claim_id == "corona-lb") return detail::claim_corona_lb(ctx);
    throw std::invalid_argument("unknown claim id: " + claim_id);
}

inline ClaimOutcome evaluate_claim(const Graph& g, const std::string& claim_id,
                                   const std::optional<std::vector<VertexSet>>& lambda = std::nullopt) {
    return evaluate_claim(make_context(g), claim_id, lambda);
}

inline std::vector<ClaimOutcome> evaluate_all_claims(const AnalysisContext& ctx) {
    std::vector<ClaimOutcome> out;
    out.reserve(claim_ids().size());
    for (const std::string& id : claim_ids()) out.push_back(evaluate_claim(ctx, id));
    return out;
}

}  // namespace critind

#endif  // CRITIND_CLAIMS_HPP
