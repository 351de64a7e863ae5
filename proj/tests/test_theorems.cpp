// test_theorems.cpp
//
// The 22-claim table: every claim must hold (or be inapplicable) on every
// graph we can reach — all labeled graphs through n = 5, the bundled
// fixtures, and seeded random batches.  The berge and match-lemma claims use
// proved quantifier reductions, so both are re-checked here against direct
// full-quantifier evaluations on small graphs.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "critind/claims.hpp"
#include "critind/generate.hpp"
#include "critind/graph.hpp"
#include "critind/harness.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

using namespace critind;

namespace {

template <typename F>
void for_each_labeled_graph(int n, F&& f) {
    std::vector<std::pair<int, int>> pairs;
    for_each_pair(n, [&](int u, int v) { pairs.emplace_back(u, v); });
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs.size()); ++code) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((code >> k) & 1u) edges.push_back(pairs[k]);
        f(from_edge_list(n, edges));
    }
}

std::vector<VertexSet> all_independent_subsets(const Graph& g) {
    std::vector<VertexSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n); ++mask)
        if (is_independent(g, VertexSet{mask})) out.push_back(VertexSet{mask});
    return out;
}

ClaimStatus status_of(const AnalysisContext& ctx, const std::string& id) {
    return evaluate_claim(ctx, id).status;
}

}  // namespace

TEST_CASE("claim table shape") {
    const std::vector<std::string>& ids = claim_ids();
    CHECK(ids.size() == 22);
    CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
    CHECK(ids.front() == "berge");
    CHECK(std::string(to_string(ClaimStatus::holds)) == "holds");
    CHECK(std::string(to_string(ClaimStatus::fails)) == "fails");
    CHECK(std::string(to_string(ClaimStatus::not_applicable)) == "not-applicable");

    const Graph g = cycle_graph(4);
    const std::vector<ClaimOutcome> all = evaluate_all_claims(make_context(g));
    REQUIRE(all.size() == ids.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].claim_id == ids[i]);
        CHECK(all[i].status != ClaimStatus::fails);
        CHECK(all[i].graph_id == to_graph6(g));
    }
    CHECK_THROWS_AS(evaluate_claim(make_context(g), "no-such-claim"), std::invalid_argument);
}

TEST_CASE("no claim fails on any labeled graph n <= 5") {
    for (int n = 0; n <= 5; ++n) {
        const SuiteReport rep = run_suite(StreamSpec::exhaustive(n), claim_ids());
        CAPTURE(n);
        if (!rep.ok()) FAIL(rep.to_text());
        REQUIRE(rep.graphs == (std::uint64_t{1} << (n * (n - 1) / 2)));
    }
}

TEST_CASE("no claim fails on the fixtures") {
    std::vector<Graph> graphs;
    for (const std::string& name : fixture_names()) graphs.push_back(fixture_graph(name));
    const SuiteReport rep = run_suite_on_graphs(graphs, claim_ids());
    if (!rep.ok()) FAIL(rep.to_text());
    CHECK(rep.graphs == graphs.size());
}

TEST_CASE("no claim fails on seeded random batches") {
    for (auto [n, p, count, seed] :
         {std::tuple{10, 0.2, 300, 101}, {12, 0.3, 200, 202}, {13, 0.5, 150, 303}}) {
        const SuiteReport rep =
            run_suite(StreamSpec::random(n, p, static_cast<std::uint64_t>(count),
                                         static_cast<std::uint64_t>(seed)),
                      claim_ids());
        CAPTURE(n);
        if (!rep.ok()) FAIL(rep.to_text());
    }
}

TEST_CASE("berge reduction matches the full quantifier on n <= 4 and sampled n = 5") {
    // direct statement: an independent X is maximum iff every independent S
    // disjoint from X has a matching of S into X
    auto naive = [](const Graph& g) {
        const int alpha = independence_number(g);
        for (VertexSet x : all_independent_subsets(g)) {
            bool every = true;
            for (VertexSet s : all_independent_subsets(g)) {
                if (s.intersects(x)) continue;
                if (!berge_matchable(g, s, x)) {
                    every = false;
                    break;
                }
            }
            if ((x.count() == alpha) != every) return false;
        }
        return true;
    };
    for (int n = 0; n <= 4; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            REQUIRE(naive(g));
            REQUIRE(status_of(make_context(g), "berge") == ClaimStatus::holds);
        });
    SplitMix64 rng{23};
    for (int i = 0; i < 300; ++i) {
        const Graph g = random_graph(5, 0.4, rng);
        REQUIRE(naive(g));
        REQUIRE(status_of(make_context(g), "berge") == ClaimStatus::holds);
    }
}

TEST_CASE("match-lemma reduction matches the full quantifier on n <= 4 and sampled n = 5") {
    // direct statement: for every independent A and every nonempty family
    // Λ ⊆ Ω there is a matching of A − ⋂Λ into ⋃Λ − A
    auto naive = [](const Graph& g) {
        const OmegaFamily omega = maximum_independent_sets(g);
        const std::size_t k = omega.sets.size();
        for (VertexSet a : all_independent_subsets(g)) {
            for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << k); ++pick) {
                VertexSet inter = VertexSet::all(g.n), uni;
                for (std::size_t i = 0; i < k; ++i)
                    if ((pick >> i) & 1u) {
                        inter = inter & omega.sets[i];
                        uni = uni | omega.sets[i];
                    }
                if (!berge_matchable(g, a - inter, uni - a)) return false;
            }
        }
        return true;
    };
    for (int n = 0; n <= 4; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            REQUIRE(naive(g));
            REQUIRE(status_of(make_context(g), "match-lemma") == ClaimStatus::holds);
        });
    SplitMix64 rng{29};
    for (int i = 0; i < 300; ++i) {
        const Graph g = random_graph(5, 0.4, rng);
        REQUIRE(naive(g));
        REQUIRE(status_of(make_context(g), "match-lemma") == ClaimStatus::holds);
    }
}

TEST_CASE("applicability gates") {
    // C5 is not KE: the KE-conditional claims sit out, the rest engage
    const AnalysisContext c5 = make_context(cycle_graph(5));
    CHECK(status_of(c5, "ke-diff") == ClaimStatus::not_applicable);
    CHECK(status_of(c5, "ke-cardinality") == ClaimStatus::not_applicable);
    CHECK(status_of(c5, "ke-core-corona-crit") == ClaimStatus::not_applicable);
    CHECK(status_of(c5, "ke-diadem") == ClaimStatus::holds);  // has an unconditional part
    CHECK(status_of(c5, "ke-char") == ClaimStatus::holds);    // biconditional, both sides false
    CHECK(status_of(c5, "ke-iff-union") == ClaimStatus::holds);

    // P4 is KE: everything engages
    const AnalysisContext p4 = make_context(path_graph(4));
    CHECK(status_of(p4, "ke-diff") == ClaimStatus::holds);
    CHECK(status_of(p4, "ke-cardinality") == ClaimStatus::holds);
    CHECK(status_of(p4, "ke-core-corona-crit") == ClaimStatus::holds);

    // ker-empty-prop applies exactly when ker = ∅ (d = 0)
    const AnalysisContext p3 = make_context(path_graph(3));
    CHECK(status_of(p3, "ker-empty-prop") == ClaimStatus::not_applicable);  // d(P3) = 1
    const AnalysisContext c4 = make_context(cycle_graph(4));
    CHECK(status_of(c4, "ker-empty-prop") == ClaimStatus::holds);  // d(C4) = 0

    // corona-crit-impl applies exactly when corona is critical
    const AnalysisContext g1 = make_context(fixture_graph("fig1g1"));
    CHECK(status_of(g1, "corona-crit-impl") == ClaimStatus::not_applicable);
    const AnalysisContext g2 = make_context(fixture_graph("fig1g2"));
    CHECK(status_of(g2, "corona-crit-impl") == ClaimStatus::holds);
}

TEST_CASE("union-crit-impl fires on both hypotheses somewhere") {
    // over all 4-vertex graphs the claim must actually engage at least once
    std::uint64_t engaged = 0, na = 0;
    for_each_labeled_graph(4, [&](const Graph& g) {
        const ClaimStatus st = status_of(make_context(g), "union-crit-impl");
        REQUIRE(st != ClaimStatus::fails);
        (st == ClaimStatus::holds ? engaged : na) += 1;
    });
    CHECK(engaged > 0);
}

TEST_CASE("caller-chosen families") {
    const Graph g = path_graph(4);  // Ω = {{0,2},{0,3},{1,3}}, KE
    const AnalysisContext ctx = make_context(g);
    REQUIRE(ctx.omega.sets.size() == 3);

    SUBCASE("a valid family is accepted and evaluated") {
        const std::vector<VertexSet> lam{VertexSet::of({0, 2}), VertexSet::of({1, 3})};
        for (const char* id : {"match-lemma", "union-diff", "ke-cardinality", "ke-iff-union",
                               "union-crit-impl"}) {
            const ClaimOutcome out = evaluate_claim(ctx, id, lam);
            CAPTURE(id);
            CHECK(out.status != ClaimStatus::fails);
        }
        // duplicates collapse to one member
        const std::vector<VertexSet> dup{VertexSet::of({0, 2}), VertexSet::of({0, 2})};
        CHECK(evaluate_claim(ctx, "union-diff", dup).status == ClaimStatus::holds);
    }
    SUBCASE("empty family is rejected") {
        CHECK_THROWS_AS(evaluate_claim(ctx, "union-diff", std::vector<VertexSet>{}),
                        std::invalid_argument);
    }
    SUBCASE("members must be maximum independent sets") {
        CHECK_THROWS_AS(
            evaluate_claim(ctx, "union-diff", std::vector<VertexSet>{VertexSet::of({0})}),
            std::invalid_argument);
        CHECK_THROWS_AS(
            evaluate_claim(ctx, "union-diff", std::vector<VertexSet>{VertexSet::of({0, 1})}),
            std::invalid_argument);
    }
    SUBCASE("families are ignored by non-family claims") {
        const std::vector<VertexSet> lam{VertexSet::of({0, 2})};
        CHECK(evaluate_claim(ctx, "berge", lam).status == ClaimStatus::holds);
    }
}

TEST_CASE("outcome carries the graph id and a structured witness") {
    const Graph g = fixture_graph("fig5");
    const AnalysisContext ctx = make_context(g);
    const ClaimOutcome out = evaluate_claim(ctx, "ke-diadem");
    CHECK(out.claim_id == "ke-diadem");
    CHECK(out.status == ClaimStatus::holds);
    CHECK(out.graph_id == to_graph6(g));
    // witnesses are structured JSON, empty or not — never unset on holds
    CHECK(out.witness.is_object());
}

TEST_CASE("per-claim spot meanings") {
    // ke-diff: for the KE fixture fig5, d = alpha - mu = 1
    const AnalysisContext fig5 = make_context(fixture_graph("fig5"));
    CHECK(fig5.ke);
    CHECK(fig5.d == fig5.alpha - fig5.mu);
    CHECK(status_of(fig5, "ke-diff") == ClaimStatus::holds);

    // corona-lb: 2alpha <= |core| + |corona| on the strict-inequality example
    const AnalysisContext g2 = make_context(fixture_graph("fig1g2"));
    CHECK(g2.core_set.count() + g2.corona_set.count() == 13);
    CHECK(2 * g2.alpha == 12);
    CHECK(status_of(g2, "corona-lb") == ClaimStatus::holds);

    // ke-iff-corona: fig1g2 has corona critical but the cardinality clause
    // fails, so the equivalence (with not-KE) still holds
    CHECK_FALSE(g2.ke);
    CHECK(status_of(g2, "ke-iff-corona") == ClaimStatus::holds);

    // ke-diadem: diadem = corona on the KE fixture, strict subset on fig7g2
    const AnalysisContext fig7g2 = make_context(fixture_graph("fig7g2"));
    CHECK(fig7g2.diadem_set.subset_of(fig7g2.corona_set));
    CHECK(fig7g2.diadem_set != fig7g2.corona_set);
    CHECK(status_of(fig7g2, "ke-diadem") == ClaimStatus::holds);
    CHECK(fig5.diadem_set == fig5.corona_set);
}
