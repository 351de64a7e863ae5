// critical.hpp
//
// Critical differences and the sets they induce. The fast path computes
// d(G) = n − μ(B(G)) on the bipartite double cover (implicitly; see
// cover_matching_size) — a derived identity, so the 2^n brute-force maximum
// of |X|−|N(X)| stays wired in as the standing oracle, and the profile
// builder re-derives the value independently over independent sets (Zhang:
// d = id) and refuses to return on a mismatch.

#ifndef CRITIND_CRITICAL_HPP
#define CRITIND_CRITICAL_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "critind/graph.hpp"
#include "critind/independence.hpp"
#include "critind/matching.hpp"

namespace critind {

// d(G) = max{ d(X) : X ⊆ V } via the double-cover identity d(G) = n − μ(B(G))
inline int critical_difference(const Graph& g) {
    return g.n - cover_matching_size(g);
}

// Subset-neighborhood table: N[mask] for every mask, by one-bit DP. Gives
// O(1) d(X) lookups to the enumeration-heavy callers. 8·2^n bytes, so n is
// capped; callers fall back to neighborhood() beyond it.
struct DifferenceTable {
    static constexpr int kMaxN = 16;
    std::vector<std::uint64_t> nbr;

    explicit DifferenceTable(const Graph& g) {
        if (g.n > kMaxN)
            throw std::invalid_argument("DifferenceTable supports n <= " + std::to_string(kMaxN));
        nbr.resize(std::size_t{1} << g.n);
        nbr[0] = 0;
        for (std::size_t mask = 1; mask < nbr.size(); ++mask)
            nbr[mask] = nbr[mask & (mask - 1)] | g.adj[std::countr_zero(mask)];
    }

    VertexSet neighborhood(VertexSet x) const { return VertexSet{nbr[x.bits]}; }
    int difference(VertexSet x) const { return x.count() - std::popcount(nbr[x.bits]); }
    bool independent(VertexSet x) const { return (nbr[x.bits] & x.bits) == 0; }
};

// oracle: exhaust all 2^n subsets (n capped to keep the table in memory)
inline int brute_force_critical_difference(const Graph& g, int max_n = 20) {
    if (g.n > max_n)
        throw std::invalid_argument("brute_force_critical_difference: n=" + std::to_string(g.n) +
                                    " exceeds cap " + std::to_string(max_n));
    if (g.n == 0) return 0;
    std::vector<std::uint64_t> nbr(std::size_t{1} << g.n);
    int best = 0;
    for (std::size_t mask = 1; mask < nbr.size(); ++mask) {
        nbr[mask] = nbr[mask & (mask - 1)] | g.adj[std::countr_zero(mask)];
        best = std::max(best, std::popcount(mask) - std::popcount(nbr[mask]));
    }
    return best;
}

// id(G) = max{ d(I) : I independent }; branch-and-bound with the optimistic
// bound |P| + |R| − |N(P)| (supersets only ever add |R| vertices and can
// never shrink N(P))
inline int independence_critical_difference(const Graph& g) {
    int best = 0;  // the empty set is independent and d(∅) = 0
    auto rec = [&](auto&& self, std::uint64_t cur, std::uint64_t nbr, std::uint64_t pool) -> void {
        int bound = std::popcount(cur) + std::popcount(pool) - std::popcount(nbr);
        if (bound <= best) return;
        if (!pool) {
            best = std::popcount(cur) - std::popcount(nbr);  // == bound > best here
            return;
        }
        int v = detail::pick_pivot(g, pool);
        std::uint64_t bit = std::uint64_t{1} << v;
        self(self, cur | bit, nbr | g.adj[v], pool & ~g.adj[v] & ~bit);
        self(self, cur, nbr, pool & ~bit);
    };
    rec(rec, 0, 0, full_mask(g.n));
    return best;
}

// criticality of arbitrary sets is measured against d(G) (= id(G), Zhang)
inline bool is_critical(const Graph& g, VertexSet x) {
    return set_difference_value(g, x) == critical_difference(g);
}

// all independent I with d(I) = d(G); prune a partial choice P with residual
// pool R as soon as |P| + |R| − |N(P)| < d(G)
inline std::vector<VertexSet> enumerate_critical_independent_sets(const Graph& g,
                                                                  std::uint64_t cap = default_enumeration_cap()) {
    const int d = critical_difference(g);
    std::vector<VertexSet> out;
    auto rec = [&](auto&& self, std::uint64_t cur, std::uint64_t nbr, std::uint64_t pool) -> void {
        if (std::popcount(cur) + std::popcount(pool) - std::popcount(nbr) < d) return;
        if (!pool) {
            if (std::popcount(cur) - std::popcount(nbr) == d) {
                if (out.size() >= cap)
                    throw cap_exceeded("critical-independent-set family exceeds cap of " + std::to_string(cap));
                out.push_back(VertexSet{cur});
            }
            return;
        }
        int v = detail::pick_pivot(g, pool);
        std::uint64_t bit = std::uint64_t{1} << v;
        self(self, cur | bit, nbr | g.adj[v], pool & ~g.adj[v] & ~bit);
        self(self, cur, nbr, pool & ~bit);
    };
    rec(rec, 0, 0, full_mask(g.n));
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

inline VertexSet intersect_all(const std::vector<VertexSet>& sets) {
    std::uint64_t acc = ~std::uint64_t{0};
    for (VertexSet s : sets) acc &= s.bits;
    return sets.empty() ? VertexSet{} : VertexSet{acc};
}

inline VertexSet union_all(const std::vector<VertexSet>& sets) {
    std::uint64_t acc = 0;
    for (VertexSet s : sets) acc |= s.bits;
    return VertexSet{acc};
}

}  // namespace detail

// ker(G) = ⋂ of all critical independent sets. The theorem that this is the
// unique minimal independent critical set is checked here, not assumed.
inline VertexSet kernel(const Graph& g, std::uint64_t cap = default_enumeration_cap()) {
    const auto family = enumerate_critical_independent_sets(g, cap);
    const VertexSet ker = detail::intersect_all(family);
    const int d = critical_difference(g);
    if (set_difference_value(g, ker) != d)
        throw internal_error("kernel: intersection of critical independent sets is not critical");
    for_each_vertex(ker, [&](int v) {
        VertexSet shrunk = ker;
        shrunk.reset(v);
        if (set_difference_value(g, shrunk) == d)
            throw internal_error("kernel: not minimal, still critical without vertex " + std::to_string(v));
    });
    return ker;
}

inline VertexSet diadem(const Graph& g, std::uint64_t cap = default_enumeration_cap()) {
    return detail::union_all(enumerate_critical_independent_sets(g, cap));
}

// largest member of the critical-independent family; ties break to the
// smallest bit pattern (the family is sorted)
inline VertexSet max_critical_independent_set(const Graph& g, std::uint64_t cap = default_enumeration_cap()) {
    const auto family = enumerate_critical_independent_sets(g, cap);
    VertexSet best;  // family always contains at least one set (V itself when edgeless, else smaller)
    int best_size = -1;
    for (VertexSet s : family) {
        if (s.count() > best_size) {
            best = s;
            best_size = s.count();
        }
    }
    if (best_size < 0) throw internal_error("max_critical_independent_set: empty critical family");
    return best;
}

// Larson's certificate: a matching from N(S) into S, guaranteed to exist
// for every critical independent S — absence is an implementation bug
inline Matching neighborhood_matching(const Graph& g, VertexSet s) {
    if (!is_independent(g, s))
        throw std::invalid_argument("neighborhood_matching: s is not independent");
    if (set_difference_value(g, s) != critical_difference(g))
        throw std::invalid_argument("neighborhood_matching: s is not critical (d(s)=" +
                                    std::to_string(set_difference_value(g, s)) + ", d(G)=" +
                                    std::to_string(critical_difference(g)) + ")");
    const VertexSet ns = neighborhood(g, s);
    Matching m = bipartite_maximum_matching(g, ns, s);
    if (m.size() != ns.count())
        throw internal_error("neighborhood_matching: no matching saturating N(s); |N(s)|=" +
                             std::to_string(ns.count()) + ", matched " + std::to_string(m.size()));
    return m;
}

struct CriticalProfile {
    int d = 0;
    int id = 0;
    VertexSet ker;
    VertexSet diadem;
    VertexSet max_critical_independent;
    std::uint64_t critical_independent_count = 0;
};

inline CriticalProfile critical_profile(const Graph& g, std::uint64_t cap = default_enumeration_cap()) {
    CriticalProfile p;
    p.d = critical_difference(g);
    p.id = independence_critical_difference(g);
    if (p.d != p.id)
        throw internal_error("critical difference mismatch: double cover says " + std::to_string(p.d) +
                             ", independent enumeration says " + std::to_string(p.id));
    const auto family = enumerate_critical_independent_sets(g, cap);
    p.critical_independent_count = family.size();
    p.ker = detail::intersect_all(family);
    p.diadem = detail::union_all(family);
    int best_size = -1;
    for (VertexSet s : family)
        if (s.count() > best_size) {
            p.max_critical_independent = s;
            best_size = s.count();
        }
    return p;
}

}  // namespace critind

#endif
