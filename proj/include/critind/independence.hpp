// independence.hpp
//
// Independent sets: α(G) and the complete family Ω(G) of maximum independent
// sets via branch-and-bound (pivot = max-degree vertex of the residual
// graph, smallest id on ties; bound = chosen + pool size), plus core/corona,
// maximal-independent-set enumeration and Berge-style matchability.
//
// Enumerations are exhaustive or they fail: exceeding the configured cap
// throws cap_exceeded, because core/corona/ker/diadem are folds over
// complete families and a truncated family would silently corrupt them.

#ifndef CRITIND_INDEPENDENCE_HPP
#define CRITIND_INDEPENDENCE_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "critind/graph.hpp"
#include "critind/matching.hpp"

namespace critind {

// default 1,000,000 family members; override with CRITIND_ENUM_CAP
inline std::uint64_t default_enumeration_cap() {
    static const std::uint64_t cap = [] {
        if (const char* env = std::getenv("CRITIND_ENUM_CAP")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end != env && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
        }
        return std::uint64_t{1000000};
    }();
    return cap;
}

inline bool is_independent(const Graph& g, VertexSet x) {
    return !neighborhood(g, x).intersects(x);
}

namespace detail {

// max-degree vertex of the residual graph induced by pool; smallest id wins ties
inline int pick_pivot(const Graph& g, std::uint64_t pool) {
    int pivot = -1, best_deg = -1;
    for (std::uint64_t m = pool; m; m &= m - 1) {
        int v = std::countr_zero(m);
        int deg = std::popcount(g.adj[v] & pool);
        if (deg > best_deg) {
            best_deg = deg;
            pivot = v;
        }
    }
    return pivot;
}

}  // namespace detail

inline int independence_number(const Graph& g) {
    int best = 0;
    auto rec = [&](auto&& self, int chosen, std::uint64_t pool) -> void {
        if (chosen + std::popcount(pool) <= best) return;  // optimistic bound
        if (!pool) {
            best = std::max(best, chosen);
            return;
        }
        int v = detail::pick_pivot(g, pool);
        std::uint64_t bit = std::uint64_t{1} << v;
        self(self, chosen + 1, pool & ~g.adj[v] & ~bit);
        self(self, chosen, pool & ~bit);
    };
    rec(rec, 0, full_mask(g.n));
    return best;
}

struct OmegaFamily {
    int alpha = 0;
    std::vector<VertexSet> sets;        // ascending by bit pattern
    bool complete = false;

    VertexSet intersection() const {
        std::uint64_t acc = ~std::uint64_t{0};
        for (VertexSet s : sets) acc &= s.bits;
        return sets.empty() ? VertexSet{} : VertexSet{acc};
    }
    VertexSet union_all() const {
        std::uint64_t acc = 0;
        for (VertexSet s : sets) acc |= s.bits;
        return VertexSet{acc};
    }
};

// all of Ω(G); same branch-and-bound shape as independence_number, but the
// bound is non-strict so every set reaching α is visited exactly once
inline OmegaFamily maximum_independent_sets(const Graph& g, std::uint64_t cap = default_enumeration_cap()) {
    OmegaFamily fam;
    fam.alpha = independence_number(g);
    auto rec = [&](auto&& self, std::uint64_t cur, int chosen, std::uint64_t pool) -> void {
        if (chosen + std::popcount(pool) < fam.alpha) return;
        if (!pool) {
            if (chosen == fam.alpha) {
                if (fam.sets.size() >= cap)
                    throw cap_exceeded("maximum-independent-set family exceeds cap of " + std::to_string(cap));
                fam.sets.push_back(VertexSet{cur});
            }
            return;
        }
        int v = detail::pick_pivot(g, pool);
        std::uint64_t bit = std::uint64_t{1} << v;
        self(self, cur | bit, chosen + 1, pool & ~g.adj[v] & ~bit);
        self(self, cur, chosen, pool & ~bit);
    };
    rec(rec, 0, 0, full_mask(g.n));
    std::sort(fam.sets.begin(), fam.sets.end());
    fam.complete = true;
    return fam;
}

inline VertexSet core(const OmegaFamily& fam) { return fam.intersection(); }
inline VertexSet corona(const OmegaFamily& fam) { return fam.union_all(); }
inline VertexSet core(const Graph& g, std::uint64_t cap = default_enumeration_cap()) {
    return core(maximum_independent_sets(g, cap));
}
inline VertexSet corona(const Graph& g, std::uint64_t cap = default_enumeration_cap()) {
    return corona(maximum_independent_sets(g, cap));
}

// all maximal (by inclusion) independent sets: Bron–Kerbosch with pivoting
// on the complement graph; ≤ 3^(n/3) of them, tiny at desk scale
inline std::vector<VertexSet> maximal_independent_sets(const Graph& g,
                                                       std::uint64_t cap = default_enumeration_cap()) {
    std::vector<std::uint64_t> non_adj(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) non_adj[v] = full_mask(g.n) & ~g.adj[v] & ~(std::uint64_t{1} << v);
    std::vector<VertexSet> out;
    auto rec = [&](auto&& self, std::uint64_t r, std::uint64_t p, std::uint64_t x) -> void {
        if (!p && !x) {
            if (out.size() >= cap)
                throw cap_exceeded("maximal-independent-set family exceeds cap of " + std::to_string(cap));
            out.push_back(VertexSet{r});
            return;
        }
        int pivot = -1, best = -1;
        for (std::uint64_t m = p | x; m; m &= m - 1) {
            int v = std::countr_zero(m);
            int cnt = std::popcount(p & non_adj[v]);
            if (cnt > best) {
                best = cnt;
                pivot = v;
            }
        }
        for (std::uint64_t m = p & ~non_adj[pivot]; m; m &= m - 1) {
            int v = std::countr_zero(m);
            std::uint64_t bit = std::uint64_t{1} << v;
            self(self, r | bit, p & non_adj[v], x & non_adj[v]);
            p &= ~bit;
            x |= bit;
        }
    };
    if (g.n > 0) rec(rec, 0, full_mask(g.n), 0);
    else out.push_back(VertexSet{});
    std::sort(out.begin(), out.end());
    return out;
}

// every independent subset of pool, the empty set included
template <typename F>
inline void for_each_independent_subset(const Graph& g, VertexSet pool, F&& f) {
    auto rec = [&](auto&& self, std::uint64_t cur, std::uint64_t rest) -> void {
        if (!rest) {
            f(VertexSet{cur});
            return;
        }
        int v = std::countr_zero(rest);
        std::uint64_t bit = std::uint64_t{1} << v;
        self(self, cur | bit, rest & ~g.adj[v] & ~bit);
        self(self, cur, rest & ~bit);
    };
    rec(rec, 0, pool.bits);
}

// Berge matchability: a matching between s and x that saturates s, using
// only s-x edges of g; nullopt when none exists. Preconditions are the
// theorem's own: s independent and disjoint from x.
inline std::optional<Matching> berge_matchable(const Graph& g, VertexSet s, VertexSet x) {
    if (s.intersects(x))
        throw std::invalid_argument("berge_matchable: sets share vertex " + std::to_string((s & x).lowest()));
    if (!is_independent(g, s)) {
        VertexSet offenders = neighborhood(g, s) & s;
        throw std::invalid_argument("berge_matchable: s is not independent (vertex " +
                                    std::to_string(offenders.lowest()) + " has a neighbor in s)");
    }
    Matching m = bipartite_maximum_matching(g, s, x);
    if (m.size() == s.count()) return m;
    return std::nullopt;
}

// α(G) + μ(G) = |V(G)|  (König-Egerváry); classification needs both modules
inline bool is_koenig_egervary(const Graph& g) {
    return independence_number(g) + maximum_matching(g).size() == g.n;
}

}  // namespace critind

#endif
