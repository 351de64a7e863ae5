// matching.hpp
//
// Exact maximum matching. General graphs get Edmonds' blossom algorithm
// (O(V^3), queue-based contraction bookkeeping); bipartite instances get a
// Kuhn augmenting-path matcher. A brute-force oracle over edge subsets is
// kept alongside as the trust anchor — blossom implementations have a long
// history of subtle bugs, so tests compare the two exhaustively at small n.

#ifndef CRITIND_MATCHING_HPP
#define CRITIND_MATCHING_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "critind/graph.hpp"

namespace critind {

struct Matching {
    std::vector<std::pair<int, int>> edges;  // sorted (min endpoint, max endpoint)
    VertexSet saturated;
    std::vector<int> mate;  // mate[v] or -1; size = n of the source graph

    int size() const { return static_cast<int>(edges.size()); }
    int partner_of(int v) const { return mate[v]; }

    // M(A): the vertices matched with members of A
    VertexSet matched_partners(VertexSet a) const {
        VertexSet out;
        for_each_vertex(a & saturated, [&](int v) { out.set(mate[v]); });
        return out;
    }
};

namespace detail {

inline Matching matching_from_mates(int n, const std::vector<int>& mate) {
    Matching m;
    m.mate = mate;
    for (int v = 0; v < n; ++v) {
        if (mate[v] < 0) continue;
        m.saturated.set(v);
        if (v < mate[v]) m.edges.emplace_back(v, mate[v]);
    }
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

}  // namespace detail

// Edmonds' blossom algorithm. Augmenting paths are grown BFS-style from each
// free vertex; odd cycles are contracted by remapping every cycle vertex's
// base[] to the cycle's lowest common ancestor and re-enqueuing it.
inline Matching maximum_matching(const Graph& g) {
    const int n = g.n;
    std::vector<int> match(n, -1), parent(n, -1), base(n);
    std::vector<char> used(n, 0), blossom(n, 0);

    // greedy seed: pairs off most of the graph before the real search
    for (int v = 0; v < n; ++v) {
        if (match[v] != -1) continue;
        for (std::uint64_t m = g.adj[v]; m; m &= m - 1) {
            int u = std::countr_zero(m);
            if (match[u] == -1) {
                match[v] = u;
                match[u] = v;
                break;
            }
        }
    }

    auto lowest_common_ancestor = [&](int a, int b) {
        std::vector<char> on_path(n, 0);
        for (;;) {
            a = base[a];
            on_path[a] = 1;
            if (match[a] == -1) break;  // reached the root
            a = parent[match[a]];
        }
        for (;;) {
            b = base[b];
            if (on_path[b]) return b;
            b = parent[match[b]];
        }
    };

    auto mark_path = [&](int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = 1;
            blossom[base[match[v]]] = 1;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    };

    auto find_augmenting_path = [&](int root) -> int {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        std::iota(base.begin(), base.end(), 0);
        used[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (std::uint64_t m = g.adj[v]; m; m &= m - 1) {
                int to = std::countr_zero(m);
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    // even-even edge: contract the blossom
                    int cur_base = lowest_common_ancestor(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n; ++i)
                        if (blossom[base[i]]) {
                            base[i] = cur_base;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) return to;  // free vertex: augmenting path ends here
                    used[match[to]] = 1;
                    q.push(match[to]);
                }
            }
        }
        return -1;
    };

    for (int v = 0; v < n; ++v) {
        if (match[v] != -1) continue;
        int u = find_augmenting_path(v);
        while (u != -1) {  // flip matched/unmatched along the path back to the root
            int pv = parent[u], next = match[pv];
            match[u] = pv;
            match[pv] = u;
            u = next;
        }
    }
    return detail::matching_from_mates(n, match);
}

// Kuhn's augmenting-path matcher between two disjoint vertex sets; only
// edges with one endpoint in each part are considered.
inline Matching bipartite_maximum_matching(const Graph& g, VertexSet part_a, VertexSet part_b) {
    if (part_a.intersects(part_b))
        throw std::invalid_argument("bipartite matching: parts overlap on " +
                                    std::to_string((part_a & part_b).lowest()));
    std::vector<int> mate(g.n, -1);
    std::uint64_t visited = 0;
    auto augment = [&](auto&& self, int u) -> bool {
        for (std::uint64_t m = g.adj[u] & part_b.bits & ~visited; m; m &= m - 1) {
            int r = std::countr_zero(m);
            visited |= std::uint64_t{1} << r;
            if (mate[r] == -1 || self(self, mate[r])) {
                mate[r] = u;
                mate[u] = r;
                return true;
            }
        }
        return false;
    };
    for_each_vertex(part_a, [&](int u) {
        visited = 0;
        augment(augment, u);
    });
    return detail::matching_from_mates(g.n, mate);
}

// Size of a maximum matching of the bipartite double cover B(G), computed on
// the cover implicitly (left copy a_u, right copy b_v, edge a_u-b_v for every
// uv in E); works for any n the Graph type accepts.
inline int cover_matching_size(const Graph& g) {
    std::vector<int> mate_right(g.n, -1);  // right vertex -> left partner
    std::uint64_t visited = 0;
    auto augment = [&](auto&& self, int u) -> bool {
        for (std::uint64_t m = g.adj[u] & ~visited; m; m &= m - 1) {
            int r = std::countr_zero(m);
            visited |= std::uint64_t{1} << r;
            if (mate_right[r] == -1 || self(self, mate_right[r])) {
                mate_right[r] = u;
                return true;
            }
        }
        return false;
    };
    int size = 0;
    for (int u = 0; u < g.n; ++u) {
        visited = 0;
        if (augment(augment, u)) ++size;
    }
    return size;
}

// Oracle: exact μ by recursion over the (sorted) edge list. Incidence
// pruning skips edges touching saturated vertices; the optimistic bound
// cnt + min(edges left, ⌊free vertices/2⌋) cuts dead branches.
inline int brute_force_mu(const Graph& g, int max_edges = 24) {
    const auto edge_list = g.edges();
    const int m = static_cast<int>(edge_list.size());
    if (m > max_edges)
        throw std::invalid_argument("brute_force_mu: " + std::to_string(m) + " edges exceeds cap " +
                                    std::to_string(max_edges));
    int best = 0;
    auto rec = [&](auto&& self, int i, std::uint64_t used, int cnt) -> void {
        best = std::max(best, cnt);
        if (i == m) return;
        int free_vertices = g.n - std::popcount(used);
        if (cnt + std::min(m - i, free_vertices / 2) <= best) return;
        auto [u, v] = edge_list[i];
        std::uint64_t uv = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
        if (!(used & uv)) self(self, i + 1, used | uv, cnt + 1);
        self(self, i + 1, used, cnt);
    };
    rec(rec, 0, 0, 0);
    return best;
}

}  // namespace critind

#endif
