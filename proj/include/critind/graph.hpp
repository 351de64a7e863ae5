// graph.hpp
//
// Immutable simple graphs on up to 64 vertices, adjacency kept as one
// 64-bit neighbor mask per vertex. Single-word set operations are what
// every enumeration in this library leans on, so the capacity is a
// deliberate design limit: constructors reject anything larger.

#ifndef CRITIND_GRAPH_HPP
#define CRITIND_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace critind {

inline constexpr int kMaxVertices = 64;

// Raised when an exhaustive enumeration would exceed its configured cap.
// Exceeding the cap is an error, never a truncation: core/corona/ker/diadem
// are intersections/unions over *complete* families.
class cap_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a result contradicts a proved theorem (e.g. a guaranteed
// matching does not exist). Always an implementation bug, never user error.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline std::uint64_t full_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// A subset of the vertices 0..n-1 of some graph, as a bitset.
struct VertexSet {
    std::uint64_t bits = 0;

    VertexSet() = default;
    explicit constexpr VertexSet(std::uint64_t b) : bits(b) {}

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.set(v);
        return s;
    }
    static VertexSet all(int n) { return VertexSet{full_mask(n)}; }

    bool test(int v) const { return (bits >> v) & 1u; }
    VertexSet& set(int v) { bits |= std::uint64_t{1} << v; return *this; }
    VertexSet& reset(int v) { bits &= ~(std::uint64_t{1} << v); return *this; }
    int count() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }
    int lowest() const { return std::countr_zero(bits); }

    bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
    bool intersects(VertexSet o) const { return (bits & o.bits) != 0; }

    friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet{a.bits | b.bits}; }
    friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet{a.bits & b.bits}; }
    friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet{a.bits & ~b.bits}; }
    friend bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
    friend bool operator!=(VertexSet a, VertexSet b) { return a.bits != b.bits; }
    // deterministic total order (used for stable tie-breaks and sorted output)
    friend bool operator<(VertexSet a, VertexSet b) { return a.bits < b.bits; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (std::uint64_t m = bits; m; m &= m - 1) out.push_back(std::countr_zero(m));
        return out;
    }
};

// iterate set bits low to high
template <typename F>
inline void for_each_vertex(VertexSet s, F&& f) {
    for (std::uint64_t m = s.bits; m; m &= m - 1) f(std::countr_zero(m));
}

struct Graph {
    int n = 0;
    std::vector<std::uint64_t> adj;   // adj[v] = mask of neighbors of v
    std::vector<std::string> labels;  // empty, or one display name per vertex

    VertexSet neighbors(int v) const { return VertexSet{adj[v]}; }
    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
    VertexSet vertices() const { return VertexSet::all(n); }

    int edge_count() const {
        int deg2 = 0;
        for (std::uint64_t a : adj) deg2 += std::popcount(a);
        return deg2 / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int v = 0; v < n; ++v)
            for (std::uint64_t m = adj[v] & full_mask(v); m; m &= m - 1)
                out.emplace_back(std::countr_zero(m), v);
        return out;  // already sorted by (min,max) since v ascends, u < v
    }

    std::string label(int v) const {
        return labels.empty() ? std::to_string(v) : labels[v];
    }
};

inline Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph size " + std::to_string(n) + " outside supported range 0.." +
                                    std::to_string(kMaxVertices));
    Graph g;
    g.n = n;
    g.adj.assign(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v)
            throw std::invalid_argument("self-loop rejected: (" + std::to_string(u) + "," + std::to_string(v) + ")");
        g.adj[u] |= std::uint64_t{1} << v;
        g.adj[v] |= std::uint64_t{1} << u;
    }
    return g;
}

// open neighborhood N(X) = { v : N(v) ∩ X ≠ ∅ }; may intersect X itself
inline VertexSet neighborhood(const Graph& g, VertexSet x) {
    std::uint64_t acc = 0;
    for (std::uint64_t m = x.bits; m; m &= m - 1) acc |= g.adj[std::countr_zero(m)];
    return VertexSet{acc};
}

inline VertexSet closed_neighborhood(const Graph& g, VertexSet x) {
    return neighborhood(g, x) | x;
}

// d(X) = |X| - |N(X)|; d(∅) = 0 by the formula
inline int set_difference_value(const Graph& g, VertexSet x) {
    return x.count() - neighborhood(g, x).count();
}

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_of;  // new index -> vertex id in the source graph
};

inline InducedSubgraph induced_subgraph(const Graph& g, VertexSet x) {
    InducedSubgraph out;
    out.vertex_of = x.to_vector();
    const int k = static_cast<int>(out.vertex_of.size());
    out.graph.n = k;
    out.graph.adj.assign(static_cast<std::size_t>(k), 0);
    if (!g.labels.empty()) out.graph.labels.reserve(k);
    std::vector<int> new_index(static_cast<std::size_t>(g.n), -1);
    for (int i = 0; i < k; ++i) new_index[out.vertex_of[i]] = i;
    for (int i = 0; i < k; ++i) {
        int v = out.vertex_of[i];
        if (!g.labels.empty()) out.graph.labels.push_back(g.labels[v]);
        for (std::uint64_t m = g.adj[v] & x.bits; m; m &= m - 1)
            out.graph.adj[i] |= std::uint64_t{1} << new_index[std::countr_zero(m)];
    }
    return out;
}

// B(G): vertices a_v = v and b_v = n+v, edge a_u-b_v for every uv in E(G).
// Needs 2n <= 64 to fit in a Graph; the critical-difference computation in
// critical.hpp works on the cover implicitly and has no such limit.
inline Graph bipartite_double_cover(const Graph& g) {
    if (g.n > kMaxVertices / 2)
        throw std::invalid_argument("double cover of n=" + std::to_string(g.n) + " exceeds " +
                                    std::to_string(kMaxVertices) + " vertices");
    Graph b;
    b.n = 2 * g.n;
    b.adj.assign(static_cast<std::size_t>(b.n), 0);
    for (int v = 0; v < g.n; ++v) {
        b.adj[v] = g.adj[v] << g.n;
        b.adj[g.n + v] = g.adj[v];
    }
    if (!g.labels.empty()) {
        b.labels.reserve(b.n);
        for (int v = 0; v < g.n; ++v) b.labels.push_back("a_" + g.labels[v]);
        for (int v = 0; v < g.n; ++v) b.labels.push_back("b_" + g.labels[v]);
    }
    return b;
}

inline bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m; m &= m - 1) next |= g.adj[std::countr_zero(m)];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == full_mask(g.n);
}

// one side of a 2-coloring, or nullopt when an odd cycle exists
inline std::optional<VertexSet> bipartition(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.n), -1);
    std::uint64_t side = 0;
    for (int s = 0; s < g.n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (color[v] == 0) side |= std::uint64_t{1} << v;
            for (std::uint64_t m = g.adj[v]; m; m &= m - 1) {
                int u = std::countr_zero(m);
                if (color[u] < 0) {
                    color[u] = 1 - color[v];
                    stack.push_back(u);
                } else if (color[u] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return VertexSet{side};
}

// render {v1,v2,...} using the graph's labels; ids when unlabeled
inline std::string format_vertex_set(const Graph& g, VertexSet s) {
    std::string out = "{";
    bool first = true;
    for_each_vertex(s, [&](int v) {
        if (!first) out += ",";
        first = false;
        out += g.label(v);
    });
    return out + "}";
}

}  // namespace critind

#endif
