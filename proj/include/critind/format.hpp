// format.hpp
//
// Serialization: graph6 (nauty's printable encoding, n <= 62 single-byte
// header), a diff-friendly edge-list text format ("n m" header, one "u v"
// per line, '#' comments), and DOT export.

#ifndef CRITIND_FORMAT_HPP
#define CRITIND_FORMAT_HPP

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "critind/graph.hpp"

namespace critind {

// graph6 payload: upper-triangle bits in column order
// (0,1),(0,2),(1,2),(0,3),... packed big-endian, 6 bits per byte, each +63.
inline std::string to_graph6(const Graph& g) {
    if (g.n > 62) throw std::invalid_argument("graph6 output supports n <= 62, got n=" + std::to_string(g.n));
    std::string out(1, static_cast<char>(63 + g.n));
    int acc = 0, nbits = 0;
    for (int v = 1; v < g.n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

inline Graph parse_graph6(const std::string& text) {
    auto bad = [&](std::size_t offset, const std::string& why) {
        throw std::invalid_argument("graph6 parse error at byte " + std::to_string(offset) + ": " + why);
    };
    if (text.empty()) bad(0, "empty input");
    const unsigned char first = static_cast<unsigned char>(text[0]);
    if (first == 126) bad(0, "multi-byte size header (n > 62) not supported");
    if (first < 63 || first > 125) bad(0, "size byte out of range 63..125");
    const int n = first - 63;
    const int nbits = n * (n - 1) / 2;
    const std::size_t payload = (static_cast<std::size_t>(nbits) + 5) / 6;
    if (text.size() < 1 + payload)
        bad(text.size(), "truncated: expected " + std::to_string(1 + payload) + " bytes for n=" + std::to_string(n));
    if (text.size() > 1 + payload)
        bad(1 + payload, "trailing garbage after " + std::to_string(1 + payload) + "-byte encoding");

    std::vector<std::pair<int, int>> edges;
    int bit_index = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) bad(i, "payload byte out of range 63..126");
        const int group = c - 63;
        for (int k = 5; k >= 0; --k, ++bit_index) {
            const int bit = (group >> k) & 1;
            if (bit_index >= nbits) {
                if (bit) bad(i, "nonzero padding bit");
                continue;
            }
            if (bit) {
                // invert column-order index -> pair (u,v)
                int v = 1;
                int idx = bit_index;
                while (idx >= v) idx -= v, ++v;
                edges.emplace_back(idx, v);
            }
        }
    }
    return from_edge_list(n, edges);
}

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto next_data_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    auto bad = [&](const std::string& why) {
        throw std::invalid_argument("edge-list parse error at line " + std::to_string(lineno) + ": " + why);
    };

    if (!next_data_line()) bad("missing 'n m' header");
    long long n = 0, m = 0;
    {
        std::istringstream hdr(line);
        std::string extra;
        if (!(hdr >> n >> m) || (hdr >> extra)) bad("header must be exactly 'n m'");
    }
    if (n < 0 || m < 0) bad("negative count in header");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line()) bad("expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        std::istringstream row(line);
        long long u = 0, v = 0;
        std::string extra;
        if (!(row >> u >> v) || (row >> extra)) bad("edge line must be exactly 'u v'");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_data_line()) bad("trailing content after declared edge count");
    return from_edge_list(static_cast<int>(n), edges);  // range/self-loop checks happen there
}

inline std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.n; ++v) {
        out << "  " << v;
        if (!g.labels.empty()) out << " [label=\"" << g.labels[v] << "\"]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace critind

#endif
