#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "critset/errors.hpp"
#include "critset/vertex_set.hpp"

namespace critset {

/// Immutable simple undirected graph over vertices 0..n-1.
///
/// Storage is a sorted edge list plus CSR adjacency; for graphs up to
/// kDenseLimit vertices a bitset row per vertex is kept as well, giving O(1)
/// adjacency tests and fast set algebra for the enumeration algorithms.
class Graph {
public:
    static constexpr int kDenseLimit = 4096;

    Graph() = default;

    /// Builds a graph from (possibly unnormalized, possibly duplicated) edges.
    /// Self-loops and out-of-range endpoints are rejected.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        for (auto& [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("Graph: edge endpoint out of range");
            if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

        Graph g;
        g.n_ = n;
        g.edges_ = std::move(edges);
        g.build_adjacency();
        return g;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    std::span<const int> neighbors(int v) const {
        return {adj_.data() + off_[static_cast<size_t>(v)],
                adj_.data() + off_[static_cast<size_t>(v) + 1]};
    }

    int degree(int v) const {
        return static_cast<int>(off_[static_cast<size_t>(v) + 1] - off_[static_cast<size_t>(v)]);
    }

    bool has_edge(int u, int v) const {
        if (u == v) return false;
        if (!rows_.empty()) return rows_[static_cast<size_t>(u)].contains(v);
        auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    bool dense() const { return !rows_.empty(); }

    /// Bitset of neighbors; only available for graphs within kDenseLimit.
    const VertexSet& neighbor_bits(int v) const {
        if (rows_.empty())
            throw std::invalid_argument("Graph: bitset adjacency unavailable at this size");
        return rows_[static_cast<size_t>(v)];
    }

    VertexSet vertex_set() const { return VertexSet::full(n_); }
    VertexSet empty_set() const { return VertexSet(n_); }

    /// Induced subgraph on `keep`. old_of_new, when given, receives the
    /// original label of each new vertex (ascending).
    Graph induced(const VertexSet& keep, std::vector<int>* old_of_new = nullptr) const {
        if (keep.universe() != n_)
            throw std::invalid_argument("Graph::induced: set universe mismatch");
        std::vector<int> old_ids = keep.to_vector();
        std::vector<int> new_of_old(static_cast<size_t>(n_), -1);
        for (size_t i = 0; i < old_ids.size(); ++i) new_of_old[static_cast<size_t>(old_ids[i])] = static_cast<int>(i);
        std::vector<std::pair<int, int>> sub;
        for (auto [u, v] : edges_)
            if (new_of_old[static_cast<size_t>(u)] >= 0 && new_of_old[static_cast<size_t>(v)] >= 0)
                sub.emplace_back(new_of_old[static_cast<size_t>(u)], new_of_old[static_cast<size_t>(v)]);
        if (old_of_new) *old_of_new = std::move(old_ids);
        return from_edges(keep.size(), std::move(sub));
    }

private:
    void build_adjacency() {
        off_.assign(static_cast<size_t>(n_) + 1, 0);
        for (auto [u, v] : edges_) {
            ++off_[static_cast<size_t>(u) + 1];
            ++off_[static_cast<size_t>(v) + 1];
        }
        for (size_t i = 1; i < off_.size(); ++i) off_[i] += off_[i - 1];
        adj_.resize(edges_.size() * 2);
        std::vector<size_t> cur(off_.begin(), off_.end() - 1);
        for (auto [u, v] : edges_) {
            adj_[cur[static_cast<size_t>(u)]++] = v;
            adj_[cur[static_cast<size_t>(v)]++] = u;
        }
        for (int v = 0; v < n_; ++v)
            std::sort(adj_.begin() + static_cast<long>(off_[static_cast<size_t>(v)]),
                      adj_.begin() + static_cast<long>(off_[static_cast<size_t>(v) + 1]));
        if (n_ <= kDenseLimit) {
            rows_.assign(static_cast<size_t>(n_), VertexSet(n_));
            for (auto [u, v] : edges_) {
                rows_[static_cast<size_t>(u)].insert(v);
                rows_[static_cast<size_t>(v)].insert(u);
            }
        }
    }

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> adj_;
    std::vector<size_t> off_;
    std::vector<VertexSet> rows_;
};

// ---------------------------------------------------------------------------
// Parsing and serialization
// ---------------------------------------------------------------------------

/// Edge-list text: first non-empty line is the vertex count, every later
/// non-empty line is "u v". Duplicate edges collapse; CRLF is tolerated.
/// Errors carry the 1-based line number.
inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;

    auto fail = [&](const std::string& msg) {
        throw ParseError("edge list, line " + std::to_string(line_no) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        if (n < 0) {
            std::string tok, extra;
            if (!(ls >> tok)) continue; // skip leading blank lines
            try {
                size_t pos = 0;
                n = std::stoi(tok, &pos);
                if (pos != tok.size() || n < 0) fail("expected a vertex count, got '" + tok + "'");
            } catch (const std::exception&) {
                fail("expected a vertex count, got '" + tok + "'");
            }
            if (ls >> extra) fail("unexpected token '" + extra + "' after vertex count");
            continue;
        }
        long u, v;
        std::string extra;
        if (!(ls >> u)) continue; // blank line
        if (!(ls >> v)) fail("expected 'u v'");
        if (ls >> extra) fail("unexpected token '" + extra + "'");
        if (u < 0 || v < 0 || u >= n || v >= n)
            fail("vertex out of range 0.." + std::to_string(n - 1));
        if (u == v) fail("self-loop " + std::to_string(u) + " " + std::to_string(v));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw ParseError("edge list: empty input, expected a vertex count line");
    return Graph::from_edges(n, std::move(edges));
}

namespace detail {

inline void g6_check_byte(unsigned char c, size_t pos) {
    if (c < 63 || c > 126)
        throw ParseError("graph6: byte " + std::to_string(pos) + " outside printable range 63..126");
}

} // namespace detail

/// Decodes one graph6 string (short form and the '~'-prefixed 3-byte form,
/// i.e. up to 258047 vertices). Surrounding whitespace is ignored.
inline Graph parse_graph6(const std::string& text) {
    size_t b = text.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) throw ParseError("graph6: empty input");
    size_t e = text.find_last_not_of(" \t\r\n");
    const std::string s = text.substr(b, e - b + 1);

    size_t pos = 0;
    auto byte_at = [&](size_t i) -> unsigned {
        if (i >= s.size()) throw ParseError("graph6: truncated data");
        unsigned char c = static_cast<unsigned char>(s[i]);
        detail::g6_check_byte(c, i);
        return static_cast<unsigned>(c) - 63u;
    };

    long long n;
    if (byte_at(0) == 63) { // '~' prefix: 18-bit vertex count
        if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126)
            throw ParseError("graph6: vertex counts above 258047 are not supported");
        n = (static_cast<long long>(byte_at(1)) << 12) | (static_cast<long long>(byte_at(2)) << 6) |
            static_cast<long long>(byte_at(3));
        pos = 4;
    } else {
        n = static_cast<long long>(byte_at(0));
        pos = 1;
    }

    const long long nbits = n * (n - 1) / 2;
    const size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
    if (s.size() != pos + nbytes)
        throw ParseError(s.size() < pos + nbytes ? "graph6: truncated data"
                                                 : "graph6: trailing bytes after graph data");

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++bit) {
            unsigned v = byte_at(pos + static_cast<size_t>(bit / 6));
            if ((v >> (5 - bit % 6)) & 1u) edges.emplace_back(row, col);
        }
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

/// Canonical graph6 encoding of a graph (inverse of parse_graph6).
inline std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph6: vertex counts above 258047 are not supported");
    }
    unsigned acc = 0;
    int nacc = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1u : 0u);
            if (++nacc == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nacc = 0;
            }
        }
    if (nacc) out.push_back(static_cast<char>((acc << (6 - nacc)) + 63));
    return out;
}

// ---------------------------------------------------------------------------
// Elementary queries
// ---------------------------------------------------------------------------

/// Open neighborhood N(X): union of the neighbor sets of the members of x.
/// May intersect x when x is not independent.
inline VertexSet neighborhood(const Graph& g, const VertexSet& x) {
    if (x.universe() != g.vertex_count())
        throw std::invalid_argument("neighborhood: set universe mismatch");
    VertexSet out(g.vertex_count());
    if (g.dense()) {
        x.for_each([&](int v) { out |= g.neighbor_bits(v); });
    } else {
        x.for_each([&](int v) {
            for (int w : g.neighbors(v)) out.insert(w);
        });
    }
    return out;
}

/// Closed neighborhood N[v].
inline VertexSet closed_neighborhood(const Graph& g, int v) {
    VertexSet out = g.dense() ? g.neighbor_bits(v) : VertexSet(g.vertex_count());
    if (!g.dense())
        for (int w : g.neighbors(v)) out.insert(w);
    out.insert(v);
    return out;
}

inline bool is_independent(const Graph& g, const VertexSet& x) {
    if (x.universe() != g.vertex_count())
        throw std::invalid_argument("is_independent: set universe mismatch");
    bool ok = true;
    x.for_each([&](int v) {
        if (!ok) return;
        if (g.dense()) {
            if (g.neighbor_bits(v).intersects(x)) ok = false;
        } else {
            for (int w : g.neighbors(v))
                if (x.contains(w)) { ok = false; return; }
        }
    });
    return ok;
}

/// Result of the bipartiteness test: either a 2-coloring (per connected
/// component, side 0 holds each component's smallest vertex) or a witness
/// odd cycle as a vertex sequence with consecutive members adjacent and the
/// last adjacent to the first.
struct BipartiteCheck {
    bool bipartite = false;
    VertexSet part0, part1;
    std::vector<int> odd_cycle;
};

inline BipartiteCheck is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    BipartiteCheck res;
    res.part0 = VertexSet(n);
    res.part1 = VertexSet(n);
    std::vector<int> color(static_cast<size_t>(n), -1), parent(static_cast<size_t>(n), -1),
        depth(static_cast<size_t>(n), 0);

    for (int root = 0; root < n; ++root) {
        if (color[static_cast<size_t>(root)] != -1) continue;
        color[static_cast<size_t>(root)] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (color[static_cast<size_t>(w)] == -1) {
                    color[static_cast<size_t>(w)] = color[static_cast<size_t>(v)] ^ 1;
                    parent[static_cast<size_t>(w)] = v;
                    depth[static_cast<size_t>(w)] = depth[static_cast<size_t>(v)] + 1;
                    q.push(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
                    // Same color on an edge: the two root paths plus vw close
                    // an odd cycle through their lowest common ancestor.
                    std::vector<int> pv, pw;
                    int a = v, b = w;
                    while (depth[static_cast<size_t>(a)] > depth[static_cast<size_t>(b)]) {
                        pv.push_back(a);
                        a = parent[static_cast<size_t>(a)];
                    }
                    while (depth[static_cast<size_t>(b)] > depth[static_cast<size_t>(a)]) {
                        pw.push_back(b);
                        b = parent[static_cast<size_t>(b)];
                    }
                    while (a != b) {
                        pv.push_back(a);
                        pw.push_back(b);
                        a = parent[static_cast<size_t>(a)];
                        b = parent[static_cast<size_t>(b)];
                    }
                    // cycle: lca, (down to v), (v w edge), (w back up to lca)
                    res.odd_cycle.clear();
                    res.odd_cycle.push_back(a);
                    for (auto it = pv.rbegin(); it != pv.rend(); ++it) res.odd_cycle.push_back(*it);
                    for (int x : pw) res.odd_cycle.push_back(x);
                    res.bipartite = false;
                    return res;
                }
            }
        }
    }
    for (int v = 0; v < n; ++v)
        (color[static_cast<size_t>(v)] == 0 ? res.part0 : res.part1).insert(v);
    res.bipartite = true;
    return res;
}

// ---------------------------------------------------------------------------
// DOT rendering
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& dot_palette() {
    static const std::vector<std::string> colors = {
        "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
        "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};
    return colors;
}

/// DOT text with one fill color per highlight set; a vertex in several sets
/// takes the color of the first-listed one. A comment header maps labels to
/// colors.
inline std::string to_dot(const Graph& g,
                          const std::vector<std::pair<VertexSet, std::string>>& highlights = {}) {
    for (const auto& [set, label] : highlights)
        if (set.universe() != g.vertex_count())
            throw std::invalid_argument("to_dot: highlight universe mismatch");
    std::ostringstream out;
    out << "// critset dot output\n";
    for (size_t i = 0; i < highlights.size(); ++i)
        out << "// " << highlights[i].second << ": fill "
            << dot_palette()[i % dot_palette().size()] << " "
            << highlights[i].first.to_string() << "\n";
    out << "graph G {\n  node [shape=circle];\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        int owner = -1;
        for (size_t i = 0; i < highlights.size() && owner < 0; ++i)
            if (highlights[i].first.contains(v)) owner = static_cast<int>(i);
        if (owner >= 0)
            out << "  " << v << " [style=filled, fillcolor=\""
                << dot_palette()[static_cast<size_t>(owner) % dot_palette().size()] << "\"];\n";
        else
            out << "  " << v << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace critset
