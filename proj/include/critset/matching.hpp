#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <vector>

#include "critset/graph.hpp"

namespace critset {

/// Set of pairwise-disjoint edges, exposed through the involution view
/// partner(): partner(partner(v)) == v, and partner(v) == v exactly when v is
/// unmatched.
class Matching {
public:
    Matching() = default;

    /// mate[v] == v marks an unmatched vertex. Validates disjointness and
    /// that every pair is an edge of g.
    static Matching from_mate(const Graph& g, std::vector<int> mate) {
        const int n = g.vertex_count();
        if (static_cast<int>(mate.size()) != n)
            throw std::invalid_argument("Matching: mate vector size mismatch");
        int matched = 0;
        for (int v = 0; v < n; ++v) {
            int u = mate[static_cast<size_t>(v)];
            if (u < 0 || u >= n) throw std::invalid_argument("Matching: partner out of range");
            if (u == v) continue;
            if (mate[static_cast<size_t>(u)] != v)
                throw std::invalid_argument("Matching: involution property violated");
            if (!g.has_edge(u, v)) throw std::invalid_argument("Matching: pair is not an edge");
            ++matched;
        }
        Matching m;
        m.mate_ = std::move(mate);
        m.size_ = matched / 2;
        return m;
    }

    int partner(int v) const { return mate_[static_cast<size_t>(v)]; }
    bool covers(int v) const { return mate_[static_cast<size_t>(v)] != v; }
    int size() const { return size_; }

    std::vector<std::pair<int, int>> pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int v = 0; v < static_cast<int>(mate_.size()); ++v)
            if (mate_[static_cast<size_t>(v)] > v) out.emplace_back(v, mate_[static_cast<size_t>(v)]);
        return out;
    }

private:
    std::vector<int> mate_;
    int size_ = 0;
};

namespace detail {

// Edmonds' blossom algorithm, array-based. Roots are tried in ascending
// order and adjacency lists are sorted, so the result is deterministic.
class BlossomMatcher {
public:
    explicit BlossomMatcher(const Graph& g)
        : g_(g),
          n_(g.vertex_count()),
          match_(static_cast<size_t>(n_), -1),
          parent_(static_cast<size_t>(n_)),
          base_(static_cast<size_t>(n_)),
          queued_(static_cast<size_t>(n_)),
          in_blossom_(static_cast<size_t>(n_)) {}

    std::vector<int> solve() {
        for (int v = 0; v < n_; ++v)
            if (match_[static_cast<size_t>(v)] < 0) find_augmenting_path(v);
        std::vector<int> mate(static_cast<size_t>(n_));
        for (int v = 0; v < n_; ++v)
            mate[static_cast<size_t>(v)] = match_[static_cast<size_t>(v)] < 0 ? v : match_[static_cast<size_t>(v)];
        return mate;
    }

private:
    int lowest_common_base(int a, int b) {
        std::vector<bool> seen(static_cast<size_t>(n_), false);
        while (true) {
            a = base_[static_cast<size_t>(a)];
            seen[static_cast<size_t>(a)] = true;
            if (match_[static_cast<size_t>(a)] < 0) break;
            a = parent_[static_cast<size_t>(match_[static_cast<size_t>(a)])];
        }
        while (true) {
            b = base_[static_cast<size_t>(b)];
            if (seen[static_cast<size_t>(b)]) return b;
            b = parent_[static_cast<size_t>(match_[static_cast<size_t>(b)])];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[static_cast<size_t>(v)] != b) {
            in_blossom_[static_cast<size_t>(base_[static_cast<size_t>(v)])] = true;
            in_blossom_[static_cast<size_t>(base_[static_cast<size_t>(match_[static_cast<size_t>(v)])])] = true;
            parent_[static_cast<size_t>(v)] = child;
            child = match_[static_cast<size_t>(v)];
            v = parent_[static_cast<size_t>(child)];
        }
    }

    void find_augmenting_path(int root) {
        std::fill(queued_.begin(), queued_.end(), false);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i) base_[static_cast<size_t>(i)] = i;

        std::queue<int> q;
        q.push(root);
        queued_[static_cast<size_t>(root)] = true;

        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g_.neighbors(v)) {
                if (base_[static_cast<size_t>(v)] == base_[static_cast<size_t>(w)] ||
                    match_[static_cast<size_t>(v)] == w)
                    continue;
                if (w == root ||
                    (match_[static_cast<size_t>(w)] >= 0 &&
                     parent_[static_cast<size_t>(match_[static_cast<size_t>(w)])] >= 0)) {
                    // Even vertex reached twice: contract the blossom.
                    int b = lowest_common_base(v, w);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), false);
                    mark_path(v, b, w);
                    mark_path(w, b, v);
                    for (int i = 0; i < n_; ++i)
                        if (in_blossom_[static_cast<size_t>(base_[static_cast<size_t>(i)])]) {
                            base_[static_cast<size_t>(i)] = b;
                            if (!queued_[static_cast<size_t>(i)]) {
                                queued_[static_cast<size_t>(i)] = true;
                                q.push(i);
                            }
                        }
                } else if (parent_[static_cast<size_t>(w)] < 0) {
                    parent_[static_cast<size_t>(w)] = v;
                    if (match_[static_cast<size_t>(w)] < 0) {
                        augment(w);
                        return;
                    }
                    int m = match_[static_cast<size_t>(w)];
                    if (!queued_[static_cast<size_t>(m)]) {
                        queued_[static_cast<size_t>(m)] = true;
                        q.push(m);
                    }
                }
            }
        }
    }

    void augment(int v) {
        while (v >= 0) {
            int pv = parent_[static_cast<size_t>(v)];
            int next = match_[static_cast<size_t>(pv)];
            match_[static_cast<size_t>(v)] = pv;
            match_[static_cast<size_t>(pv)] = v;
            v = next;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> match_, parent_, base_;
    std::vector<bool> queued_, in_blossom_;
};

} // namespace detail

/// Maximum matching in an arbitrary graph (Edmonds' blossom algorithm).
inline Matching max_matching_general(const Graph& g) {
    detail::BlossomMatcher matcher(g);
    return Matching::from_mate(g, matcher.solve());
}

/// Maximum matching number mu(G).
inline int matching_number(const Graph& g) { return max_matching_general(g).size(); }

/// Maximum matching in a bipartite graph via Hopcroft-Karp, O(E * sqrt(V)).
/// The bipartition is validated; an edge inside a part is a contract
/// violation.
inline Matching max_matching_bipartite(const Graph& g, const VertexSet& part0,
                                       const VertexSet& part1) {
    const int n = g.vertex_count();
    if (part0.universe() != n || part1.universe() != n)
        throw std::invalid_argument("max_matching_bipartite: part universe mismatch");
    if (part0.intersects(part1) || (part0 | part1).size() != n)
        throw std::invalid_argument("max_matching_bipartite: parts do not partition V");
    for (auto [u, v] : g.edges())
        if (part0.contains(u) == part0.contains(v))
            throw std::invalid_argument("max_matching_bipartite: edge inside one part");

    const std::vector<int> left = part0.to_vector();
    std::vector<int> left_index(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < left.size(); ++i) left_index[static_cast<size_t>(left[i])] = static_cast<int>(i);

    constexpr int kInf = std::numeric_limits<int>::max();
    std::vector<int> mate(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) mate[static_cast<size_t>(v)] = v;
    std::vector<int> level(left.size(), kInf);
    int free_level = kInf; // shortest level at which an unmatched right vertex appears

    auto lvl = [&](int u) -> int& { return level[static_cast<size_t>(left_index[static_cast<size_t>(u)])]; };

    // one phase: layer the alternating BFS forest, then augment only along
    // shortest (== free_level) paths
    auto bfs = [&]() {
        std::queue<int> q;
        free_level = kInf;
        for (int u : left) {
            if (mate[static_cast<size_t>(u)] == u) {
                lvl(u) = 0;
                q.push(u);
            } else {
                lvl(u) = kInf;
            }
        }
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (lvl(u) >= free_level) continue;
            for (int v : g.neighbors(u)) {
                int next = mate[static_cast<size_t>(v)];
                if (next == v) {
                    free_level = std::min(free_level, lvl(u) + 1);
                } else if (lvl(next) == kInf) {
                    lvl(next) = lvl(u) + 1;
                    q.push(next);
                }
            }
        }
        return free_level != kInf;
    };

    std::function<bool(int)> dfs = [&](int u) {
        for (int v : g.neighbors(u)) {
            int next = mate[static_cast<size_t>(v)];
            if (next == v ? lvl(u) + 1 == free_level : (lvl(next) == lvl(u) + 1 && dfs(next))) {
                mate[static_cast<size_t>(u)] = v;
                mate[static_cast<size_t>(v)] = u;
                return true;
            }
        }
        lvl(u) = kInf;
        return false;
    };

    while (bfs())
        for (int u : left)
            if (mate[static_cast<size_t>(u)] == u) dfs(u);

    return Matching::from_mate(g, std::move(mate));
}

/// Bipartite double cover B(G): vertices (v,0) = v and (v,1) = v+n, with
/// (u,0)(v,1) an edge of B iff uv is an edge of G.
struct DoubleCover {
    Graph graph;
    VertexSet part0, part1;
};

inline DoubleCover bipartite_double_cover(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges().size() * 2);
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(u, v + n);
        edges.emplace_back(v, u + n);
    }
    DoubleCover dc;
    dc.graph = Graph::from_edges(2 * n, std::move(edges));
    dc.part0 = VertexSet(2 * n);
    dc.part1 = VertexSet(2 * n);
    for (int v = 0; v < n; ++v) {
        dc.part0.insert(v);
        dc.part1.insert(v + n);
    }
    return dc;
}

/// Either a matching from s into u saturating s, or a Hall violator
/// W subset of s with |N(W) & u| < |W|.
struct MatchingInto {
    bool exists = false;
    Matching matching;  // saturates s when exists
    VertexSet violator; // non-empty when !exists
};

/// Matching from s into u using the edges of g between them (Kuhn's
/// algorithm; vertices scanned in ascending order for determinism).
inline MatchingInto exists_matching_into(const Graph& g, const VertexSet& s, const VertexSet& u) {
    const int n = g.vertex_count();
    if (s.universe() != n || u.universe() != n)
        throw std::invalid_argument("exists_matching_into: set universe mismatch");
    if (s.intersects(u))
        throw std::invalid_argument("exists_matching_into: s and u must be disjoint");

    std::vector<int> mate(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) mate[static_cast<size_t>(v)] = v;

    std::vector<char> visited(static_cast<size_t>(n));
    std::function<bool(int)> try_augment = [&](int x) {
        for (int w : g.neighbors(x)) {
            if (!u.contains(w) || visited[static_cast<size_t>(w)]) continue;
            visited[static_cast<size_t>(w)] = 1;
            if (mate[static_cast<size_t>(w)] == w || try_augment(mate[static_cast<size_t>(w)])) {
                mate[static_cast<size_t>(x)] = w;
                mate[static_cast<size_t>(w)] = x;
                return true;
            }
        }
        return false;
    };

    bool saturated = true;
    s.for_each([&](int x) {
        std::fill(visited.begin(), visited.end(), 0);
        if (!try_augment(x)) saturated = false;
    });

    MatchingInto res;
    if (saturated) {
        res.exists = true;
        res.matching = Matching::from_mate(g, std::move(mate));
        return res;
    }

    // Alternating reachability from the unmatched side yields the violator:
    // W = reachable & s has all its u-neighbors matched back into W, so
    // |N(W) & u| = |W| - (number of unmatched roots) < |W|.
    VertexSet reach_s(n), reach_u(n);
    std::queue<int> q;
    s.for_each([&](int x) {
        if (mate[static_cast<size_t>(x)] == x) {
            reach_s.insert(x);
            q.push(x);
        }
    });
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int w : g.neighbors(x)) {
            if (!u.contains(w) || reach_u.contains(w)) continue;
            reach_u.insert(w);
            int back = mate[static_cast<size_t>(w)];
            if (back != w && !reach_s.contains(back)) {
                reach_s.insert(back);
                q.push(back);
            }
        }
    }
    res.exists = false;
    res.violator = reach_s;
    return res;
}

} // namespace critset
