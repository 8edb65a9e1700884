#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "critset/graph.hpp"
#include "critset/matching.hpp"

namespace critset {

/// Result of a bounded set enumeration. When complete is false the stream hit
/// its budget: `sets` holds the first `budget` sets found (canonically sorted
/// among themselves) and must not be treated as the whole family.
struct SetEnumeration {
    std::vector<VertexSet> sets;
    bool complete = true;
};

namespace detail {

// Branch-and-bound engine for maximum independent sets on bitset rows.
// Bound: greedy clique cover of the candidate set (each clique contributes at
// most one vertex). Branch vertex: maximum degree inside the candidates.
class MisEngine {
public:
    explicit MisEngine(const Graph& g) : g_(g), n_(g.vertex_count()) {
        if (!g.dense())
            throw std::invalid_argument("independence: graph too large for exact computation");
    }

    int alpha(const VertexSet& candidates) {
        best_ = 0;
        expand_alpha(candidates, 0);
        return best_;
    }

    int alpha() { return alpha(g_.vertex_set()); }

    // All independent sets of size `target` inside `candidates`, up to
    // `budget` of them.
    SetEnumeration enumerate_exact(const VertexSet& candidates, int target, uint64_t budget) {
        out_.sets.clear();
        out_.complete = true;
        budget_ = budget;
        target_ = target;
        VertexSet current(n_);
        expand_enum(candidates, current, 0);
        std::sort(out_.sets.begin(), out_.sets.end(), VertexSet::canonical_less);
        if (!out_.complete && out_.sets.size() > budget_)
            out_.sets.resize(static_cast<size_t>(budget_));
        return std::move(out_);
    }

private:
    int clique_cover_bound(const VertexSet& cand) const {
        cliques_.clear();
        cand.for_each([&](int v) {
            const VertexSet& row = g_.neighbor_bits(v);
            for (auto& c : cliques_)
                if (c.is_subset_of(row)) {
                    c.insert(v);
                    return;
                }
            cliques_.emplace_back(n_);
            cliques_.back().insert(v);
        });
        return static_cast<int>(cliques_.size());
    }

    int pick_branch_vertex(const VertexSet& cand) const {
        int best_v = -1, best_deg = -1;
        cand.for_each([&](int v) {
            int d = (g_.neighbor_bits(v) & cand).size();
            if (d > best_deg) {
                best_deg = d;
                best_v = v;
            }
        });
        return best_v;
    }

    void expand_alpha(const VertexSet& cand, int size) {
        if (size > best_) best_ = size;
        if (cand.empty()) return;
        if (size + clique_cover_bound(cand) <= best_) return;
        int v = pick_branch_vertex(cand);
        VertexSet with = cand;
        with -= g_.neighbor_bits(v);
        with.erase(v);
        expand_alpha(with, size + 1);
        VertexSet without = cand;
        without.erase(v);
        expand_alpha(without, size);
    }

    void expand_enum(const VertexSet& cand, VertexSet& current, int size) {
        if (!out_.complete) return;
        if (size == target_) {
            if (out_.sets.size() == budget_) {
                out_.complete = false;
                return;
            }
            out_.sets.push_back(current);
            return;
        }
        if (cand.empty()) return;
        if (size + clique_cover_bound(cand) < target_) return;
        int v = pick_branch_vertex(cand);
        VertexSet with = cand;
        with -= g_.neighbor_bits(v);
        with.erase(v);
        current.insert(v);
        expand_enum(with, current, size + 1);
        current.erase(v);
        VertexSet without = cand;
        without.erase(v);
        expand_enum(without, current, size);
    }

    const Graph& g_;
    int n_;
    int best_ = 0;
    int target_ = 0;
    uint64_t budget_ = 0;
    SetEnumeration out_;
    mutable std::vector<VertexSet> cliques_;
};

} // namespace detail

/// Exact independence number via branch and bound.
inline int alpha(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    return detail::MisEngine(g).alpha();
}

/// Largest independent set inside `allowed` (the independence number of the
/// induced subgraph, computed without materializing it).
inline int alpha_within(const Graph& g, const VertexSet& allowed) {
    if (g.vertex_count() == 0) return 0;
    return detail::MisEngine(g).alpha(allowed);
}

/// Every maximum independent set, canonically ordered (ascending lexicographic
/// order of the sorted vertex sequences; all members share cardinality alpha).
/// If more than `budget` exist the result is flagged incomplete.
inline SetEnumeration enumerate_maximum_independent_sets(const Graph& g, uint64_t budget) {
    if (budget < 1) throw std::invalid_argument("enumerate_maximum_independent_sets: budget >= 1");
    if (g.vertex_count() == 0) return {{VertexSet(0)}, true};
    detail::MisEngine engine(g);
    int a = engine.alpha();
    return engine.enumerate_exact(g.vertex_set(), a, budget);
}

/// alpha, core, corona, and (optionally) |Omega(G)|.
///
/// core and corona come from alpha queries, not enumeration:
///   v in core   iff  alpha(G - v)    == alpha - 1
///   v in corona iff  alpha(G - N[v]) == alpha - 1
struct OmegaSummary {
    int alpha = 0;
    VertexSet core, corona;
    std::optional<uint64_t> mis_count; // set when enumeration was requested and finished
    bool mis_enumeration_requested = false;
    bool mis_enumeration_complete = true;
};

inline OmegaSummary omega_summary(const Graph& g,
                                  std::optional<uint64_t> mis_budget = std::nullopt) {
    const int n = g.vertex_count();
    OmegaSummary s;
    s.core = VertexSet(n);
    s.corona = VertexSet(n);
    if (n == 0) {
        if (mis_budget) {
            s.mis_enumeration_requested = true;
            s.mis_count = 1; // Omega = {{}}
        }
        return s;
    }
    detail::MisEngine engine(g);
    const VertexSet all = g.vertex_set();
    s.alpha = engine.alpha(all);
    for (int v = 0; v < n; ++v) {
        VertexSet without_v = all;
        without_v.erase(v);
        if (engine.alpha(without_v) == s.alpha - 1) s.core.insert(v);
        VertexSet without_nv = all - closed_neighborhood(g, v);
        if (engine.alpha(without_nv) == s.alpha - 1) s.corona.insert(v);
    }
    if (mis_budget) {
        s.mis_enumeration_requested = true;
        SetEnumeration e = engine.enumerate_exact(all, s.alpha, *mis_budget);
        s.mis_enumeration_complete = e.complete;
        if (e.complete) s.mis_count = e.sets.size();
    }
    return s;
}

/// alpha(G) + mu(G) == |V(G)|.
inline bool is_koenig_egervary(const Graph& g) {
    return alpha(g) + matching_number(g) == g.vertex_count();
}

} // namespace critset
