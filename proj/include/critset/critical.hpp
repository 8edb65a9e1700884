#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "critset/graph.hpp"
#include "critset/independence.hpp"
#include "critset/matching.hpp"

namespace critset {

/// d_G(X) = |X| - |N(X)|, defined for every subset of V (independence not
/// required).
inline int set_difference_value(const Graph& g, const VertexSet& x) {
    if (x.universe() != g.vertex_count())
        throw std::invalid_argument("set_difference_value: set universe mismatch");
    return x.size() - neighborhood(g, x).size();
}

/// Critical difference d(G) = max over all X of |X| - |N(X)|, computed in
/// polynomial time as n - mu(B(G)) on the bipartite double cover. Always
/// non-negative (the empty set has difference 0), and equal to the maximum
/// over independent subsets alone.
inline int critical_difference(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    DoubleCover dc = bipartite_double_cover(g);
    return n - max_matching_bipartite(dc.graph, dc.part0, dc.part1).size();
}

/// Every independent X with d_G(X) = d(G), canonically ordered (cardinality,
/// then lexicographic by sorted vertex sequence). The search prunes any
/// partial set whose optimistic difference |S| + |remaining| - |N(S)| falls
/// below d(G).
inline SetEnumeration enumerate_critical_independent_sets(const Graph& g, uint64_t budget) {
    if (budget < 1)
        throw std::invalid_argument("enumerate_critical_independent_sets: budget >= 1");
    const int n = g.vertex_count();
    if (n == 0) return {{VertexSet(0)}, true};
    if (!g.dense())
        throw std::invalid_argument("critical enumeration: graph too large for exact computation");
    const int d = critical_difference(g);

    SetEnumeration out;
    VertexSet current(n);

    // State: current (independent), nbhd = N(current), cand = vertices above
    // the last pick and not adjacent to current.
    std::function<void(const VertexSet&, const VertexSet&)> rec =
        [&](const VertexSet& cand, const VertexSet& nbhd) {
            if (!out.complete) return;
            if (current.size() - nbhd.size() == d) {
                if (out.sets.size() == budget) {
                    out.complete = false;
                    return;
                }
                out.sets.push_back(current);
            }
            for (int v = cand.first(); v != -1; v = cand.next_after(v)) {
                VertexSet next_nbhd = nbhd | g.neighbor_bits(v);
                VertexSet next_cand = cand - g.neighbor_bits(v);
                for (int w = next_cand.first(); w != -1 && w <= v; w = next_cand.next_after(w))
                    next_cand.erase(w);
                current.insert(v);
                if (current.size() + next_cand.size() - next_nbhd.size() >= d)
                    rec(next_cand, next_nbhd);
                current.erase(v);
                if (!out.complete) return;
            }
        };

    if (g.vertex_set().size() >= d) rec(g.vertex_set(), VertexSet(n));
    std::sort(out.sets.begin(), out.sets.end(), VertexSet::canonical_less);
    if (!out.complete && out.sets.size() > budget) out.sets.resize(static_cast<size_t>(budget));
    return out;
}

/// ker / diadem / nucleus over the critical independent sets. When the
/// enumeration budget is hit the report is marked partial and the three sets
/// are omitted rather than guessed; d stays valid (it is polynomial).
struct CriticalReport {
    int d = 0;
    bool complete = true;
    std::optional<uint64_t> critical_count; // set when complete
    std::optional<VertexSet> ker, diadem, nucleus;
    std::optional<int> max_critical_size;
};

inline CriticalReport critical_summary(const Graph& g, uint64_t budget) {
    if (budget < 1) throw std::invalid_argument("critical_summary: budget >= 1");
    CriticalReport r;
    r.d = critical_difference(g);
    SetEnumeration e = enumerate_critical_independent_sets(g, budget);
    r.complete = e.complete;
    if (!e.complete) return r;

    const int n = g.vertex_count();
    r.critical_count = e.sets.size();
    // d(G) = d_I(G), so the family is never empty.
    VertexSet ker = e.sets.front(), diadem(n);
    int max_size = 0;
    for (const auto& s : e.sets) {
        ker &= s;
        diadem |= s;
        max_size = std::max(max_size, s.size());
    }
    VertexSet nucleus = VertexSet::full(n);
    for (const auto& s : e.sets)
        if (s.size() == max_size) nucleus &= s;
    r.ker = std::move(ker);
    r.diadem = std::move(diadem);
    r.nucleus = std::move(nucleus);
    r.max_critical_size = max_size;
    return r;
}

namespace detail {

inline void require_critical_independent(const Graph& g, const VertexSet& i_c, const char* who) {
    if (i_c.universe() != g.vertex_count())
        throw std::invalid_argument(std::string(who) + ": set universe mismatch");
    if (!is_independent(g, i_c))
        throw std::invalid_argument(std::string(who) + ": set is not independent");
    if (set_difference_value(g, i_c) != critical_difference(g))
        throw std::invalid_argument(std::string(who) + ": set is not critical");
}

inline void require_maximum_independent(const Graph& g, const VertexSet& i_m, const char* who) {
    if (i_m.universe() != g.vertex_count())
        throw std::invalid_argument(std::string(who) + ": set universe mismatch");
    if (!is_independent(g, i_m))
        throw std::invalid_argument(std::string(who) + ": set is not independent");
    if (i_m.size() != alpha(g))
        throw std::invalid_argument(std::string(who) + ": set is not maximum");
}

} // namespace detail

/// The C/A/B decomposition of a critical independent set against a maximum
/// independent set, plus the swapped maximum independent set (I_M \ B) | A.
struct SwapDecomposition {
    VertexSet c, a, b, new_mis;
};

inline SwapDecomposition swap_decomposition(const Graph& g, const VertexSet& i_c,
                                            const VertexSet& i_m) {
    detail::require_critical_independent(g, i_c, "swap_decomposition(i_c)");
    detail::require_maximum_independent(g, i_m, "swap_decomposition(i_m)");

    SwapDecomposition sd;
    sd.c = i_c & i_m;
    sd.a = i_c - sd.c;
    sd.b = neighborhood(g, sd.a) & i_m;
    sd.new_mis = (i_m - sd.b) | sd.a;

    auto bug = [&](const std::string& what) {
        throw InvariantViolation("swap_decomposition: " + what + " [i_c=" + i_c.to_string() +
                                 " i_m=" + i_m.to_string() + "]");
    };
    if (sd.a.size() != sd.b.size()) bug("|A| != |B|");
    if (!is_independent(g, sd.new_mis) || sd.new_mis.size() != i_m.size())
        bug("(I_M \\ B) | A is not a maximum independent set");
    if (set_difference_value(g, sd.c) != critical_difference(g)) bug("C is not critical");
    if (!i_c.is_subset_of((i_m | sd.a) - sd.b)) bug("(I_M | A) \\ B does not contain I_c");
    return sd;
}

/// C/A/B against a whole family of maximum independent sets:
/// C = I_c & (union), A = I_c \ C, B = N(A) & (intersection); |A| = |B|.
struct FamilyDecomposition {
    VertexSet c, a, b;
};

inline FamilyDecomposition family_decomposition(const Graph& g, const VertexSet& i_c,
                                                const std::vector<VertexSet>& family) {
    if (family.empty()) throw std::invalid_argument("family_decomposition: empty family");
    detail::require_critical_independent(g, i_c, "family_decomposition(i_c)");
    for (const auto& m : family)
        detail::require_maximum_independent(g, m, "family_decomposition(family)");

    VertexSet uni = family.front(), inter = family.front();
    for (const auto& m : family) {
        uni |= m;
        inter &= m;
    }
    FamilyDecomposition fd;
    fd.c = i_c & uni;
    fd.a = i_c - fd.c;
    fd.b = neighborhood(g, fd.a) & inter;
    if (fd.a.size() != fd.b.size())
        throw InvariantViolation("family_decomposition: |A| != |B| [i_c=" + i_c.to_string() +
                                 ", family of " + std::to_string(family.size()) + "]");
    return fd;
}

/// Lexicographically first maximum independent set (canonical order), found
/// greedily with alpha queries.
inline VertexSet lex_first_maximum_independent_set(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return VertexSet(0);
    detail::MisEngine engine(g);
    const int a = engine.alpha(g.vertex_set());
    VertexSet chosen(n), cand = g.vertex_set();
    int size = 0;
    while (size < a) {
        for (int v = cand.first(); v != -1; v = cand.next_after(v)) {
            VertexSet rest = cand - g.neighbor_bits(v);
            for (int w = rest.first(); w != -1 && w <= v; w = rest.next_after(w)) rest.erase(w);
            if (size + 1 + engine.alpha(rest) == a) {
                chosen.insert(v);
                ++size;
                cand = rest;
                break;
            }
        }
    }
    return chosen;
}

/// A maximum independent set containing the given critical independent set,
/// built as (I_M | A) \ B from the lexicographically first I_M.
inline VertexSet extend_to_maximum(const Graph& g, const VertexSet& i_c) {
    detail::require_critical_independent(g, i_c, "extend_to_maximum");
    VertexSet i_m = lex_first_maximum_independent_set(g);
    VertexSet c = i_c & i_m;
    VertexSet a = i_c - c;
    VertexSet b = neighborhood(g, a) & i_m;
    VertexSet result = (i_m | a) - b;
    if (!is_independent(g, result) || result.size() != i_m.size() || !i_c.is_subset_of(result))
        throw InvariantViolation("extend_to_maximum: construction failed [i_c=" + i_c.to_string() +
                                 "]");
    return result;
}

} // namespace critset
