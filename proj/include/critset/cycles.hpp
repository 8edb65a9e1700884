#pragma once

#include <cstdint>
#include <functional>
#include <unordered_set>
#include <vector>

#include "critset/graph.hpp"

namespace critset {

/// Counts over the odd cycles of a graph. k_distinct is the number of
/// distinct vertex sets among them, which equals the maximum cardinality of a
/// pairwise vertex-distinct family of odd cycles. When exhausted is false the
/// cycle budget was hit and both counts are lower bounds only.
struct CycleInventory {
    uint64_t k_distinct = 0;
    uint64_t odd_cycle_total = 0;
    bool exhausted = true;
};

namespace detail {

// Johnson-style elementary circuit search adapted to undirected graphs.
// Phase s explores the subgraph induced on vertices >= s for cycles whose
// smallest vertex is s; each cycle closes in both directions and is emitted
// once, in the canonical orientation (second vertex smaller than last).
class CycleEnumerator {
public:
    CycleEnumerator(const Graph& g, uint64_t budget,
                    const std::function<bool(const std::vector<int>&)>& visit)
        : g_(g), budget_(budget), visit_(visit) {}

    // Returns true when every cycle was emitted within budget.
    bool run() {
        const int n = g_.vertex_count();
        blocked_.assign(static_cast<size_t>(n), false);
        unblock_list_.assign(static_cast<size_t>(n), {});
        for (start_ = 0; start_ < n && !aborted_; ++start_) {
            for (int v = start_; v < n; ++v) {
                blocked_[static_cast<size_t>(v)] = false;
                unblock_list_[static_cast<size_t>(v)].clear();
            }
            path_.clear();
            circuit(start_);
        }
        return !aborted_;
    }

private:
    bool circuit(int v) {
        bool found = false;
        path_.push_back(v);
        blocked_[static_cast<size_t>(v)] = true;
        for (int w : g_.neighbors(v)) {
            if (w < start_) continue;
            if (aborted_) break;
            if (w == start_) {
                if (path_.size() >= 3) {
                    found = true;
                    if (path_[1] < path_.back()) emit();
                }
            } else if (!blocked_[static_cast<size_t>(w)]) {
                if (circuit(w)) found = true;
            }
        }
        if (found)
            unblock(v);
        else
            for (int w : g_.neighbors(v)) {
                if (w < start_ || w == start_) continue;
                auto& lst = unblock_list_[static_cast<size_t>(w)];
                if (std::find(lst.begin(), lst.end(), v) == lst.end()) lst.push_back(v);
            }
        path_.pop_back();
        return found;
    }

    void unblock(int v) {
        blocked_[static_cast<size_t>(v)] = false;
        auto pending = std::move(unblock_list_[static_cast<size_t>(v)]);
        unblock_list_[static_cast<size_t>(v)].clear();
        for (int u : pending)
            if (blocked_[static_cast<size_t>(u)]) unblock(u);
    }

    void emit() {
        if (emitted_ == budget_) {
            aborted_ = true;
            return;
        }
        ++emitted_;
        if (!visit_(path_)) aborted_ = true;
    }

    const Graph& g_;
    uint64_t budget_;
    const std::function<bool(const std::vector<int>&)>& visit_;
    std::vector<bool> blocked_;
    std::vector<std::vector<int>> unblock_list_;
    std::vector<int> path_;
    int start_ = 0;
    uint64_t emitted_ = 0;
    bool aborted_ = false;
};

} // namespace detail

/// Streams every simple cycle exactly once as a canonical vertex sequence
/// (smallest vertex first, smaller neighbor second). The visitor may return
/// false to stop early; the return value is true when the enumeration was
/// exhaustive within budget.
inline bool enumerate_cycles(const Graph& g, uint64_t budget,
                             const std::function<bool(const std::vector<int>&)>& visit) {
    if (budget < 1) throw std::invalid_argument("enumerate_cycles: budget >= 1");
    detail::CycleEnumerator e(g, budget, visit);
    return e.run();
}

/// Collecting variant of enumerate_cycles.
struct CycleList {
    std::vector<std::vector<int>> cycles;
    bool complete = true;
};

inline CycleList enumerate_cycles(const Graph& g, uint64_t budget) {
    CycleList out;
    out.complete = enumerate_cycles(g, budget, [&](const std::vector<int>& c) {
        out.cycles.push_back(c);
        return true;
    });
    return out;
}

/// Odd-cycle counts. Bipartite graphs short-circuit to exact zeros; otherwise
/// all cycles are enumerated (the budget bounds emitted cycles, and hitting
/// it is always surfaced through exhausted=false).
inline CycleInventory cycle_inventory(const Graph& g, uint64_t budget) {
    if (budget < 1) throw std::invalid_argument("cycle_inventory: budget >= 1");
    CycleInventory inv;
    if (is_bipartite(g).bipartite) return inv; // no odd cycles at all

    std::unordered_set<std::string> vertex_sets;
    inv.exhausted = enumerate_cycles(g, budget, [&](const std::vector<int>& c) {
        if (c.size() % 2 == 1) {
            ++inv.odd_cycle_total;
            std::vector<int> sorted(c);
            std::sort(sorted.begin(), sorted.end());
            std::string key;
            key.reserve(sorted.size() * 3);
            for (int v : sorted) {
                key += std::to_string(v);
                key += ',';
            }
            vertex_sets.insert(std::move(key));
        }
        return true;
    });
    inv.k_distinct = vertex_sets.size();
    return inv;
}

/// Exactly one odd cycle? Throws BudgetExhausted when the budget ran out
/// before the answer was determined (a second odd cycle may or may not exist
/// beyond the horizon).
inline bool is_almost_bipartite(const Graph& g, uint64_t budget) {
    CycleInventory inv = cycle_inventory(g, budget);
    if (inv.exhausted) return inv.odd_cycle_total == 1;
    if (inv.odd_cycle_total >= 2) return false;
    throw BudgetExhausted("is_almost_bipartite: cycle budget exhausted with " +
                          std::to_string(inv.odd_cycle_total) +
                          " odd cycle(s) found; answer indeterminate");
}

} // namespace critset
