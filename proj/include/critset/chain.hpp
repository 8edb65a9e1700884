#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "critset/critical.hpp"
#include "critset/cycles.hpp"
#include "critset/independence.hpp"
#include "critset/matching.hpp"
#include "critset/rng.hpp"

namespace critset {

/// Equality patterns of the inequality chain
///   |nucleus| + |diadem|  <=  2*alpha  <=  |corona| + |core|  <=  2*alpha + k.
/// Declared in alphabetical order so the enum order is the serialization
/// order.
enum class EqualityTag {
    ALL_STRICT,     // all three inequalities strict
    LOWER_EQ,       // nucleus + diadem == 2*alpha
    ORDER_TIGHT,    // n == 2*alpha + k
    UPPER_EQ_BOUND, // corona + core == 2*alpha + k
    UPPER_EQ_MID,   // corona + core == 2*alpha
};

inline const char* to_string(EqualityTag t) {
    switch (t) {
        case EqualityTag::ALL_STRICT: return "ALL_STRICT";
        case EqualityTag::LOWER_EQ: return "LOWER_EQ";
        case EqualityTag::ORDER_TIGHT: return "ORDER_TIGHT";
        case EqualityTag::UPPER_EQ_BOUND: return "UPPER_EQ_BOUND";
        case EqualityTag::UPPER_EQ_MID: return "UPPER_EQ_MID";
    }
    return "?";
}

inline std::optional<EqualityTag> equality_tag_from_string(const std::string& s) {
    for (EqualityTag t : {EqualityTag::ALL_STRICT, EqualityTag::LOWER_EQ, EqualityTag::ORDER_TIGHT,
                          EqualityTag::UPPER_EQ_BOUND, EqualityTag::UPPER_EQ_MID})
        if (s == to_string(t)) return t;
    return std::nullopt;
}

/// Enumeration limits for the three exponential streams.
struct Budgets {
    uint64_t mis = 1'000'000;
    uint64_t critical = 1'000'000;
    uint64_t cycles = 1'000'000;
};

/// All chain quantities for one graph. Quantities depending on an exhausted
/// enumeration are optional: ker/diadem/nucleus sizes (and `lower`) require
/// the critical enumeration to finish, k_distinct (and `bound`) require the
/// cycle enumeration to finish. Tags are computed only for complete reports.
struct ChainReport {
    int n = 0;
    int alpha = 0;
    int core_size = 0;
    int corona_size = 0;
    std::optional<int> ker_size, diadem_size, nucleus_size;
    std::optional<uint64_t> k_distinct, odd_cycle_total;
    std::optional<int> lower; // nucleus + diadem
    int mid = 0;              // 2*alpha
    int upper = 0;            // corona + core
    std::optional<int64_t> bound; // 2*alpha + k
    bool is_ke = false;
    std::optional<std::vector<EqualityTag>> equality_tags;

    bool complete() const { return lower.has_value() && bound.has_value(); }
};

/// Tags for a complete report; refuses partial reports.
inline std::vector<EqualityTag> classify_equalities(const ChainReport& r) {
    if (!r.complete())
        throw std::invalid_argument("classify_equalities: report is partial (budget exhausted)");
    std::vector<EqualityTag> tags;
    if (*r.lower == r.mid) tags.push_back(EqualityTag::LOWER_EQ);
    if (r.upper == r.mid) tags.push_back(EqualityTag::UPPER_EQ_MID);
    if (r.upper == *r.bound) tags.push_back(EqualityTag::UPPER_EQ_BOUND);
    if (*r.lower < r.mid && r.mid < r.upper && r.upper < *r.bound)
        tags.push_back(EqualityTag::ALL_STRICT);
    if (r.n == *r.bound) tags.push_back(EqualityTag::ORDER_TIGHT);
    std::sort(tags.begin(), tags.end());
    return tags;
}

/// Assembles the chain quantities and validates every proven inequality that
/// the budgets allowed to evaluate. A violated inequality can only mean an
/// implementation bug and raises InvariantViolation.
inline ChainReport chain_report(const Graph& g, const Budgets& budgets = {}) {
    ChainReport r;
    r.n = g.vertex_count();

    OmegaSummary om = omega_summary(g);
    r.alpha = om.alpha;
    r.core_size = om.core.size();
    r.corona_size = om.corona.size();

    CriticalReport cr = critical_summary(g, budgets.critical);
    if (cr.complete) {
        r.ker_size = cr.ker->size();
        r.diadem_size = cr.diadem->size();
        r.nucleus_size = cr.nucleus->size();
        r.lower = *r.nucleus_size + *r.diadem_size;
    }

    CycleInventory inv = cycle_inventory(g, budgets.cycles);
    if (inv.exhausted) {
        r.k_distinct = inv.k_distinct;
        r.odd_cycle_total = inv.odd_cycle_total;
        r.bound = 2 * static_cast<int64_t>(r.alpha) + static_cast<int64_t>(inv.k_distinct);
    }

    r.mid = 2 * r.alpha;
    r.upper = r.corona_size + r.core_size;
    r.is_ke = r.alpha + matching_number(g) == r.n;

    // Test hook: corrupt one quantity so the violation path (CLI exit 3) can
    // be exercised; unreachable otherwise.
    if (const char* fault = std::getenv("CRITSET_FAULT_INJECT"); fault && fault == std::string("chain"))
        r.mid += 1;

    auto bug = [&](const std::string& what) {
        throw InvariantViolation("chain_report: " + what + " on graph6 " + encode_graph6(g));
    };
    if (r.lower && *r.lower > r.mid) bug("nucleus+diadem > 2*alpha");
    if (r.mid > r.upper) bug("2*alpha > corona+core");
    if (r.bound && r.upper > *r.bound) bug("corona+core > 2*alpha+k");
    if (r.bound && r.n > *r.bound) bug("n > 2*alpha+k");
    if (r.is_ke && r.upper != r.mid) bug("Koenig-Egervary graph with corona+core != 2*alpha");

    if (r.complete()) r.equality_tags = classify_equalities(r);
    return r;
}

/// One recorded failure of a lemma check, with enough detail to replay it.
struct LemmaFailure {
    std::string lemma;
    std::string witness;
};

/// Outcome of the constructive-lemma sweep. failures must be empty on every
/// run; a non-empty list witnesses an implementation bug.
struct LemmaReport {
    uint64_t pairs_checked = 0;
    std::vector<LemmaFailure> failures;
    bool exhaustive = false;        // every critical x maximum pair visited
    bool coverage_complete = true;  // false when an enumeration budget was hit
};

namespace detail {

// Random independent subset of `allowed`, grown greedily over a shuffled
// vertex order.
inline VertexSet random_independent_subset(const Graph& g, const VertexSet& allowed,
                                           SplitMix64& rng) {
    std::vector<int> verts = allowed.to_vector();
    for (size_t i = verts.size(); i > 1; --i)
        std::swap(verts[i - 1], verts[rng.next_below(i)]);
    VertexSet s(g.vertex_count());
    // Random prefix keeps small sets in the mix; a pure maximal grow would
    // only ever test maximal ones.
    size_t limit = verts.empty() ? 0 : 1 + rng.next_below(verts.size());
    for (size_t i = 0; i < limit; ++i) {
        int v = verts[i];
        if (!g.neighbor_bits(v).intersects(s)) s.insert(v);
    }
    return s;
}

} // namespace detail

/// Runs every constructive lemma of the chain machinery over the critical and
/// maximum independent sets of g: the C/A/B swap, the family variant, the
/// union/intersection criticality of critical sets, maximality via matchings
/// (both directions), the matching from N(I) into a critical I, the
/// Koenig-Egervary matching characterization, and extension of critical sets
/// to maximum ones. Exhaustive when |critical| * |Omega| <= 10000, otherwise
/// `sample` random pairs per family seeded by `seed`.
inline LemmaReport verify_constructive_lemmas(const Graph& g, uint64_t sample, uint64_t seed,
                                              const Budgets& budgets = {}) {
    if (sample < 1) throw std::invalid_argument("verify_constructive_lemmas: sample >= 1");
    const int n = g.vertex_count();
    LemmaReport rep;
    SplitMix64 rng(SplitMix64::scramble(seed));

    SetEnumeration omega = enumerate_maximum_independent_sets(g, budgets.mis);
    SetEnumeration crit = enumerate_critical_independent_sets(g, budgets.critical);
    rep.coverage_complete = omega.complete && crit.complete;
    const auto& mis = omega.sets;
    const auto& cis = crit.sets;
    if (mis.empty() || cis.empty()) return rep; // budget too small to test anything

    const int d = critical_difference(g);
    const bool ke = alpha(g) + matching_number(g) == n;

    auto fail = [&](const char* lemma, const std::string& witness) {
        rep.failures.push_back({lemma, witness + " [graph6 " + encode_graph6(g) + "]"});
    };

    // --- C/A/B swap of one critical against one maximum independent set ----
    const uint64_t total_pairs = static_cast<uint64_t>(cis.size()) * mis.size();
    rep.exhaustive = total_pairs <= 10'000;
    auto check_swap = [&](const VertexSet& ic, const VertexSet& im) {
        ++rep.pairs_checked;
        try {
            swap_decomposition(g, ic, im);
        } catch (const InvariantViolation& e) {
            fail("swap", e.what());
        }
    };
    if (rep.exhaustive) {
        for (const auto& ic : cis)
            for (const auto& im : mis) check_swap(ic, im);
    } else {
        for (uint64_t t = 0; t < sample; ++t)
            check_swap(cis[rng.next_below(cis.size())], mis[rng.next_below(mis.size())]);
    }

    // --- family variant: one critical set against several maximum sets -----
    auto check_family = [&](const VertexSet& ic, const std::vector<VertexSet>& family) {
        try {
            family_decomposition(g, ic, family);
        } catch (const InvariantViolation& e) {
            fail("family", e.what());
        }
    };
    if (rep.exhaustive && static_cast<uint64_t>(cis.size()) * mis.size() * mis.size() <= 10'000) {
        for (const auto& ic : cis)
            for (size_t i = 0; i < mis.size(); ++i)
                for (size_t j = i; j < mis.size(); ++j) check_family(ic, {mis[i], mis[j]});
    } else {
        for (uint64_t t = 0; t < sample; ++t) {
            std::vector<VertexSet> family;
            size_t fam_size = 1 + rng.next_below(3);
            for (size_t i = 0; i < fam_size; ++i) family.push_back(mis[rng.next_below(mis.size())]);
            check_family(cis[rng.next_below(cis.size())], family);
        }
    }

    // --- union and intersection of critical sets stay critical -------------
    auto check_union_intersection = [&](const VertexSet& a, const VertexSet& b) {
        if (set_difference_value(g, a | b) != d)
            fail("critical_union", "d_G(I|J) != d for I=" + a.to_string() + " J=" + b.to_string());
        if (set_difference_value(g, a & b) != d)
            fail("critical_intersection",
                 "d_G(I&J) != d for I=" + a.to_string() + " J=" + b.to_string());
    };
    if (static_cast<uint64_t>(cis.size()) * cis.size() <= 10'000) {
        for (size_t i = 0; i < cis.size(); ++i)
            for (size_t j = i; j < cis.size(); ++j) check_union_intersection(cis[i], cis[j]);
    } else {
        for (uint64_t t = 0; t < sample; ++t)
            check_union_intersection(cis[rng.next_below(cis.size())],
                                     cis[rng.next_below(cis.size())]);
    }

    // --- maximality through matchings (both directions) --------------------
    // Forward: a maximum S absorbs a matching from every disjoint independent
    // set. Reverse: for non-maximum S', the leftover S_max \ S' of a maximum
    // set is disjoint, independent, and provably unmatchable into S'.
    const VertexSet all = g.vertex_set();
    auto check_forward = [&](const VertexSet& s, const VertexSet& dset) {
        if (!exists_matching_into(g, dset, s).exists)
            fail("maximality_forward",
                 "no matching from disjoint independent " + dset.to_string() + " into maximum " +
                     s.to_string());
    };
    const size_t mis_cap = rep.exhaustive ? mis.size() : std::min<size_t>(mis.size(), sample);
    for (size_t si = 0; si < mis_cap; ++si) {
        const VertexSet& s = mis[si];
        VertexSet rest = all - s;
        if (rest.size() <= 12) {
            // exhaustive over independent subsets of V \ S
            std::vector<int> verts = rest.to_vector();
            uint64_t m = verts.size();
            for (uint64_t mask = 0; mask < (1ull << m); ++mask) {
                VertexSet dset(n);
                for (uint64_t i = 0; i < m; ++i)
                    if (mask & (1ull << i)) dset.insert(verts[static_cast<size_t>(i)]);
                if (is_independent(g, dset)) check_forward(s, dset);
            }
        } else {
            for (uint64_t t = 0; t < sample; ++t)
                check_forward(s, detail::random_independent_subset(g, rest, rng));
        }
    }
    for (uint64_t t = 0; t < std::min<uint64_t>(sample, 16); ++t) {
        VertexSet sprime = detail::random_independent_subset(g, all, rng);
        if (sprime.size() >= mis.front().size()) continue; // maximum, not a reverse case
        const VertexSet& smax = mis.front();
        VertexSet dset = smax - sprime;
        if (exists_matching_into(g, dset, sprime).exists)
            fail("maximality_reverse", "non-maximum " + sprime.to_string() +
                                           " absorbed a matching from " + dset.to_string());
    }

    // --- matching from N(I) into a critical independent I ------------------
    const size_t cis_cap = rep.exhaustive ? cis.size() : std::min<size_t>(cis.size(), sample);
    for (size_t ci = 0; ci < cis_cap; ++ci) {
        const VertexSet& ic = cis[ci];
        if (!exists_matching_into(g, neighborhood(g, ic), ic).exists)
            fail("critical_neighborhood_matching",
                 "no matching from N(I) into critical I=" + ic.to_string());
    }

    // --- Koenig-Egervary matching characterization -------------------------
    // KE holds iff every (equivalently, some) pair S1,S2 of maximum sets
    // admits a matching from V - (S1|S2) into S1&S2; non-KE graphs admit none.
    auto check_ke_pair = [&](const VertexSet& s1, const VertexSet& s2) {
        bool m = exists_matching_into(g, all - (s1 | s2), s1 & s2).exists;
        if (m != ke)
            fail("ke_characterization", std::string(ke ? "missing" : "unexpected") +
                                            " matching for pair " + s1.to_string() + ", " +
                                            s2.to_string());
    };
    if (static_cast<uint64_t>(mis.size()) * mis.size() <= 10'000) {
        for (size_t i = 0; i < mis.size(); ++i)
            for (size_t j = i; j < mis.size(); ++j) check_ke_pair(mis[i], mis[j]);
    } else {
        for (uint64_t t = 0; t < sample; ++t)
            check_ke_pair(mis[rng.next_below(mis.size())], mis[rng.next_below(mis.size())]);
    }

    // --- every critical independent set extends to a maximum one -----------
    for (size_t ci = 0; ci < cis_cap; ++ci) {
        const VertexSet& ic = cis[ci];
        try {
            VertexSet ext = extend_to_maximum(g, ic);
            if (!ic.is_subset_of(ext))
                fail("critical_extension", "extension does not contain I_c=" + ic.to_string());
        } catch (const InvariantViolation& e) {
            fail("critical_extension", e.what());
        }
    }

    return rep;
}

} // namespace critset
