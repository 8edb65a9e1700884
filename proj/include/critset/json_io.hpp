#pragma once

#include <json.hpp>

#include "critset/chain.hpp"
#include "critset/critical.hpp"
#include "critset/cycles.hpp"
#include "critset/graph.hpp"
#include "critset/independence.hpp"

// JSON views of the report types. nlohmann::json keeps object keys sorted, so
// any dump() of these is byte-stable for identical inputs; vertex sets
// serialize as sorted arrays.

namespace critset {

inline void to_json(nlohmann::json& j, const VertexSet& s) { j = s.to_vector(); }

inline void to_json(nlohmann::json& j, const OmegaSummary& s) {
    j = nlohmann::json{{"alpha", s.alpha}, {"core", s.core}, {"corona", s.corona}};
    if (s.mis_enumeration_requested) {
        if (s.mis_enumeration_complete)
            j["mis_count"] = *s.mis_count;
        else
            j["mis_count"] = "budget_exceeded";
    }
}

inline void to_json(nlohmann::json& j, const CriticalReport& r) {
    j = nlohmann::json{{"complete", r.complete}, {"d", r.d}};
    if (r.complete) {
        j["critical_count"] = *r.critical_count;
        j["ker"] = *r.ker;
        j["diadem"] = *r.diadem;
        j["nucleus"] = *r.nucleus;
        j["max_critical_size"] = *r.max_critical_size;
    } else {
        j["critical_count"] = "budget_exceeded";
    }
}

inline void to_json(nlohmann::json& j, const CycleInventory& inv) {
    j = nlohmann::json{{"exhausted", inv.exhausted},
                       {"k_distinct", inv.k_distinct},
                       {"odd_cycle_total", inv.odd_cycle_total}};
}

inline void to_json(nlohmann::json& j, const ChainReport& r) {
    auto opt = [](const auto& o) -> nlohmann::json {
        if (o) return *o;
        return nullptr;
    };
    j = nlohmann::json{{"alpha", r.alpha},
                       {"bound", opt(r.bound)},
                       {"core_size", r.core_size},
                       {"corona_size", r.corona_size},
                       {"diadem_size", opt(r.diadem_size)},
                       {"is_ke", r.is_ke},
                       {"k_distinct", opt(r.k_distinct)},
                       {"ker_size", opt(r.ker_size)},
                       {"lower", opt(r.lower)},
                       {"mid", r.mid},
                       {"n", r.n},
                       {"nucleus_size", opt(r.nucleus_size)},
                       {"odd_cycle_total", opt(r.odd_cycle_total)},
                       {"upper", r.upper}};
    if (r.equality_tags) {
        auto tags = nlohmann::json::array();
        for (EqualityTag t : *r.equality_tags) tags.push_back(to_string(t));
        j["equality_tags"] = tags;
    } else {
        j["equality_tags"] = nullptr;
    }
}

inline void to_json(nlohmann::json& j, const LemmaFailure& f) {
    j = nlohmann::json{{"lemma", f.lemma}, {"witness", f.witness}};
}

inline void to_json(nlohmann::json& j, const LemmaReport& r) {
    j = nlohmann::json{{"coverage_complete", r.coverage_complete},
                       {"exhaustive", r.exhaustive},
                       {"failures", r.failures},
                       {"pairs_checked", r.pairs_checked}};
}

} // namespace critset
